#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cartan {

/// Structured pass/fail record for one (check, parameter) pair. Failures are
/// payloads, not exceptions: expected/actual carry the compared multisets.
struct VerificationReport {
    enum class Status { Pass, Fail, Error };

    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::Pass;
    std::vector<std::string> expected;
    std::vector<std::string> actual;
    double millis = 0.0;
    std::string note;

    bool passed() const { return status == Status::Pass; }

    /// One-line text form, stable for golden files.
    std::string line() const;
};

std::string status_name(VerificationReport::Status s);

}  // namespace cartan

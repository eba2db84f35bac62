#include "cartan/report.hpp"

#include <sstream>

namespace cartan {

std::string status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::Pass: return "pass";
        case VerificationReport::Status::Fail: return "fail";
        case VerificationReport::Status::Error: return "error";
    }
    return "error";
}

std::string VerificationReport::line() const {
    std::ostringstream out;
    out << (status == Status::Pass ? "[PASS]" : status == Status::Fail ? "[FAIL]" : "[ERROR]");
    out << ' ' << check;
    for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
    out << " (" << millis << " ms)";
    if (status != Status::Pass) {
        if (!note.empty()) out << " -- " << note;
        if (!expected.empty() || !actual.empty()) {
            out << " expected={";
            for (std::size_t i = 0; i < expected.size(); ++i)
                out << (i ? "," : "") << expected[i];
            out << "} actual={";
            for (std::size_t i = 0; i < actual.size(); ++i)
                out << (i ? "," : "") << actual[i];
            out << '}';
        }
    }
    return out.str();
}

}  // namespace cartan

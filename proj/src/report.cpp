#include "report.hpp"

#include <sstream>

namespace mmset::report {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::sampled_pass: return "sampled-pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

ordered_json CheckRecord::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["status"] = status_name(status);
    j["exhaustive"] = exhaustive;
    for (auto& [k, v] : details.items()) j[k] = v;
    j["witnesses"] = witnesses;
    return j;
}

ordered_json vector_json(const lin::Vector& v) {
    ordered_json j = ordered_json::array();
    for (uint8_t c : v) j.push_back(static_cast<int>(c));
    return j;
}

ordered_json subspace_json(const lin::Subspace& s) {
    ordered_json j = ordered_json::array();
    for (int r = 0; r < s.basis.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < s.basis.cols; ++c) row.push_back(static_cast<int>(s.basis.at(r, c)));
        j.push_back(row);
    }
    return j;
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (r.failed()) return false;
    return true;
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["schema_version"] = 1;
    j["header"] = header;
    j["checks"] = ordered_json::array();
    for (const auto& r : records) j["checks"].push_back(r.to_json());
    j["all_pass"] = all_pass();
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "variety: " << header.dump() << "\n";
    for (const auto& r : records) {
        os << "  [" << status_name(r.status) << (r.exhaustive ? ", exhaustive" : ", sampled")
           << "] " << r.name;
        if (!r.details.empty()) os << " " << r.details.dump();
        os << "\n";
        for (const auto& w : r.witnesses) os << "    witness: " << w.dump() << "\n";
    }
    os << (all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace mmset::report

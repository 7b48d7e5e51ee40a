#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linalg.hpp"

namespace mmset::report {

using ordered_json = nlohmann::ordered_json;

enum class Status { pass, sampled_pass, fail, skipped };

const char* status_name(Status s);

struct CheckRecord {
    std::string name;
    Status status = Status::skipped;
    bool exhaustive = false;
    ordered_json details = ordered_json::object();
    std::vector<ordered_json> witnesses;

    bool failed() const { return status == Status::fail; }
    ordered_json to_json() const;
};

ordered_json vector_json(const lin::Vector& v);
ordered_json subspace_json(const lin::Subspace& s);

struct Report {
    ordered_json header = ordered_json::object();
    std::vector<CheckRecord> records;

    bool all_pass() const;
    ordered_json to_json() const;
    std::string to_text() const;
};

}  // namespace mmset::report

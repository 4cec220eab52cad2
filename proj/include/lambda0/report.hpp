#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lambda0 {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Status { Ok, Fail, Inconclusive };

std::string status_name(Status s);

struct Entry {
    Entry() = default;
    explicit Entry(std::string name, Status s = Status::Ok, std::string witness_text = {}, std::string detail_text = {})
        : id(std::move(name)), status(s), witness(std::move(witness_text)), detail(std::move(detail_text)) {}

    std::string id;
    Status status = Status::Ok;
    std::string witness;  // nonzero residual, present on failure
    std::string detail;
};

struct Report {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json result;  // command payload, null for pure sweeps
    std::vector<Entry> entries;
    std::optional<double> seconds;

    std::size_t count(Status s) const;
    bool failed() const { return count(Status::Fail) > 0; }
};

enum class Format { Text, Tsv, Json };

Format parse_format(const std::string& name);

nlohmann::ordered_json to_json(const Report& report);
std::string render(const Report& report, Format format);

/// 0 when no entry failed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace lambda0

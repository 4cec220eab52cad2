#include "lambda0/report.hpp"

#include "lambda0/error.hpp"

#include <algorithm>
#include <sstream>

namespace lambda0 {

using nlohmann::ordered_json;

std::string status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const Entry& e) { return e.status == s; }));
}

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "tsv") return Format::Tsv;
    if (name == "json") return Format::Json;
    throw Error("unknown format '" + name + "' (expected json, tsv or text)");
}

ordered_json to_json(const Report& report) {
    ordered_json out;
    out["tool"] = "lambda0";
    out["version"] = kToolVersion;
    out["command"] = report.command;
    out["parameters"] = report.parameters;
    if (!report.result.is_null()) out["result"] = report.result;
    ordered_json entries = ordered_json::array();
    for (const Entry& e : report.entries) {
        ordered_json item;
        item["id"] = e.id;
        item["status"] = status_name(e.status);
        if (!e.witness.empty()) item["witness"] = e.witness;
        if (!e.detail.empty()) item["detail"] = e.detail;
        entries.push_back(std::move(item));
    }
    out["entries"] = std::move(entries);
    out["summary"] = {{"ok", report.count(Status::Ok)},
                      {"fail", report.count(Status::Fail)},
                      {"inconclusive", report.count(Status::Inconclusive)}};
    if (report.seconds) out["timing"] = {{"seconds", *report.seconds}};
    return out;
}

namespace {

std::string scalar_text(const ordered_json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
}

// A result that is an array of flat objects prints as a table.
bool is_table(const ordered_json& result) {
    return result.is_array() && !result.empty() &&
           std::all_of(result.begin(), result.end(), [](const ordered_json& row) { return row.is_object(); });
}

void write_table(std::ostringstream& out, const ordered_json& rows, char separator) {
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        out << (first ? "" : std::string(1, separator)) << key;
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            out << (first ? "" : std::string(1, separator)) << scalar_text(value);
            first = false;
        }
        out << '\n';
    }
}

void write_result(std::ostringstream& out, const ordered_json& result, char separator) {
    if (result.is_null()) return;
    if (is_table(result)) {
        write_table(out, result, separator);
    } else if (result.is_array()) {
        for (const auto& item : result) out << scalar_text(item) << '\n';
    } else if (result.is_object()) {
        for (const auto& [key, value] : result.items()) out << key << separator << scalar_text(value) << '\n';
    } else {
        out << scalar_text(result) << '\n';
    }
}

}  // namespace

std::string render(const Report& report, Format format) {
    if (format == Format::Json) return to_json(report).dump(2) + "\n";
    std::ostringstream out;
    if (format == Format::Tsv) {
        write_result(out, report.result, '\t');
        if (!report.entries.empty()) {
            if (!report.result.is_null()) out << '\n';
            out << "id\tstatus\twitness\n";
            for (const Entry& e : report.entries)
                out << e.id << '\t' << status_name(e.status) << '\t' << (e.witness.empty() ? e.detail : e.witness) << '\n';
        }
        return out.str();
    }
    out << "lambda0 " << report.command;
    for (const auto& [key, value] : report.parameters.items()) {
        if (key == "expr")
            out << ' ' << scalar_text(value);
        else
            out << " --" << key << ' ' << scalar_text(value);
    }
    out << '\n';
    if (!report.result.is_null()) {
        write_result(out, report.result, ' ');
    }
    for (const Entry& e : report.entries) {
        if (e.status == Status::Ok) continue;
        out << status_name(e.status) << ' ' << e.id;
        if (!e.witness.empty()) out << "  witness: " << e.witness;
        if (!e.detail.empty()) out << "  (" << e.detail << ')';
        out << '\n';
    }
    if (!report.entries.empty())
        out << "summary: " << report.count(Status::Ok) << " ok, " << report.count(Status::Fail) << " fail, "
            << report.count(Status::Inconclusive) << " inconclusive\n";
    if (report.seconds) out << "time: " << *report.seconds << " s\n";
    return out.str();
}

int exit_code(const Report& report) { return report.failed() ? 1 : 0; }

}  // namespace lambda0

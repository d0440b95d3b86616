#include "cy3/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace cy3 {

std::string ReportDocument::to_json() const {
    nlohmann::json doc;
    doc["command"] = command;
    doc["inputs_digest"] = inputs_digest;
    doc["results"] = results;
    doc["citations"] = citations;
    return doc.dump(2) + "\n";
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string to_string(CheckItem::Status status) {
    switch (status) {
        case CheckItem::Status::pass:
            return "PASS";
        case CheckItem::Status::fail:
            return "FAIL";
        case CheckItem::Status::info:
            return "INFO";
    }
    return "FAIL";
}

bool SuiteResult::ok() const { return count(CheckItem::Status::fail) == 0; }

std::size_t SuiteResult::count(CheckItem::Status status) const {
    return static_cast<std::size_t>(std::count_if(
        items.begin(), items.end(), [status](const CheckItem& i) { return i.status == status; }));
}

std::string render_text(const SuiteResult& suite) {
    std::size_t id_width = 0;
    for (const auto& item : suite.items) {
        id_width = std::max(id_width, item.id.size());
    }
    std::string out;
    for (const auto& item : suite.items) {
        out += std::string(id_width - item.id.size(), ' ') + item.id + ". " + item.name + " = " +
               item.computed + " " + to_string(item.status);
        if (item.status == CheckItem::Status::fail) {
            out += "  [expected " + item.expected + "]";
        } else if (item.status == CheckItem::Status::info) {
            out += "  [" + item.expected + "]";
        }
        out += "\n";
    }
    out += std::to_string(suite.count(CheckItem::Status::pass)) + " passed, " +
           std::to_string(suite.count(CheckItem::Status::fail)) + " failed, " +
           std::to_string(suite.count(CheckItem::Status::info)) + " info\n";
    return out;
}

ReportDocument suite_report(const SuiteResult& suite, std::string command,
                            std::string inputs_digest) {
    ReportDocument doc;
    doc.command = std::move(command);
    doc.inputs_digest = std::move(inputs_digest);
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : suite.items) {
        items.push_back({{"id", item.id},
                         {"name", item.name},
                         {"expected", item.expected},
                         {"computed", item.computed},
                         {"status", to_string(item.status)}});
        doc.citations.push_back(item.id + ": " + item.source);
    }
    doc.results["checks"] = std::move(items);
    doc.results["passed"] = std::to_string(suite.count(CheckItem::Status::pass));
    doc.results["failed"] = std::to_string(suite.count(CheckItem::Status::fail));
    doc.results["info"] = std::to_string(suite.count(CheckItem::Status::info));
    return doc;
}

}  // namespace cy3

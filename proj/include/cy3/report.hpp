#ifndef CY3_REPORT_HPP
#define CY3_REPORT_HPP

#include "cy3/models.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cy3 {

/// Machine-readable result of one CLI invocation.
struct ReportDocument {
    std::string command;
    std::string inputs_digest;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> citations;

    /// Sorted keys, two-space indent, trailing newline.
    std::string to_json() const;
};

/// 64-bit FNV-1a of `data`, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

struct CheckItem {
    enum class Status { pass, fail, info };

    std::string id;
    std::string name;
    std::string expected;
    std::string computed;
    Status status = Status::fail;
    /// Published claim the value reproduces.
    std::string source;
};

std::string to_string(CheckItem::Status status);

struct SuiteResult {
    std::vector<CheckItem> items;

    bool ok() const;
    std::size_t count(CheckItem::Status status) const;
};

/// Recomputes every published intermediate from the two models.
SuiteResult run_paper_suite(const ThreefoldModel& x_phi, const ThreefoldModel& x_t);

/// One line per item: "<id>. <name> = <computed> <STATUS>".
std::string render_text(const SuiteResult& suite);

ReportDocument suite_report(const SuiteResult& suite, std::string command,
                            std::string inputs_digest);

}  // namespace cy3

#endif

#include "cy3/model_io.hpp"
#include "cy3/report.hpp"

#include <doctest.h>

using namespace cy3;

TEST_CASE("fnv1a reference vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("report documents serialize deterministically") {
    ReportDocument doc;
    doc.command = "cube";
    doc.inputs_digest = fnv1a_hex("x");
    doc.results["z"] = 1;
    doc.results["a"] = "54*x*y*z - 243";
    doc.citations = {"first", "second"};
    const std::string text = doc.to_json();
    CHECK(text == doc.to_json());
    CHECK(text.back() == '\n');
    CHECK(text.find("\"a\"") < text.find("\"z\""));
    CHECK(nlohmann::json::parse(text)["command"] == "cube");
}

TEST_CASE("suite passes on the built-in models") {
    const SuiteResult suite = run_paper_suite(model_x_phi(), model_x_t());
    CHECK(suite.ok());
    CHECK(suite.count(CheckItem::Status::fail) == 0);
    CHECK(suite.count(CheckItem::Status::info) == 2);
    const std::string text = render_text(suite);
    CHECK(text.find("54*x*y*z - 243 PASS") != std::string::npos);
    CHECK(text.find("54*a*b - 81*b - 333 INFO") != std::string::npos);
    CHECK(suite_report(suite, "verify-paper", "d").to_json() ==
          suite_report(run_paper_suite(model_x_phi(), model_x_t()), "verify-paper", "d").to_json());
}

TEST_CASE("suite reports FAIL lines on a corrupted model") {
    ThreefoldModel phi = model_x_phi();
    TrilinearForm cup(phi.basis);
    for (const auto& [k, v] : phi.cup.entries()) {
        const auto& l = phi.basis.labels();
        const bool target = l[k[0]] == "L1" && l[k[1]] == "L2" && l[k[2]] == "L3";
        cup.insert(l[k[0]], l[k[1]], l[k[2]], target ? Integer(10) : v);
    }
    phi.cup = cup;
    const SuiteResult suite = run_paper_suite(phi, model_x_t());
    CHECK_FALSE(suite.ok());
    const std::string text = render_text(suite);
    CHECK(text.find("60*x*y*z - 243 FAIL") != std::string::npos);
    CHECK(text.find("[expected 54*x*y*z - 243]") != std::string::npos);
}

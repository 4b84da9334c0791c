#include <doctest.h>

#include <set>

#include "uqsl2/catalog.hpp"
#include "uqsl2/error.hpp"
#include "uqsl2/named.hpp"

using namespace uqsl2;

TEST_CASE("every bundled identity holds") {
    const auto report = run_catalog(bundled_catalog());
    for (const auto& r : report.results) {
        CAPTURE(r.id);
        CAPTURE(r.error);
        CAPTURE(format_element(r.residual));
        CHECK(r.pass);
    }
    CHECK(report.ok());
    CHECK(report.passed == bundled_catalog().size());
    CHECK(std::is_sorted(report.results.begin(), report.results.end(),
                         [](const auto& l, const auto& r) { return l.id < r.id; }));
}

TEST_CASE("catalog covers every group") {
    std::set<std::string> groups;
    for (const auto& rec : bundled_catalog()) {
        groups.insert(rec.id.substr(0, rec.id.rfind('-')));
        CHECK_FALSE(rec.anchor.empty());
    }
    for (const char* g : {"equit",    "chev",     "casdef",   "casequit", "sigchev",  "sigq",   "sigequit", "fixLam",
                          "yconj",    "tauequit", "tauefk",   "qsym",     "qcom",     "nuforms", "six",     "x2y2z2",
                          "signu",    "taunu",    "xzef",     "nugen",    "modchev",  "XyZ",    "yi",       "match",
                          "Ay",       "nxnz",     "Ayconj",   "yay",      "yyA",      "genexpand", "sigA",  "tauA",
                          "CasAy",    "Lamnx",    "tdrel",    "yAy",      "dagger",   "dagnu",  "dagA",     "XZAy",
                          "invar",    "uvpres1",  "uvpres2",  "uvpres3",  "uvpres4",  "nxpres1", "nxpres2", "nxpres3",
                          "nxpres4"}) {
        CAPTURE(g);
        CHECK(groups.count(g) == 1);
    }
}

TEST_CASE("catalog filters and negative controls") {
    const auto cas = run_catalog(bundled_catalog(), "casequit");
    CHECK(cas.results.size() == 6);
    CHECK(cas.ok());
    CHECK(run_catalog(bundled_catalog(), "nxpres4").passed == 7);
    const auto none = run_catalog(bundled_catalog(), "nonexistent-");
    CHECK(none.results.empty());
    CHECK(none.ok());

    const auto perturbed = check_identity({"td", "y^3 A - (q^2 + 1 + q^-2) y^2 A y + (q^2 + 1 + q^-2) y A y^2 - A y^3",
                                           "0 + 1", "perturbed", Basis::Equitable, {}, {}});
    CHECK_FALSE(perturbed.pass);
    CHECK(perturbed.residual == NormalElement::one(Basis::Equitable).scaled(RF(-1)));

    const auto broken = check_identity({"bad", "x^-1", "0", "", Basis::Equitable, {}, {}});
    CHECK_FALSE(broken.pass);
    CHECK_FALSE(broken.error.empty());

    const auto records = load_catalog(R"([{"id":"m","lhs":"x","rhs":"z","anchor":"t","morphism":"tau"}])");
    REQUIRE(records.size() == 1);
    CHECK(check_identity(records[0]).pass);
    CHECK_THROWS_AS(load_catalog("{"), ParseError);
    CHECK_THROWS_AS(load_catalog(R"([{"id":"m"}])"), ParseError);
    const auto mixed = run_catalog(load_catalog(R"([{"id":"b","lhs":"x","rhs":"x + 1","anchor":"t"},
                                                   {"id":"a","lhs":"x","rhs":"x","anchor":"t"}])"));
    CHECK(mixed.results[0].id == "a");
    CHECK(mixed.failed == 1);
    CHECK(report_to_json(mixed).find(R"("status":"fail")") != std::string::npos);
    CHECK(format_report(mixed).find("FAIL b") != std::string::npos);
}

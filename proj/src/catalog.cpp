#include "uqsl2/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "catalog_data.hpp"
#include "uqsl2/error.hpp"
#include "uqsl2/morphism.hpp"
#include "uqsl2/named.hpp"

namespace uqsl2 {

namespace {

std::string field(const nlohmann::json& j, const char* key, std::size_t index) {
    if (!j.contains(key) || !j[key].is_string())
        throw ParseError("record " + std::to_string(index) + " lacks string field '" + key + "'", 0);
    return j[key].get<std::string>();
}

}  // namespace

std::vector<IdentityRecord> load_catalog(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("catalog is not valid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_array()) throw ParseError("catalog must be a JSON array", 0);
    std::vector<IdentityRecord> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& j = doc[i];
        IdentityRecord rec;
        rec.id = field(j, "id", i);
        rec.lhs = field(j, "lhs", i);
        rec.rhs = field(j, "rhs", i);
        rec.anchor = field(j, "anchor", i);
        if (j.contains("basis")) rec.basis = parse_basis(field(j, "basis", i));
        if (j.contains("morphism")) rec.morphism = field(j, "morphism", i);
        if (j.contains("subst")) rec.subst = field(j, "subst", i);
        out.push_back(std::move(rec));
    }
    return out;
}

const std::vector<IdentityRecord>& bundled_catalog() {
    static const std::vector<IdentityRecord> records = load_catalog(catalog_data::text);
    return records;
}

IdentityResult check_identity(const IdentityRecord& rec) {
    IdentityResult result{rec.id, false, NormalElement(rec.basis), {}};
    try {
        NormalElement lhs = parse_element(rec.lhs, rec.basis);
        if (rec.morphism) {
            Morphism m = morphism_by_name(*rec.morphism);
            if (rec.subst) m = substitute(m, Indeterminate::a, parse_scalar(*rec.subst));
            lhs = apply_morphism(m, lhs);
        }
        result.residual = lhs - parse_element(rec.rhs, rec.basis);
        result.pass = result.residual.is_zero();
    } catch (const Error& e) {
        result.error = e.what();
    }
    return result;
}

CatalogReport run_catalog(const std::vector<IdentityRecord>& records, std::string_view prefix, unsigned threads) {
    std::vector<const IdentityRecord*> selected;
    for (const auto& rec : records) {
        if (rec.id.starts_with(prefix)) selected.push_back(&rec);
    }
    std::vector<IdentityResult> results(selected.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < selected.size(); i = next++) results[i] = check_identity(*selected[i]);
            });
        }
    }
    std::sort(results.begin(), results.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
    CatalogReport report{std::move(results), 0, 0};
    for (const auto& r : report.results) (r.pass ? report.passed : report.failed) += 1;
    return report;
}

std::string format_report(const CatalogReport& report) {
    std::ostringstream out;
    for (const auto& r : report.results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.id;
        if (!r.error.empty()) {
            out << "  error: " << r.error;
        } else if (!r.pass) {
            out << "  residual: " << format_element(r.residual);
        }
        out << '\n';
    }
    out << report.passed << " passed, " << report.failed << " failed\n";
    return out.str();
}

std::string report_to_json(const CatalogReport& report) {
    nlohmann::ordered_json j;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json rec;
        rec["id"] = r.id;
        rec["status"] = r.pass ? "pass" : (r.error.empty() ? "fail" : "error");
        if (!r.error.empty()) rec["error"] = r.error;
        if (!r.pass && r.error.empty()) rec["residual"] = nlohmann::ordered_json::parse(element_to_json(r.residual));
        j["results"].push_back(std::move(rec));
    }
    return j.dump();
}

}  // namespace uqsl2

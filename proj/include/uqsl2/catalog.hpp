#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uqsl2/element.hpp"

namespace uqsl2 {

/// One identity lhs = rhs. With a morphism, the check is m(lhs) = rhs, with
/// a substituted into the morphism's images first when subst is present.
struct IdentityRecord {
    std::string id;
    std::string lhs;
    std::string rhs;
    std::string anchor;
    Basis basis = Basis::Equitable;
    std::optional<std::string> morphism;
    std::optional<std::string> subst;
};

struct IdentityResult {
    std::string id;
    bool pass = false;
    NormalElement residual{Basis::Equitable};
    std::string error;  // parse or evaluation failure
};

// Parses a JSON array of records; throws ParseError on malformed input.
std::vector<IdentityRecord> load_catalog(std::string_view json_text);
const std::vector<IdentityRecord>& bundled_catalog();

IdentityResult check_identity(const IdentityRecord& rec);

struct CatalogReport {
    std::vector<IdentityResult> results;  // sorted by id
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool ok() const { return failed == 0; }
};

// Evaluates every record whose id starts with the prefix, in parallel.
CatalogReport run_catalog(const std::vector<IdentityRecord>& records, std::string_view prefix = {},
                          unsigned threads = 0);

std::string format_report(const CatalogReport& report);
std::string report_to_json(const CatalogReport& report);

}  // namespace uqsl2

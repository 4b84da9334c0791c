#include "uqsl2/presentations.hpp"

#include <json.hpp>

#include "uqsl2/error.hpp"
#include "uqsl2/expr.hpp"
#include "uqsl2/named.hpp"

namespace uqsl2 {

namespace {

using RF = RationalFunction;
using ElementMap = std::map<std::string, NormalElement, std::less<>>;

// Atom lookup over a generator table. "y" and "k" with negative powers use
// the "_inv" entry.
AtomLookup table_lookup(const ElementMap& table) {
    return [&table](const std::string& name, int exponent, std::size_t pos) {
        if (exponent < 0) {
            auto it = table.find(name + "_inv");
            if (it == table.end()) throw ParseError("negative power of '" + name + "' is not available", pos);
            return power(it->second, -exponent);
        }
        auto it = table.find(name);
        if (it == table.end()) throw ParseError("'" + name + "' is not a generator here", pos);
        return power(it->second, exponent);
    };
}

NormalElement evaluate_text(std::string_view text, const ElementMap& table) {
    const expr::NodePtr node = expr::parse_element_expr(text);
    ElementBackend backend(Basis::Equitable, table_lookup(table));
    return expr::evaluate(*node, backend);
}

PresentationSpec make(std::string id, std::vector<std::string> gens,
                      std::vector<std::pair<std::string, std::string>> relations) {
    PresentationSpec p{std::move(id), std::move(gens), std::move(relations), {}};
    for (const auto& g : p.generators) p.embedding.emplace(g, named(g));
    return p;
}

std::vector<PresentationSpec> build_presentations() {
    std::vector<PresentationSpec> out;
    out.push_back(make("chevalley", {"e", "k", "k_inv", "f"},
                       {{"k k^-1", "1"},
                        {"k^-1 k", "1"},
                        {"k e k^-1", "q^2 e"},
                        {"k f k^-1", "q^-2 f"},
                        {"e f - f e", "(k - k^-1)/(q - q^-1)"}}));
    out.push_back(make("equitable", {"x", "y", "y_inv", "z"},
                       {{"y y^-1", "1"},
                        {"y^-1 y", "1"},
                        {"(q x y - q^-1 y x)/(q - q^-1)", "1"},
                        {"(q y z - q^-1 z y)/(q - q^-1)", "1"},
                        {"(q z x - q^-1 x z)/(q - q^-1)", "1"}}));
    out.push_back(make("mod-chevalley", {"nu_x", "y", "y_inv", "nu_z"},
                       {{"y y^-1", "1"},
                        {"y^-1 y", "1"},
                        {"y nu_x y^-1", "q^-2 nu_x"},
                        {"y nu_z y^-1", "q^2 nu_z"},
                        {"(q nu_z nu_x - q^-1 nu_x nu_z)/(q - q^-1)", "1 - y^2"}}));
    out.push_back(make("invariant", {"A", "y", "y_inv"},
                       {{"y y^-1", "1"},
                        {"y^-1 y", "1"},
                        {"y^2 A - (q^2 + q^-2) y A y + A y^2", "-(a + a^-1)(q - q^-1)^2 y"},
                        {"A y^2 A + A y A y + y A y A - (q^2 + 1 + q^-2) y A^2 y + (a + a^-1)(q - q^-1)^2 (A y + y A)",
                         "(q^2 - q^-2)^2 y^2 + (a q - a^-1 q^-1)(a q^-1 - a^-1 q)(q - q^-1)^2"}}));
    out.push_back(make("uvee-xyz", {"x", "y_inv", "z"},
                       {{"(q y^-1 x - q^-1 x y^-1)/(q - q^-1)", "y^-2"},
                        {"(q z y^-1 - q^-1 y^-1 z)/(q - q^-1)", "y^-2"},
                        {"(q z x - q^-1 x z)/(q - q^-1)", "1"}}));
    out.push_back(make("uvee-XyZ", {"X", "y_inv", "Z"},
                       {{"(q y^-1 X - q^-1 X y^-1)/(q - q^-1)", "y^-2"},
                        {"(q Z y^-1 - q^-1 y^-1 Z)/(q - q^-1)", "y^-2"},
                        {"(q Z X - q^-1 X Z)/(q - q^-1)", "1"}}));
    out.push_back(make("uvee-xXA", {"x", "X", "A"},
                       {{"(q A x - q^-1 x A)/(q - q^-1)", "a^-1 x^2 + a"},
                        {"(q A X - q^-1 X A)/(q - q^-1)", "a X^2 + a^-1"},
                        {"a^-1 x^2 - (a^-1 q - a q^-1)/(q - q^-1) x X - (a q - a^-1 q^-1)/(q - q^-1) X x + a X^2",
                         "0"}}));
    out.push_back(make("uvee-zZA", {"z", "Z", "A"},
                       {{"(q z A - q^-1 A z)/(q - q^-1)", "a z^2 + a^-1"},
                        {"(q Z A - q^-1 A Z)/(q - q^-1)", "a^-1 Z^2 + a"},
                        {"a z^2 - (a^-1 q - a q^-1)/(q - q^-1) z Z - (a q - a^-1 q^-1)/(q - q^-1) Z z + a^-1 Z^2",
                         "0"}}));
    return out;
}

const std::vector<PresentationSpec>& all_presentations() {
    static const std::vector<PresentationSpec> table = build_presentations();
    return table;
}

std::vector<Isomorphism> build_isomorphisms() {
    std::vector<Isomorphism> out;
    out.push_back({"equitable-chevalley",
                   "equitable",
                   "chevalley",
                   {{"x", "k^-1 - k^-1 e q (q - q^-1)"}, {"y", "k"}, {"y_inv", "k^-1"}, {"z", "k^-1 + f (q - q^-1)"}},
                   {{"e", "(1 - y x) q^-1 / (q - q^-1)"},
                    {"k", "y"},
                    {"k_inv", "y^-1"},
                    {"f", "(z - y^-1)/(q - q^-1)"}}});
    out.push_back({"mod-chevalley-chevalley",
                   "mod-chevalley",
                   "chevalley",
                   {{"nu_x", "-q (q - q^-1) k f"}, {"y", "k"}, {"y_inv", "k^-1"}, {"nu_z", "(q - q^-1) e"}},
                   {{"e", "nu_z/(q - q^-1)"}, {"k", "y"}, {"k_inv", "y^-1"}, {"f", "-q^-1 y^-1 nu_x/(q - q^-1)"}}});
    out.push_back({"invariant-mod-chevalley",
                   "invariant",
                   "mod-chevalley",
                   {{"A", "a (1 - q nu_x) y^-1 + a^-1 (1 - q^-1 nu_z) y^-1"}, {"y", "y"}, {"y_inv", "y^-1"}},
                   {{"nu_x", "a^-1 (a + a^-1)/(q + q^-1) - a^-1 (q A y - q^-1 y A)/(q^2 - q^-2)"},
                    {"y", "y"},
                    {"y_inv", "y^-1"},
                    {"nu_z", "a (a + a^-1)/(q + q^-1) - a (q y A - q^-1 A y)/(q^2 - q^-2)"}}});
    out.push_back({"uvee-XyZ-xyz",
                   "uvee-XyZ",
                   "uvee-xyz",
                   {{"X", "a^-2 x + (1 - a^-2) y^-1"}, {"y_inv", "y^-1"}, {"Z", "a^2 z + (1 - a^2) y^-1"}},
                   {{"x", "a^2 X + (1 - a^2) y^-1"}, {"y_inv", "y^-1"}, {"z", "a^-2 Z + (1 - a^-2) y^-1"}}});
    out.push_back({"uvee-xXA-xyz",
                   "uvee-xXA",
                   "uvee-xyz",
                   {{"x", "x"}, {"X", "a^-2 x + (1 - a^-2) y^-1"}, {"A", "a^-1 x + a z"}},
                   {{"x", "x"}, {"y_inv", "(a X - a^-1 x)/(a - a^-1)"}, {"z", "a^-1 A - a^-2 x"}}});
    out.push_back({"uvee-zZA-xyz",
                   "uvee-zZA",
                   "uvee-xyz",
                   {{"z", "z"}, {"Z", "a^2 z + (1 - a^2) y^-1"}, {"A", "a^-1 x + a z"}},
                   {{"x", "a A - a^2 z"}, {"y_inv", "(a z - a^-1 Z)/(a - a^-1)"}, {"z", "z"}}});
    return out;
}

// Sends gen through `there`, then every generator of the middle presentation
// back through `back`, and compares with gen itself.
bool composite_is_identity(const PresentationSpec& start, const PresentationSpec& middle,
                           const std::map<std::string, std::string>& there,
                           const std::map<std::string, std::string>& back, const std::string& gen) {
    ElementMap middle_values;
    for (const auto& g : middle.generators) {
        auto it = back.find(g);
        if (it == back.end()) return false;
        middle_values.emplace(g, evaluate_text(it->second, start.embedding));
    }
    auto it = there.find(gen);
    if (it == there.end()) return false;
    return evaluate_text(it->second, middle_values) == start.embedding.at(gen);
}

std::array<NormalElement, 3> vectors_of(SBasis b) {
    switch (b) {
        case SBasis::I:
            return {named("x"), named("y_inv"), named("z")};
        case SBasis::II:
            return {named("X"), named("y_inv"), named("Z")};
        case SBasis::III:
            return {named("x"), named("X"), named("A")};
        case SBasis::IV:
            return {named("z"), named("Z"), named("A")};
    }
    throw DomainError("unknown basis");
}

RF A(int n) { return RF::a_pow(n); }
const RF ONE(1);

Matrix3 rows(std::initializer_list<std::initializer_list<RF>> r) {
    Matrix3 m{};
    std::size_t i = 0;
    for (const auto& row : r) {
        std::size_t j = 0;
        for (const auto& v : row) m[i][j++] = v;
        ++i;
    }
    return m;
}

NormalElement combine(const Matrix3& m, std::size_t column, const std::array<NormalElement, 3>& basis) {
    NormalElement out(Basis::Equitable);
    for (std::size_t i = 0; i < 3; ++i) out += basis[i].scaled(m[i][column]);
    return out;
}

}  // namespace

const std::vector<std::string>& presentation_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& p : all_presentations()) out.push_back(p.id);
        return out;
    }();
    return ids;
}

const PresentationSpec& presentation(std::string_view id) {
    for (const auto& p : all_presentations()) {
        if (p.id == id) return p;
    }
    throw DomainError("unknown presentation '" + std::string(id) + "'");
}

NormalElement embed(const PresentationSpec& p, std::string_view text) { return evaluate_text(text, p.embedding); }

std::vector<RelationReport> verify_presentation(const PresentationSpec& p) {
    std::vector<RelationReport> out;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        RelationReport r{p.id, i, false, NormalElement(Basis::Equitable), {}};
        try {
            r.residual = embed(p, p.relations[i].first) - embed(p, p.relations[i].second);
            r.pass = r.residual.is_zero();
        } catch (const Error& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string report_to_json(const std::vector<RelationReport>& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : report) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["relation-index"] = r.index;
        j["status"] = r.pass ? "pass" : "fail";
        j["residual"] = r.error.empty() ? format_element(r.residual) : r.error;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

const std::vector<Isomorphism>& isomorphisms() {
    static const std::vector<Isomorphism> table = build_isomorphisms();
    return table;
}

std::vector<RoundTrip> round_trip(const Isomorphism& iso) {
    const PresentationSpec& src = presentation(iso.source);
    const PresentationSpec& dst = presentation(iso.target);
    std::vector<RoundTrip> out;
    for (const auto& g : src.generators) {
        bool ok = composite_is_identity(src, dst, iso.forward, iso.backward, g);
        ok = ok && embed(dst, iso.forward.at(g)) == src.embedding.at(g);
        out.push_back({g, true, ok});
    }
    for (const auto& g : dst.generators) {
        bool ok = composite_is_identity(dst, src, iso.backward, iso.forward, g);
        ok = ok && embed(src, iso.backward.at(g)) == dst.embedding.at(g);
        out.push_back({g, false, ok});
    }
    return out;
}

std::string_view sbasis_name(SBasis b) {
    switch (b) {
        case SBasis::I:
            return "i";
        case SBasis::II:
            return "ii";
        case SBasis::III:
            return "iii";
        case SBasis::IV:
            return "iv";
    }
    return "?";
}

std::array<NormalElement, 3> sbasis_vectors(SBasis b) { return vectors_of(b); }

Matrix3 multiply(const Matrix3& lhs, const Matrix3& rhs) {
    Matrix3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) out[i][j] += lhs[i][k] * rhs[k][j];
    return out;
}

Matrix3 identity3() { return rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

SMatrix transition(SBasis src, SBasis dst) {
    const RF am = A(1) - A(-1);
    using enum SBasis;
    if (src == I && dst == II) return {src, dst, rows({{A(-2), 0, 0}, {ONE - A(-2), 1, ONE - A(2)}, {0, 0, A(2)}})};
    if (src == II && dst == I) return {src, dst, rows({{A(2), 0, 0}, {ONE - A(2), 1, ONE - A(-2)}, {0, 0, A(-2)}})};
    if (src == I && dst == III) return {src, dst, rows({{1, A(-2), A(-1)}, {0, ONE - A(-2), 0}, {0, 0, A(1)}})};
    if (src == III && dst == I)
        return {src, dst, rows({{1, A(-1) / -am, -A(-2)}, {0, A(1) / am, 0}, {0, 0, A(-1)}})};
    if (src == I && dst == IV) return {src, dst, rows({{0, 0, A(-1)}, {0, ONE - A(2), 0}, {1, A(2), A(1)}})};
    if (src == IV && dst == I) return {src, dst, rows({{-A(2), A(1) / am, 1}, {0, A(-1) / -am, 0}, {A(1), 0, 0}})};
    throw DomainError("no transition matrix from (" + std::string(sbasis_name(src)) + ") to (" +
                      std::string(sbasis_name(dst)) + ")");
}

SMatrix s_matrix_of(std::string_view m, SBasis basis) {
    using enum SBasis;
    if (m == "tau") {
        switch (basis) {
            case I:
                return {basis, basis, rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})};
            case II:
                return {basis, basis,
                        rows({{0, 0, A(4)}, {A(-2) * (A(2) - A(-2)), 1, A(2) * (A(-2) - A(2))}, {A(-4), 0, 0}})};
            case III:
                return {basis, basis,
                        rows({{-A(-2), -A(-3) * (A(1) + A(-1)), A(-1) * (A(2) - A(-2))},
                              {0, 1, 0},
                              {A(-1), A(-3), A(-2)}})};
            case IV:
                return {basis, basis,
                        rows({{-A(2), -A(3) * (A(1) + A(-1)), A(1) * (A(-2) - A(2))}, {0, 1, 0}, {A(1), A(3), A(2)}})};
        }
    }
    if (m == "dagger") {
        switch (basis) {
            case I:
                return {basis, basis, rows({{0, 0, A(-2)}, {ONE - A(2), 1, ONE - A(-2)}, {A(2), 0, 0}})};
            case II:
                return {basis, basis, rows({{0, 0, A(2)}, {ONE - A(-2), 1, ONE - A(2)}, {A(-2), 0, 0}})};
            case III:
                return {basis, basis, rows({{0, -A(-2), 0}, {-A(2), 0, 0}, {A(1), A(-1), 1}})};
            case IV:
                return {basis, basis, rows({{0, -A(2), 0}, {-A(-2), 0, 0}, {A(-1), A(1), 1}})};
        }
    }
    throw DomainError("no matrix for '" + std::string(m) + "' on S");
}

bool transition_consistent(const SMatrix& t) {
    const auto old_basis = vectors_of(t.source);
    const auto new_basis = vectors_of(t.target);
    for (std::size_t j = 0; j < 3; ++j) {
        if (combine(t.m, j, old_basis) != new_basis[j]) return false;
    }
    return true;
}

bool s_matrix_consistent(std::string_view m, const SMatrix& s) {
    const Morphism morphism = morphism_by_name(m);
    const auto basis = vectors_of(s.source);
    for (std::size_t j = 0; j < 3; ++j) {
        if (combine(s.m, j, basis) != apply_morphism(morphism, basis[j])) return false;
    }
    return true;
}

}  // namespace uqsl2

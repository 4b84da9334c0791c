#include "uqsl2/element.hpp"

#include <json.hpp>

#include "uqsl2/error.hpp"

namespace uqsl2 {

std::string_view basis_name(Basis b) {
    return b == Basis::Equitable ? "equitable" : "chevalley";
}

Basis parse_basis(std::string_view name) {
    if (name == "equitable") return Basis::Equitable;
    if (name == "chevalley") return Basis::Chevalley;
    throw DomainError("unknown basis '" + std::string(name) + "'");
}

NormalElement::NormalElement(Basis basis, Map coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

NormalElement NormalElement::scalar(Basis basis, const RationalFunction& c) {
    return monomial(basis, Monomial{}, c);
}

NormalElement NormalElement::monomial(Basis basis, Monomial m, const RationalFunction& c) {
    if (m.r < 0 || m.t < 0) throw DomainError("negative exponent on a non-invertible generator");
    NormalElement out(basis);
    if (!c.is_zero()) out.coeffs_.emplace(m, c);
    return out;
}

RationalFunction NormalElement::coeff(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? RationalFunction() : it->second;
}

void NormalElement::add_term(const Monomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

NormalElement NormalElement::operator-() const {
    NormalElement out = *this;
    for (auto& [m, c] : out.coeffs_) c = -c;
    return out;
}

NormalElement& NormalElement::operator+=(const NormalElement& rhs) {
    if (basis_ != rhs.basis_) throw BasisMismatch();
    for (const auto& [m, c] : rhs.coeffs_) add_term(m, c);
    return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& rhs) {
    if (basis_ != rhs.basis_) throw BasisMismatch();
    for (const auto& [m, c] : rhs.coeffs_) add_term(m, -c);
    return *this;
}

NormalElement NormalElement::scaled(const RationalFunction& c) const {
    NormalElement out(basis_);
    if (c.is_zero()) return out;
    out.coeffs_ = coeffs_;
    if (c.is_one()) return out;
    for (auto& [m, v] : out.coeffs_) v *= c;
    return out;
}

NormalElement power(const NormalElement& u, int n) {
    if (n < 0) throw DomainError("negative power of an algebra element");
    NormalElement result = NormalElement::one(u.basis());
    for (int i = 0; i < n; ++i) result = result * u;
    return result;
}

NormalElement qbracket(const NormalElement& u, const NormalElement& v) {
    const RationalFunction q = RationalFunction::q();
    const RationalFunction qi = q.inv();
    return ((u * v).scaled(q) - (v * u).scaled(qi)).scaled((q - qi).inv());
}

// ---------------------------------------------------------------------------

std::string_view region_name(Region r) {
    switch (r) {
        case Region::Uprime: return "uprime";
        case Region::Uvee: return "uvee";
        case Region::UveeCapUprime: return "uvee-cap-uprime";
        case Region::Even: return "even";
        case Region::Odd: return "odd";
        case Region::UprimeEven: return "uprime-even";
        case Region::UprimeOdd: return "uprime-odd";
    }
    return "";
}

Region parse_region(std::string_view name) {
    for (Region r : {Region::Uprime, Region::Uvee, Region::UveeCapUprime, Region::Even, Region::Odd,
                     Region::UprimeEven, Region::UprimeOdd}) {
        if (region_name(r) == name) return r;
    }
    throw DomainError("unknown region '" + std::string(name) + "'");
}

namespace {

bool is_even(const Monomial& m) { return (m.r + m.s + m.t) % 2 == 0; }

bool in_region(const Monomial& m, Region region) {
    switch (region) {
        case Region::Uprime: return m.s >= 0;
        case Region::Uvee: return m.s <= 0;
        case Region::UveeCapUprime: return m.s == 0;
        case Region::Even: return is_even(m);
        case Region::Odd: return !is_even(m);
        case Region::UprimeEven: return m.s >= 0 && is_even(m);
        case Region::UprimeOdd: return m.s >= 0 && !is_even(m);
    }
    return false;
}

}  // namespace

bool member(const NormalElement& u, Region region) {
    if (u.basis() != Basis::Equitable) throw BasisMismatch("membership requires the equitable basis");
    for (const auto& [m, c] : u.terms()) {
        if (!in_region(m, region)) return false;
    }
    return true;
}

std::pair<NormalElement, NormalElement> grade_split(const NormalElement& u) {
    if (u.basis() != Basis::Equitable) throw BasisMismatch("grade_split requires the equitable basis");
    NormalElement even(Basis::Equitable);
    NormalElement odd(Basis::Equitable);
    for (const auto& [m, c] : u.terms()) (is_even(m) ? even : odd).add_term(m, c);
    return {even, odd};
}

// ---------------------------------------------------------------------------

std::string format_monomial(Basis basis, const Monomial& m) {
    const char* letters = basis == Basis::Equitable ? "xyz" : "ekf";
    std::string out;
    auto part = [&](char letter, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += letter;
        if (e != 1) out += '^' + std::to_string(e);
    };
    part(letters[0], m.r);
    part(letters[1], m.s);
    part(letters[2], m.t);
    return out.empty() ? "1" : out;
}

std::string format_element(const NormalElement& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : u.terms()) {
        const std::string mono = format_monomial(u.basis(), m);
        std::string term;
        if (c.is_laurent() && c.num().terms().size() > 1) {
            term = "(" + format_scalar(c) + ")*" + mono;
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = "-" + mono;
        } else {
            term = format_scalar(c) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::string element_to_json(const NormalElement& u) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& [m, c] : u.terms()) {
        records.push_back({{"r", m.r}, {"s", m.s}, {"t", m.t}, {"coeff", format_scalar(c)}});
    }
    return records.dump();
}

}  // namespace uqsl2

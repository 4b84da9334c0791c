#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "uqsl2/rational.hpp"

namespace uqsl2 {

// Equitable: x^r y^s z^t.  Chevalley: e^r k^s f^t.
enum class Basis { Equitable, Chevalley };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

struct Monomial {
    int r = 0;
    int s = 0;
    int t = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite combination of PBW monomials with coefficients in Q(q,a).
/// Zero coefficients are never stored.
class NormalElement {
public:
    using Map = std::map<Monomial, RationalFunction>;

    explicit NormalElement(Basis basis = Basis::Equitable) : basis_(basis) {}
    NormalElement(Basis basis, Map coeffs);

    static NormalElement one(Basis basis) { return scalar(basis, RationalFunction(1)); }
    static NormalElement scalar(Basis basis, const RationalFunction& c);
    static NormalElement monomial(Basis basis, Monomial m, const RationalFunction& c = RationalFunction(1));

    Basis basis() const noexcept { return basis_; }
    const Map& terms() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    RationalFunction coeff(const Monomial& m) const;

    // Adds c * m in place.
    void add_term(const Monomial& m, const RationalFunction& c);

    NormalElement operator-() const;
    NormalElement& operator+=(const NormalElement& rhs);
    NormalElement& operator-=(const NormalElement& rhs);
    friend NormalElement operator+(NormalElement lhs, const NormalElement& rhs) { return lhs += rhs; }
    friend NormalElement operator-(NormalElement lhs, const NormalElement& rhs) { return lhs -= rhs; }
    NormalElement scaled(const RationalFunction& c) const;
    friend NormalElement operator*(const RationalFunction& c, const NormalElement& u) { return u.scaled(c); }

    friend bool operator==(const NormalElement& lhs, const NormalElement& rhs) {
        return lhs.basis_ == rhs.basis_ && lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const NormalElement& lhs, const NormalElement& rhs) { return !(lhs == rhs); }

private:
    Basis basis_;
    Map coeffs_;
};

// Noncommutative product in normal form; throws BasisMismatch.
NormalElement operator*(const NormalElement& lhs, const NormalElement& rhs);
NormalElement power(const NormalElement& u, int n);

// (q uv - q^-1 vu) / (q - q^-1)
NormalElement qbracket(const NormalElement& u, const NormalElement& v);

// Image under the isomorphism between the two presentations.
NormalElement convert(const NormalElement& u, Basis target);

enum class Region { Uprime, Uvee, UveeCapUprime, Even, Odd, UprimeEven, UprimeOdd };

std::string_view region_name(Region r);
Region parse_region(std::string_view name);

// Requires the equitable basis; throws BasisMismatch otherwise.
bool member(const NormalElement& u, Region region);
std::pair<NormalElement, NormalElement> grade_split(const NormalElement& u);

// Canonical text form, e.g. "(1 - q^-2)*1 + q^-2*x*z".
std::string format_element(const NormalElement& u);
std::string format_monomial(Basis basis, const Monomial& m);
// Records {r, s, t, coeff} sorted by (r, s, t), as a JSON array string.
std::string element_to_json(const NormalElement& u);

}  // namespace uqsl2

#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace uqsl2 {

using Integer = mpz_class;

// One term c * q^dq * a^da of a bivariate integer polynomial.
struct Term {
    int dq = 0;
    int da = 0;
    Integer c;
};

// Graded-lexicographic order with q > a; "before" means larger.
inline bool grlex_before(int dq1, int da1, int dq2, int da2) {
    const int t1 = dq1 + da1;
    const int t2 = dq2 + da2;
    if (t1 != t2) return t1 > t2;
    return dq1 > dq2;
}

/// Polynomial in Z[q, a].
///
/// Terms are kept sorted by descending grlex order (q > a) with no zero
/// coefficients, so the leading term is always `terms().front()`.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(long c);  // NOLINT: integers convert implicitly
    explicit BiPoly(Integer c);

    static BiPoly monomial(Integer c, int dq, int da);
    static BiPoly q() { return monomial(1, 1, 0); }
    static BiPoly a() { return monomial(1, 0, 1); }
    // Builds from an unsorted term list, combining duplicates.
    static BiPoly from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_one() const;
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading() const { return terms_.front(); }

    int degree_q() const;
    int degree_a() const;
    // Component-wise minimum exponent over all terms (0,0 for zero).
    std::pair<int, int> min_exponents() const;
    // gcd of the integer coefficients; 0 for the zero polynomial.
    Integer content() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);

    BiPoly scaled(const Integer& c) const;
    // Multiplies by q^dq a^da; exponents must stay non-negative.
    BiPoly shifted(int dq, int da) const;

    friend bool operator==(const BiPoly& lhs, const BiPoly& rhs);
    friend bool operator!=(const BiPoly& lhs, const BiPoly& rhs) { return !(lhs == rhs); }

private:
    std::vector<Term> terms_;
};

// Quotient num/den when den divides num exactly in Z[q,a], nullopt otherwise.
std::optional<BiPoly> divide_exact(const BiPoly& num, const BiPoly& den);

// Greatest common divisor in Z[q,a], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& lhs, const BiPoly& rhs);

}  // namespace uqsl2

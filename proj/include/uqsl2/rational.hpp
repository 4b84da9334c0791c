#pragma once

#include <string>
#include <string_view>

#include "uqsl2/bipoly.hpp"

namespace uqsl2 {

enum class Indeterminate { q, a };

/// Element of Q(q, a) as a reduced fraction num/den of integer polynomials.
///
/// Canonical form: gcd(num, den) = 1 (including integer content), the
/// grlex-leading coefficient of den is positive, zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
    explicit RationalFunction(Integer c) : num_(std::move(c)), den_(1) {}
    explicit RationalFunction(BiPoly p) : num_(std::move(p)), den_(1) {}

    // Throws DivisionByZero when den is zero.
    static RationalFunction fraction(BiPoly num, BiPoly den);
    static RationalFunction q() { return RationalFunction(BiPoly::q()); }
    static RationalFunction a() { return RationalFunction(BiPoly::a()); }
    // c * q^dq * a^da for any integer exponents.
    static RationalFunction laurent(Integer c, int dq, int da);
    static RationalFunction q_pow(int n) { return laurent(1, n, 0); }
    static RationalFunction a_pow(int n) { return laurent(1, 0, n); }
    // [n]_q = (q^n - q^-n)/(q - q^-1).
    static RationalFunction qbracket(int n);

    const BiPoly& num() const noexcept { return num_; }
    const BiPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True when the denominator is a single monomial.
    bool is_laurent() const noexcept { return den_.is_monomial(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);
    friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
    friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
    friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
    friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }

    RationalFunction inv() const;
    RationalFunction pow(int n) const;

    // Formal substitution of `value` for one indeterminate.
    RationalFunction substitute(Indeterminate target, const RationalFunction& value) const;

    friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const RationalFunction& lhs, const RationalFunction& rhs) { return !(lhs == rhs); }

private:
    RationalFunction(BiPoly num, BiPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_sign();

    BiPoly num_;
    BiPoly den_;
};

using RF = RationalFunction;

// Scalar grammar; see README. Throws ParseError / DivisionByZero.
RationalFunction parse_scalar(std::string_view text);
std::string format_scalar(const RationalFunction& f);
// Polynomial in the same term syntax.
std::string format_poly(const BiPoly& p);

}  // namespace uqsl2

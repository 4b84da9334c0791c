#include "uqsl2/rational.hpp"

#include <gmpxx.h>

#include <map>

#include "uqsl2/error.hpp"
#include "uqsl2/expr.hpp"

namespace uqsl2 {

namespace {

BiPoly exact(const BiPoly& num, const BiPoly& den) {
    auto quot = divide_exact(num, den);
    if (!quot) throw Error("internal: inexact division in rational arithmetic");
    return std::move(*quot);
}

}  // namespace

RationalFunction RationalFunction::fraction(BiPoly num, BiPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return {};
    const BiPoly g = gcd(num, den);
    RationalFunction out;
    if (g.is_one()) {
        out = RationalFunction(std::move(num), std::move(den), true);
    } else {
        out = RationalFunction(exact(num, g), exact(den, g), true);
    }
    out.normalize_sign();
    return out;
}

RationalFunction RationalFunction::laurent(Integer c, int dq, int da) {
    if (c == 0) return {};
    BiPoly num = BiPoly::monomial(std::move(c), std::max(dq, 0), std::max(da, 0));
    BiPoly den = BiPoly::monomial(1, std::max(-dq, 0), std::max(-da, 0));
    return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction RationalFunction::qbracket(int n) {
    if (n == 0) return {};
    if (n < 0) return -qbracket(-n);
    // (q^{2n} - 1) / (q^{n-1} (q^2 - 1))
    BiPoly num = BiPoly::monomial(1, 2 * n, 0) - BiPoly(1);
    BiPoly den = BiPoly::monomial(1, n + 1, 0) - BiPoly::monomial(1, n - 1, 0);
    return fraction(std::move(num), std::move(den));
}

void RationalFunction::normalize_sign() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    if (den_.leading().c < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, true);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ += rhs.num_;
        normalize_sign();
        return *this;
    }
    if (den_ == rhs.den_) {
        return *this = fraction(num_ + rhs.num_, den_);
    }
    // Henrici: with g = gcd(d1, d2), gcd(n, d1 d2 / g) = gcd(n, g).
    const BiPoly g = gcd(den_, rhs.den_);
    const BiPoly d1 = g.is_one() ? den_ : exact(den_, g);
    const BiPoly d2 = g.is_one() ? rhs.den_ : exact(rhs.den_, g);
    BiPoly n = num_ * d2 + rhs.num_ * d1;
    if (n.is_zero()) return *this = RationalFunction();
    BiPoly d = d1 * rhs.den_;
    if (!g.is_one()) {
        const BiPoly h = gcd(n, g);
        if (!h.is_one()) {
            n = exact(n, h);
            d = exact(d, h);
        }
    }
    num_ = std::move(n);
    den_ = std::move(d);
    normalize_sign();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ = num_ * rhs.num_;
        return *this;
    }
    const BiPoly g1 = gcd(num_, rhs.den_);
    const BiPoly g2 = gcd(rhs.num_, den_);
    BiPoly n1 = g1.is_one() ? num_ : exact(num_, g1);
    BiPoly d2 = g1.is_one() ? rhs.den_ : exact(rhs.den_, g1);
    BiPoly n2 = g2.is_one() ? rhs.num_ : exact(rhs.num_, g2);
    BiPoly d1 = g2.is_one() ? den_ : exact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    normalize_sign();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    return *this *= rhs.inv();
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw DivisionByZero();
    RationalFunction out(den_, num_, true);
    out.normalize_sign();
    return out;
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    RationalFunction result(1);
    RationalFunction base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

RationalFunction RationalFunction::substitute(Indeterminate target, const RationalFunction& value) const {
    std::map<int, RationalFunction> powers;
    auto power_of = [&](int n) -> const RationalFunction& {
        auto it = powers.find(n);
        if (it == powers.end()) it = powers.emplace(n, value.pow(n)).first;
        return it->second;
    };
    auto eval = [&](const BiPoly& p) {
        RationalFunction sum;
        for (const auto& t : p.terms()) {
            const int replaced = target == Indeterminate::q ? t.dq : t.da;
            const int kept_q = target == Indeterminate::q ? 0 : t.dq;
            const int kept_a = target == Indeterminate::a ? 0 : t.da;
            sum += laurent(t.c, kept_q, kept_a) * power_of(replaced);
        }
        return sum;
    };
    const RationalFunction d = eval(den_);
    if (d.is_zero()) throw DivisionByZero("substitution makes a denominator vanish");
    return eval(num_) / d;
}

// ---------------------------------------------------------------------------

namespace {

std::string monomial_text(int dq, int da) {
    std::string out;
    auto part = [&](char var, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += var;
        if (e != 1) out += '^' + std::to_string(e);
    };
    part('q', dq);
    part('a', da);
    return out;
}

std::string term_text(const mpq_class& c, int dq, int da) {
    const std::string mono = monomial_text(dq, da);
    if (mono.empty()) return c.get_str();
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return c.get_str() + "*" + mono;
}

void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term.front() == '-') {
        out += " - ";
        out += term.substr(1);
    } else {
        out += " + ";
        out += term;
    }
}

}  // namespace

std::string format_poly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) append_term(out, term_text(mpq_class(t.c), t.dq, t.da));
    return out;
}

std::string format_scalar(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    if (f.is_laurent()) {
        const Term& d = f.den().leading();
        std::string out;
        for (const auto& t : f.num().terms()) {
            mpq_class c(t.c, d.c);
            c.canonicalize();
            append_term(out, term_text(c, t.dq - d.dq, t.da - d.da));
        }
        return out;
    }
    const std::string den = "(" + format_poly(f.den()) + ")";
    if (f.num().is_monomial()) return format_poly(f.num()) + "/" + den;
    if (f.num().leading().c < 0) return "-(" + format_poly(-f.num()) + ")/" + den;
    return "(" + format_poly(f.num()) + ")/" + den;
}

RationalFunction parse_scalar(std::string_view text) {
    return expr::eval_scalar(*expr::parse_scalar_expr(text));
}

}  // namespace uqsl2

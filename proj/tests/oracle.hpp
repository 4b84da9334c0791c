#pragma once

// Independent checks used by the tests: evaluation of polynomials at
// rational points with plain GMP rationals, and a seeded random source.

#include <gmpxx.h>

#include <random>

#include "uqsl2/rational.hpp"

namespace oracle {

inline mpq_class power(const mpq_class& base, int e) {
    mpq_class out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

inline mpq_class eval(const uqsl2::BiPoly& p, const mpq_class& q, const mpq_class& a) {
    mpq_class sum = 0;
    for (const auto& t : p.terms()) sum += mpq_class(t.c) * power(q, t.dq) * power(a, t.da);
    return sum;
}

inline mpq_class eval(const uqsl2::RationalFunction& f, const mpq_class& q, const mpq_class& a) {
    return eval(f.num(), q, a) / eval(f.den(), q, a);
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

inline uqsl2::BiPoly random_poly(Rng& rng, int max_deg, int max_terms) {
    std::vector<uqsl2::Term> terms;
    const int n = rng.uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
        const int dq = rng.uniform(0, max_deg);
        const int da = rng.uniform(0, max_deg - dq);
        terms.push_back({dq, da, uqsl2::Integer(rng.uniform(-9, 9))});
    }
    return uqsl2::BiPoly::from_terms(std::move(terms));
}

inline uqsl2::RationalFunction random_rf(Rng& rng, int max_deg = 6) {
    uqsl2::BiPoly den;
    while (den.is_zero()) den = random_poly(rng, max_deg / 2, 3);
    return uqsl2::RationalFunction::fraction(random_poly(rng, max_deg / 2, 3), den);
}

}  // namespace oracle

#include "uqsl2/element.hpp"

namespace oracle {

inline uqsl2::RationalFunction small_coeff(Rng& rng) {
    const int kind = rng.uniform(0, 4);
    const uqsl2::RationalFunction base(rng.uniform(1, 5) * (rng.uniform(0, 1) ? 1 : -1));
    if (kind < 3) return base * uqsl2::RationalFunction::laurent(1, rng.uniform(-2, 2), rng.uniform(-1, 1));
    if (kind == 3) return base + uqsl2::RationalFunction::q();
    return base / (uqsl2::RationalFunction::q() + uqsl2::RationalFunction(1));
}

// Up to max_terms monomials with |exponents| <= cap.
inline uqsl2::NormalElement random_element(Rng& rng, uqsl2::Basis basis, int max_terms = 4, int cap = 3,
                                           bool nonneg_middle = false) {
    uqsl2::NormalElement out(basis);
    const int n = rng.uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
        const uqsl2::Monomial m{rng.uniform(0, cap), rng.uniform(nonneg_middle ? 0 : -cap, cap), rng.uniform(0, cap)};
        out.add_term(m, small_coeff(rng));
    }
    return out;
}

}  // namespace oracle

#include "uqsl2/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqsl2 {

namespace {

bool term_less(const Term& lhs, const Term& rhs) {
    return grlex_before(lhs.dq, lhs.da, rhs.dq, rhs.da);
}

bool same_exponent(const Term& lhs, const Term& rhs) {
    return lhs.dq == rhs.dq && lhs.da == rhs.da;
}

// Merges two sorted term lists, rhs scaled by sign.
std::vector<Term> merge(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    auto i = lhs.begin();
    auto j = rhs.begin();
    while (i != lhs.end() || j != rhs.end()) {
        if (j == rhs.end() || (i != lhs.end() && term_less(*i, *j))) {
            out.push_back(*i++);
        } else if (i == lhs.end() || term_less(*j, *i)) {
            Term t = *j++;
            if (sign < 0) t.c = -t.c;
            out.push_back(std::move(t));
        } else {
            Term t = *i++;
            if (sign < 0) {
                t.c -= j->c;
            } else {
                t.c += j->c;
            }
            ++j;
            if (t.c != 0) out.push_back(std::move(t));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (in q), index = degree. Used only by
// the recursive gcd.

using UPoly = std::vector<Integer>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer ucontent(const UPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly uscale_div(const UPoly& p, const Integer& c) {
    UPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
    return out;
}

UPoly umul(const UPoly& lhs, const UPoly& rhs) {
    if (lhs.empty() || rhs.empty()) return {};
    UPoly out(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
    }
    trim(out);
    return out;
}

UPoly usub(const UPoly& lhs, const UPoly& rhs) {
    UPoly out(std::max(lhs.size(), rhs.size()));
    for (std::size_t i = 0; i < lhs.size(); ++i) out[i] += lhs[i];
    for (std::size_t i = 0; i < rhs.size(); ++i) out[i] -= rhs[i];
    trim(out);
    return out;
}

// Exact division over Z; the caller guarantees divisibility.
UPoly udiv_exact(UPoly num, const UPoly& den) {
    if (num.empty()) return {};
    const int dn = udeg(num);
    const int dd = udeg(den);
    UPoly quot(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        const Integer& lead = num[k + dd];
        if (lead == 0) continue;
        Integer coef;
        mpz_divexact(coef.get_mpz_t(), lead.get_mpz_t(), den.back().get_mpz_t());
        for (int j = 0; j <= dd; ++j) num[k + j] -= coef * den[j];
        quot[k] = std::move(coef);
    }
    trim(quot);
    return quot;
}

UPoly uprimitive(const UPoly& p) {
    if (p.empty()) return p;
    Integer c = ucontent(p);
    if (p.back() < 0) c = -c;
    return uscale_div(p, c);
}

// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly upseudo_rem(UPoly a, const UPoly& b) {
    const int db = udeg(b);
    const Integer& lb = b.back();
    while (!a.empty() && udeg(a) >= db) {
        const int shift = udeg(a) - db;
        const Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

UPoly ugcd(const UPoly& lhs, const UPoly& rhs) {
    auto positive = [](UPoly r) {
        if (!r.empty() && r.back() < 0) {
            for (auto& c : r) c = -c;
        }
        return r;
    };
    if (lhs.empty()) return positive(rhs);
    if (rhs.empty()) return positive(lhs);
    Integer g;
    const Integer cl = ucontent(lhs);
    const Integer cr = ucontent(rhs);
    mpz_gcd(g.get_mpz_t(), cl.get_mpz_t(), cr.get_mpz_t());
    UPoly a = uprimitive(lhs);
    UPoly b = uprimitive(rhs);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = upseudo_rem(a, b);
        a = std::move(b);
        b = uprimitive(r);
    }
    for (auto& c : a) c *= g;
    return a;
}

// ---------------------------------------------------------------------------
// Recursive representation: polynomial in a with coefficients in Z[q].

using RPoly = std::vector<UPoly>;

void rtrim(RPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int rdeg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly to_recursive(const BiPoly& p, int sq, int sa) {
    RPoly out(p.degree_a() - sa + 1);
    for (const auto& t : p.terms()) {
        UPoly& coef = out[t.da - sa];
        if (static_cast<int>(coef.size()) <= t.dq - sq) coef.resize(t.dq - sq + 1);
        coef[t.dq - sq] = t.c;
    }
    for (auto& c : out) trim(c);
    rtrim(out);
    return out;
}

BiPoly from_recursive(const RPoly& p) {
    std::vector<Term> terms;
    for (std::size_t da = 0; da < p.size(); ++da) {
        for (std::size_t dq = 0; dq < p[da].size(); ++dq) {
            if (p[da][dq] != 0) terms.push_back({static_cast<int>(dq), static_cast<int>(da), p[da][dq]});
        }
    }
    return BiPoly::from_terms(std::move(terms));
}

UPoly rcontent(const RPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        g = ugcd(g, c);
        if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
    }
    return g;
}

RPoly rdiv_coeff(const RPoly& p, const UPoly& c) {
    RPoly out;
    out.reserve(p.size());
    for (const auto& coef : p) out.push_back(udiv_exact(coef, c));
    return out;
}

RPoly rprimitive(const RPoly& p) {
    if (p.empty()) return p;
    return rdiv_coeff(p, rcontent(p));
}

RPoly rpseudo_rem(RPoly a, const RPoly& b) {
    const int db = rdeg(b);
    const UPoly& lb = b.back();
    while (!a.empty() && rdeg(a) >= db) {
        const int shift = rdeg(a) - db;
        const UPoly la = a.back();
        for (auto& c : a) c = umul(c, lb);
        for (int j = 0; j <= db; ++j) a[shift + j] = usub(a[shift + j], umul(la, b[j]));
        rtrim(a);
    }
    return a;
}

RPoly rgcd_primitive(RPoly a, RPoly b) {
    if (rdeg(a) < rdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        RPoly r = rpseudo_rem(a, b);
        a = std::move(b);
        b = rprimitive(r);
    }
    return a;
}

Integer gcd_int(const Integer& lhs, const Integer& rhs) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
    return g;
}

}  // namespace

BiPoly::BiPoly(long c) : BiPoly(Integer(c)) {}

BiPoly::BiPoly(Integer c) {
    if (c != 0) terms_.push_back({0, 0, std::move(c)});
}

BiPoly BiPoly::monomial(Integer c, int dq, int da) {
    if (dq < 0 || da < 0) throw std::invalid_argument("BiPoly exponents must be non-negative");
    BiPoly p;
    if (c != 0) p.terms_.push_back({dq, da, std::move(c)});
    return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    BiPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && same_exponent(p.terms_.back(), t)) {
            p.terms_.back().c += t.c;
        } else {
            if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].da == 0 && terms_[0].c == 1;
}

int BiPoly::degree_q() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.dq);
    return d;
}

int BiPoly::degree_a() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.da);
    return d;
}

std::pair<int, int> BiPoly::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    int mq = terms_[0].dq;
    int ma = terms_[0].da;
    for (const auto& t : terms_) {
        mq = std::min(mq, t.dq);
        ma = std::min(ma, t.da);
    }
    return {mq, ma};
}

Integer BiPoly::content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BiPoly BiPoly::operator-() const {
    BiPoly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    terms_ = merge(terms_, rhs.terms_, 1);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    terms_ = merge(terms_, rhs.terms_, -1);
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (rhs.is_monomial()) {
        BiPoly p = lhs.shifted(rhs.leading().dq, rhs.leading().da);
        if (rhs.leading().c != 1) p = p.scaled(rhs.leading().c);
        return p;
    }
    if (lhs.is_monomial()) return rhs * lhs;
    std::vector<Term> terms;
    terms.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& s : lhs.terms_) {
        for (const auto& t : rhs.terms_) terms.push_back({s.dq + t.dq, s.da + t.da, s.c * t.c});
    }
    return BiPoly::from_terms(std::move(terms));
}

BiPoly BiPoly::scaled(const Integer& c) const {
    if (c == 0) return {};
    BiPoly p = *this;
    for (auto& t : p.terms_) t.c *= c;
    return p;
}

BiPoly BiPoly::shifted(int dq, int da) const {
    BiPoly p = *this;
    for (auto& t : p.terms_) {
        t.dq += dq;
        t.da += da;
        if (t.dq < 0 || t.da < 0) throw std::invalid_argument("BiPoly shift produced negative exponent");
    }
    // A uniform shift preserves grlex order.
    return p;
}

bool operator==(const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
        const auto& s = lhs.terms_[i];
        const auto& t = rhs.terms_[i];
        if (s.dq != t.dq || s.da != t.da || s.c != t.c) return false;
    }
    return true;
}

std::optional<BiPoly> divide_exact(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return BiPoly{};
    if (den.is_monomial()) {
        const Term& d = den.leading();
        std::vector<Term> out;
        out.reserve(num.terms().size());
        for (const auto& t : num.terms()) {
            if (t.dq < d.dq || t.da < d.da) return std::nullopt;
            if (!mpz_divisible_p(t.c.get_mpz_t(), d.c.get_mpz_t())) return std::nullopt;
            Integer c;
            mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), d.c.get_mpz_t());
            out.push_back({t.dq - d.dq, t.da - d.da, std::move(c)});
        }
        return BiPoly::from_terms(std::move(out));
    }
    BiPoly rem = num;
    std::vector<Term> quot;
    const Term& ld = den.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (lr.dq < ld.dq || lr.da < ld.da) return std::nullopt;
        if (!mpz_divisible_p(lr.c.get_mpz_t(), ld.c.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), lr.c.get_mpz_t(), ld.c.get_mpz_t());
        const BiPoly step = BiPoly::monomial(c, lr.dq - ld.dq, lr.da - ld.da);
        quot.push_back(step.leading());
        rem -= step * den;
    }
    return BiPoly::from_terms(std::move(quot));
}

BiPoly gcd(const BiPoly& lhs, const BiPoly& rhs) {
    auto normalize = [](BiPoly p) {
        if (!p.is_zero() && p.leading().c < 0) p = -p;
        return p;
    };
    if (lhs.is_zero()) return normalize(rhs);
    if (rhs.is_zero()) return normalize(lhs);

    const auto [lq, la] = lhs.min_exponents();
    const auto [rq, ra] = rhs.min_exponents();
    const int gq = std::min(lq, rq);
    const int ga = std::min(la, ra);

    // A monomial operand only shares a monomial factor with anything.
    if (lhs.is_monomial() || rhs.is_monomial()) {
        return BiPoly::monomial(gcd_int(lhs.content(), rhs.content()), gq, ga);
    }

    RPoly a = to_recursive(lhs, lq, la);
    RPoly b = to_recursive(rhs, rq, ra);
    const UPoly content = ugcd(rcontent(a), rcontent(b));
    RPoly g = rgcd_primitive(rprimitive(a), rprimitive(b));
    for (auto& c : g) c = umul(c, content);
    return normalize(from_recursive(g).shifted(gq, ga));
}

}  // namespace uqsl2

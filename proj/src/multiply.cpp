// Multiplication kernels. A product u * v is built by right-multiplying u
// by the generator powers of each monomial of v, using closed forms for
// moving one generator past a normal monomial.

#include <unordered_map>
#include <vector>

#include "uqsl2/element.hpp"
#include "uqsl2/error.hpp"

namespace uqsl2 {

namespace {

using Map = NormalElement::Map;

void accumulate(Map& out, const Monomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

struct PairHash {
    std::size_t operator()(const std::pair<int, int>& p) const noexcept {
        return std::hash<long long>()((static_cast<long long>(p.first) << 32) ^ static_cast<unsigned>(p.second));
    }
};

const RationalFunction& q_pow(int n) {
    thread_local std::unordered_map<int, RationalFunction> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, RationalFunction::q_pow(n)).first;
    return it->second;
}

// ---- equitable ----

// z^t y^m = sum_j table[j] y^{m-j} z^{t-j}
const std::vector<RationalFunction>& zy_table(int t, int m) {
    thread_local std::unordered_map<std::pair<int, int>, std::vector<RationalFunction>, PairHash> cache;
    const auto key = std::make_pair(t, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<RationalFunction> table(t + 1);
    if (t == 0 || m == 0) {
        table.assign(1, RationalFunction(1));
    } else {
        // z^t y^m = q^{2m} (z^{t-1} y^m) z + (1 - q^{2m}) z^{t-1} y^{m-1}
        const std::vector<RationalFunction> same = zy_table(t - 1, m);
        const std::vector<RationalFunction> lower = zy_table(t - 1, m - 1);
        const RationalFunction& scale = q_pow(2 * m);
        const RationalFunction rest = RationalFunction(1) - scale;
        for (std::size_t j = 0; j < same.size(); ++j) table[j] += scale * same[j];
        for (std::size_t j = 0; j < lower.size(); ++j) table[j + 1] += rest * lower[j];
        while (table.size() > 1 && table.back().is_zero()) table.pop_back();
    }
    return cache.emplace(key, std::move(table)).first->second;
}

// x^r y^s z^t x = q^{-2t} [ q^{2s} x^{r+1} y^s z^t + (1 - q^{2s}) x^r y^{s-1} z^t ]
//                + (1 - q^{-2t}) x^r y^s z^{t-1}
Map equitable_times_x(const Map& in) {
    Map out;
    for (const auto& [m, c] : in) {
        const RationalFunction ct = c * q_pow(-2 * m.t);
        accumulate(out, {m.r + 1, m.s, m.t}, ct * q_pow(2 * m.s));
        if (m.s != 0) accumulate(out, {m.r, m.s - 1, m.t}, ct * (RationalFunction(1) - q_pow(2 * m.s)));
        if (m.t > 0) accumulate(out, {m.r, m.s, m.t - 1}, c * (RationalFunction(1) - q_pow(-2 * m.t)));
    }
    return out;
}

Map equitable_times_y(const Map& in, int power) {
    if (power == 0) return in;
    Map out;
    for (const auto& [m, c] : in) {
        const auto& table = zy_table(m.t, power);
        for (std::size_t j = 0; j < table.size(); ++j) {
            const int jj = static_cast<int>(j);
            accumulate(out, {m.r, m.s + power - jj, m.t - jj}, c * table[j]);
        }
    }
    return out;
}

// ---- chevalley ----

// e^r k^s f^t e = q^{2s} e^{r+1} k^s f^t
//   - [t]/(q-q^-1) (q^{t-1} e^r k^{s+1} f^{t-1} - q^{1-t} e^r k^{s-1} f^{t-1})
Map chevalley_times_e(const Map& in) {
    thread_local std::unordered_map<int, RationalFunction> bracket_cache;
    auto bracket = [&](int t) -> const RationalFunction& {
        auto it = bracket_cache.find(t);
        if (it == bracket_cache.end()) {
            const RationalFunction q = RationalFunction::q();
            it = bracket_cache.emplace(t, RationalFunction::qbracket(t) / (q - q.inv())).first;
        }
        return it->second;
    };
    Map out;
    for (const auto& [m, c] : in) {
        accumulate(out, {m.r + 1, m.s, m.t}, c * q_pow(2 * m.s));
        if (m.t > 0) {
            const RationalFunction ct = c * bracket(m.t);
            accumulate(out, {m.r, m.s + 1, m.t - 1}, -(ct * q_pow(m.t - 1)));
            accumulate(out, {m.r, m.s - 1, m.t - 1}, ct * q_pow(1 - m.t));
        }
    }
    return out;
}

// f^t k^m = q^{2tm} k^m f^t
Map chevalley_times_k(const Map& in, int power) {
    if (power == 0) return in;
    Map out;
    for (const auto& [m, c] : in) accumulate(out, {m.r, m.s + power, m.t}, c * q_pow(2 * m.t * power));
    return out;
}

}  // namespace

NormalElement operator*(const NormalElement& lhs, const NormalElement& rhs) {
    if (lhs.basis() != rhs.basis()) throw BasisMismatch("cannot multiply elements in different bases");
    const Basis basis = lhs.basis();
    if (lhs.is_zero() || rhs.is_zero()) return NormalElement(basis);
    const bool equitable = basis == Basis::Equitable;

    // lhs * (first generator)^j for j = 0..max r, built incrementally
    std::vector<Map> first_powers{lhs.terms()};
    Map out;
    for (const auto& [m, c] : rhs.terms()) {
        while (static_cast<int>(first_powers.size()) <= m.r) {
            first_powers.push_back(equitable ? equitable_times_x(first_powers.back())
                                             : chevalley_times_e(first_powers.back()));
        }
        const Map& base = first_powers[m.r];
        Map mid = equitable ? equitable_times_y(base, m.s) : chevalley_times_k(base, m.s);
        for (const auto& [mm, cc] : mid) accumulate(out, {mm.r, mm.s, mm.t + m.t}, cc * c);
    }
    return NormalElement(basis, std::move(out));
}

}  // namespace uqsl2

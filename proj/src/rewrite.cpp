#include "uqsl2/rewrite.hpp"

#include <utility>

#include "uqsl2/error.hpp"

namespace uqsl2::rewrite {

namespace {

using RF = RationalFunction;

RF qp(int n) { return RF::q_pow(n); }

Letter L(int gen, int power = 1) { return {gen, power}; }

void add(Combination& c, Word w, const RF& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = c.try_emplace(std::move(w), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) c.erase(it);
    }
}

Combination combo(std::initializer_list<std::pair<Word, RF>> items) {
    Combination c;
    for (const auto& [w, coeff] : items) add(c, w, coeff);
    return c;
}

std::vector<Rule> make_equitable_rules() {
    const RF one(1);
    const RF q = RF::q();
    const RF qq = q - q.inv();
    const Letter x = L(0), y = L(1), yi = L(1, -1), z = L(2);
    std::vector<Rule> out;
    out.push_back({"y*y^-1", {y, yi}, combo({{{}, one}}), combo({{{y, yi}, one}, {{}, -one}})});
    out.push_back({"y^-1*y", {yi, y}, combo({{{}, one}}), combo({{{yi, y}, one}, {{}, -one}})});
    // q xy - q^-1 yx = q - q^-1 and its cyclic shifts
    out.push_back({"y*x", {y, x}, combo({{{x, y}, qp(2)}, {{}, one - qp(2)}}),
                   combo({{{x, y}, q}, {{y, x}, -q.inv()}, {{}, -qq}})});
    out.push_back({"z*y", {z, y}, combo({{{y, z}, qp(2)}, {{}, one - qp(2)}}),
                   combo({{{y, z}, q}, {{z, y}, -q.inv()}, {{}, -qq}})});
    out.push_back({"z*x", {z, x}, combo({{{x, z}, qp(-2)}, {{}, one - qp(-2)}}),
                   combo({{{z, x}, q}, {{x, z}, -q.inv()}, {{}, -qq}})});
    // the first two relations multiplied by y^-1 on both sides
    out.push_back({"y^-1*x", {yi, x}, combo({{{x, yi}, qp(-2)}, {{L(1, -2)}, one - qp(-2)}}),
                   combo({{{yi, x}, q}, {{x, yi}, -q.inv()}, {{yi, yi}, -qq}})});
    out.push_back({"z*y^-1", {z, yi}, combo({{{yi, z}, qp(-2)}, {{L(1, -2)}, one - qp(-2)}}),
                   combo({{{z, yi}, q}, {{yi, z}, -q.inv()}, {{yi, yi}, -qq}})});
    return out;
}

std::vector<Rule> make_chevalley_rules() {
    const RF one(1);
    const RF q = RF::q();
    const RF qq = q - q.inv();
    const Letter e = L(0), k = L(1), ki = L(1, -1), f = L(2);
    std::vector<Rule> out;
    out.push_back({"k*e", {k, e}, combo({{{e, k}, qp(2)}}), combo({{{k, e, ki}, one}, {{e}, -qp(2)}})});
    out.push_back({"k^-1*e", {ki, e}, combo({{{e, ki}, qp(-2)}}), combo({{{ki, e, k}, one}, {{e}, -qp(-2)}})});
    out.push_back({"f*k", {f, k}, combo({{{k, f}, qp(2)}}), combo({{{ki, f, k}, one}, {{f}, -qp(2)}})});
    out.push_back({"f*k^-1", {f, ki}, combo({{{ki, f}, qp(-2)}}), combo({{{k, f, ki}, one}, {{f}, -qp(-2)}})});
    out.push_back({"f*e", {f, e}, combo({{{e, f}, one}, {{k}, -qq.inv()}, {{ki}, qq.inv()}}),
                   combo({{{e, f}, one}, {{f, e}, -one}, {{k}, -qq.inv()}, {{ki}, qq.inv()}})});
    return out;
}

const Rule& find_rule(Basis basis, const Letter& left, const Letter& right) {
    for (const auto& rule : rules(basis)) {
        if (rule.lhs[0] == left && rule.lhs[1] == right) return rule;
    }
    throw Error("internal: no rewrite rule for an inversion");
}

Word monomial_word(const Monomial& m) {
    Word w;
    if (m.r) w.push_back(L(0, m.r));
    if (m.s) w.push_back(L(1, m.s));
    if (m.t) w.push_back(L(2, m.t));
    return w;
}

}  // namespace

Word collapse(const Word& w) {
    Word out;
    for (const auto& letter : w) {
        if (letter.power == 0) continue;
        if (!out.empty() && out.back().gen == letter.gen) {
            out.back().power += letter.power;
            if (out.back().power == 0) out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

const std::vector<Rule>& rules(Basis basis) {
    static const std::vector<Rule> equitable = make_equitable_rules();
    static const std::vector<Rule> chevalley = make_chevalley_rules();
    return basis == Basis::Equitable ? equitable : chevalley;
}

NormalElement reduce(Basis basis, const Combination& input) {
    std::vector<std::pair<Word, RF>> stack(input.begin(), input.end());
    NormalElement out(basis);
    while (!stack.empty()) {
        auto [raw, coeff] = std::move(stack.back());
        stack.pop_back();
        const Word w = collapse(raw);
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i].gen < w[i + 1].gen) ++i;
        if (i + 1 >= w.size()) {
            Monomial m;
            for (const auto& letter : w) (letter.gen == 0 ? m.r : letter.gen == 1 ? m.s : m.t) = letter.power;
            out.add_term(m, coeff);
            continue;
        }
        // peel one unit off each side of the inversion
        const Letter left_unit{w[i].gen, w[i].power > 0 ? 1 : -1};
        const Letter right_unit{w[i + 1].gen, w[i + 1].power > 0 ? 1 : -1};
        const Rule& rule = find_rule(basis, left_unit, right_unit);
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        prefix.push_back({w[i].gen, w[i].power - left_unit.power});
        Word suffix{{w[i + 1].gen, w[i + 1].power - right_unit.power}};
        suffix.insert(suffix.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        for (const auto& [middle, c] : rule.rhs) {
            Word next = prefix;
            next.insert(next.end(), middle.begin(), middle.end());
            next.insert(next.end(), suffix.begin(), suffix.end());
            stack.emplace_back(std::move(next), coeff * c);
        }
    }
    return out;
}

NormalElement multiply(const NormalElement& lhs, const NormalElement& rhs) {
    if (lhs.basis() != rhs.basis()) throw BasisMismatch("cannot multiply elements in different bases");
    Combination words;
    for (const auto& [m1, c1] : lhs.terms()) {
        for (const auto& [m2, c2] : rhs.terms()) {
            Word w = monomial_word(m1);
            const Word tail = monomial_word(m2);
            w.insert(w.end(), tail.begin(), tail.end());
            add(words, std::move(w), c1 * c2);
        }
    }
    return reduce(lhs.basis(), words);
}

std::vector<SoundnessEntry> check_rule_soundness() {
    std::vector<SoundnessEntry> out;
    for (Basis basis : {Basis::Equitable, Basis::Chevalley}) {
        for (const auto& rule : rules(basis)) {
            Combination result;
            bool used = false;
            for (const auto& [w, c] : rule.relation) {
                std::size_t i = 0;
                while (i + 1 < w.size() && !(w[i] == rule.lhs[0] && w[i + 1] == rule.lhs[1])) ++i;
                if (i + 1 >= w.size()) {
                    add(result, collapse(w), c);
                    continue;
                }
                used = true;
                for (const auto& [middle, mc] : rule.rhs) {
                    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                    next.insert(next.end(), middle.begin(), middle.end());
                    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
                    add(result, collapse(next), c * mc);
                }
            }
            out.push_back({basis, rule.name, used && result.empty()});
        }
    }
    return out;
}

}  // namespace uqsl2::rewrite

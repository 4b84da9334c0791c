#include <vector>

#include "uqsl2/element.hpp"

namespace uqsl2 {

namespace {

using RF = RationalFunction;

RF q() { return RF::q(); }
RF qq() { return q() - q().inv(); }

struct Images {
    Basis target;
    NormalElement first;   // image of x (resp. e)
    NormalElement middle;  // image of y (resp. k)
    NormalElement middle_inv;
    NormalElement last;    // image of z (resp. f)
};

// x -> k^-1 - q(q-q^-1) k^-1 e,  y^{+-1} -> k^{+-1},  z -> k^-1 + (q-q^-1) f
const Images& equitable_to_chevalley() {
    thread_local const Images images = [] {
        const Basis c = Basis::Chevalley;
        const NormalElement kinv = NormalElement::monomial(c, {0, -1, 0});
        const NormalElement e = NormalElement::monomial(c, {1, 0, 0});
        const NormalElement f = NormalElement::monomial(c, {0, 0, 1});
        return Images{c, kinv - (kinv * e).scaled(q() * qq()), NormalElement::monomial(c, {0, 1, 0}), kinv,
                      kinv + f.scaled(qq())};
    }();
    return images;
}

// e -> q(1 - xy)/(q-q^-1),  k^{+-1} -> y^{+-1},  f -> (z - y^-1)/(q-q^-1)
const Images& chevalley_to_equitable() {
    thread_local const Images images = [] {
        const Basis b = Basis::Equitable;
        const NormalElement one = NormalElement::one(b);
        const NormalElement xy = NormalElement::monomial(b, {1, 1, 0});
        const NormalElement yinv = NormalElement::monomial(b, {0, -1, 0});
        const NormalElement z = NormalElement::monomial(b, {0, 0, 1});
        return Images{b, (one - xy).scaled(q() / qq()), NormalElement::monomial(b, {0, 1, 0}), yinv,
                      (z - yinv).scaled(qq().inv())};
    }();
    return images;
}

const NormalElement& cached_power(std::vector<NormalElement>& powers, const NormalElement& base, int n) {
    while (static_cast<int>(powers.size()) <= n) {
        powers.push_back(powers.empty() ? NormalElement::one(base.basis()) : powers.back() * base);
    }
    return powers[n];
}

}  // namespace

NormalElement convert(const NormalElement& u, Basis target) {
    if (u.basis() == target) return u;
    const Images& img = target == Basis::Chevalley ? equitable_to_chevalley() : chevalley_to_equitable();
    thread_local std::vector<NormalElement> first_chev, middle_chev, middle_inv_chev, last_chev;
    thread_local std::vector<NormalElement> first_eq, middle_eq, middle_inv_eq, last_eq;
    const bool to_chev = target == Basis::Chevalley;
    auto& first = to_chev ? first_chev : first_eq;
    auto& middle = to_chev ? middle_chev : middle_eq;
    auto& middle_inv = to_chev ? middle_inv_chev : middle_inv_eq;
    auto& last = to_chev ? last_chev : last_eq;

    NormalElement out(target);
    for (const auto& [m, c] : u.terms()) {
        const NormalElement& mid = m.s >= 0 ? cached_power(middle, img.middle, m.s)
                                            : cached_power(middle_inv, img.middle_inv, -m.s);
        NormalElement term = cached_power(first, img.first, m.r) * mid;
        term = term * cached_power(last, img.last, m.t);
        out += term.scaled(c);
    }
    return out;
}

}  // namespace uqsl2

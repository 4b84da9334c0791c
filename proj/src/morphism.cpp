#include "uqsl2/morphism.hpp"

#include <vector>

#include "uqsl2/error.hpp"
#include "uqsl2/named.hpp"

namespace uqsl2 {

namespace {

using RF = RationalFunction;

class Powers {
public:
    explicit Powers(NormalElement base) : cache_{NormalElement::one(Basis::Equitable), std::move(base)} {}
    const NormalElement& get(int n) {
        while (static_cast<int>(cache_.size()) <= n) cache_.push_back(cache_.back() * cache_[1]);
        return cache_[static_cast<std::size_t>(n)];
    }

private:
    std::vector<NormalElement> cache_;
};

NormalElement apply_equitable(const Morphism& m, const NormalElement& u) {
    Powers px(m.x), py(m.y), pyi(m.y_inv), pz(m.z);
    NormalElement out(Basis::Equitable);
    for (const auto& [mono, c] : u.terms()) {
        const NormalElement& xr = px.get(mono.r);
        const NormalElement& ys = mono.s >= 0 ? py.get(mono.s) : pyi.get(-mono.s);
        const NormalElement& zt = pz.get(mono.t);
        const NormalElement term = m.direction == Direction::Homomorphism ? xr * ys * zt : zt * ys * xr;
        out += term.scaled(c);
    }
    return out;
}

}  // namespace

Morphism sigma() {
    return {"sigma", Direction::Homomorphism, named("X"), named("y"), named("y_inv"), named("Z")};
}

Morphism sigma_inv() {
    Morphism m = substitute(sigma(), Indeterminate::a, RF::a().inv());
    m.name = "sigma_inv";
    return m;
}

Morphism tau() {
    return {"tau", Direction::Antihomomorphism, named("z"), named("y"), named("y_inv"), named("x")};
}

Morphism dagger() {
    return {"dagger", Direction::Antihomomorphism, named("Z"), named("y"), named("y_inv"), named("X")};
}

Morphism identity_morphism() {
    return {"id", Direction::Homomorphism, named("x"), named("y"), named("y_inv"), named("z")};
}

Morphism morphism_by_name(std::string_view name) {
    if (name == "sigma") return sigma();
    if (name == "sigma_inv") return sigma_inv();
    if (name == "tau") return tau();
    if (name == "dagger") return dagger();
    if (name == "id") return identity_morphism();
    throw DomainError("unknown morphism '" + std::string(name) + "'");
}

NormalElement apply_morphism(const Morphism& m, const NormalElement& u) {
    if (u.basis() == Basis::Equitable) return apply_equitable(m, u);
    return convert(apply_equitable(m, convert(u, Basis::Equitable)), u.basis());
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    const bool anti = (outer.direction == Direction::Antihomomorphism) != (inner.direction == Direction::Antihomomorphism);
    return {outer.name + "*" + inner.name, anti ? Direction::Antihomomorphism : Direction::Homomorphism,
            apply_morphism(outer, inner.x), apply_morphism(outer, inner.y), apply_morphism(outer, inner.y_inv),
            apply_morphism(outer, inner.z)};
}

NormalElement substitute(const NormalElement& u, Indeterminate target, const RationalFunction& value) {
    NormalElement out(u.basis());
    for (const auto& [mono, c] : u.terms()) out.add_term(mono, c.substitute(target, value));
    return out;
}

Morphism substitute(const Morphism& m, Indeterminate target, const RationalFunction& value) {
    return {m.name, m.direction, substitute(m.x, target, value), substitute(m.y, target, value),
            substitute(m.y_inv, target, value), substitute(m.z, target, value)};
}

bool respects_relations(const Morphism& m) {
    const auto mul = [&](const NormalElement& u, const NormalElement& v) {
        return m.direction == Direction::Homomorphism ? u * v : v * u;
    };
    const auto bracket = [&](const NormalElement& u, const NormalElement& v) {
        const RF q = RF::q();
        return (mul(u, v).scaled(q) - mul(v, u).scaled(q.inv())).scaled((q - q.inv()).inv());
    };
    const NormalElement one = NormalElement::one(Basis::Equitable);
    return mul(m.y, m.y_inv) == one && mul(m.y_inv, m.y) == one && bracket(m.x, m.y) == one &&
           bracket(m.y, m.z) == one && bracket(m.z, m.x) == one;
}

}  // namespace uqsl2

#include "uqsl2/named.hpp"

#include <map>

#include "uqsl2/error.hpp"

namespace uqsl2 {

namespace {

using RF = RationalFunction;

NormalElement eq_mono(int r, int s, int t, const RF& c = RF(1)) {
    return NormalElement::monomial(Basis::Equitable, {r, s, t}, c);
}

std::map<std::string, NormalElement, std::less<>> build_named() {
    const RF q = RF::q();
    const RF a = RF::a();
    const RF qq = q - q.inv();
    const NormalElement one = eq_mono(0, 0, 0);
    const NormalElement x = eq_mono(1, 0, 0);
    const NormalElement y = eq_mono(0, 1, 0);
    const NormalElement yinv = eq_mono(0, -1, 0);
    const NormalElement z = eq_mono(0, 0, 1);

    std::map<std::string, NormalElement, std::less<>> out;
    out.emplace("x", x);
    out.emplace("y", y);
    out.emplace("y_inv", yinv);
    out.emplace("z", z);
    out.emplace("e", (one - x * y).scaled(q / qq));
    out.emplace("f", (z - yinv).scaled(qq.inv()));
    out.emplace("k", y);
    out.emplace("k_inv", yinv);
    out.emplace("nu_x", (one - y * z).scaled(q));
    out.emplace("nu_y", (one - z * x).scaled(q));
    out.emplace("nu_z", (one - x * y).scaled(q));
    const NormalElement X = x.scaled(a.pow(-2)) + yinv.scaled(RF(1) - a.pow(-2));
    const NormalElement Z = z.scaled(a.pow(2)) + yinv.scaled(RF(1) - a.pow(2));
    out.emplace("X", X);
    out.emplace("Z", Z);
    out.emplace("A", x.scaled(a.inv()) + z.scaled(a));
    out.emplace("Lambda", x.scaled(q) + y.scaled(q.inv()) + z.scaled(q) - (x * y * z).scaled(q));
    return out;
}

const std::map<std::string, NormalElement, std::less<>>& named_table() {
    static const auto table = build_named();
    return table;
}

}  // namespace

const std::vector<std::string>& named_element_names() {
    static const std::vector<std::string> names = {"x",    "y",    "y_inv", "z",    "e", "f", "k",     "k_inv",
                                                   "nu_x", "nu_y", "nu_z",  "X",    "Z", "A", "Lambda"};
    return names;
}

NormalElement named(std::string_view name) {
    const auto& table = named_table();
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown element name '" + std::string(name) + "'");
    return it->second;
}

AtomLookup named_lookup(Basis basis) {
    return [basis](const std::string& name, int exponent, std::size_t pos) {
        const bool invertible = name == "y" || name == "k";
        if (exponent < 0 && !invertible) throw ParseError("negative power of '" + name + "'", pos);
        if (basis == Basis::Chevalley && (name == "e" || name == "f" || name == "k")) {
            const Monomial m = name == "e"   ? Monomial{exponent, 0, 0}
                               : name == "k" ? Monomial{0, exponent, 0}
                                             : Monomial{0, 0, exponent};
            return NormalElement::monomial(basis, m);
        }
        if (invertible) return convert(NormalElement::monomial(Basis::Equitable, {0, exponent, 0}), basis);
        return power(convert(named(name), basis), exponent);
    };
}

NormalElement parse_element(std::string_view text, Basis basis) {
    const expr::NodePtr node = expr::parse_element_expr(text);
    ElementBackend backend(basis, named_lookup(basis));
    return expr::evaluate(*node, backend);
}

}  // namespace uqsl2

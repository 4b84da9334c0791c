#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "uqsl2/element.hpp"
#include "uqsl2/expr.hpp"

namespace uqsl2 {

// x, y, y_inv, z, e, f, k, k_inv, nu_x, nu_y, nu_z, X, Z, A, Lambda
const std::vector<std::string>& named_element_names();

// Named element in the equitable basis; throws DomainError for unknown names.
NormalElement named(std::string_view name);

// Resolves an atom raised to an integer power; may throw ParseError.
using AtomLookup = std::function<NormalElement(const std::string& name, int power, std::size_t pos)>;

// Lookup over the named elements in the given basis. Negative powers are
// accepted for y and k only.
AtomLookup named_lookup(Basis basis);

/// Backend for expr::evaluate producing normal-form elements.
class ElementBackend {
public:
    ElementBackend(Basis basis, AtomLookup lookup) : basis_(basis), lookup_(std::move(lookup)) {}

    NormalElement one() const { return NormalElement::one(basis_); }
    NormalElement scalar(const RationalFunction& c) const { return NormalElement::scalar(basis_, c); }
    NormalElement atom(const std::string& name, int power, std::size_t pos) const { return lookup_(name, power, pos); }
    NormalElement add(const NormalElement& u, const NormalElement& v) const { return u + v; }
    NormalElement sub(const NormalElement& u, const NormalElement& v) const { return u - v; }
    NormalElement mul(const NormalElement& u, const NormalElement& v) const { return u * v; }
    NormalElement scale(const RationalFunction& c, const NormalElement& u) const { return u.scaled(c); }
    NormalElement neg(const NormalElement& u) const { return -u; }

private:
    Basis basis_;
    AtomLookup lookup_;
};

// Parses and evaluates an element expression over the named elements.
NormalElement parse_element(std::string_view text, Basis basis = Basis::Equitable);

}  // namespace uqsl2

#pragma once

#include <string>
#include <string_view>

#include "uqsl2/element.hpp"

namespace uqsl2 {

enum class Direction { Homomorphism, Antihomomorphism };

/// Algebra (anti)endomorphism given by its images of x, y, y^-1, z in the
/// equitable basis.
struct Morphism {
    std::string name;
    Direction direction = Direction::Homomorphism;
    NormalElement x{Basis::Equitable};
    NormalElement y{Basis::Equitable};
    NormalElement y_inv{Basis::Equitable};
    NormalElement z{Basis::Equitable};
};

// sigma keeps a symbolic; tau and dagger are antiautomorphisms.
Morphism sigma();
Morphism sigma_inv();  // sigma with a replaced by a^-1
Morphism tau();
Morphism dagger();
Morphism identity_morphism();

// Looks up "sigma", "sigma_inv", "tau", "dagger"; throws DomainError.
Morphism morphism_by_name(std::string_view name);

// Applies the morphism; elements in the Chevalley basis are converted
// to the equitable basis and back.
NormalElement apply_morphism(const Morphism& m, const NormalElement& u);

// outer after inner.
Morphism compose(const Morphism& outer, const Morphism& inner);

// Replaces an indeterminate in every coefficient, e.g. a := q for sigma_q.
NormalElement substitute(const NormalElement& u, Indeterminate target, const RationalFunction& value);
Morphism substitute(const Morphism& m, Indeterminate target, const RationalFunction& value);

// True when the images satisfy the equitable relations (reversed for
// antihomomorphisms) and y * y^-1 = 1.
bool respects_relations(const Morphism& m);

}  // namespace uqsl2

#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uqsl2/element.hpp"
#include "uqsl2/morphism.hpp"

namespace uqsl2 {

/// A presentation by generators and relations, together with the images of
/// its generators in the equitable basis. A generator named "y" admits
/// negative powers; "y_inv" alone admits only negative powers of y.
struct PresentationSpec {
    std::string id;
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, std::string>> relations;
    std::map<std::string, NormalElement, std::less<>> embedding;
};

// chevalley, equitable, mod-chevalley, invariant, uvee-xyz, uvee-XyZ, uvee-xXA, uvee-zZA
const std::vector<std::string>& presentation_ids();
const PresentationSpec& presentation(std::string_view id);

// Evaluates an expression in the generators of p through its embedding.
NormalElement embed(const PresentationSpec& p, std::string_view text);

struct RelationReport {
    std::string id;
    std::size_t index = 0;
    bool pass = false;
    NormalElement residual{Basis::Equitable};
    std::string error;  // parse failure, if any
};

std::vector<RelationReport> verify_presentation(const PresentationSpec& p);
std::string report_to_json(const std::vector<RelationReport>& report);

/// Isomorphism between two presentations: images of the source generators
/// as expressions in the target generators, and the inverse.
struct Isomorphism {
    std::string name;
    std::string source;
    std::string target;
    std::map<std::string, std::string> forward;
    std::map<std::string, std::string> backward;
};

const std::vector<Isomorphism>& isomorphisms();

struct RoundTrip {
    std::string generator;
    bool source_side = true;  // generator of the source presentation
    bool ok = false;
};

// Checks inverse(forward(g)) = g and forward(inverse(g)) = g on every
// generator, plus agreement of both maps with the embeddings.
std::vector<RoundTrip> round_trip(const Isomorphism& iso);

// Bases of the subspace S: (i) x,y^-1,z  (ii) X,y^-1,Z  (iii) x,X,A  (iv) z,Z,A
enum class SBasis { I, II, III, IV };

std::string_view sbasis_name(SBasis b);
std::array<NormalElement, 3> sbasis_vectors(SBasis b);

using Matrix3 = std::array<std::array<RationalFunction, 3>, 3>;

/// Column j holds the coordinates of dst vector j in the src basis; for
/// morphisms src = dst and column j holds m(b_j).
struct SMatrix {
    SBasis source = SBasis::I;
    SBasis target = SBasis::I;
    Matrix3 m{};
};

Matrix3 multiply(const Matrix3& lhs, const Matrix3& rhs);
Matrix3 identity3();

// Defined for (i)<->(ii), (i)<->(iii), (i)<->(iv); throws DomainError otherwise.
SMatrix transition(SBasis src, SBasis dst);
// m is "tau" or "dagger"; throws DomainError otherwise.
SMatrix s_matrix_of(std::string_view m, SBasis basis);

// Recombines basis vectors through the matrix and compares with the
// elements it is meant to describe.
bool transition_consistent(const SMatrix& t);
bool s_matrix_consistent(std::string_view m, const SMatrix& s);

}  // namespace uqsl2

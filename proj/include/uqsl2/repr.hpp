#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uqsl2/element.hpp"
#include "uqsl2/matrix.hpp"

namespace uqsl2 {

using MatrixMap = std::map<std::string, FMatrix, std::less<>>;

/// Images of the generators of one of the bundled presentations
/// ("chevalley", "equitable", "uvee-xyz", "uvee-XyZ", "uvee-xXA", "uvee-zZA").
struct MatrixRep {
    std::string presentation;
    std::size_t n = 0;
    MatrixMap images;
};

// Evaluates an element expression with atoms read from the map; "y^-1"
// reads "y_inv" and "k^-1" reads "k_inv".
FMatrix eval_matrix_expr(std::string_view text, const MatrixMap& images, std::size_t n);

// Validates every defining relation of the presentation; throws DomainError
// naming the first relation that fails.
MatrixRep make_rep(std::string presentation, MatrixMap images);

// Relation indices of the rep's presentation that fail (empty when sound).
std::vector<std::size_t> failing_relations(const MatrixRep& rep);

// Weight basis v_0..v_d: k v_i = q^(d-2i) v_i, e v_i = [i] v_(i-1), f v_i = [d-i] v_(i+1).
MatrixRep standard_module(int d);
// 1-dimensional U-vee module with x = u, y^-1 = 0, z = v.
MatrixRep scalar_module(const RationalFunction& u = RationalFunction(1), const RationalFunction& v = RationalFunction(1));
MatrixRep direct_sum(const MatrixRep& lhs, const MatrixRep& rhs);

struct EquitableImages {
    FMatrix x;
    FMatrix y_inv;
    FMatrix z;
    std::optional<FMatrix> y;
};

EquitableImages equitable_images(const MatrixRep& rep);
// Restriction to the subalgebra generated by x, y^-1, z.
MatrixRep restrict_to_uvee(const MatrixRep& rep);
// Adds y = (y^-1)^-1; throws SingularError when y^-1 is not invertible.
MatrixRep extend_to_uq(const MatrixRep& rep);

// Throws SingularError when y is needed and y^-1 is singular.
FMatrix rep_eval(const MatrixRep& rep, const NormalElement& u);

struct KBA {
    FMatrix K;  // action of z
    FMatrix B;  // action of Z
    FMatrix A;  // action of A
};

KBA build_KBA(const MatrixRep& rep);
// The U-vee module with z -> K, Z -> B, A -> A.
MatrixRep first_module(const KBA& kba);
// The U-vee module with x -> K^-1, X -> B^-1, A -> A.
MatrixRep second_module(const KBA& kba);

// q^-1 (I - B K^-1)(a I - a^-1 B K^-1)^-1
FMatrix psi(const FMatrix& K, const FMatrix& B);

std::array<FMatrix, 4> casimir_forms(const FMatrix& A, const FMatrix& K, const FMatrix& B, const FMatrix& psi_m);

// Projection onto the eigenspace for values[i] along the others; values distinct.
FMatrix eigenprojection(const FMatrix& m, const std::vector<RationalFunction>& values, std::size_t i);

struct TDParams {
    int d = 1;
    std::vector<RationalFunction> theta;
    std::vector<RationalFunction> theta_star;
    RationalFunction a{1};
    std::optional<RationalFunction> b;
};

// theta_i = a q^(d-2i) + a^-1 q^(2i-d)
std::vector<RationalFunction> qracah_sequence(int d, const RationalFunction& a);
// The pair (A-action, y-action) on the standard module: theta from a, theta*_i = q^(d-2i).
TDParams standard_td_params(int d);

// True when prod (m - values_i I) = 0 and the values are distinct.
bool annihilated_by(const FMatrix& m, const std::vector<RationalFunction>& values);

enum class Flip { Plain, Down };

// U_i = (V*_0 + ... + V*_i) meet (V_i + ... + V_d), or with (V_0 + ... + V_(d-i))
// for Flip::Down. Throws DomainError if an eigenvalue check fails.
std::vector<SubspaceBasis> split_decomposition(const FMatrix& A, const FMatrix& Astar, const TDParams& params,
                                               Flip flip);
// (A - theta I) U_i in U_(i+1) and (A* - theta*_i I) U_i in U_(i-1), with
// theta = theta_i (plain) or theta_(d-i) (down).
bool split_inclusions_hold(const FMatrix& A, const FMatrix& Astar, const TDParams& params, Flip flip,
                           const std::vector<SubspaceBasis>& U);

struct TDReport {
    bool diagonalizable = false;      // both maps, with nonzero eigenspaces
    bool tridiagonal = false;         // A* on the eigenspaces of A
    bool dual_tridiagonal = false;    // A on the eigenspaces of A*
    bool span_full = false;           // every standard basis vector generates V
    std::size_t algebra_dim = 0;      // dimension of the generated algebra
    bool irreducible = false;         // algebra_dim == n^2
    bool ok() const { return diagonalizable && tridiagonal && dual_tridiagonal && span_full && irreducible; }
};

TDReport is_tridiagonal_pair(const FMatrix& A, const FMatrix& Astar, const TDParams& params);

struct FittingParts {
    SubspaceBasis invertible;
    SubspaceBasis nilpotent;
};

FittingParts fitting_decomposition(const MatrixRep& rep);
// True when the subspace is invariant under x, y^-1 and z.
bool is_uvee_submodule(const MatrixRep& rep, const SubspaceBasis& s);

// {"presentation", "n", "images": {name: matrix}}
std::string rep_to_json(const MatrixRep& rep);

}  // namespace uqsl2

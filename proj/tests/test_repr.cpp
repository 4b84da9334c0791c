#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>

#include "oracle.hpp"
#include "uqsl2/error.hpp"
#include "uqsl2/named.hpp"
#include "uqsl2/repr.hpp"

using namespace uqsl2;

namespace {

RF q() { return RF::q(); }
RF a() { return RF::a(); }

FMatrix I(std::size_t n) { return FMatrix::identity(n); }

// Numeric value of the matrix at q = 13/10, a = 17/10.
Eigen::MatrixXd numeric(const FMatrix& m) {
    const mpq_class qv(13, 10), av(17, 10);
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = oracle::eval(m(i, j), qv, av).get_d();
    return out;
}

double numeric(const RF& c) { return oracle::eval(c, mpq_class(13, 10), mpq_class(17, 10)).get_d(); }

// Dense floating-point check that Astar is tridiagonal in the eigenbasis of
// A ordered by the supplied eigenvalues.
bool numerically_tridiagonal(const FMatrix& A, const FMatrix& Astar, const std::vector<RF>& theta) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(numeric(A));
    const auto n = static_cast<Eigen::Index>(A.rows());
    Eigen::MatrixXd P(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double target = numeric(theta[static_cast<std::size_t>(i)]);
        Eigen::Index best = 0;
        for (Eigen::Index k = 1; k < n; ++k) {
            if (std::abs(solver.eigenvalues()(k).real() - target) < std::abs(solver.eigenvalues()(best).real() - target))
                best = k;
        }
        P.col(i) = solver.eigenvectors().col(best).real();
    }
    const Eigen::MatrixXd T = P.inverse() * numeric(Astar) * P;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && std::abs(T(i, j)) > 1e-8) return false;
    return true;
}

}  // namespace

TEST_CASE("exact linear algebra") {
    const FMatrix m{{q(), RF(1)}, {RF(0), a()}};
    CHECK(m * m.inverse() == I(2));
    CHECK(m.rank() == 2);
    const FMatrix s{{RF(1), q()}, {RF(2), q() * RF(2)}};
    CHECK(s.rank() == 1);
    CHECK_THROWS_AS(s.inverse(), SingularError);
    const FMatrix k = s.nullspace();
    CHECK(k.cols() == 1);
    CHECK((s * k).is_zero());
    CHECK(s.column_space().cols() == 1);
    const auto u = SubspaceBasis::span(FMatrix{{RF(1), RF(0)}, {RF(0), RF(1)}, {RF(0), RF(0)}});
    const auto w = SubspaceBasis::span(FMatrix{{RF(1)}, {RF(1)}, {RF(1)}}) +
                   SubspaceBasis::span(FMatrix{{RF(0)}, {RF(1)}, {RF(0)}});
    CHECK(u.intersect(w).dim() == 1);
    CHECK((u + w).dim() == 3);
    CHECK(m.pow(-2) * m.pow(2) == I(2));
    CHECK(matrix_to_json(FMatrix{{q(), RF(0)}}) == R"({"n":1,"rows":[["q","0"]]})");
}

TEST_CASE("standard module") {
    const auto v1 = standard_module(1);
    CHECK(v1.images.at("k") == FMatrix{{q(), RF(0)}, {RF(0), q().inv()}});
    CHECK(v1.images.at("e") == FMatrix{{RF(0), RF(1)}, {RF(0), RF(0)}});
    CHECK(v1.images.at("f") == FMatrix{{RF(0), RF(0)}, {RF(1), RF(0)}});
    const auto v2 = standard_module(2);
    CHECK(v2.images.at("e")(1, 2) == q() + q().inv());
    CHECK_THROWS_AS(standard_module(0), DomainError);
    for (int d = 1; d <= 4; ++d) {
        const auto v = standard_module(d);
        const auto n = static_cast<std::size_t>(d + 1);
        CHECK(failing_relations(v).empty());
        CHECK(failing_relations(extend_to_uq(v)).empty());
        CHECK(rep_eval(v, named("Lambda")) == FMatrix::scalar(n, q().pow(d + 1) + q().pow(-d - 1)));
        CHECK(rep_eval(v, NormalElement::one(Basis::Equitable)) == I(n));
        CHECK(annihilated_by(rep_eval(v, named("A")), qracah_sequence(d, a())));
    }
    const auto v = standard_module(2);
    const FMatrix x = rep_eval(v, named("x"));
    const FMatrix y = rep_eval(v, named("y"));
    const RF qq = q() - q().inv();
    CHECK((x * y).scaled(q() / qq) - (y * x).scaled(q().inv() / qq) == I(3));
}

TEST_CASE("rep_eval is an algebra map") {
    oracle::Rng rng(21);
    const auto v = standard_module(2);
    for (int i = 0; i < 8; ++i) {
        const auto u = oracle::random_element(rng, Basis::Equitable, 3, 2);
        const auto w = oracle::random_element(rng, Basis::Equitable, 3, 2);
        CHECK(rep_eval(v, u * w) == rep_eval(v, u) * rep_eval(v, w));
        CHECK(rep_eval(v, u + w) == rep_eval(v, u) + rep_eval(v, w));
        CHECK(rep_eval(v, convert(u, Basis::Chevalley)) == rep_eval(v, u));
    }
}

TEST_CASE("K, B, A and psi on the standard module") {
    const RF qq = q() - q().inv();
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        const auto v = standard_module(d);
        const auto n = static_cast<std::size_t>(d + 1);
        const KBA kba = build_KBA(v);
        const auto m1 = first_module(kba);
        CHECK(failing_relations(m1).empty());
        const FMatrix& K = kba.K;
        const FMatrix& B = kba.B;
        CHECK((K * kba.A).scaled(q()) - (kba.A * K).scaled(q().inv()) ==
              (K * K).scaled(a() * qq) + I(n).scaled(a().inv() * qq));
        const RF c1 = (a().inv() * q() - a() * q().inv()) / qq;
        const RF c2 = (a() * q() - a().inv() * q().inv()) / qq;
        CHECK(((K * K).scaled(a()) - (K * B).scaled(c1) - (B * K).scaled(c2) + (B * B).scaled(a().inv())).is_zero());
        CHECK(rep_eval(v, named("x")) == kba.A.scaled(a()) - K.scaled(a().pow(2)));

        const FMatrix p = psi(K, B);
        const auto ext1 = extend_to_uq(m1);
        CHECK(rep_eval(ext1, named("nu_x")) == p.scaled(a().inv()));
        CHECK(rep_eval(ext1, named("y")) == K.inverse() * (I(n) - p.scaled(a().inv() * q())));
        const FMatrix lam = rep_eval(ext1, named("Lambda"));
        for (const auto& form : casimir_forms(kba.A, K, B, p)) CHECK(form == lam);

        const auto m2 = second_module(kba);
        CHECK(failing_relations(m2).empty());
        const FMatrix Ki = K.inverse();
        const FMatrix Bi = B.inverse();
        CHECK((kba.A * Ki).scaled(q()) - (Ki * kba.A).scaled(q().inv()) ==
              (Ki * Ki).scaled(a().inv() * qq) + I(n).scaled(a() * qq));
        CHECK(((Ki * Ki).scaled(a().inv()) - (Ki * Bi).scaled(c1) - (Bi * Ki).scaled(c2) + (Bi * Bi).scaled(a()))
                  .is_zero());
        const auto ext2 = extend_to_uq(m2);
        CHECK(rep_eval(ext2, named("nu_z")) == p.scaled(a()));
        CHECK(rep_eval(ext2, named("y")) == K * (I(n) - p.scaled(a() * q().inv())));
        for (const auto& form : casimir_forms(kba.A, K, B, p)) CHECK(form == rep_eval(ext2, named("Lambda")));

        // psi lowers the K-eigenspaces
        std::vector<RF> eig;
        for (int i = 0; i <= d; ++i) eig.push_back(q().pow(d - 2 * i));
        for (std::size_t i = 0; i < n; ++i) {
            const FMatrix Pi = eigenprojection(K, eig, i);
            const FMatrix target = i == 0 ? FMatrix::zero(n, n) : eigenprojection(K, eig, i - 1) * p * Pi;
            CHECK(p * Pi == target);
        }
    }
    CHECK(psi(I(2).scaled(q()), I(2).scaled(q())).is_zero());
}

TEST_CASE("element families act through K, B and A") {
    const auto v = standard_module(2);
    const KBA kba = build_KBA(v);
    const auto ext1 = extend_to_uq(first_module(kba));
    const MatrixMap first{{"z", kba.K}, {"Z", kba.B}, {"A", kba.A}};
    const char* first_forms[] = {
        "q^-1 a^-1 (z - Z)/(a - a^-1)",
        "q^-1 A (z - Z)/(a - a^-1) + a (q - q^-1)/(a - a^-1) z^2 + (a q^-1 - a^-1 q)/(a - a^-1) z Z + q^-1",
        "q (z - Z)/(a - a^-1) A - a (q - q^-1)/(a - a^-1) z^2 + (a q - a^-1 q^-1)/(a - a^-1) Z z + q",
    };
    CHECK(rep_eval(ext1, parse_element("nu_x y^-1")) == eval_matrix_expr(first_forms[0], first, 3));
    CHECK(rep_eval(ext1, parse_element("Lambda y^-1")) == eval_matrix_expr(first_forms[1], first, 3));
    CHECK(rep_eval(ext1, parse_element("Lambda y^-1")) == eval_matrix_expr(first_forms[2], first, 3));
    CHECK(rep_eval(ext1, named("nu_y")) == eval_matrix_expr("a (z A - A z)/(q - q^-1)", first, 3));

    const auto ext2 = extend_to_uq(second_module(kba));
    const MatrixMap second{{"x", kba.K.inverse()}, {"X", kba.B.inverse()}, {"A", kba.A}};
    CHECK(rep_eval(ext2, parse_element("nu_z y^-1")) == eval_matrix_expr("q a (X - x)/(a - a^-1)", second, 3));
    CHECK(rep_eval(ext2, named("nu_y")) == eval_matrix_expr("a^-1 (A x - x A)/(q - q^-1)", second, 3));
}

TEST_CASE("split decomposition and tridiagonal pairs") {
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        const auto v = standard_module(d);
        const auto n = static_cast<std::size_t>(d + 1);
        const FMatrix A = rep_eval(v, named("A"));
        const FMatrix Y = rep_eval(v, named("y"));
        const TDParams params = standard_td_params(d);
        for (Flip flip : {Flip::Plain, Flip::Down}) {
            const auto U = split_decomposition(A, Y, params, flip);
            std::size_t total = 0;
            for (const auto& u : U) {
                CHECK(u.dim() == 1);
                total += u.dim();
            }
            CHECK(total == n);
            CHECK(split_inclusions_hold(A, Y, params, flip, U));
        }
        const auto report = is_tridiagonal_pair(A, Y, params);
        CHECK(report.diagonalizable);
        CHECK(report.tridiagonal);
        CHECK(report.dual_tridiagonal);
        CHECK(report.span_full);
        CHECK(report.algebra_dim == n * n);
        CHECK(report.ok());
        CHECK(numerically_tridiagonal(A, Y, params.theta));
        CHECK(numerically_tridiagonal(Y, A, params.theta_star));

        const auto ident = is_tridiagonal_pair(I(n), I(n), params);
        CHECK_FALSE(ident.irreducible);
        CHECK_FALSE(ident.span_full);
        CHECK_FALSE(ident.ok());
        TDParams same = params;
        same.theta_star = params.theta;
        const auto twice = is_tridiagonal_pair(A, A, same);
        CHECK_FALSE(twice.irreducible);
        CHECK_FALSE(twice.ok());
    }
    const TDParams bad = standard_td_params(1);
    CHECK_THROWS_AS(split_decomposition(I(2), I(2), bad, Flip::Plain), DomainError);
}

TEST_CASE("split decomposition against the z-eigenspaces") {
    // Reported, not asserted: whether U_i is the q^(d-2i) eigenspace of z.
    for (int d = 1; d <= 3; ++d) {
        const auto v = standard_module(d);
        const FMatrix A = rep_eval(v, named("A"));
        const FMatrix Y = rep_eval(v, named("y"));
        const FMatrix Z = rep_eval(v, named("z"));
        for (Flip flip : {Flip::Plain, Flip::Down}) {
            const auto U = split_decomposition(A, Y, standard_td_params(d), flip);
            std::string agree;
            for (int i = 0; i <= d; ++i) {
                if (eigenspace(Z, q().pow(d - 2 * i)) == U[static_cast<std::size_t>(i)]) agree += " " + std::to_string(i);
            }
            MESSAGE("d=" << d << std::string(flip == Flip::Plain ? " plain" : " down") << ": U_i equals the z-eigenspace for i in {"
                         << agree << " }");
        }
    }
}

TEST_CASE("fitting decomposition and extension") {
    for (int d = 1; d <= 3; ++d) {
        const auto v = restrict_to_uvee(standard_module(d));
        const auto n = static_cast<std::size_t>(d + 1);
        const auto parts = fitting_decomposition(v);
        CHECK(parts.invertible.dim() == n);
        CHECK(parts.nilpotent.dim() == 0);
        const auto sum = direct_sum(v, scalar_module());
        const auto split = fitting_decomposition(sum);
        CHECK(split.invertible.dim() == n);
        CHECK(split.nilpotent.dim() == 1);
        CHECK(split.invertible.intersect(split.nilpotent).dim() == 0);
        CHECK(is_uvee_submodule(sum, split.invertible));
        CHECK(is_uvee_submodule(sum, split.nilpotent));
        CHECK_THROWS_AS(extend_to_uq(sum), SingularError);
        CHECK_NOTHROW(extend_to_uq(v));
    }
    const auto s = scalar_module();
    CHECK(fitting_decomposition(s).invertible.dim() == 0);
    CHECK_THROWS_AS(extend_to_uq(s), SingularError);
    CHECK_THROWS_AS(rep_eval(s, named("y")), SingularError);
    CHECK(rep_eval(s, named("x")) == I(1));
    CHECK_THROWS_AS(make_rep("uvee-xyz", {{"x", I(1).scaled(RF(2))}, {"y_inv", I(1)}, {"z", I(1)}}), DomainError);
    CHECK(rep_to_json(s) ==
          R"({"presentation":"uvee-xyz","n":1,"images":{"x":{"n":1,"rows":[["1"]]},"y_inv":{"n":1,"rows":[["0"]]},"z":{"n":1,"rows":[["1"]]}}})");
}

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "uqsl2/catalog.hpp"
#include "uqsl2/cli.hpp"
#include "uqsl2/morphism.hpp"
#include "uqsl2/named.hpp"
#include "uqsl2/presentations.hpp"
#include "uqsl2/repr.hpp"
#include "uqsl2/rewrite.hpp"

using namespace uqsl2;

namespace {

constexpr Basis EQ = Basis::Equitable;
constexpr Basis CH = Basis::Chevalley;

RF q() { return RF::q(); }
RF a() { return RF::a(); }

// Collects the first failure so the summary line can say what went wrong.
class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }
    int checks() const { return checks_; }

private:
    std::string failure_;
    int checks_ = 0;
};

void identity_catalog(Criterion& c) {
    const CatalogReport report = run_catalog(bundled_catalog());
    for (const auto& r : report.results) c.expect(r.pass, "identity " + r.id);
    c.expect(report.results.size() >= 50, "catalog has fewer than 50 records");
}

void presentation_soundness(Criterion& c) {
    c.expect(presentation_ids().size() == 8, "expected 8 presentations");
    for (const auto& id : presentation_ids())
        for (const auto& r : verify_presentation(presentation(id)))
            c.expect(r.pass, id + " relation " + std::to_string(r.index));
    for (const auto& iso : isomorphisms())
        for (const auto& r : round_trip(iso)) c.expect(r.ok, iso.name + " on " + r.generator);
}

void rewriting_confluence(Criterion& c) {
    oracle::Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
        const Basis b = i % 2 ? CH : EQ;
        const auto u = oracle::random_element(rng, b);
        const auto v = oracle::random_element(rng, b);
        const auto w = oracle::random_element(rng, b);
        c.expect((u * v) * w == u * (v * w), "associativity triple " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        const auto u = oracle::random_element(rng, EQ, 3, 2);
        const auto v = oracle::random_element(rng, EQ, 3, 2);
        c.expect(convert(u * v, CH) == convert(u, CH) * convert(v, CH), "convert of a product");
        c.expect(convert(u + v, CH) == convert(u, CH) + convert(v, CH), "convert of a sum");
        c.expect(convert(convert(u, CH), EQ) == u, "convert round trip");
    }
    int eq = 0;
    int ch = 0;
    for (const auto& entry : rewrite::check_rule_soundness()) {
        c.expect(entry.sound, "rule " + entry.rule);
        (entry.basis == EQ ? eq : ch) += 1;
    }
    c.expect(eq == 7 && ch == 5, "rule counts");
}

void morphism_algebra(Criterion& c) {
    oracle::Rng rng(77);
    std::vector<NormalElement> samples;
    for (const auto& n : named_element_names()) samples.push_back(named(n));
    for (int i = 0; i < 50; ++i) samples.push_back(oracle::random_element(rng, EQ, 3, 2));
    const Morphism dagger_tau = compose(dagger(), tau());
    const Morphism tau_dagger = compose(tau(), dagger());
    const Morphism tau_sigma = compose(tau(), sigma());
    const Morphism sigma_inv_tau = compose(sigma_inv(), tau());
    const Morphism sigma_q = substitute(sigma(), Indeterminate::a, q());
    const NormalElement k = named("y");
    const NormalElement k_inv = named("y_inv");
    for (const auto& u : samples) {
        c.expect(apply_morphism(tau(), apply_morphism(tau(), u)) == u, "tau^2");
        c.expect(apply_morphism(dagger(), apply_morphism(dagger(), u)) == u, "dagger^2");
        c.expect(apply_morphism(dagger_tau, u) == apply_morphism(sigma(), u), "dagger tau = sigma");
        c.expect(apply_morphism(tau_dagger, u) == apply_morphism(sigma_inv(), u), "tau dagger = sigma^-1");
        c.expect(apply_morphism(tau_sigma, u) == apply_morphism(sigma_inv_tau, u), "tau sigma_a = sigma_(a^-1) tau");
        c.expect(apply_morphism(sigma_q, u) == k_inv * u * k, "sigma_q is conjugation by k^-1");
    }
    for (const auto& m : {sigma(), tau(), dagger()})
        c.expect(apply_morphism(m, named("Lambda")) == named("Lambda"), "Lambda fixed by " + m.name);
}

void transition_matrices(Criterion& c) {
    for (auto b : {SBasis::II, SBasis::III, SBasis::IV}) {
        const auto there = transition(SBasis::I, b);
        const auto back = transition(b, SBasis::I);
        const std::string tag = std::string(sbasis_name(b));
        c.expect(multiply(there.m, back.m) == identity3(), "transition pair " + tag);
        c.expect(multiply(back.m, there.m) == identity3(), "transition pair " + tag + " reversed");
        c.expect(transition_consistent(there) && transition_consistent(back), "transition consistency " + tag);
    }
    for (auto b : {SBasis::I, SBasis::II, SBasis::III, SBasis::IV}) {
        for (const char* m : {"tau", "dagger"}) {
            const auto s = s_matrix_of(m, b);
            const std::string tag = std::string(m) + " on " + std::string(sbasis_name(b));
            c.expect(multiply(s.m, s.m) == identity3(), tag + " squares to I");
            c.expect(s_matrix_consistent(m, s), tag + " consistency");
        }
    }
}

void membership_facts(Criterion& c) {
    const auto in = [](const char* text, Region r) { return member(parse_element(text), r); };
    for (const char* text : {"nu_x", "nu_z", "Lambda", "y"})
        c.expect(!in(text, Region::Uvee), std::string(text) + " outside U-vee");
    for (const char* text : {"nu_x y^-1", "nu_y", "nu_z y^-1", "Lambda y^-1"})
        c.expect(in(text, Region::Uvee), std::string(text) + " inside U-vee");
    c.expect(in("Lambda", Region::UprimeOdd), "Lambda in U'_odd");
}

void representation_suite(Criterion& c) {
    const RF qq = q() - q().inv();
    for (int d = 1; d <= 4; ++d) {
        const std::string tag = " (d=" + std::to_string(d) + ")";
        const auto n = static_cast<std::size_t>(d + 1);
        const FMatrix I = FMatrix::identity(n);
        const MatrixRep v = standard_module(d);
        c.expect(failing_relations(v).empty(), "Chevalley relations" + tag);
        c.expect(failing_relations(extend_to_uq(v)).empty(), "equitable relations" + tag);
        const FMatrix lambda = rep_eval(v, named("Lambda"));
        c.expect(lambda == FMatrix::scalar(n, q().pow(d + 1) + q().pow(-d - 1)), "Lambda scalar" + tag);
        c.expect(annihilated_by(rep_eval(v, named("A")), qracah_sequence(d, a())), "A annihilated" + tag);

        const KBA kba = build_KBA(v);
        const FMatrix& K = kba.K;
        c.expect((K * kba.A).scaled(q()) - (kba.A * K).scaled(q().inv()) ==
                     (K * K).scaled(a() * qq) + I.scaled(a().inv() * qq),
                 "K, A relation" + tag);
        const MatrixRep first = first_module(kba);
        const MatrixRep second = second_module(kba);
        c.expect(failing_relations(first).empty(), "relations for (K, B, A)" + tag);
        c.expect(failing_relations(second).empty(), "relations for (K^-1, B^-1, A)" + tag);
        const FMatrix p = psi(K, kba.B);
        c.expect(rep_eval(extend_to_uq(first), named("nu_x")) == p.scaled(a().inv()), "nu_x = a^-1 psi" + tag);
        c.expect(rep_eval(extend_to_uq(second), named("nu_z")) == p.scaled(a()), "nu_z = a psi" + tag);
        for (const auto& form : casimir_forms(kba.A, K, kba.B, p)) c.expect(form == lambda, "Casimir form" + tag);

        if (d > 3) continue;
        std::vector<RF> eig;
        for (int i = 0; i <= d; ++i) eig.push_back(q().pow(d - 2 * i));
        for (std::size_t i = 0; i < n; ++i) {
            const FMatrix Pi = eigenprojection(K, eig, i);
            const FMatrix lowered = i == 0 ? FMatrix::zero(n, n) : eigenprojection(K, eig, i - 1) * p * Pi;
            c.expect(p * Pi == lowered, "psi lowering" + tag);
        }
    }
}

void split_decomposition_suite(Criterion& c) {
    for (int d = 1; d <= 3; ++d) {
        const std::string tag = " (d=" + std::to_string(d) + ")";
        const auto n = static_cast<std::size_t>(d + 1);
        const MatrixRep v = standard_module(d);
        const FMatrix A = rep_eval(v, named("A"));
        const FMatrix Y = rep_eval(v, named("y"));
        const TDParams params = standard_td_params(d);
        for (Flip flip : {Flip::Plain, Flip::Down}) {
            const auto U = split_decomposition(A, Y, params, flip);
            SubspaceBasis total(n);
            for (const auto& u : U) {
                c.expect(u.dim() == 1, "U_i one-dimensional" + tag);
                total = total + u;
            }
            c.expect(total.dim() == n, "direct sum" + tag);
            c.expect(split_inclusions_hold(A, Y, params, flip, U), "raising/lowering inclusions" + tag);
        }
        c.expect(is_tridiagonal_pair(A, Y, params).ok(), "tridiagonal pair" + tag);
        const FMatrix I = FMatrix::identity(n);
        c.expect(!is_tridiagonal_pair(I, I, params).ok(), "identity control" + tag);
        TDParams same = params;
        same.theta_star = params.theta;
        c.expect(!is_tridiagonal_pair(A, A, same).ok(), "(A, A) control" + tag);
    }
}

void fitting_suite(Criterion& c) {
    for (int d = 1; d <= 4; ++d) {
        const std::string tag = " (d=" + std::to_string(d) + ")";
        const auto n = static_cast<std::size_t>(d + 1);
        const MatrixRep v = restrict_to_uvee(standard_module(d));
        const MatrixRep sum = direct_sum(v, scalar_module());
        const FittingParts parts = fitting_decomposition(sum);
        c.expect(parts.invertible.dim() == n && parts.nilpotent.dim() == 1, "V_inv/V_nil dimensions" + tag);
        bool extended = true;
        try {
            extend_to_uq(v);
        } catch (const SingularError&) {
            extended = false;
        }
        c.expect(extended, "extension of the standard module" + tag);
        bool refused = false;
        try {
            extend_to_uq(sum);
        } catch (const SingularError&) {
            refused = true;
        }
        c.expect(refused, "extension refused with singular y^-1" + tag);
    }
}

void cli_goldens(Criterion& c) {
    struct Golden {
        std::vector<std::string> args;
        int code;
        std::string out;
    };
    const std::vector<Golden> goldens = {
        {{"normalize", "z*x"}, 0, "(1 - q^-2)*1 + q^-2*x*z\n"},
        {{"catalog", "--filter", "casequit"},
         0,
         "PASS casequit-1\nPASS casequit-2\nPASS casequit-3\nPASS casequit-4\nPASS casequit-5\nPASS casequit-6\n"
         "6 passed, 0 failed\n"},
        {{"member", "--region", "uvee", "nu_x"}, 1, "false\n"},
        {{"rep", "--standard", "1", "--element", "Lambda"},
         0,
         "{\"n\":2,\"rows\":[[\"q^2 + q^-2\",\"0\"],[\"0\",\"q^2 + q^-2\"]]}\n"},
    };
    for (const auto& g : goldens) {
        std::ostringstream out, err;
        const int code = cli::run(g.args, out, err);
        c.expect(code == g.code && out.str() == g.out, "golden for " + g.args.front());
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"identity catalog", identity_catalog},
        {"presentation soundness", presentation_soundness},
        {"rewriting confluence evidence", rewriting_confluence},
        {"morphism algebra", morphism_algebra},
        {"transition matrices", transition_matrices},
        {"membership facts", membership_facts},
        {"representation suite", representation_suite},
        {"split decomposition", split_decomposition_suite},
        {"fitting decomposition", fitting_suite},
        {"cli goldens", cli_goldens},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << c.checks() << " checks, " << ms << " ms)";
        if (!c.ok()) std::cout << "  first failure: " << c.failure();
        std::cout << '\n';
        failed += c.ok() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

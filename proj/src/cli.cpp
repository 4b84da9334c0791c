#include "uqsl2/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "uqsl2/catalog.hpp"
#include "uqsl2/error.hpp"
#include "uqsl2/morphism.hpp"
#include "uqsl2/named.hpp"
#include "uqsl2/presentations.hpp"
#include "uqsl2/repr.hpp"

namespace uqsl2::cli {

namespace {

using RF = RationalFunction;
using Json = nlohmann::ordered_json;

struct Options {
    std::string expr;
    std::string basis = "equitable";
    std::string morphism;
    std::string subst;
    std::string region;
    std::string filter;
    std::string element;
    std::string presentation;
    int standard = 0;
    bool json = false;
};

// Text currently being parsed, for caret diagnostics.
struct Diagnostics {
    std::string text;
};

NormalElement parse_tracked(Diagnostics& diag, const std::string& text, Basis basis) {
    diag.text = text;
    NormalElement u = parse_element(text, basis);
    diag.text.clear();
    return u;
}

void print_element(std::ostream& out, const NormalElement& u, bool json) {
    out << (json ? element_to_json(u) : format_element(u)) << '\n';
}

// "a=<scalar>" or "q=<scalar>"
std::pair<Indeterminate, RF> parse_subst(Diagnostics& diag, const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw DomainError("--subst expects a=<scalar> or q=<scalar>");
    const std::string var = text.substr(0, eq);
    if (var != "a" && var != "q") throw DomainError("--subst can only replace a or q");
    diag.text = text.substr(eq + 1);
    RF value = parse_scalar(diag.text);
    diag.text.clear();
    return {var == "a" ? Indeterminate::a : Indeterminate::q, std::move(value)};
}

struct Check {
    std::string name;
    bool pass;
};

int emit_checks(std::ostream& out, const std::vector<Check>& checks, bool json) {
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (json) {
        Json arr = Json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"status", c.pass ? "pass" : "fail"}});
        out << Json{{"ok", ok}, {"checks", arr}}.dump() << '\n';
    } else {
        for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    }
    return ok ? kSuccess : kMathFailure;
}

int cmd_normalize(const Options& o, Diagnostics& diag, std::ostream& out) {
    print_element(out, parse_tracked(diag, o.expr, parse_basis(o.basis)), o.json);
    return kSuccess;
}

int cmd_convert(const Options& o, Diagnostics& diag, std::ostream& out) {
    const Basis from = parse_basis(o.basis);
    const Basis to = from == Basis::Equitable ? Basis::Chevalley : Basis::Equitable;
    print_element(out, convert(parse_tracked(diag, o.expr, from), to), o.json);
    return kSuccess;
}

int cmd_apply(const Options& o, Diagnostics& diag, std::ostream& out) {
    Morphism m = morphism_by_name(o.morphism);
    if (!o.subst.empty()) {
        const auto [var, value] = parse_subst(diag, o.subst);
        m = substitute(m, var, value);
    }
    print_element(out, apply_morphism(m, parse_tracked(diag, o.expr, parse_basis(o.basis))), o.json);
    return kSuccess;
}

int cmd_member(const Options& o, Diagnostics& diag, std::ostream& out) {
    const Region region = parse_region(o.region);
    const bool in = member(convert(parse_tracked(diag, o.expr, parse_basis(o.basis)), Basis::Equitable), region);
    out << (in ? "true" : "false") << '\n';
    return in ? kSuccess : kMathFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto report = verify_presentation(presentation(o.presentation));
    const bool ok = std::all_of(report.begin(), report.end(), [](const RelationReport& r) { return r.pass; });
    if (o.json) {
        out << report_to_json(report) << '\n';
    } else {
        for (const auto& r : report) {
            out << (r.pass ? "PASS " : "FAIL ") << r.id << '#' << r.index;
            if (!r.pass) out << "  residual: " << (r.error.empty() ? format_element(r.residual) : r.error);
            out << '\n';
        }
    }
    return ok ? kSuccess : kMathFailure;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    const CatalogReport report = run_catalog(bundled_catalog(), o.filter);
    out << (o.json ? report_to_json(report) + "\n" : format_report(report));
    return report.ok() ? kSuccess : kMathFailure;
}

int cmd_rep(const Options& o, Diagnostics& diag, std::ostream& out) {
    const MatrixRep rep = standard_module(o.standard);
    if (o.element.empty()) {
        out << rep_to_json(rep) << '\n';
        return kSuccess;
    }
    out << matrix_to_json(rep_eval(rep, parse_tracked(diag, o.element, Basis::Equitable))) << '\n';
    return kSuccess;
}

int cmd_psi_check(const Options& o, std::ostream& out) {
    const MatrixRep v = standard_module(o.standard);
    const KBA kba = build_KBA(v);
    const FMatrix p = psi(kba.K, kba.B);
    const RF a = RF::a();
    std::vector<Check> checks;

    const MatrixRep first = first_module(kba);
    checks.push_back({"first-module relations", failing_relations(first).empty()});
    const MatrixRep ext1 = extend_to_uq(first);
    checks.push_back({"nu_x = a^-1 psi", rep_eval(ext1, named("nu_x")) == p.scaled(a.inv())});

    const MatrixRep second = second_module(kba);
    checks.push_back({"second-module relations", failing_relations(second).empty()});
    const MatrixRep ext2 = extend_to_uq(second);
    checks.push_back({"nu_z = a psi", rep_eval(ext2, named("nu_z")) == p.scaled(a)});

    const FMatrix lambda = rep_eval(v, named("Lambda"));
    const auto forms = casimir_forms(kba.A, kba.K, kba.B, p);
    for (std::size_t i = 0; i < forms.size(); ++i)
        checks.push_back({"casimir form c" + std::to_string(i + 1), forms[i] == lambda});
    return emit_checks(out, checks, o.json);
}

int cmd_td_check(const Options& o, std::ostream& out) {
    const MatrixRep v = standard_module(o.standard);
    const FMatrix A = rep_eval(v, named("A"));
    const FMatrix Y = rep_eval(v, named("y"));
    const TDParams params = standard_td_params(o.standard);
    std::vector<Check> checks;
    for (Flip flip : {Flip::Plain, Flip::Down}) {
        const std::string tag = flip == Flip::Plain ? "split" : "split-down";
        const auto U = split_decomposition(A, Y, params, flip);
        const bool lines = std::all_of(U.begin(), U.end(), [](const SubspaceBasis& s) { return s.dim() == 1; });
        checks.push_back({tag + " one-dimensional", lines});
        checks.push_back({tag + " inclusions", split_inclusions_hold(A, Y, params, flip, U)});
    }
    const TDReport r = is_tridiagonal_pair(A, Y, params);
    checks.push_back({"diagonalizable", r.diagonalizable});
    checks.push_back({"tridiagonal", r.tridiagonal});
    checks.push_back({"dual tridiagonal", r.dual_tridiagonal});
    checks.push_back({"irreducible", r.irreducible && r.span_full});
    return emit_checks(out, checks, o.json);
}

void print_caret(std::ostream& err, const std::string& text, std::size_t position) {
    err << "  " << text << '\n' << "  " << std::string(std::min(position, text.size()), ' ') << "^\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in U_q(sl2) and its subalgebra U-vee", "uqsl2"};
    app.require_subcommand(1, 1);
    Options o;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--basis", o.basis, "Input basis")
            ->check(CLI::IsMember({"equitable", "chevalley"}))
            ->capture_default_str();
        sub->add_flag("--json", o.json, "Structured output");
    };

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
    normalize->add_option("expr", o.expr)->required();
    add_common(normalize);

    auto* conv = app.add_subcommand("convert", "Rewrite in the other PBW basis");
    conv->add_option("expr", o.expr)->required();
    add_common(conv);

    auto* apply = app.add_subcommand("apply", "Apply an (anti)automorphism");
    apply->add_option("expr", o.expr)->required();
    apply->add_option("--morphism", o.morphism)->required()->check(CLI::IsMember({"sigma", "sigma_inv", "tau", "dagger", "id"}));
    apply->add_option("--subst", o.subst, "a=<scalar> applied to the morphism");
    add_common(apply);

    auto* mem = app.add_subcommand("member", "Test membership in a region");
    mem->add_option("expr", o.expr)->required();
    mem->add_option("--region", o.region)->required();
    add_common(mem);

    auto* verify = app.add_subcommand("verify", "Check the defining relations of a presentation");
    verify->add_option("presentation", o.presentation)->required();
    verify->add_flag("--json", o.json);

    auto* catalog = app.add_subcommand("catalog", "Run the identity catalog");
    catalog->add_option("--filter", o.filter, "Record id prefix");
    catalog->add_flag("--json", o.json);

    auto* rep = app.add_subcommand("rep", "Matrices on the standard module");
    rep->add_option("--standard", o.standard, "Highest weight d")->required()->check(CLI::PositiveNumber);
    rep->add_option("--element", o.element);
    rep->add_flag("--json", o.json);

    auto* psi_check = app.add_subcommand("psi-check", "K, B, A and psi on the standard module");
    psi_check->add_option("--standard", o.standard)->required()->check(CLI::PositiveNumber);
    psi_check->add_flag("--json", o.json);

    auto* td_check = app.add_subcommand("td-check", "Tridiagonal pair (A, y) on the standard module");
    td_check->add_option("--standard", o.standard)->required()->check(CLI::PositiveNumber);
    td_check->add_flag("--json", o.json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    Diagnostics diag;
    try {
        if (normalize->parsed()) return cmd_normalize(o, diag, out);
        if (conv->parsed()) return cmd_convert(o, diag, out);
        if (apply->parsed()) return cmd_apply(o, diag, out);
        if (mem->parsed()) return cmd_member(o, diag, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (catalog->parsed()) return cmd_catalog(o, out);
        if (rep->parsed()) return cmd_rep(o, diag, out);
        if (psi_check->parsed()) return cmd_psi_check(o, out);
        if (td_check->parsed()) return cmd_td_check(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (!diag.text.empty()) print_caret(err, diag.text, e.position());
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const BasisMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kMathFailure;
    }
    return kUsageError;
}

}  // namespace uqsl2::cli

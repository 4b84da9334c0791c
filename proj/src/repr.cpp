#include "uqsl2/repr.hpp"

#include <json.hpp>

#include "uqsl2/error.hpp"
#include "uqsl2/expr.hpp"
#include "uqsl2/presentations.hpp"

namespace uqsl2 {

namespace {

using RF = RationalFunction;

class MatrixBackend {
public:
    MatrixBackend(const MatrixMap& images, std::size_t n) : images_(images), n_(n) {}

    FMatrix one() const { return FMatrix::identity(n_); }
    FMatrix scalar(const RF& c) const { return FMatrix::scalar(n_, c); }
    FMatrix atom(const std::string& name, int power, std::size_t pos) const {
        const std::string key = power < 0 ? name + "_inv" : name;
        auto it = images_.find(key);
        if (it == images_.end()) throw ParseError("no matrix for '" + name + (power < 0 ? "^-1'" : "'"), pos);
        return it->second.pow(power < 0 ? -power : power);
    }
    FMatrix add(const FMatrix& u, const FMatrix& v) const { return u + v; }
    FMatrix sub(const FMatrix& u, const FMatrix& v) const { return u - v; }
    FMatrix mul(const FMatrix& u, const FMatrix& v) const { return u * v; }
    FMatrix scale(const RF& c, const FMatrix& u) const { return u.scaled(c); }
    FMatrix neg(const FMatrix& u) const { return -u; }

private:
    const MatrixMap& images_;
    std::size_t n_;
};

class PowerCache {
public:
    explicit PowerCache(FMatrix base) : cache_{FMatrix::identity(base.rows()), std::move(base)} {}
    const FMatrix& get(int k) {
        while (static_cast<int>(cache_.size()) <= k) cache_.push_back(cache_.back() * cache_[1]);
        return cache_[static_cast<std::size_t>(k)];
    }

private:
    std::vector<FMatrix> cache_;
};

// Span of flattened vectors, kept with distinct pivot positions.
class IncrementalSpan {
public:
    bool add(std::vector<RF> v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            const RF factor = v[pivot];
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (!row[j].is_zero()) v[j] -= factor * row[j];
            }
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        const RF inv = v[p].inv();
        for (auto& c : v) c *= inv;
        rows_.emplace_back(p, std::move(v));
        return true;
    }
    std::size_t dim() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, std::vector<RF>>> rows_;
};

std::vector<RF> flatten(const FMatrix& m) {
    std::vector<RF> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

std::size_t closure_dim(const std::vector<FMatrix>& seeds, const FMatrix& A, const FMatrix& Astar, bool left) {
    IncrementalSpan span;
    std::vector<FMatrix> queue;
    for (const auto& s : seeds) {
        if (span.add(flatten(s))) queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const FMatrix* g : {&A, &Astar}) {
            FMatrix next = left ? *g * queue[head] : queue[head] * *g;
            if (span.add(flatten(next))) queue.push_back(std::move(next));
        }
    }
    return span.dim();
}

SubspaceBasis sum_range(const std::vector<SubspaceBasis>& spaces, std::size_t from, std::size_t to, std::size_t n) {
    SubspaceBasis out(n);
    for (std::size_t i = from; i <= to && i < spaces.size(); ++i) out = out + spaces[i];
    return out;
}

std::vector<SubspaceBasis> eigenspaces(const FMatrix& m, const std::vector<RF>& values) {
    std::vector<SubspaceBasis> out;
    for (const auto& v : values) out.push_back(eigenspace(m, v));
    return out;
}

bool is_decomposition(const std::vector<SubspaceBasis>& spaces, std::size_t n) {
    std::size_t total = 0;
    for (const auto& s : spaces) {
        if (s.dim() == 0) return false;
        total += s.dim();
    }
    return total == n;
}

bool maps_into(const FMatrix& m, const SubspaceBasis& from, const SubspaceBasis& into) {
    return into.contains(m * from.vectors());
}

}  // namespace

FMatrix eval_matrix_expr(std::string_view text, const MatrixMap& images, std::size_t n) {
    const expr::NodePtr node = expr::parse_element_expr(text);
    MatrixBackend backend(images, n);
    return expr::evaluate(*node, backend);
}

std::vector<std::size_t> failing_relations(const MatrixRep& rep) {
    const PresentationSpec& p = presentation(rep.presentation);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& [lhs, rhs] = p.relations[i];
        if (eval_matrix_expr(lhs, rep.images, rep.n) != eval_matrix_expr(rhs, rep.images, rep.n)) out.push_back(i);
    }
    return out;
}

MatrixRep make_rep(std::string tag, MatrixMap images) {
    const PresentationSpec& p = presentation(tag);
    if (images.empty()) throw DomainError("representation without images");
    const std::size_t n = images.begin()->second.rows();
    for (const auto& g : p.generators) {
        auto it = images.find(g);
        if (it == images.end()) throw DomainError("missing image of '" + g + "'");
        if (it->second.rows() != n || it->second.cols() != n) throw DomainError("image of '" + g + "' has wrong shape");
    }
    MatrixRep rep{std::move(tag), n, std::move(images)};
    const auto bad = failing_relations(rep);
    if (!bad.empty()) {
        const auto& [lhs, rhs] = p.relations[bad.front()];
        throw DomainError("relation " + lhs + " = " + rhs + " fails in " + rep.presentation + " representation");
    }
    return rep;
}

MatrixRep standard_module(int d) {
    if (d < 1) throw DomainError("standard module needs d >= 1");
    const auto n = static_cast<std::size_t>(d + 1);
    FMatrix e(n, n), f(n, n), k(n, n), ki(n, n);
    for (int i = 0; i <= d; ++i) {
        const auto u = static_cast<std::size_t>(i);
        k(u, u) = RF::q_pow(d - 2 * i);
        ki(u, u) = RF::q_pow(2 * i - d);
        if (i > 0) e(u - 1, u) = RF::qbracket(i);
        if (i < d) f(u + 1, u) = RF::qbracket(d - i);
    }
    return make_rep("chevalley", {{"e", e}, {"f", f}, {"k", k}, {"k_inv", ki}});
}

MatrixRep scalar_module(const RF& u, const RF& v) {
    return make_rep("uvee-xyz", {{"x", FMatrix{{u}}}, {"y_inv", FMatrix{{RF(0)}}}, {"z", FMatrix{{v}}}});
}

MatrixRep direct_sum(const MatrixRep& lhs, const MatrixRep& rhs) {
    if (lhs.presentation != rhs.presentation) throw DomainError("direct sum of representations of different presentations");
    MatrixMap images;
    for (const auto& [name, m] : lhs.images) {
        auto it = rhs.images.find(name);
        if (it == rhs.images.end()) throw DomainError("missing image of '" + name + "'");
        images.emplace(name, block_diagonal(m, it->second));
    }
    return make_rep(lhs.presentation, std::move(images));
}

EquitableImages equitable_images(const MatrixRep& rep) {
    const auto& im = rep.images;
    if (rep.presentation == "equitable") return {im.at("x"), im.at("y_inv"), im.at("z"), im.at("y")};
    if (rep.presentation == "uvee-xyz") return {im.at("x"), im.at("y_inv"), im.at("z"), std::nullopt};
    for (const auto& iso : isomorphisms()) {
        const std::map<std::string, std::string>* exprs = nullptr;
        if (iso.target == rep.presentation && iso.source == "equitable") exprs = &iso.forward;
        if (iso.source == rep.presentation && iso.target == "uvee-xyz") exprs = &iso.backward;
        if (!exprs) continue;
        const auto get = [&](const char* name) { return eval_matrix_expr(exprs->at(name), im, rep.n); };
        EquitableImages out{get("x"), get("y_inv"), get("z"), std::nullopt};
        if (exprs->contains("y")) out.y = get("y");
        return out;
    }
    throw DomainError("no equitable images for presentation '" + rep.presentation + "'");
}

MatrixRep restrict_to_uvee(const MatrixRep& rep) {
    auto im = equitable_images(rep);
    return make_rep("uvee-xyz", {{"x", std::move(im.x)}, {"y_inv", std::move(im.y_inv)}, {"z", std::move(im.z)}});
}

MatrixRep extend_to_uq(const MatrixRep& rep) {
    auto im = equitable_images(rep);
    if (!im.y) {
        try {
            im.y = im.y_inv.inverse();
        } catch (const SingularError&) {
            const std::size_t nil = im.y_inv.pow(static_cast<int>(rep.n)).nullspace().cols();
            throw SingularError("y^-1 is not invertible: nilpotent part has dimension " + std::to_string(nil));
        }
    }
    return make_rep("equitable", {{"x", std::move(im.x)},
                                  {"y", std::move(*im.y)},
                                  {"y_inv", std::move(im.y_inv)},
                                  {"z", std::move(im.z)}});
}

FMatrix rep_eval(const MatrixRep& rep, const NormalElement& u) {
    const NormalElement v = u.basis() == Basis::Equitable ? u : convert(u, Basis::Equitable);
    auto im = equitable_images(rep);
    PowerCache px(im.x), pyi(im.y_inv), pz(im.z);
    std::optional<PowerCache> py;
    FMatrix out = FMatrix::zero(rep.n, rep.n);
    for (const auto& [m, c] : v.terms()) {
        if (m.s > 0 && !py) {
            if (!im.y) {
                try {
                    im.y = im.y_inv.inverse();
                } catch (const SingularError&) {
                    throw SingularError("element needs y but y^-1 is singular on this representation");
                }
            }
            py.emplace(*im.y);
        }
        const FMatrix& ys = m.s > 0 ? py->get(m.s) : pyi.get(-m.s);
        out += (px.get(m.r) * ys * pz.get(m.t)).scaled(c);
    }
    return out;
}

KBA build_KBA(const MatrixRep& rep) {
    const auto im = equitable_images(rep);
    if (im.y_inv.rank() != rep.n) throw SingularError("y is not invertible on this representation");
    const RF a = RF::a();
    return {im.z, im.z.scaled(a.pow(2)) + im.y_inv.scaled(RF(1) - a.pow(2)),
            im.x.scaled(a.inv()) + im.z.scaled(a)};
}

MatrixRep first_module(const KBA& kba) { return make_rep("uvee-zZA", {{"z", kba.K}, {"Z", kba.B}, {"A", kba.A}}); }

MatrixRep second_module(const KBA& kba) {
    return make_rep("uvee-xXA", {{"x", kba.K.inverse()}, {"X", kba.B.inverse()}, {"A", kba.A}});
}

FMatrix psi(const FMatrix& K, const FMatrix& B) {
    const RF a = RF::a();
    const std::size_t n = K.rows();
    const FMatrix bk = B * K.inverse();
    const FMatrix I = FMatrix::identity(n);
    return ((I - bk) * (I.scaled(a) - bk.scaled(a.inv())).inverse()).scaled(RF::q().inv());
}

std::array<FMatrix, 4> casimir_forms(const FMatrix& A, const FMatrix& K, const FMatrix& B, const FMatrix& p) {
    const RF a = RF::a();
    const RF q = RF::q();
    const FMatrix Ki = K.inverse();
    const FMatrix Bi = B.inverse();
    const FMatrix mk = A - K.scaled(a) - Ki.scaled(a.inv());
    const FMatrix mb = A - B.scaled(a.inv()) - Bi.scaled(a);
    return {mk * p + K.scaled(q) + Ki.scaled(q.inv()), p * mk + K.scaled(q.inv()) + Ki.scaled(q),
            mb * p + B.scaled(q) + Bi.scaled(q.inv()), p * mb + B.scaled(q.inv()) + Bi.scaled(q)};
}

FMatrix eigenprojection(const FMatrix& m, const std::vector<RF>& values, std::size_t i) {
    const std::size_t n = m.rows();
    FMatrix out = FMatrix::identity(n);
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j == i) continue;
        out = out * (m - FMatrix::scalar(n, values[j])).scaled((values[i] - values[j]).inv());
    }
    return out;
}

std::vector<RF> qracah_sequence(int d, const RF& a) {
    std::vector<RF> out;
    for (int i = 0; i <= d; ++i) out.push_back(a * RF::q_pow(d - 2 * i) + a.inv() * RF::q_pow(2 * i - d));
    return out;
}

TDParams standard_td_params(int d) {
    TDParams p;
    p.d = d;
    p.a = RF::a();
    p.theta = qracah_sequence(d, p.a);
    for (int i = 0; i <= d; ++i) p.theta_star.push_back(RF::q_pow(d - 2 * i));
    return p;
}

bool annihilated_by(const FMatrix& m, const std::vector<RF>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j]) return false;
    FMatrix prod = FMatrix::identity(m.rows());
    for (const auto& v : values) prod = prod * (m - FMatrix::scalar(m.rows(), v));
    return prod.is_zero();
}

std::vector<SubspaceBasis> split_decomposition(const FMatrix& A, const FMatrix& Astar, const TDParams& params,
                                               Flip flip) {
    const std::size_t n = A.rows();
    const auto d = static_cast<std::size_t>(params.d);
    if (params.theta.size() != d + 1 || params.theta_star.size() != d + 1)
        throw DomainError("eigenvalue lists must have d+1 entries");
    if (!annihilated_by(A, params.theta)) throw DomainError("A is not annihilated by prod (A - theta_i)");
    if (!annihilated_by(Astar, params.theta_star)) throw DomainError("A* is not annihilated by prod (A* - theta*_i)");
    const auto V = eigenspaces(A, params.theta);
    const auto Vs = eigenspaces(Astar, params.theta_star);
    if (!is_decomposition(V, n) || !is_decomposition(Vs, n)) throw DomainError("an eigenvalue does not occur");
    std::vector<SubspaceBasis> out;
    for (std::size_t i = 0; i <= d; ++i) {
        const SubspaceBasis lower = sum_range(Vs, 0, i, n);
        const SubspaceBasis other = flip == Flip::Plain ? sum_range(V, i, d, n) : sum_range(V, 0, d - i, n);
        out.push_back(lower.intersect(other));
    }
    return out;
}

bool split_inclusions_hold(const FMatrix& A, const FMatrix& Astar, const TDParams& params, Flip flip,
                           const std::vector<SubspaceBasis>& U) {
    const std::size_t n = A.rows();
    const auto d = static_cast<std::size_t>(params.d);
    const SubspaceBasis zero(n);
    for (std::size_t i = 0; i <= d; ++i) {
        const RF& theta = params.theta[flip == Flip::Plain ? i : d - i];
        const FMatrix raise = A - FMatrix::scalar(n, theta);
        const FMatrix lower = Astar - FMatrix::scalar(n, params.theta_star[i]);
        if (!maps_into(raise, U[i], i < d ? U[i + 1] : zero)) return false;
        if (!maps_into(lower, U[i], i > 0 ? U[i - 1] : zero)) return false;
    }
    return true;
}

TDReport is_tridiagonal_pair(const FMatrix& A, const FMatrix& Astar, const TDParams& params) {
    TDReport r;
    const std::size_t n = A.rows();
    const auto V = eigenspaces(A, params.theta);
    const auto Vs = eigenspaces(Astar, params.theta_star);
    r.diagonalizable = annihilated_by(A, params.theta) && annihilated_by(Astar, params.theta_star) &&
                       is_decomposition(V, n) && is_decomposition(Vs, n);
    const auto tri = [n](const FMatrix& m, const std::vector<SubspaceBasis>& spaces) {
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            const SubspaceBasis nbhd = sum_range(spaces, i == 0 ? 0 : i - 1, i + 1, n);
            if (!maps_into(m, spaces[i], nbhd)) return false;
        }
        return true;
    };
    r.tridiagonal = tri(Astar, V);
    r.dual_tridiagonal = tri(A, Vs);
    r.span_full = true;
    for (std::size_t j = 0; j < n && r.span_full; ++j) {
        r.span_full = closure_dim({FMatrix::identity(n).column(j)}, A, Astar, true) == n;
    }
    r.algebra_dim = closure_dim({FMatrix::identity(n)}, A, Astar, false);
    r.irreducible = r.algebra_dim == n * n;
    return r;
}

FittingParts fitting_decomposition(const MatrixRep& rep) {
    const auto im = equitable_images(rep);
    const FMatrix p = im.y_inv.pow(static_cast<int>(rep.n));
    return {SubspaceBasis::span(p), SubspaceBasis::span(p.nullspace())};
}

bool is_uvee_submodule(const MatrixRep& rep, const SubspaceBasis& s) {
    const auto im = equitable_images(rep);
    return maps_into(im.x, s, s) && maps_into(im.y_inv, s, s) && maps_into(im.z, s, s);
}

std::string rep_to_json(const MatrixRep& rep) {
    nlohmann::ordered_json j;
    j["presentation"] = rep.presentation;
    j["n"] = rep.n;
    j["images"] = nlohmann::ordered_json::object();
    for (const auto& [name, m] : rep.images) j["images"][name] = nlohmann::ordered_json::parse(matrix_to_json(m));
    return j.dump();
}

}  // namespace uqsl2

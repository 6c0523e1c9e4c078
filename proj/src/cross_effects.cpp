#include "khl/cross_effects.hpp"

#include <numeric>

#include "khl/linalg.hpp"

namespace khl {

namespace {

Module rank_one(const Ring& ring) { return free_module(ring, 1, "a"); }

// Endomorphism of the sum keeping the summands in S.
SparseMatrix projection_onto(const DirectSum& ds, const Ring& R, unsigned mask) {
    SparseMatrix m(R, ds.sum->rank(), ds.sum->rank());
    for (size_t i = 0; i < ds.inj.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        m = m + ds.inj[i].matrix() * ds.proj[i].matrix();
    }
    return m;
}

SparseMatrix functor_matrix(FunctorTag f, const SparseMatrix& phi, const FunctorModule& src,
                            const FunctorModule& dst) {
    const Ring& R = phi.ring();
    SparseMatrix out(R, dst.module->rank(), src.module->rank());
    auto col = [&](int v) -> const SparseVec& { return phi.column(v); };
    for (size_t j = 0; j < src.words.size(); ++j)
        out.set_column(static_cast<int>(j), apply_word(f, R, src.words[j], col, dst.index));
    return out;
}

Ring ring_of(const std::vector<Module>& args, const char* what) {
    if (args.empty()) throw InvalidArgument(std::string(what) + " needs at least one argument");
    return args[0]->ring();
}

}  // namespace

ModuleMap cross_effect_operator(FunctorTag f, const std::vector<Module>& args) {
    const Ring R = ring_of(args, "cross effect");
    auto ds = direct_sum(R, args);
    auto amb = functor_module(f, ds.sum);
    const int k = static_cast<int>(args.size());
    SparseMatrix op(R, amb.module->rank(), amb.module->rank());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        int j = __builtin_popcount(mask);
        auto fp = functor_matrix(f, projection_onto(ds, R, mask), amb, amb);
        op = (k - j) % 2 ? op - fp : op + fp;
    }
    return {amb.module, amb.module, op};
}

CrossEffect cross_effect(FunctorTag f, const std::vector<Module>& args) {
    const Ring R = ring_of(args, "cross effect");
    CrossEffect out;
    out.functor = f;
    out.args = args;
    out.sum = direct_sum(R, args);
    out.ambient = functor_module(f, out.sum.sum);
    auto op = cross_effect_operator(f, args);
    auto split = split_column_span(op.matrix());
    std::vector<Label> basis;
    std::vector<int> degrees;
    const Module& amb = out.ambient.module;
    if (split.coordinate) {
        out.coords = split.span_coords;
        for (int c : out.coords) {
            basis.push_back(amb->label(c));
            degrees.push_back(amb->degree(c));
        }
    } else {
        for (int j = 0; j < split.basis.cols(); ++j) {
            basis.push_back(atom("cr" + std::to_string(j + 1)));
            const auto& col = split.basis.column(j);
            degrees.push_back(col.empty() ? 0 : amb->degree(col.front().first) + col.front().second.homogeneous_degree());
        }
    }
    out.module = make_module(R, std::move(basis), std::move(degrees));
    out.include = ModuleMap(out.module, amb, split.basis);
    out.project = ModuleMap(amb, out.module, split.left_inverse);
    return out;
}

ModuleMap cross_effect_map(const CrossEffect& src, const CrossEffect& dst, const std::vector<ModuleMap>& maps) {
    if (maps.size() != src.args.size() || maps.size() != dst.args.size())
        throw DimensionMismatch("cross effect arity");
    const Ring& R = src.module->ring();
    SparseMatrix total(R, dst.sum.sum->rank(), src.sum.sum->rank());
    for (size_t i = 0; i < maps.size(); ++i)
        total = total + dst.sum.inj[i].matrix() * maps[i].matrix() * src.sum.proj[i].matrix();
    auto f = functor_matrix(src.functor, total, src.ambient, dst.ambient);
    return {src.module, dst.module, dst.project.matrix() * f * src.include.matrix()};
}

std::vector<CrossEffectSummand> decompose(FunctorTag f, const std::vector<Module>& args) {
    const Ring R = ring_of(args, "decompose");
    const int l = static_cast<int>(args.size());
    auto ds = direct_sum(R, args);
    auto amb = functor_module(f, ds.sum);
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        for (int i = start; i < l; ++i) {
            cur.push_back(i);
            subsets.push_back(cur);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::vector<CrossEffectSummand> out;
    for (const auto& s : subsets) {
        std::vector<Module> sub;
        for (int i : s) sub.push_back(args[i]);
        CrossEffectSummand piece{s, cross_effect(f, sub), {}, {}};
        const auto& ce = piece.piece;
        SparseMatrix incl(R, ds.sum->rank(), ce.sum.sum->rank()), proj(R, ce.sum.sum->rank(), ds.sum->rank());
        for (size_t j = 0; j < s.size(); ++j) {
            incl = incl + ds.inj[s[j]].matrix() * ce.sum.proj[j].matrix();
            proj = proj + ce.sum.inj[j].matrix() * ds.proj[s[j]].matrix();
        }
        piece.inj = ModuleMap(ce.module, amb.module, functor_matrix(f, incl, ce.ambient, amb) * ce.include.matrix());
        piece.proj = ModuleMap(amb.module, ce.module, ce.project.matrix() * functor_matrix(f, proj, amb, ce.ambient));
        out.push_back(std::move(piece));
    }
    return out;
}

namespace {

std::vector<Module> expand_args(const std::vector<int>& eps, const std::vector<Module>& args) {
    if (eps.size() != args.size()) throw DimensionMismatch("ε length");
    std::vector<Module> out;
    for (size_t i = 0; i < eps.size(); ++i) {
        if (eps[i] < 1) throw InvalidArgument("ε entries must be positive");
        for (int c = 0; c < eps[i]; ++c) out.push_back(args[i]);
    }
    return out;
}

// Diagonal ⊕V_i -> ⊕ copies (transpose gives the sum map).
SparseMatrix diagonal_matrix(const DirectSum& src, const DirectSum& dst, const std::vector<int>& eps) {
    const Ring& R = src.sum->ring();
    SparseMatrix m(R, dst.sum->rank(), src.sum->rank());
    int pos = 0;
    for (size_t i = 0; i < eps.size(); ++i)
        for (int c = 0; c < eps[i]; ++c, ++pos) m = m + dst.inj[pos].matrix() * src.proj[i].matrix();
    return m;
}

}  // namespace

ModuleMap diagonal_map(FunctorTag f, const std::vector<int>& eps, const std::vector<Module>& args) {
    auto src = cross_effect(f, args);
    auto dst = cross_effect(f, expand_args(eps, args));
    auto fd = functor_matrix(f, diagonal_matrix(src.sum, dst.sum, eps), src.ambient, dst.ambient);
    return {src.module, dst.module, dst.project.matrix() * fd * src.include.matrix()};
}

ModuleMap plus_map(FunctorTag f, const std::vector<int>& eps, const std::vector<Module>& args) {
    auto dst = cross_effect(f, args);
    auto src = cross_effect(f, expand_args(eps, args));
    auto fp = functor_matrix(f, diagonal_matrix(dst.sum, src.sum, eps).transpose(), src.ambient, dst.ambient);
    return {src.module, dst.module, dst.project.matrix() * fp * src.include.matrix()};
}

ModuleMap cross_effect_action(FunctorTag f, const Module& v, const std::vector<int>& perm) {
    std::vector<Module> args(perm.size(), v);
    auto ce = cross_effect(f, args);
    const Ring& R = v->ring();
    SparseMatrix m(R, ce.sum.sum->rank(), ce.sum.sum->rank());
    for (size_t j = 0; j < perm.size(); ++j) m = m + ce.sum.inj[perm[j]].matrix() * ce.sum.proj[j].matrix();
    auto fm = functor_matrix(f, m, ce.ambient, ce.ambient);
    return {ce.module, ce.module, ce.project.matrix() * fm * ce.include.matrix()};
}

bool functor_degree_probe(FunctorTag f, int k, int probe_rank, const Ring& ring) {
    std::vector<Module> args(k + 1, free_module(ring, probe_rank, "v"));
    return cross_effect(f, args).module->rank() == 0;
}

std::vector<std::vector<int>> compositions(int l, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (static_cast<int>(cur.size()) == k) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int slots = k - static_cast<int>(cur.size());
        for (int a = 1; a <= left - (slots - 1); ++a) {
            cur.push_back(a);
            rec(left - a);
            cur.pop_back();
        }
    };
    rec(l);
    return out;
}

ModuleMap plus_i(FunctorTag f, int i, const Ring& ring) {
    const int d = f.n;
    std::vector<Module> args(i, rank_one(ring));
    auto target = cross_effect(f, args);
    std::vector<SparseMatrix> blocks;
    std::vector<Module> parts;
    for (const auto& eps : compositions(d, i)) {
        auto p = plus_map(f, eps, args);
        blocks.push_back(p.matrix());
        parts.push_back(p.dom());
    }
    auto src = direct_sum(ring, parts);
    if (blocks.empty()) return zero_map(src.sum, target.module);
    return {src.sum, target.module, hstack(blocks)};
}

ModuleMap diag_i(FunctorTag f, int i, const Ring& ring) {
    const int d = f.n;
    std::vector<Module> args(i, rank_one(ring));
    auto source = cross_effect(f, args);
    std::vector<SparseMatrix> blocks;
    std::vector<Module> parts;
    for (const auto& eps : compositions(d, i)) {
        auto p = diagonal_map(f, eps, args);
        blocks.push_back(p.matrix());
        parts.push_back(p.cod());
    }
    auto dst = direct_sum(ring, parts);
    if (blocks.empty()) return zero_map(source.module, dst.sum);
    return {source.module, dst.sum, vstack(blocks)};
}

bool module_structures_coincide(FunctorTag f, int d, const Ring& ring, const Scalar& a) {
    auto A = rank_one(ring);
    std::vector<Module> args(d, A);
    auto ce = cross_effect(f, args);
    std::optional<ModuleMap> first;
    for (int pos = 0; pos < d; ++pos) {
        std::vector<ModuleMap> maps(d, identity_map(A));
        maps[pos] = identity_map(A).scaled(a);
        auto m = cross_effect_map(ce, ce, maps);
        if (!first) first = m;
        else if (m != *first) return false;
    }
    return true;
}

}  // namespace khl

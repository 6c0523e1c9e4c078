#include "khl/random.hpp"

namespace khl {

int Rng::uniform(int lo, int hi) {
    if (hi < lo) throw InvalidArgument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
}

SparseMatrix random_matrix(Rng& rng, const Ring& ring, int rows, int cols, int bound) {
    SparseMatrix m(ring, rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            int v = rng.uniform(-bound, bound);
            if (v) m.set(i, j, ring.from_int(v));
        }
    return m;
}

ModuleMap random_map(Rng& rng, const Module& dom, const Module& cod, int bound) {
    return {dom, cod, random_matrix(rng, dom->ring(), cod->rank(), dom->rank(), bound)};
}

namespace {

struct BasisChange {
    SparseMatrix g, g_inv;
};

// Random invertible matrices built from elementary operations; coef(i, j)
// returns the multiplier allowed when adding generator i into generator j.
BasisChange random_basis_change(Rng& rng, const Ring& ring, int n,
                                const std::function<Scalar(int, int)>& coef) {
    BasisChange out{SparseMatrix::identity(ring, n), SparseMatrix::identity(ring, n)};
    if (n < 2) return out;
    int steps = rng.uniform(0, 2 * n);
    for (int s = 0; s < steps; ++s) {
        int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        if (i == j) continue;
        Scalar c = coef(i, j);
        if (c.is_zero()) continue;
        // e_j -> e_j + c e_i
        SparseMatrix e = SparseMatrix::identity(ring, n), ei = SparseMatrix::identity(ring, n);
        e.set(i, j, c);
        ei.set(i, j, ring.neg(c));
        out.g = out.g * e;
        out.g_inv = ei * out.g_inv;
    }
    return out;
}

Scalar random_form(Rng& rng, const Ring& ring, int degree) {
    Scalar v;
    for (Mono m : monomials_of_degree(ring.nvars(), degree)) ring.axpy(v, rng.uniform(-2, 2), ring.monomial(m, 1));
    return v;
}

}  // namespace

RandomComplex random_complex(Rng& rng, const Ring& ring, int max_len, int max_rank) {
    if (ring.is_graded()) throw InvalidArgument("use random_graded_complex for graded rings");
    int len = rng.uniform(0, max_len);
    RandomComplex out;
    out.free_pieces.assign(len + 1, 0);
    out.pairs.assign(len + 1, {});
    std::vector<int> rank(len + 1, 0);
    // column of each pair piece in degree k and its row in degree k-1
    std::vector<std::vector<std::pair<int, int>>> pair_pos(len + 1);
    std::vector<std::vector<Scalar>> pair_val(len + 1);
    int attempts = rng.uniform(1, 2 * max_rank + 1);
    for (int a = 0; a < attempts; ++a) {
        int k = rng.uniform(0, len);
        if (k >= 1 && rng.coin()) {
            if (rank[k] >= max_rank || rank[k - 1] >= max_rank) continue;
            int v = rng.uniform(1, 6) * (rng.coin() ? 1 : -1);
            Scalar s = ring.from_int(v);
            if (s.is_zero()) s = ring.one();
            mpz_class mult = abs(mpz_class(v));
            if (!ring.is_integers()) mult = 1;
            pair_pos[k].push_back({rank[k], rank[k - 1]});
            pair_val[k].push_back(s);
            out.pairs[k].push_back(mult);
            ++rank[k];
            ++rank[k - 1];
        } else {
            if (rank[k] >= max_rank) continue;
            ++out.free_pieces[k];
            ++rank[k];
        }
    }
    std::vector<Module> mods;
    for (int k = 0; k <= len; ++k) mods.push_back(free_module(ring, rank[k], "c" + std::to_string(k) + "_"));
    std::vector<BasisChange> change;
    for (int k = 0; k <= len; ++k)
        change.push_back(random_basis_change(rng, ring, rank[k], [&](int, int) {
            return ring.from_int(rng.uniform(-2, 2));
        }));
    std::vector<ModuleMap> diffs;
    for (int k = 1; k <= len; ++k) {
        SparseMatrix d(ring, rank[k - 1], rank[k]);
        for (size_t p = 0; p < pair_pos[k].size(); ++p) d.set(pair_pos[k][p].second, pair_pos[k][p].first, pair_val[k][p]);
        diffs.emplace_back(mods[k], mods[k - 1], change[k - 1].g * d * change[k].g_inv);
    }
    out.complex = make_complex(ring, mods, diffs);
    return out;
}

ChainComplex random_graded_complex(Rng& rng, const Ring& ring, int max_len, int max_rank) {
    if (!ring.is_graded()) throw InvalidArgument("random_graded_complex needs a graded ring");
    int len = rng.uniform(0, max_len);
    std::vector<std::vector<int>> degs(len + 1);
    struct Pair {
        int k, col, row;
        Scalar g;
    };
    std::vector<Pair> pairs;
    int attempts = rng.uniform(1, 2 * max_rank + 1);
    for (int a = 0; a < attempts; ++a) {
        int k = rng.uniform(0, len);
        if (k >= 1 && rng.coin()) {
            if (static_cast<int>(degs[k].size()) >= max_rank || static_cast<int>(degs[k - 1].size()) >= max_rank)
                continue;
            int s = rng.uniform(0, 2), e = rng.uniform(0, 2);
            Scalar g = random_form(rng, ring, e);
            if (g.is_zero()) g = ring.pow(ring.var(0), e);
            pairs.push_back({k, static_cast<int>(degs[k].size()), static_cast<int>(degs[k - 1].size()), g});
            degs[k].push_back(s + e);
            degs[k - 1].push_back(s);
        } else {
            if (static_cast<int>(degs[k].size()) >= max_rank) continue;
            degs[k].push_back(rng.uniform(0, 2));
        }
    }
    std::vector<Module> mods;
    std::vector<BasisChange> change;
    for (int k = 0; k <= len; ++k) {
        mods.push_back(free_module(ring, static_cast<int>(degs[k].size()), "c" + std::to_string(k) + "_", degs[k]));
        const auto& dk = degs[k];
        change.push_back(random_basis_change(rng, ring, static_cast<int>(dk.size()), [&](int i, int j) {
            int e = dk[j] - dk[i];
            if (e < 0 || e > 1) return Scalar{};
            return random_form(rng, ring, e);
        }));
    }
    std::vector<ModuleMap> diffs;
    for (int k = 1; k <= len; ++k) {
        SparseMatrix d(ring, static_cast<int>(degs[k - 1].size()), static_cast<int>(degs[k].size()));
        for (const auto& p : pairs)
            if (p.k == k) d.set(p.row, p.col, p.g);
        diffs.emplace_back(mods[k], mods[k - 1], change[k - 1].g * d * change[k].g_inv);
    }
    return make_complex(ring, mods, diffs);
}

HomotopyPair homotopy_pair(Rng& rng, const Ring& ring, int max_rank) {
    int a = rng.uniform(1, max_rank), b = rng.uniform(1, max_rank);
    int c = rng.uniform(0, 1), d = rng.uniform(0, 1);
    auto P = free_module(ring, a, "p"), Q = free_module(ring, b, "q");
    auto X = free_module(ring, c, "x"), Y = free_module(ring, d, "y");
    auto f = random_map(rng, P, Q, 4);
    auto g = random_map(rng, X, Y, 4);
    auto Ps = direct_sum({P, X}), Qs = direct_sum({Q, Y});
    ModuleMap ft(Ps.sum, Qs.sum, block_diag({f.matrix(), g.matrix()}));
    Scalar scale = ring.from_int(rng.uniform(-3, 3));
    auto B = random_map(rng, Q, Ps.sum, 3);
    auto h = random_map(rng, Q, Ps.sum, 3);
    HomotopyPair out{f, ft, h, {}, {}, {}, {}};
    out.a1_p = Ps.inj[0].scaled(scale) + B * f;
    out.a1_q = Qs.inj[0].scaled(scale) + ft * B;
    out.a2_p = out.a1_p + h * f;
    out.a2_q = out.a1_q + ft * h;
    return out;
}

}  // namespace khl

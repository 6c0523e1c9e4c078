#include "khl/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace khl {

Permutation compose_perm(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

Permutation adjacent_transposition(int n, int i) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    return p;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> out;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Permutation> class_representatives(int n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            parts.push_back(cur);
            return;
        }
        for (int a = std::min(left, maxp); a >= 1; --a) {
            cur.push_back(a);
            rec(left - a, a);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::vector<Permutation> out;
    for (const auto& lam : parts) {
        Permutation p(n);
        int start = 0;
        for (int len : lam) {
            for (int j = 0; j < len; ++j) p[start + j] = start + (j + 1) % len;
            start += len;
        }
        out.push_back(p);
    }
    return out;
}

EquivariantComplex::EquivariantComplex(const ChainComplex& base, int n) : base_(base), n_(n) {
    if (n < 1) throw InvalidArgument("tensor power needs n >= 1");
    const Ring& R = base.ring();
    const int len = base.length();
    const int top = len * n;
    std::vector<Module> mods;
    for (int m = 0; m <= top; ++m) {
        std::vector<Block> bl;
        std::vector<Label> basis;
        std::vector<int> degrees;
        std::vector<int> comp(n, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == n) {
                if (left) return;
                int size = 1;
                for (int p : comp) size *= base.rank(p);
                bl.push_back({comp, static_cast<int>(basis.size()), size});
                std::vector<int> idx(n, 0);
                for (int e = 0; e < size; ++e) {
                    int rem = e;
                    for (int i = n - 1; i >= 0; --i) {
                        idx[i] = rem % base.rank(comp[i]);
                        rem /= base.rank(comp[i]);
                    }
                    std::vector<Label> parts;
                    int deg = 0;
                    for (int i = 0; i < n; ++i) {
                        parts.push_back(base.module(comp[i])->label(idx[i]));
                        deg += base.module(comp[i])->degree(idx[i]);
                    }
                    basis.push_back(summand_label(static_cast<int>(bl.size()), tuple_label(parts)));
                    degrees.push_back(deg);
                }
                return;
            }
            for (int p = 0; p <= std::min(len, left); ++p) {
                comp[pos] = p;
                rec(pos + 1, left - p);
            }
        };
        rec(0, m);
        std::vector<int> owner(basis.size());
        for (size_t b = 0; b < bl.size(); ++b)
            for (int e = 0; e < bl[b].size; ++e) owner[bl[b].offset + e] = static_cast<int>(b);
        block_of_.push_back(owner);
        blocks_.push_back(bl);
        mods.push_back(make_module(R, basis, degrees));
    }
    std::vector<ModuleMap> diffs;
    for (int m = 1; m <= top; ++m) {
        MatrixBuilder b(R, mods[m - 1]->rank(), mods[m]->rank());
        for (const auto& blk : blocks_[m]) {
            int sign_deg = 0;
            for (int j = 0; j < n; ++j) {
                if (blk.comp[j] >= 1) {
                    auto target = blk.comp;
                    --target[j];
                    int tb = find_block(m - 1, target);
                    const auto& tgt = blocks_[m - 1][tb];
                    SparseMatrix piece = SparseMatrix::identity(R, 1);
                    for (int i = 0; i < n; ++i)
                        piece = kron(piece, i == j ? base.d(blk.comp[i]).matrix()
                                                   : SparseMatrix::identity(R, base.rank(blk.comp[i])));
                    b.add_block(tgt.offset, blk.offset, piece, sign_deg % 2 ? -1 : 1);
                }
                sign_deg += blk.comp[j];
            }
        }
        diffs.emplace_back(mods[m], mods[m - 1], b.build());
    }
    if (mods.empty()) mods.push_back(zero_module(R));
    complex_ = make_complex(R, mods, diffs);
}

int EquivariantComplex::find_block(int k, const std::vector<int>& comp) const {
    for (size_t b = 0; b < blocks_[k].size(); ++b)
        if (blocks_[k][b].comp == comp) return static_cast<int>(b);
    throw InvalidArgument("no block for composition");
}

const std::vector<int>& EquivariantComplex::composition_of(int k, int j) const {
    return blocks_[k][block_of_[k][j]].comp;
}

ModuleMap EquivariantComplex::action(const Permutation& perm, int k) const {
    const Ring& R = complex_.ring();
    const Module& M = complex_.module(k);
    if (k < 0 || k >= static_cast<int>(blocks_.size())) return zero_map(M, M);
    SparseMatrix out(R, M->rank(), M->rank());
    for (const auto& blk : blocks_[k]) {
        std::vector<int> comp2(n_);
        for (int i = 0; i < n_; ++i) comp2[perm[i]] = blk.comp[i];
        int sign = 1;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (perm[i] > perm[j] && (blk.comp[i] * blk.comp[j]) % 2) sign = -sign;
        const auto& tgt = blocks_[k][find_block(k, comp2)];
        std::vector<int> idx(n_), idx2(n_);
        for (int e = 0; e < blk.size; ++e) {
            int rem = e;
            for (int i = n_ - 1; i >= 0; --i) {
                idx[i] = rem % base_.rank(blk.comp[i]);
                rem /= base_.rank(blk.comp[i]);
            }
            for (int i = 0; i < n_; ++i) idx2[perm[i]] = idx[i];
            int e2 = 0;
            for (int i = 0; i < n_; ++i) e2 = e2 * base_.rank(comp2[i]) + idx2[i];
            out.set(tgt.offset + e2, blk.offset + e, R.from_int(sign));
        }
    }
    return {M, M, out};
}

EquivariantComplex tensor_power_equivariant(const ChainComplex& p, int n) { return EquivariantComplex(p, n); }

bool check_equivariance(const EquivariantComplex& e) {
    const auto& c = e.complex();
    const int n = e.n();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<ModuleMap> maps;
        for (int k = 0; k <= c.length(); ++k) maps.push_back(e.generator(i, k));
        if (!is_chain_map(c, c, maps)) return false;
    }
    for (int k = 0; k <= c.length(); ++k) {
        auto I = identity_map(c.module(k));
        for (int i = 0; i + 1 < n; ++i) {
            auto s = e.generator(i, k);
            if (s * s != I) return false;
            if (i + 2 < n) {
                auto t = e.generator(i + 1, k);
                if (s * t * s != t * s * t) return false;
            }
            for (int j = i + 2; j + 1 < n; ++j) {
                auto t = e.generator(j, k);
                if (s * t != t * s) return false;
            }
        }
    }
    return true;
}

CharacterValue character_on_homology(const EquivariantComplex& e, const Permutation& sigma, int k,
                                     std::optional<int> window) {
    const Ring& R = e.complex().ring();
    if (!R.coefficients_form_field()) throw NonFieldCoefficients(R.name());
    HomologyAt h(e.complex(), k, window);
    auto m = induced_map(h, h, e.action(sigma, k));
    CharacterValue out;
    out.total = 0;
    for (const auto& [t, mat] : m.slices) {
        mpq_class tr = slice_trace(m, t);
        if (R.is_graded()) out.by_degree[t] = tr;
        out.total += tr;
    }
    return out;
}

mpq_class exterior_trace(int k, const std::vector<mpq_class>& p) {
    std::vector<mpq_class> e(k + 1, 0);
    e[0] = 1;
    for (int m = 1; m <= k; ++m) {
        mpq_class acc = 0;
        for (int j = 1; j <= m; ++j) acc += (j % 2 ? 1 : -1) * p[j - 1] * e[m - j];
        e[m] = acc / m;
    }
    return e[k];
}

mpq_class predicted_character(int v_rank, int d, int n, int k, const std::vector<int>& ct) {
    if (k < 0) return 0;
    // σ^j fixes the points lying on cycles whose length divides j
    std::vector<mpq_class> p;
    for (int j = 1; j <= k; ++j) {
        int fixed = 0;
        for (int len : ct)
            if (j % len == 0) fixed += len;
        p.push_back(mpq_class(d * (fixed - 1)));
    }
    mpq_class ext = exterior_trace(k, p);
    if (k > d * (n - 1)) ext = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), v_rank, ct.size());
    return ext * scale;
}

ModuleMap KnModule::permutation_action(const Permutation& p) const {
    const Module& perm_mod = inclusion.cod();
    const Ring& R = perm_mod->ring();
    SparseMatrix m(R, n, n);
    for (int i = 0; i < n; ++i) m.set(p[i], i, R.one());
    return {perm_mod, perm_mod, m};
}

ModuleMap KnModule::action(const Permutation& p) const {
    const Ring& R = module->ring();
    SparseMatrix m(R, n - 1, n - 1);
    // σ(e_i - e_n) = (e_σi - e_n) - (e_σn - e_n)
    for (int i = 0; i + 1 < n; ++i) {
        if (p[i] != n - 1) m.add_to(p[i], i, R.one());
        if (p[n - 1] != n - 1) m.add_to(p[n - 1], i, R.from_int(-1));
    }
    return {module, module, m};
}

KnModule kn_module(const Ring& ring, int n) {
    if (n < 1) throw InvalidArgument("K_n needs n >= 1");
    KnModule out;
    out.n = n;
    std::vector<Label> basis;
    for (int i = 1; i < n; ++i) basis.push_back(atom("e" + std::to_string(i) + "-e" + std::to_string(n)));
    out.module = make_module(ring, basis);
    auto perm_mod = free_module(ring, n, "e");
    auto triv = free_module(ring, 1, "1");
    SparseMatrix inc(ring, n, n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        inc.set(i, i, ring.one());
        inc.set(n - 1, i, ring.from_int(-1));
    }
    out.inclusion = ModuleMap(out.module, perm_mod, inc);
    SparseMatrix sum(ring, 1, n);
    for (int i = 0; i < n; ++i) sum.set(0, i, ring.one());
    out.sum = ModuleMap(perm_mod, triv, sum);
    return out;
}

}  // namespace khl

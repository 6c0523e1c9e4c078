#include "khl/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace khl {

namespace {

using Steps = std::vector<int>;

std::vector<int> surjection_values(int n, const Steps& steps) {
    std::vector<int> vals(n + 1, 0);
    size_t pos = 0;
    for (int y = 1; y <= n; ++y) {
        vals[y] = vals[y - 1];
        if (pos < steps.size() && steps[pos] == y) {
            ++vals[y];
            ++pos;
        }
    }
    return vals;
}

Steps steps_of(const std::vector<int>& vals) {
    Steps out;
    for (size_t y = 1; y < vals.size(); ++y)
        if (vals[y] > vals[y - 1]) out.push_back(static_cast<int>(y));
    return out;
}

// Block layout of Γ(C)_n.
struct GammaShape {
    struct Block {
        int k;
        Steps steps;
        int offset;
    };
    int n = 0;
    int rank = 0;
    std::vector<Block> blocks;
    std::map<std::pair<int, Steps>, int> offset_of;
    std::vector<std::uint64_t> step_mask;  // per basis element
    Module module;

    GammaShape(const ChainComplex& c, int level) : n(level) {
        std::vector<Label> labels;
        std::vector<int> degrees;
        for (int k = 0; k <= std::min(level, c.length()); ++k) {
            const Module& ck = c.module(k);
            for (const auto& s : step_sets(level, k)) {
                offset_of[{k, s}] = rank;
                blocks.push_back({k, s, rank});
                std::uint64_t mask = 0;
                for (int y : s) mask |= std::uint64_t{1} << y;
                for (int e = 0; e < ck->rank(); ++e) {
                    labels.push_back(gamma_label(k, s, ck->label(e)));
                    degrees.push_back(ck->degree(e));
                    step_mask.push_back(mask);
                }
                rank += ck->rank();
            }
        }
        module = make_module(c.ring(), labels, degrees);
    }

    int offset(int k, const Steps& s) const { return offset_of.at({k, s}); }
};

SparseMatrix face_matrix(const ChainComplex& c, const GammaShape& src, const GammaShape& dst, int i) {
    const Ring& R = c.ring();
    MatrixBuilder b(R, dst.rank, src.rank);
    const int n = src.n;
    for (const auto& blk : src.blocks) {
        const int rk = c.rank(blk.k);
        if (rk == 0) continue;
        auto vals = surjection_values(n, blk.steps);
        std::vector<int> g(n);
        for (int y = 0; y < n; ++y) g[y] = vals[y < i ? y : y + 1];
        std::vector<char> hit(blk.k + 1, 0);
        for (int v : g) hit[v] = 1;
        int missing = -1;
        for (int v = 0; v <= blk.k; ++v)
            if (!hit[v]) missing = v;
        if (missing < 0) {
            b.add_block(dst.offset(blk.k, steps_of(g)), blk.offset, SparseMatrix::identity(R, rk));
        } else if (missing == 0) {
            if (c.rank(blk.k - 1) == 0) continue;
            b.add_block(dst.offset(blk.k - 1, steps_of(g)), blk.offset, c.d(blk.k).matrix());
        }
    }
    return b.build();
}

SparseMatrix degeneracy_matrix(const ChainComplex& c, const GammaShape& src, const GammaShape& dst, int i) {
    const Ring& R = c.ring();
    MatrixBuilder b(R, dst.rank, src.rank);
    const int n = src.n;
    for (const auto& blk : src.blocks) {
        const int rk = c.rank(blk.k);
        if (rk == 0) continue;
        auto vals = surjection_values(n, blk.steps);
        std::vector<int> g(n + 2);
        for (int y = 0; y <= n + 1; ++y) g[y] = vals[y <= i ? y : y - 1];
        b.add_block(dst.offset(blk.k, steps_of(g)), blk.offset, SparseMatrix::identity(R, rk));
    }
    return b.build();
}

SparseMatrix gamma_map_matrix(const ChainMap& alpha, const GammaShape& src, const GammaShape& dst) {
    const Ring& R = alpha.src.ring();
    MatrixBuilder b(R, dst.rank, src.rank);
    for (const auto& blk : src.blocks) {
        if (blk.k > alpha.dst.length() || alpha.src.rank(blk.k) == 0 || alpha.dst.rank(blk.k) == 0) continue;
        b.add_block(dst.offset(blk.k, blk.steps), blk.offset, alpha.at(blk.k).matrix());
    }
    return b.build();
}

std::uint64_t full_mask(int n) {
    std::uint64_t m = 0;
    for (int y = 1; y <= n; ++y) m |= std::uint64_t{1} << y;
    return m;
}

}  // namespace

std::vector<std::vector<int>> step_sets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int y = next; y <= n - (k - static_cast<int>(cur.size())) + 1; ++y) {
            cur.push_back(y);
            rec(y + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

TruncatedSimplicialModule gamma(const ChainComplex& c, int level_bound) {
    if (level_bound < 0) throw InvalidArgument("level bound must be nonnegative");
    if (level_bound > 60) throw InvalidArgument("level bound too large");
    std::vector<GammaShape> shapes;
    for (int n = 0; n <= level_bound; ++n) shapes.emplace_back(c, n);
    TruncatedSimplicialModule x;
    x.ring = c.ring();
    x.faces.resize(level_bound + 1);
    x.degeneracies.resize(level_bound + 1);
    for (const auto& s : shapes) x.levels.push_back(s.module);
    for (int n = 1; n <= level_bound; ++n)
        for (int i = 0; i <= n; ++i)
            x.faces[n].emplace_back(x.levels[n], x.levels[n - 1], face_matrix(c, shapes[n], shapes[n - 1], i));
    for (int n = 0; n < level_bound; ++n)
        for (int i = 0; i <= n; ++i)
            x.degeneracies[n].emplace_back(x.levels[n], x.levels[n + 1],
                                           degeneracy_matrix(c, shapes[n], shapes[n + 1], i));
    return x;
}

std::vector<ModuleMap> gamma_map(const ChainMap& alpha, int level_bound) {
    std::vector<ModuleMap> out;
    for (int n = 0; n <= level_bound; ++n) {
        GammaShape s(alpha.src, n), t(alpha.dst, n);
        out.emplace_back(s.module, t.module, gamma_map_matrix(alpha, s, t));
    }
    return out;
}

TruncatedSimplicialModule apply_functor_levelwise(FunctorTag f, const TruncatedSimplicialModule& x) {
    TruncatedSimplicialModule out;
    out.ring = x.ring;
    std::vector<FunctorModule> fm;
    for (const auto& m : x.levels) {
        fm.push_back(functor_module(f, m));
        out.levels.push_back(fm.back().module);
    }
    out.faces.resize(x.faces.size());
    out.degeneracies.resize(x.degeneracies.size());
    for (size_t n = 0; n < x.faces.size(); ++n)
        for (const auto& d : x.faces[n]) out.faces[n].push_back(apply_functor_map(f, d, fm[n], fm[n - 1]));
    for (size_t n = 0; n < x.degeneracies.size(); ++n)
        for (const auto& s : x.degeneracies[n]) out.degeneracies[n].push_back(apply_functor_map(f, s, fm[n], fm[n + 1]));
    return out;
}

std::optional<std::string> simplicial_identities_check(const TruncatedSimplicialModule& x) {
    const int L = x.level_bound();
    auto name = [](const std::string& lhs, const std::string& rhs, int n) {
        return lhs + " = " + rhs + " at level " + std::to_string(n);
    };
    auto d = [&](int n, int i) -> const ModuleMap& { return x.faces[n][i]; };
    auto s = [&](int n, int i) -> const ModuleMap& { return x.degeneracies[n][i]; };
    for (int n = 2; n <= L; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (d(n - 1, i) * d(n, j) != d(n - 1, j - 1) * d(n, i))
                    return name("d" + std::to_string(i) + " d" + std::to_string(j),
                                "d" + std::to_string(j - 1) + " d" + std::to_string(i), n);
    for (int n = 0; n + 2 <= L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (s(n + 1, i) * s(n, j) != s(n + 1, j + 1) * s(n, i))
                    return name("s" + std::to_string(i) + " s" + std::to_string(j),
                                "s" + std::to_string(j + 1) + " s" + std::to_string(i), n);
    for (int n = 0; n < L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                ModuleMap lhs = d(n + 1, i) * s(n, j);
                std::string ls = "d" + std::to_string(i) + " s" + std::to_string(j);
                if (i < j) {
                    if (lhs != s(n - 1, j - 1) * d(n, i))
                        return name(ls, "s" + std::to_string(j - 1) + " d" + std::to_string(i), n);
                } else if (i == j || i == j + 1) {
                    if (lhs != identity_map(x.levels[n])) return name(ls, "id", n);
                } else if (lhs != s(n - 1, j) * d(n, i - 1)) {
                    return name(ls, "s" + std::to_string(j) + " d" + std::to_string(i - 1), n);
                }
            }
    return std::nullopt;
}

Normalization normalize(const TruncatedSimplicialModule& x) {
    const Ring& R = x.ring;
    const int L = x.level_bound();
    Normalization out;
    std::vector<Module> mods;
    for (int n = 0; n <= L; ++n) {
        const Module& X = x.levels[n];
        if (n == 0) {
            mods.push_back(X);
            out.quotient.push_back(identity_map(X));
            out.lift.push_back(identity_map(X));
            continue;
        }
        std::vector<SparseMatrix> parts;
        for (const auto& s : x.degeneracies[n - 1]) parts.push_back(s.matrix());
        SplitSpan split;
        try {
            split = split_column_span(hstack(parts));
        } catch (const NotSplitImage& e) {
            throw DegeneracySpanNotSplit("level " + std::to_string(n) + ": " + e.what());
        }
        std::vector<Label> labels;
        std::vector<int> degrees;
        if (split.coordinate) {
            for (int c : split.complement_coords) {
                labels.push_back(X->label(c));
                degrees.push_back(X->degree(c));
            }
        } else {
            for (int j = 0; j < split.complement.cols(); ++j) {
                labels.push_back(atom("n" + std::to_string(n) + "_" + std::to_string(j + 1)));
                const auto& col = split.complement.column(j);
                degrees.push_back(col.empty() ? 0 : X->degree(col.front().first));
            }
        }
        auto N = make_module(R, labels, degrees);
        mods.push_back(N);
        out.quotient.emplace_back(X, N, split.complement_projection);
        out.lift.emplace_back(N, X, split.complement);
    }
    std::vector<ModuleMap> diffs;
    for (int n = 1; n <= L; ++n) {
        SparseMatrix sum(R, x.levels[n - 1]->rank(), x.levels[n]->rank());
        for (int i = 0; i <= n; ++i) {
            const auto& m = x.faces[n][i].matrix();
            sum = i % 2 ? sum - m : sum + m;
        }
        diffs.emplace_back(mods[n], mods[n - 1], out.quotient[n - 1].matrix() * sum * out.lift[n].matrix());
    }
    out.complex = make_complex(R, mods, diffs);
    return out;
}

NfgData nfg_data(const ChainComplex& c, FunctorTag f) {
    const Ring& R = c.ring();
    NfgData out;
    out.level_bound = f.n * c.length() + 1;
    const int L = out.level_bound;
    std::vector<GammaShape> shapes;
    for (int n = 0; n <= L; ++n) shapes.emplace_back(c, n);
    std::vector<std::vector<int>> pos(L + 1);
    std::vector<Module> mods;
    for (int n = 0; n <= L; ++n) {
        out.ambient.push_back(functor_module(f, shapes[n].module));
        const auto& amb = out.ambient.back();
        const std::uint64_t full = full_mask(n);
        pos[n].assign(amb.words.size(), -1);
        std::vector<int> kept;
        for (size_t w = 0; w < amb.words.size(); ++w) {
            std::uint64_t m = 0;
            for (int letter : amb.words[w]) m |= shapes[n].step_mask[letter];
            if (m == full) {
                pos[n][w] = static_cast<int>(kept.size());
                kept.push_back(static_cast<int>(w));
            }
        }
        std::vector<Label> labels;
        std::vector<int> degrees;
        for (int w : kept) {
            labels.push_back(amb.module->label(w));
            degrees.push_back(amb.module->degree(w));
        }
        out.words.push_back(std::move(kept));
        mods.push_back(make_module(R, labels, degrees));
    }
    if (mods[L]->rank() != 0)
        throw TruncationUnsound("normalized level " + std::to_string(L) + " has rank " +
                                std::to_string(mods[L]->rank()));
    std::vector<ModuleMap> diffs;
    for (int n = 1; n < L; ++n) {
        std::vector<SparseMatrix> faces;
        for (int i = 0; i <= n; ++i) faces.push_back(face_matrix(c, shapes[n], shapes[n - 1], i));
        MatrixBuilder b(R, mods[n - 1]->rank(), mods[n]->rank());
        const auto& src = out.ambient[n];
        const auto& dst = out.ambient[n - 1];
        for (size_t col = 0; col < out.words[n].size(); ++col) {
            const Word& w = src.words[out.words[n][col]];
            for (int i = 0; i <= n; ++i) {
                const SparseMatrix& face = faces[i];
                expand_word(
                    f, R, w, [&](int v) -> const SparseVec& { return face.column(v); },
                    [&](const Word& t, const Scalar& s) {
                        int idx = dst.index.find(t);
                        if (idx < 0 || pos[n - 1][idx] < 0) return;
                        b.add(pos[n - 1][idx], static_cast<int>(col), i % 2 ? R.neg(s) : s);
                    });
            }
        }
        diffs.emplace_back(mods[n], mods[n - 1], b.build());
    }
    mods.pop_back();
    out.complex = make_complex(R, mods, diffs);
    return out;
}

ChainComplex nfg(const ChainComplex& c, FunctorTag f) { return nfg_data(c, f).complex; }

ChainComplex nfg_generic(const ChainComplex& c, FunctorTag f) {
    const int L = f.n * c.length() + 1;
    auto norm = normalize(apply_functor_levelwise(f, gamma(c, L)));
    const auto& full = norm.complex;
    if (full.rank(L) != 0)
        throw TruncationUnsound("normalized level " + std::to_string(L) + " has rank " + std::to_string(full.rank(L)));
    std::vector<Module> mods(full.modules().begin(), full.modules().end() - 1);
    std::vector<ModuleMap> diffs;
    for (int n = 1; n < L; ++n) diffs.push_back(full.d(n));
    return make_complex(c.ring(), mods, diffs);
}

ChainMap nfg_map(const ChainMap& alpha, FunctorTag f) {
    const Ring& R = alpha.src.ring();
    auto src = nfg_data(alpha.src, f), dst = nfg_data(alpha.dst, f);
    std::vector<ModuleMap> maps;
    for (int n = 0; n <= src.complex.length(); ++n) {
        const Module& from = src.complex.module(n);
        const Module& to = dst.complex.module(n);
        if (n > dst.complex.length() || to->rank() == 0 || from->rank() == 0) {
            maps.push_back(zero_map(from, to));
            continue;
        }
        GammaShape s(alpha.src, n), t(alpha.dst, n);
        SparseMatrix g = gamma_map_matrix(alpha, s, t);
        std::vector<int> pos(dst.ambient[n].words.size(), -1);
        for (size_t j = 0; j < dst.words[n].size(); ++j) pos[dst.words[n][j]] = static_cast<int>(j);
        MatrixBuilder b(R, to->rank(), from->rank());
        for (size_t col = 0; col < src.words[n].size(); ++col)
            expand_word(
                f, R, src.ambient[n].words[src.words[n][col]], [&](int v) -> const SparseVec& { return g.column(v); },
                [&](const Word& w, const Scalar& v) {
                    int idx = dst.ambient[n].index.find(w);
                    if (idx >= 0 && pos[idx] >= 0) b.add(pos[idx], static_cast<int>(col), v);
                });
        maps.emplace_back(from, to, b.build());
    }
    return make_chain_map(src.complex, dst.complex, maps);
}

ChainMap nfg_natural_map(const ChainComplex& c, FunctorTag from, FunctorTag to,
                         const std::function<ModuleMap(const Module&)>& eta) {
    if (from.n != to.n) throw InvalidArgument("natural maps between functors of one degree");
    const Ring& R = c.ring();
    auto src = nfg_data(c, from), dst = nfg_data(c, to);
    std::vector<ModuleMap> maps;
    for (int n = 0; n <= src.complex.length(); ++n) {
        const Module& a = src.complex.module(n);
        const Module& b = dst.complex.module(n);
        if (a->rank() == 0 || b->rank() == 0) {
            maps.push_back(zero_map(a, b));
            continue;
        }
        GammaShape shape(c, n);
        ModuleMap e = eta(shape.module);
        auto fm = functor_module(from, shape.module), gm = functor_module(to, shape.module);
        std::vector<int> pos(dst.ambient[n].words.size(), -1);
        for (size_t j = 0; j < dst.words[n].size(); ++j) pos[dst.words[n][j]] = static_cast<int>(j);
        MatrixBuilder mb(R, b->rank(), a->rank());
        for (size_t col = 0; col < src.words[n].size(); ++col) {
            int j = fm.index.find(src.ambient[n].words[src.words[n][col]]);
            for (const auto& [row, v] : e.matrix().column(j)) {
                int idx = dst.ambient[n].index.find(gm.words[row]);
                if (idx >= 0 && pos[idx] >= 0) mb.add(pos[idx], static_cast<int>(col), v);
            }
        }
        maps.emplace_back(a, b, mb.build());
    }
    return make_chain_map(src.complex, dst.complex, maps);
}

namespace {

std::vector<int> epsilon_at(int len, int i) {
    std::vector<int> e(len, 1);
    e[i - 1] = 2;
    return e;
}

}  // namespace

ChainComplex lemma22_complex(const ModuleMap& f, FunctorTag F) {
    const Ring& R = f.ring();
    const Module& P = f.dom();
    const Module& Q = f.cod();
    const int top = F.n;
    auto with_q = [&](int m) {
        std::vector<Module> args{Q};
        args.insert(args.end(), m, P);
        return args;
    };
    std::vector<CrossEffect> pure{CrossEffect{}}, mixed;  // pure[n] = cr_n(P^n), mixed[n] = cr_{n+1}(Q, P^n)
    for (int n = 1; n <= top + 1; ++n) pure.push_back(cross_effect(F, std::vector<Module>(n, P)));
    for (int n = 0; n <= top + 1; ++n) mixed.push_back(cross_effect(F, with_q(n)));
    std::vector<Module> mods{mixed[0].module};
    for (int n = 1; n <= top; ++n) mods.push_back(direct_sum(R, {pure[n].module, mixed[n].module}).sum);
    std::vector<ModuleMap> diffs;
    for (int n = 1; n <= top; ++n) {
        const int pr = pure[n].module->rank(), prow = n >= 2 ? pure[n - 1].module->rank() : 0;
        MatrixBuilder b(R, mods[n - 1]->rank(), mods[n]->rank());
        if (n >= 2) {
            for (int i = 1; i <= n - 1; ++i) {
                auto plus = plus_map(F, epsilon_at(n - 1, i), std::vector<Module>(n - 1, P));
                b.add_block(0, 0, plus.matrix(), i % 2 ? -1 : 1);
            }
        }
        std::vector<ModuleMap> maps(n, identity_map(P));
        maps[0] = f;
        b.add_block(prow, 0, cross_effect_map(pure[n], mixed[n - 1], maps).matrix());
        std::vector<Module> qq{Q, Q};
        qq.insert(qq.end(), n - 1, P);
        auto into_qq = cross_effect(F, qq);
        std::vector<ModuleMap> maps2(n + 1, identity_map(P));
        maps2[0] = identity_map(Q);
        maps2[1] = f;
        std::vector<int> eps(n, 1);
        eps[0] = 2;
        auto first = plus_map(F, eps, with_q(n - 1)).matrix() * cross_effect_map(mixed[n], into_qq, maps2).matrix();
        b.add_block(prow, pr, first);
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> e{1};
            auto rest = epsilon_at(n - 1, i);
            e.insert(e.end(), rest.begin(), rest.end());
            b.add_block(prow, pr, plus_map(F, e, with_q(n - 1)).matrix(), i % 2 ? -1 : 1);
        }
        diffs.emplace_back(mods[n], mods[n - 1], b.build());
    }
    return make_complex(R, mods, diffs);
}

ChainMap lemma22_comparison(const ModuleMap& f, FunctorTag F) {
    const Ring& R = f.ring();
    const Module& P = f.dom();
    const Module& Q = f.cod();
    auto lem = lemma22_complex(f, F);
    auto data = nfg_data(map_complex(f), F);
    std::vector<ModuleMap> maps;
    for (int n = 0; n <= lem.length(); ++n) {
        const auto& amb = data.ambient[n];
        std::vector<int> pos(amb.words.size(), -1);
        for (size_t j = 0; j < data.words[n].size(); ++j) pos[data.words[n][j]] = static_cast<int>(j);
        std::vector<int> rows;
        auto mixed_args = std::vector<Module>{Q};
        mixed_args.insert(mixed_args.end(), n, P);
        if (n >= 1) {
            auto pure = cross_effect(F, std::vector<Module>(n, P));
            for (int c : pure.coords) {
                Word w = pure.ambient.words[c];
                for (int& x : w) x += Q->rank();
                rows.push_back(pos[amb.index.find(w)]);
            }
            if (static_cast<int>(rows.size()) != pure.module->rank()) throw InvalidArgument("cross effect is not coordinate");
        }
        auto mixed = cross_effect(F, mixed_args);
        if (static_cast<int>(mixed.coords.size()) != mixed.module->rank())
            throw InvalidArgument("cross effect is not coordinate");
        for (int c : mixed.coords) rows.push_back(pos[c]);
        SparseMatrix m(R, data.complex.rank(n), lem.rank(n));
        for (size_t j = 0; j < rows.size(); ++j) {
            if (rows[j] < 0) throw InvalidArgument("lemma identification hit a degenerate word");
            m.set(rows[j], static_cast<int>(j), R.one());
        }
        maps.emplace_back(lem.module(n), data.complex.module(n), m);
    }
    return make_chain_map(lem, data.complex, maps);
}

ChainMap comparison_u(const ModuleMap& f, int n) {
    const Ring& R = f.ring();
    const int rp = f.dom()->rank(), rq = f.cod()->rank();
    auto kos = koszul_complex(f, n);
    auto data = nfg_data(map_complex(f), FunctorTag::sym(n));
    std::vector<ModuleMap> maps;
    for (int k = 0; k <= n; ++k) {
        const auto& amb = data.ambient[k];
        std::vector<int> pos(amb.words.size(), -1);
        for (size_t j = 0; j < data.words[k].size(); ++j) pos[data.words[k][j]] = static_cast<int>(j);
        auto ext = functor_words(FunctorTag::ext(k), rp);
        auto sym = functor_words(FunctorTag::sym(n - k), rq);
        MatrixBuilder b(R, data.complex.rank(k), kos.rank(k));
        std::vector<int> perm(k);
        for (size_t a = 0; a < ext.size(); ++a)
            for (size_t s = 0; s < sym.size(); ++s) {
                const int col = static_cast<int>(a * sym.size() + s);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    Word w = sym[s];
                    // the first wedge factor sits in the last P block
                    for (int j = 0; j < k; ++j) w.push_back(rq + (k - 1 - j) * rp + ext[a][perm[j]]);
                    std::sort(w.begin(), w.end());
                    int idx = amb.index.find(w);
                    if (idx < 0 || pos[idx] < 0) throw InvalidArgument("antisymmetrization left the nondegenerate part");
                    b.add(pos[idx], col, R.from_int(permutation_sign(perm)));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        maps.emplace_back(kos.module(k), data.complex.module(k), b.build());
    }
    return make_chain_map(kos, data.complex, maps);
}

}  // namespace khl

#include "khl/koszul.hpp"

#include <algorithm>

namespace khl {

namespace {

// Inserts x into the increasing word w; returns the sign of moving x into place, 0 on a repeat.
int wedge_insert(const Word& w, int x, Word& out) {
    out.clear();
    int before = 0;
    for (int y : w) {
        if (y == x) return 0;
        if (y < x) ++before;
    }
    out = w;
    out.insert(out.begin() + before, x);
    return before % 2 ? -1 : 1;
}

Word sym_insert(const Word& w, int x) {
    Word out = w;
    out.insert(std::upper_bound(out.begin(), out.end(), x), x);
    return out;
}

}  // namespace

ChainComplex koszul_complex(const ModuleMap& f, int n) {
    if (n < 1) throw InvalidArgument("Koszul complex needs n >= 1");
    const Ring& R = f.ring();
    std::vector<FunctorModule> ext, sym;
    std::vector<Module> mods;
    for (int k = 0; k <= n; ++k) {
        ext.push_back(functor_module(FunctorTag::ext(k), f.dom()));
        sym.push_back(functor_module(FunctorTag::sym(n - k), f.cod()));
        mods.push_back(tensor_product(ext[k].module, sym[k].module));
    }
    std::vector<ModuleMap> diffs;
    for (int k = 0; k < n; ++k) {
        // d_{k+1}: Λ^{k+1} ⊗ Sym^{n-k-1} -> Λ^k ⊗ Sym^{n-k}
        const int sk = sym[k].module->rank(), sk1 = sym[k + 1].module->rank();
        MatrixBuilder b(R, mods[k]->rank(), mods[k + 1]->rank());
        for (size_t a = 0; a < ext[k + 1].words.size(); ++a) {
            const Word& wa = ext[k + 1].words[a];
            for (int s = 0; s < sk1; ++s) {
                const Word& ws = sym[k + 1].words[s];
                int col = static_cast<int>(a) * sk1 + s;
                for (int i = 0; i <= k; ++i) {
                    Word rest = wa;
                    rest.erase(rest.begin() + i);
                    int row_e = ext[k].index.find(rest);
                    int sign = (k - i) % 2 ? -1 : 1;
                    for (const auto& [q, val] : f.matrix().column(wa[i])) {
                        int row_s = sym[k].index.find(sym_insert(ws, q));
                        b.add(row_e * sk + row_s, col, sign > 0 ? val : R.neg(val));
                    }
                }
            }
        }
        diffs.emplace_back(mods[k + 1], mods[k], b.build());
    }
    return make_complex(R, mods, diffs);
}

ChainComplex dual_koszul_complex(const ModuleMap& f, int n) {
    if (n < 1) throw InvalidArgument("Koszul complex needs n >= 1");
    const Ring& R = f.ring();
    std::vector<FunctorModule> div, ext;
    std::vector<Module> mods;
    for (int k = 0; k <= n; ++k) {
        div.push_back(functor_module(FunctorTag::div(k), f.dom()));
        ext.push_back(functor_module(FunctorTag::ext(n - k), f.cod()));
        mods.push_back(tensor_product(div[k].module, ext[k].module));
    }
    std::vector<ModuleMap> diffs;
    Word moved;
    for (int k = 1; k <= n; ++k) {
        // D^k ⊗ Λ^{n-k} -> D^{k-1} ⊗ Λ^{n-k+1}, D(a) ⊗ ω -> Σ_{v ∈ a distinct} D(a - v) ⊗ f(v) ∧ ω
        const int ek = ext[k].module->rank(), ek1 = ext[k - 1].module->rank();
        MatrixBuilder b(R, mods[k - 1]->rank(), mods[k]->rank());
        for (size_t a = 0; a < div[k].words.size(); ++a) {
            const Word& wa = div[k].words[a];
            for (int e = 0; e < ek; ++e) {
                const Word& we = ext[k].words[e];
                int col = static_cast<int>(a) * ek + e;
                for (size_t i = 0; i < wa.size(); ++i) {
                    if (i > 0 && wa[i] == wa[i - 1]) continue;
                    Word rest = wa;
                    rest.erase(rest.begin() + i);
                    int row_d = div[k - 1].index.find(rest);
                    for (const auto& [q, val] : f.matrix().column(wa[i])) {
                        int sign = wedge_insert(we, q, moved);
                        if (!sign) continue;
                        int row_e = ext[k - 1].index.find(moved);
                        b.add(row_d * ek1 + row_e, col, sign > 0 ? val : R.neg(val));
                    }
                }
            }
        }
        diffs.emplace_back(mods[k], mods[k - 1], b.build());
    }
    return make_complex(R, mods, diffs);
}

ChainMap koszul_chain_map(const ModuleMap& f, const ModuleMap& f2, const ModuleMap& alpha_p,
                          const ModuleMap& alpha_q, int n) {
    auto src = koszul_complex(f, n), dst = koszul_complex(f2, n);
    std::vector<ModuleMap> maps;
    for (int k = 0; k <= n; ++k) {
        auto m = tensor_map(apply_functor_map(FunctorTag::ext(k), alpha_p),
                            apply_functor_map(FunctorTag::sym(n - k), alpha_q));
        maps.emplace_back(src.module(k), dst.module(k), m.matrix());
    }
    return make_chain_map(src, dst, maps);
}

Submodule image_submodule(const ModuleMap& d) {
    const Ring& R = d.ring();
    const SparseMatrix& m = d.matrix();
    std::vector<int> pivots;
    bool usable = m.all_constant() && (R.is_integers() || R.coefficients_form_field());
    if (!usable) throw NonFieldRing(R.name());
    long p = R.is_integers() ? 0 : field_char_of(R);
    FieldEchelon ech(p, m.rows());
    for (int j = 0; j < m.cols(); ++j)
        if (ech.insert(constant_column(m, j), -1)) pivots.push_back(j);
    SparseMatrix basis = m.select_cols(pivots);
    std::vector<Label> labels;
    std::vector<int> degrees;
    for (int j : pivots) {
        labels.push_back(d.dom()->label(j));
        degrees.push_back(d.dom()->degree(j));
    }
    if (R.is_integers() && !pivots.empty()) {
        auto snf = smith_normal_form(basis);
        bool unimodular = std::all_of(snf.factors.begin(), snf.factors.end(), [](const mpz_class& x) { return x == 1; });
        if (!unimodular) {
            basis = split_column_span(m).basis;
            labels.clear();
            for (int j = 0; j < basis.cols(); ++j) labels.push_back(atom("b" + std::to_string(j + 1)));
        }
    }
    auto mod = make_module(R, labels, degrees);
    return {mod, ModuleMap(mod, d.cod(), basis)};
}

Submodule schur_module(const Module& v, int n, int k) {
    if (k < 0 || k > n) throw InvalidArgument("schur_module needs 0 <= k <= n");
    auto kos = koszul_complex(identity_map(v), n);
    return image_submodule(kos.d(k + 1));
}

Submodule coschur_module(const Module& v, int n, int k) {
    if (k < 0 || k > n) throw InvalidArgument("coschur_module needs 0 <= k <= n");
    auto kos = dual_koszul_complex(identity_map(v), n);
    return image_submodule(kos.d(k + 1));
}

ConormalData conormal_data(const Ring& R, const std::vector<Scalar>& gens) {
    if (gens.empty()) throw UnsupportedIdeal("the ideal needs a generator");
    ConormalData out;
    out.ring = R;
    out.generators = gens;
    std::vector<int> degrees;
    std::vector<Label> labels;
    for (size_t i = 0; i < gens.size(); ++i) {
        const Scalar& g = gens[i];
        if (g.is_zero()) throw UnsupportedIdeal("zero generator");
        if (R.is_unit(g)) throw UnsupportedIdeal("unit generator " + R.str(g));
        int deg = 0;
        if (R.is_graded()) {
            deg = g.homogeneous_degree();
            if (deg < 1) throw UnsupportedIdeal("generators must be homogeneous of positive degree");
        }
        degrees.push_back(deg);
        labels.push_back(atom("[" + R.str(g) + "]"));
    }
    out.conormal = make_module(R, labels, R.is_graded() ? degrees : std::vector<int>{});
    if (R.is_integers()) {
        if (gens.size() != 1) throw UnsupportedIdeal("integer ideals are principal here");
        out.kind = IdealKind::PrincipalNZD;
        return out;
    }
    if (!R.is_graded()) throw UnsupportedIdeal("ideals need the integers or a graded polynomial ring");
    out.kind = gens.size() == 1 ? IdealKind::PrincipalNZD : IdealKind::GradedCI;
    if (out.kind == IdealKind::GradedCI) {
        int window = 2;
        for (int d : degrees) window += d;
        auto h = homology(koszul_resolution(out), window);
        for (int k = 1; k <= static_cast<int>(gens.size()); ++k)
            if (!h.at(k).is_zero()) throw UnsupportedIdeal("generators are not a regular sequence");
    }
    return out;
}

ConormalData conormal_data(const Ring& R, const std::vector<std::string>& gens) {
    std::vector<Scalar> parsed;
    for (const auto& g : gens) parsed.push_back(R.parse(g));
    return conormal_data(R, parsed);
}

ChainComplex koszul_resolution(const ConormalData& ideal) {
    const Ring& R = ideal.ring;
    std::vector<int> degrees;
    for (int i = 0; i < ideal.rank(); ++i) degrees.push_back(ideal.conormal->degree(i));
    auto F = free_module(R, ideal.rank(), "g", R.is_graded() ? degrees : std::vector<int>{});
    auto one = free_module(R, 1, "1");
    SparseMatrix eps(R, 1, ideal.rank());
    for (int i = 0; i < ideal.rank(); ++i) eps.set(0, i, ideal.generators[i]);
    return koszul_complex(ModuleMap(F, one, eps), ideal.rank());
}

ResolutionData resolution_for(const ConormalData& ideal, int rank) {
    if (rank < 0) throw InvalidArgument("negative rank");
    const Ring& R = ideal.ring;
    ResolutionData out{ideal, rank, {}};
    if (ideal.kind == IdealKind::PrincipalNZD) {
        int e = R.is_graded() ? ideal.conormal->degree(0) : 0;
        auto P = free_module(R, rank, "p", R.is_graded() ? std::vector<int>(rank, e) : std::vector<int>{});
        auto Q = free_module(R, rank, "q", R.is_graded() ? std::vector<int>(rank, 0) : std::vector<int>{});
        SparseMatrix m(R, rank, rank);
        for (int i = 0; i < rank; ++i) m.set(i, i, ideal.generators[0]);
        out.complex = map_complex(ModuleMap(P, Q, m));
        return out;
    }
    auto V = free_module(R, rank, "v", std::vector<int>(rank, 0));
    out.complex = total_tensor(koszul_resolution(ideal), concentrated(V)).complex;
    return out;
}

HomologyDegree quotient_homology(const ConormalData& ideal, long rank, int s, std::optional<int> window) {
    const Ring& R = ideal.ring;
    HomologyDegree h;
    if (R.is_integers()) {
        mpz_class m = abs(scalar_to_mpz(ideal.generators[0]));
        if (m == 0) throw UnsupportedIdeal("zero generator");
        h.torsion.assign(rank, m);
        return h;
    }
    if (!window) throw WindowRequired("graded prediction needs a window");
    auto hs = hilbert_of_class(euler_class(koszul_resolution(ideal)), R.nvars(), *window);
    for (int t = 0; t <= *window; ++t) {
        long v = (t - s >= 0) ? hs.at(t - s).get_si() : 0;
        h.hilbert[t] = rank * v;
    }
    return h;
}

bool check_resolution(const ResolutionData& res, std::optional<int> window) {
    const Ring& R = res.ideal.ring;
    std::optional<int> w = window;
    if (R.is_graded() && !w) {
        int top = 2;
        for (const auto& g : res.ideal.generators) top += g.homogeneous_degree();
        w = top;
    }
    auto h = homology(res.complex, w);
    if (!(h.at(0) == quotient_homology(res.ideal, res.rank, 0, w))) return false;
    for (int k = 1; k <= res.complex.length(); ++k)
        if (!h.at(k).is_zero()) return false;
    return true;
}

SparseVec thm32_witness(const ResolutionData& res, int n, int k, const WitnessDatum& datum) {
    if (res.ideal.kind != IdealKind::PrincipalNZD) throw InvalidArgument("witness cycles need a principal ideal");
    if (k < 0 || k >= n) throw InvalidArgument("witness degree out of range");
    if (static_cast<int>(datum.word.size()) != n || static_cast<int>(datum.multipliers.size()) != k)
        throw DimensionMismatch("witness datum shape");
    const Ring& R = res.ideal.ring;
    const ModuleMap f = res.map();
    const Scalar& g = res.ideal.generators[0];
    for (int a : datum.word)
        if (a < 0 || a >= f.cod()->rank()) throw LiftFailure("no lift for basis index " + std::to_string(a));
    // lift of r q_a to P: the element c p_a, checked against f
    auto lift = [&](int a, const Scalar& c) {
        SparseVec image;
        for (const auto& [row, val] : f.matrix().column(a)) image.push_back({row, R.mul(c, val)});
        SparseVec target{{a, R.mul(c, g)}};
        if (c.is_zero()) target.clear();
        if (image != target) throw LiftFailure("r q does not lift along f");
        return a;
    };
    auto kos = koszul_complex(f, n);
    auto ext = functor_module(FunctorTag::ext(k), f.dom());
    auto sym = functor_module(FunctorTag::sym(n - k), f.cod());
    std::map<int, Scalar> acc;
    for (int i = 0; i <= k; ++i) {
        Word wedge;
        Scalar coef = R.one();
        int pos = 0;
        for (int j = 0; j <= k; ++j) {
            if (j == i) continue;
            wedge.push_back(lift(datum.word[j], datum.multipliers[pos]));
            coef = R.mul(coef, datum.multipliers[pos]);
            ++pos;
        }
        // sort the wedge factors with sign
        Word sorted = wedge;
        int sign = 1;
        for (size_t x = 0; x < sorted.size(); ++x)
            for (size_t y = x + 1; y < sorted.size(); ++y) {
                if (sorted[x] == sorted[y]) sign = 0;
                if (sorted[x] > sorted[y]) sign = -sign;
            }
        if (!sign || coef.is_zero()) continue;
        std::sort(sorted.begin(), sorted.end());
        Word q{datum.word[i]};
        for (int j = k + 1; j < n; ++j) q.push_back(datum.word[j]);
        std::sort(q.begin(), q.end());
        if ((k - i) % 2) sign = -sign;
        int idx = ext.index.find(sorted) * sym.module->rank() + sym.index.find(q);
        R.axpy(acc[idx], sign, coef);
    }
    SparseVec out;
    for (auto& [i, s] : acc)
        if (!s.is_zero()) out.push_back({i, s});
    SparseVec boundary = kos.d(k).matrix().apply(out);
    if (!boundary.empty()) throw NotACycle("witness is not a cycle");
    return out;
}

std::vector<WitnessDatum> witness_data(int rank, int n, int k, const Ring& ring) {
    std::vector<WitnessDatum> out;
    if (k >= n) return out;
    auto head = functor_words(FunctorTag::ext(k + 1), rank);
    auto tail = functor_words(FunctorTag::sym(n - k - 1), rank);
    for (const auto& a : head)
        for (const auto& b : tail) {
            WitnessDatum w;
            w.word = a;
            w.word.insert(w.word.end(), b.begin(), b.end());
            w.multipliers.assign(k, ring.one());
            out.push_back(std::move(w));
        }
    return out;
}

bool cycles_generate(const HomologyAt& h, const std::vector<SparseVec>& cycles) {
    const auto& c = h.complex();
    const Ring& R = c.ring();
    if (h.kind() == RingKind::Integers) {
        const auto& orders = h.z_orders();
        const int g = static_cast<int>(orders.size());
        if (g == 0) return true;
        SparseMatrix m(R, g, static_cast<int>(cycles.size()) + g);
        for (size_t j = 0; j < cycles.size(); ++j) {
            auto co = h.z_coords(cycles[j]);
            for (int i = 0; i < g; ++i)
                if (co[i] != 0) m.set(i, static_cast<int>(j), R.from_mpz(co[i]));
        }
        for (int i = 0; i < g; ++i)
            if (orders[i] != 0) m.set(i, static_cast<int>(cycles.size()) + i, R.from_mpz(orders[i]));
        auto snf = smith_normal_form(m);
        if (snf.rank != g) return false;
        return std::all_of(snf.factors.begin(), snf.factors.end(), [](const mpz_class& x) { return x == 1; });
    }
    const Module& M = c.module(h.degree());
    for (const auto& [t, slice] : h.slices()) {
        if (slice.dim() == 0) continue;
        long p = field_char_of(R);
        FieldEchelon ech(p, slice.dim());
        int rank = 0;
        for (const auto& z : cycles) {
            std::vector<SparseVec> multiples;
            if (R.is_graded()) {
                int deg = -1;
                for (const auto& [i, s] : z) {
                    int d = M->degree(i) + s.homogeneous_degree();
                    if (deg < 0) deg = d;
                }
                if (deg < 0 || deg > t) continue;
                for (Mono mono : monomials_of_degree(R.nvars(), t - deg)) {
                    SparseVec zz;
                    for (const auto& [i, s] : z) zz.push_back({i, R.mul(s, R.monomial(mono, 1))});
                    multiples.push_back(zz);
                }
            } else {
                multiples.push_back(z);
            }
            for (const auto& zz : multiples) {
                auto co = slice.coords(h.slice_coordinates(t, zz));
                FVec v;
                for (int i = 0; i < static_cast<int>(co.size()); ++i)
                    if (co[i] != 0) v.push_back({i, co[i]});
                if (ech.insert(v, -1)) ++rank;
            }
        }
        if (rank != slice.dim()) return false;
    }
    return true;
}

bool killed_by_ideal(const HomologyAt& h, const ConormalData& ideal) {
    const Ring& R = ideal.ring;
    if (h.kind() == RingKind::Integers) {
        mpz_class m = abs(scalar_to_mpz(ideal.generators[0]));
        for (const auto& o : h.z_orders())
            if (o == 0 || m % o != 0) return false;
        return true;
    }
    for (const auto& [t, slice] : h.slices())
        for (const auto& rep : slice.reps()) {
            SparseVec z = h.slice_element(t, rep);
            for (const auto& g : ideal.generators) {
                int tt = t + g.homogeneous_degree();
                if (tt > h.window()) continue;
                SparseVec gz;
                for (const auto& [i, s] : z) gz.push_back({i, R.mul(g, s)});
                if (!h.slices().at(tt).is_boundary(h.slice_coordinates(tt, gz))) return false;
            }
        }
    return true;
}

HomologyDegree predicted_koszul_homology(const ConormalData& ideal, int rank, int n, int k,
                                         std::optional<int> window, bool dual) {
    if (ideal.kind != IdealKind::PrincipalNZD) throw InvalidArgument("prediction needs a principal ideal");
    auto V = free_module(Ring::integers(), rank, "v");
    long ell = (k < 0 || k > n) ? 0 : (dual ? coschur_module(V, n, k) : schur_module(V, n, k)).module->rank();
    int e = ideal.ring.is_graded() ? ideal.conormal->degree(0) : 0;
    return quotient_homology(ideal, ell, k * e, window);
}

}  // namespace khl

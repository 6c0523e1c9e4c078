#include "khl/complex.hpp"

#include <algorithm>
#include <sstream>

namespace khl {

ChainComplex::ChainComplex(Ring ring, std::vector<Module> modules, std::vector<ModuleMap> diffs)
    : ring_(std::move(ring)), modules_(std::move(modules)), diffs_(std::move(diffs)), zero_(zero_module(ring_)) {}

const Module& ChainComplex::module(int k) const {
    if (k < 0 || k > length()) return zero_;
    return modules_[k];
}

ModuleMap ChainComplex::d(int k) const {
    if (k >= 1 && k <= length()) return diffs_[k - 1];
    return zero_map(module(k), module(k - 1));
}

ChainComplex make_complex(const Ring& ring, std::vector<Module> modules, std::vector<ModuleMap> diffs) {
    if (modules.empty()) return ChainComplex(ring, {}, {});
    if (diffs.size() + 1 != modules.size()) throw DimensionMismatch("need one differential per positive degree");
    for (const auto& m : modules)
        if (m->ring() != ring) throw MixedRings("complex modules");
    for (size_t k = 1; k < modules.size(); ++k) {
        const auto& d = diffs[k - 1];
        if (!same_shape(d.dom(), modules[k]) || !same_shape(d.cod(), modules[k - 1]))
            throw DimensionMismatch("differential d_" + std::to_string(k) + " has the wrong shape");
    }
    for (size_t k = 1; k + 1 < modules.size(); ++k)
        if (!(diffs[k - 1].matrix() * diffs[k].matrix()).is_zero()) throw NotAComplex(static_cast<int>(k));
    return ChainComplex(ring, std::move(modules), std::move(diffs));
}

ChainComplex make_complex(std::vector<Module> modules, std::vector<ModuleMap> diffs) {
    if (modules.empty()) throw InvalidArgument("empty complex needs a ring");
    Ring r = modules[0]->ring();
    return make_complex(r, std::move(modules), std::move(diffs));
}

ChainComplex map_complex(const ModuleMap& f) { return make_complex({f.cod(), f.dom()}, {f}); }

ChainComplex concentrated(const Module& v, int k) {
    std::vector<Module> mods;
    std::vector<ModuleMap> diffs;
    Module z = zero_module(v->ring());
    for (int j = 0; j < k; ++j) mods.push_back(z);
    mods.push_back(v);
    for (int j = 1; j <= k; ++j) diffs.push_back(zero_map(mods[j], mods[j - 1]));
    return make_complex(v->ring(), mods, diffs);
}

ChainComplex shift(const ChainComplex& c, int k) {
    if (k < 0) throw InvalidArgument("shift needs k >= 0");
    std::vector<Module> mods;
    std::vector<ModuleMap> diffs;
    Module z = zero_module(c.ring());
    for (int j = 0; j < k; ++j) mods.push_back(z);
    for (int j = 0; j <= c.length(); ++j) mods.push_back(c.module(j));
    for (int j = 1; j < static_cast<int>(mods.size()); ++j) {
        if (j - k >= 1)
            diffs.push_back(c.d(j - k));
        else
            diffs.push_back(zero_map(mods[j], mods[j - 1]));
    }
    return make_complex(c.ring(), mods, diffs);
}

ChainComplex direct_sum_complex(const Ring& ring, const std::vector<ChainComplex>& parts) {
    int len = 0;
    for (const auto& c : parts) len = std::max(len, c.length());
    std::vector<DirectSum> sums;
    std::vector<Module> mods;
    for (int k = 0; k <= len; ++k) {
        std::vector<Module> pk;
        for (const auto& c : parts) pk.push_back(c.module(k));
        sums.push_back(direct_sum(ring, pk));
        mods.push_back(sums.back().sum);
    }
    std::vector<ModuleMap> diffs;
    for (int k = 1; k <= len; ++k) {
        std::vector<SparseMatrix> blocks;
        for (const auto& c : parts) blocks.push_back(c.d(k).matrix());
        diffs.emplace_back(mods[k], mods[k - 1], block_diag(blocks));
    }
    return make_complex(ring, mods, diffs);
}

TensorComplex total_tensor(const ChainComplex& K, const ChainComplex& L) {
    if (K.ring() != L.ring()) throw MixedRings("total_tensor");
    const Ring& R = K.ring();
    TensorComplex out;
    const int top = K.length() + L.length();
    std::vector<Module> mods;
    for (int m = 0; m <= std::max(top, 0); ++m) {
        std::vector<Label> basis;
        std::vector<int> degrees;
        std::vector<std::pair<int, int>> blocks;
        for (int p = std::max(0, m - L.length()); p <= std::min(m, K.length()); ++p) {
            int q = m - p;
            blocks.push_back({p, static_cast<int>(basis.size())});
            auto t = tensor_product(K.module(p), L.module(q));
            for (int i = 0; i < t->rank(); ++i) {
                basis.push_back(summand_label(p, t->label(i)));
                degrees.push_back(t->degree(i));
            }
        }
        mods.push_back(make_module(R, basis, degrees));
        out.blocks.push_back(blocks);
    }
    if (K.size() == 0 || L.size() == 0) {
        out.complex = make_complex(R, {}, {});
        return out;
    }
    std::vector<ModuleMap> diffs;
    for (int m = 1; m <= top; ++m) {
        MatrixBuilder b(R, mods[m - 1]->rank(), mods[m]->rank());
        auto offset_of = [&](int deg, int p) {
            for (const auto& [pp, off] : out.blocks[deg])
                if (pp == p) return off;
            return -1;
        };
        for (const auto& [p, off] : out.blocks[m]) {
            int q = m - p;
            if (p >= 1 && q <= L.length()) {
                int dst = offset_of(m - 1, p - 1);
                if (dst >= 0)
                    b.add_block(dst, off, kron(K.d(p).matrix(), SparseMatrix::identity(R, L.rank(q))));
            }
            if (q >= 1) {
                int dst = offset_of(m - 1, p);
                if (dst >= 0)
                    b.add_block(dst, off, kron(SparseMatrix::identity(R, K.rank(p)), L.d(q).matrix()),
                                p % 2 ? -1 : 1);
            }
        }
        diffs.emplace_back(mods[m], mods[m - 1], b.build());
    }
    out.complex = make_complex(R, mods, diffs);
    return out;
}

ModuleMap ChainMap::at(int k) const {
    if (k >= 0 && k < static_cast<int>(maps.size())) return maps[k];
    return zero_map(src.module(k), dst.module(k));
}

bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, const std::vector<ModuleMap>& maps) {
    const int top = std::max(src.length(), dst.length());
    auto f = [&](int k) {
        if (k >= 0 && k < static_cast<int>(maps.size())) return maps[k].matrix();
        return SparseMatrix(src.ring(), dst.rank(k), src.rank(k));
    };
    for (int k = 1; k <= top + 1; ++k)
        if (f(k - 1) * src.d(k).matrix() != dst.d(k).matrix() * f(k)) return false;
    return true;
}

ChainMap make_chain_map(const ChainComplex& src, const ChainComplex& dst, std::vector<ModuleMap> maps) {
    for (size_t k = 0; k < maps.size(); ++k)
        if (maps[k].dom()->rank() != src.rank(static_cast<int>(k)) ||
            maps[k].cod()->rank() != dst.rank(static_cast<int>(k)))
            throw DimensionMismatch("chain map component " + std::to_string(k));
    if (!is_chain_map(src, dst, maps)) throw NotChainMap("components do not commute with the differentials");
    return {src, dst, std::move(maps)};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::vector<ModuleMap> maps;
    for (int k = 0; k <= f.src.length(); ++k) maps.push_back(g.at(k) * f.at(k));
    return {f.src, g.dst, maps};
}

ChainMap identity_chain_map(const ChainComplex& c) {
    std::vector<ModuleMap> maps;
    for (int k = 0; k <= c.length(); ++k) maps.push_back(identity_map(c.module(k)));
    return {c, c, maps};
}

// Descriptors -------------------------------------------------------------

bool HomologyDegree::is_zero() const {
    if (!torsion.empty() || free_rank || dim) return false;
    for (const auto& [t, v] : hilbert)
        if (v) return false;
    return true;
}

const HomologyDegree& HomologyDescriptor::at(int k) const {
    static const HomologyDegree zero;
    if (k < 0 || k >= static_cast<int>(degrees.size())) return zero;
    return degrees[k];
}

bool HomologyDescriptor::operator==(const HomologyDescriptor& o) const {
    if (kind != o.kind) return false;
    size_t n = std::max(degrees.size(), o.degrees.size());
    for (size_t k = 0; k < n; ++k) {
        HomologyDegree a = at(static_cast<int>(k)), b = o.at(static_cast<int>(k));
        if (kind == RingKind::GradedPoly) {
            for (auto it = a.hilbert.begin(); it != a.hilbert.end();)
                it = it->second ? std::next(it) : a.hilbert.erase(it);
            for (auto it = b.hilbert.begin(); it != b.hilbert.end();)
                it = it->second ? std::next(it) : b.hilbert.erase(it);
        }
        if (!(a == b)) return false;
    }
    return true;
}

std::string HomologyDescriptor::str(int k) const {
    const auto& h = at(k);
    std::ostringstream os;
    switch (kind) {
        case RingKind::Integers: {
            bool first = true;
            if (h.free_rank) {
                os << "Z^" << h.free_rank;
                first = false;
            }
            for (const auto& t : h.torsion) {
                os << (first ? "" : " + ") << "Z/" << t.get_str();
                first = false;
            }
            if (first) os << "0";
            break;
        }
        case RingKind::GradedPoly: {
            os << "{";
            bool first = true;
            for (const auto& [t, v] : h.hilbert)
                if (v) {
                    os << (first ? "" : ", ") << t << ":" << v;
                    first = false;
                }
            os << "}";
            break;
        }
        default: os << h.dim;
    }
    return os.str();
}

std::string HomologyDescriptor::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < degrees.size(); ++k) os << (k ? " " : "") << "H" << k << "=" << str(static_cast<int>(k));
    return os.str();
}

SparseMatrix field_slice(const ModuleMap& f, int t) {
    const Ring& R = f.ring();
    if (R.is_graded()) return graded_slice(f.matrix(), f.cod()->degrees(), f.dom()->degrees(), t);
    if (!R.is_field()) throw NonFieldRing(R.name());
    return f.matrix();
}

int slice_dim(const Module& v, int t) {
    if (!v->graded()) return v->rank();
    long total = 0;
    for (int d : v->degrees()) total += monomial_count(v->ring().nvars(), t - d).get_si();
    return static_cast<int>(total);
}

static void require_window(const Ring& R, std::optional<int> window) {
    if (R.is_graded() && !window) throw WindowRequired("graded homology needs a degree window");
}

HomologyDescriptor homology(const ChainComplex& c, std::optional<int> window) {
    const Ring& R = c.ring();
    require_window(R, window);
    HomologyDescriptor out;
    out.kind = R.kind() == RingKind::IntegersMod ? RingKind::IntegersMod : R.kind();
    if (R.kind() == RingKind::IntegersMod && !R.is_field()) throw NonFieldRing(R.name());
    out.window = window.value_or(-1);
    const int len = c.length();
    if (R.is_integers()) {
        std::vector<SNFResult> snf(len + 2);
        for (int k = 1; k <= len; ++k) snf[k] = smith_normal_form(c.d(k).matrix());
        for (int k = 0; k <= len; ++k) {
            HomologyDegree h;
            int rk = (k >= 1) ? snf[k].rank : 0;
            int rk1 = (k + 1 <= len) ? snf[k + 1].rank : 0;
            h.free_rank = c.rank(k) - rk - rk1;
            if (k + 1 <= len)
                for (const auto& f : snf[k + 1].factors)
                    if (f != 1) h.torsion.push_back(f);
            out.degrees.push_back(h);
        }
        return out;
    }
    std::vector<int> ts;
    if (R.is_graded())
        for (int t = 0; t <= *window; ++t) ts.push_back(t);
    else
        ts.push_back(0);
    for (int k = 0; k <= len; ++k) out.degrees.emplace_back();
    for (int t : ts) {
        std::vector<int> ranks(len + 2, 0);
        for (int k = 1; k <= len; ++k) ranks[k] = field_rank(field_slice(c.d(k), t));
        for (int k = 0; k <= len; ++k) {
            long dim = slice_dim(c.module(k), t) - ranks[k] - (k + 1 <= len ? ranks[k + 1] : 0);
            if (R.is_graded())
                out.degrees[k].hilbert[t] = dim;
            else
                out.degrees[k].dim = dim;
        }
    }
    return out;
}

// Homology generators -----------------------------------------------------

static FVec apply_fvec(long p, const SparseMatrix& m, const FVec& v) {
    std::map<int, mpq_class> acc;
    for (const auto& [j, c] : v)
        for (const auto& [i, s] : m.column(j)) acc[i] += c * s.constant();
    FVec out;
    for (auto& [i, c] : acc) {
        mpq_class r = field_reduce(p, c);
        if (r != 0) out.push_back({i, r});
    }
    return out;
}

FieldHomologySlice::FieldHomologySlice(long p, const SparseMatrix& d_out, const SparseMatrix& d_in)
    : p_(p), d_out_(d_out), boundary_ech_(p, d_in.rows()), ech_(p, d_in.rows(), true) {
    for (int j = 0; j < d_in.cols(); ++j) {
        FVec col = constant_column(d_in, j);
        boundary_ech_.insert(col, -1);
        ech_.insert(std::move(col), -1);
    }
    nb_ = boundary_ech_.rank();
    FieldEchelon kern(p, d_out.rows(), true);
    for (int j = 0; j < d_out.cols(); ++j) {
        if (kern.insert(constant_column(d_out, j), j)) continue;
        FVec z = kern.relation();
        if (ech_.insert(z, static_cast<int>(reps_.size()))) reps_.push_back(std::move(z));
    }
}

bool FieldHomologySlice::is_boundary(const FVec& z) const { return boundary_ech_.contains(z); }

std::vector<mpq_class> FieldHomologySlice::coords(const FVec& z) const {
    if (!apply_fvec(p_, d_out_, z).empty()) throw NotACycle("element is not a cycle");
    FVec combo;
    FVec rest = ech_.reduce(z, &combo);
    if (!rest.empty()) throw NotACycle("cycle outside the computed span");
    std::vector<mpq_class> out(reps_.size(), 0);
    for (const auto& [id, c] : combo) out[id] = c;
    return out;
}

HomologyAt::HomologyAt(const ChainComplex& c, int k, std::optional<int> window) : c_(c), k_(k) {
    const Ring& R = c.ring();
    require_window(R, window);
    kind_ = R.kind();
    if (R.is_integers()) {
        SNFResult out = smith_normal_form(c.d(k).matrix());
        zV_ = out.V;
        zrank_ = out.rank;
        int n = c.rank(k);
        std::vector<int> kernel_cols, tail_rows;
        for (int i = zrank_; i < n; ++i) {
            kernel_cols.push_back(i);
            tail_rows.push_back(i);
        }
        SparseMatrix K = out.V_inv.select_cols(kernel_cols);
        SparseMatrix B = (out.V * c.d(k + 1).matrix()).select_rows(tail_rows);
        SNFResult bs = smith_normal_form(B);
        zUinv_ = bs.U_inv;
        SparseMatrix G = K * bs.U;
        for (int i = 0; i < G.cols(); ++i) {
            mpz_class order = i < bs.rank ? bs.factors[i] : mpz_class(0);
            if (order == 1) continue;
            zkeep_.push_back(i);
            z_gens_.push_back(G.column(i));
            z_orders_.push_back(order);
        }
        return;
    }
    if (R.kind() == RingKind::IntegersMod && !R.is_field()) throw NonFieldRing(R.name());
    long p = R.characteristic();
    if (R.is_graded()) {
        window_ = *window;
        for (int t = 0; t <= window_; ++t)
            slices_.emplace(t, FieldHomologySlice(p, field_slice(c.d(k), t), field_slice(c.d(k + 1), t)));
    } else {
        slices_.emplace(0, FieldHomologySlice(p, c.d(k).matrix(), c.d(k + 1).matrix()));
    }
}

std::vector<mpz_class> HomologyAt::z_coords(const SparseVec& cycle) const {
    if (!c_.d(k_).matrix().apply(cycle).empty()) throw NotACycle("element is not a cycle");
    SparseVec w = zV_.apply(cycle);
    SparseVec y;
    for (const auto& [i, s] : w)
        if (i >= zrank_) y.push_back({i - zrank_, s});
    SparseVec cvec = zUinv_.apply(y);
    std::vector<mpz_class> full(zUinv_.rows(), 0);
    for (const auto& [i, s] : cvec) full[i] = scalar_to_mpz(s);
    std::vector<mpz_class> out;
    for (size_t g = 0; g < zkeep_.size(); ++g) {
        mpz_class v = full[zkeep_[g]];
        if (z_orders_[g] != 0) {
            v %= z_orders_[g];
            if (v < 0) v += z_orders_[g];
        }
        out.push_back(v);
    }
    return out;
}

std::vector<int> HomologyAt::slice_degrees() const {
    std::vector<int> out;
    for (const auto& [t, s] : slices_) out.push_back(t);
    return out;
}

SparseVec HomologyAt::slice_element(int t, const FVec& v) const {
    const Ring& R = c_.ring();
    if (!R.is_graded()) return scalar_column(R, v);
    SliceBasis sb(c_.module(k_)->degrees(), R.nvars(), t);
    return sb.element(R, v);
}

FVec HomologyAt::slice_coordinates(int t, const SparseVec& x) const {
    const Ring& R = c_.ring();
    if (!R.is_graded()) {
        FVec out;
        for (const auto& [i, s] : x)
            if (!s.is_zero()) out.push_back({i, s.constant()});
        return out;
    }
    SliceBasis sb(c_.module(k_)->degrees(), R.nvars(), t);
    return sb.coordinates(x);
}

HomologyMap induced_map(const HomologyAt& src, const HomologyAt& dst, const ModuleMap& f) {
    HomologyMap out;
    out.kind = src.kind();
    if (src.kind() == RingKind::Integers) {
        const auto& gens = src.z_generators();
        out.z.assign(dst.z_orders().size(), std::vector<mpz_class>(gens.size(), 0));
        for (size_t j = 0; j < gens.size(); ++j) {
            auto c = dst.z_coords(f.matrix().apply(gens[j]));
            for (size_t i = 0; i < c.size(); ++i) out.z[i][j] = c[i];
        }
        return out;
    }
    long p = f.ring().characteristic();
    for (const auto& [t, ss] : src.slices()) {
        auto it = dst.slices().find(t);
        if (it == dst.slices().end()) throw InvalidArgument("homology windows differ");
        const auto& ds = it->second;
        SparseMatrix fs = field_slice(f, t);
        Ring F = f.ring().base_field();
        SparseMatrix m(F, ds.dim(), ss.dim());
        for (int j = 0; j < ss.dim(); ++j) {
            auto c = ds.coords(apply_fvec(p, fs, ss.reps()[j]));
            SparseVec col;
            for (int i = 0; i < ds.dim(); ++i)
                if (c[i] != 0) col.push_back({i, F.from_mpq(c[i])});
            m.set_column(j, std::move(col));
        }
        out.slices.emplace(t, std::move(m));
    }
    return out;
}

bool is_isomorphism(const HomologyMap& m, const HomologyAt& src, const HomologyAt& dst) {
    if (m.kind == RingKind::Integers) {
        if (src.z_orders() != dst.z_orders()) return false;
        const int n = static_cast<int>(dst.z_orders().size());
        if (n == 0) return true;
        Ring Z = Ring::integers();
        SparseMatrix aug(Z, n, n + n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if (m.z[i][j] != 0) aug.set(i, j, Z.from_mpz(m.z[i][j]));
            if (dst.z_orders()[i] != 0) aug.set(i, n + i, Z.from_mpz(dst.z_orders()[i]));
        }
        SNFResult s = smith_normal_form(aug);
        if (s.rank != n) return false;
        for (const auto& f : s.factors)
            if (f != 1) return false;
        return true;
    }
    for (const auto& [t, mat] : m.slices) {
        if (mat.rows() != mat.cols()) return false;
        if (field_rank(mat) != mat.rows()) return false;
    }
    return true;
}

mpq_class slice_trace(const HomologyMap& m, int t) {
    auto it = m.slices.find(t);
    if (it == m.slices.end()) return 0;
    mpq_class tr = 0;
    for (int i = 0; i < std::min(it->second.rows(), it->second.cols()); ++i) {
        Scalar s = it->second.at(i, i);
        if (!s.is_zero()) tr += s.constant();
    }
    return tr;
}

// Laurent polynomials ----------------------------------------------------

LaurentPoly LaurentPoly::constant(const mpz_class& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int e, const mpz_class& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

mpz_class LaurentPoly::coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [a, c] : terms_)
        for (const auto& [b, d] : o.terms_) r.add_term(a + b, c * d);
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::adams(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.add_term(k * e, v);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "T";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly module_class(const Module& v) {
    LaurentPoly p;
    for (int d : v->degrees()) p.add_term(d, 1);
    return p;
}

LaurentPoly euler_class(const ChainComplex& c) {
    LaurentPoly p;
    for (int k = 0; k <= c.length(); ++k) p = p + module_class(c.module(k)).scaled(k % 2 ? -1 : 1);
    return p;
}

LaurentPoly sigma_of_class(int n, const LaurentPoly& c) {
    if (n < 0) throw InvalidArgument("sigma needs n >= 0");
    std::vector<LaurentPoly> h(n + 1);
    h[0] = LaurentPoly::constant(1);
    for (int m = 1; m <= n; ++m) {
        LaurentPoly acc;
        for (int i = 1; i <= m; ++i) acc = acc + c.adams(i) * h[m - i];
        LaurentPoly q;
        for (const auto& [e, v] : acc.terms()) {
            if (v % m != 0) throw InvalidArgument("Newton recursion left the integers");
            q.add_term(e, v / m);
        }
        h[m] = q;
    }
    return h[n];
}

std::map<int, mpz_class> hilbert_of_class(const LaurentPoly& c, int s, int window) {
    std::map<int, mpz_class> out;
    for (int t = 0; t <= window; ++t) {
        mpz_class v = 0;
        for (const auto& [a, coef] : c.terms()) v += coef * monomial_count(s, t - a);
        out[t] = v;
    }
    return out;
}

}  // namespace khl

#include "khl/linalg.hpp"

#include <algorithm>

namespace khl {

mpq_class field_reduce(long p, const mpq_class& v) {
    if (p == 0) return v;
    mpz_class m = p;
    mpz_class num = v.get_num() % m;
    if (num < 0) num += m;
    if (v.get_den() != 1) {
        mpz_class inv;
        mpz_class den = v.get_den();
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
            throw InvalidArgument("denominator divisible by the characteristic");
        num = (num * inv) % m;
    }
    return mpq_class(num);
}

static mpq_class field_inv(long p, const mpq_class& v) {
    if (p == 0) return 1 / v;
    return field_reduce(p, mpq_class(1) / v);
}

void fvec_axpy(long p, FVec& v, const mpq_class& c, const FVec& w) {
    if (c == 0 || w.empty()) return;
    FVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(std::move(v[i++]));
        } else if (i == v.size() || w[j].first < v[i].first) {
            mpq_class t = field_reduce(p, c * w[j].second);
            if (t != 0) out.push_back({w[j].first, t});
            ++j;
        } else {
            mpq_class t = field_reduce(p, v[i].second + c * w[j].second);
            if (t != 0) out.push_back({v[i].first, t});
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

FieldEchelon::FieldEchelon(long p, int dim, bool track)
    : p_(p), dim_(dim), track_(track), pivot_row_(dim, -1) {}

FVec FieldEchelon::reduce(FVec v, FVec* combo) const {
    if (combo) combo->clear();
    while (!v.empty()) {
        int lead = v.front().first;
        int r = pivot_row_[lead];
        if (r < 0) break;
        mpq_class c = v.front().second;
        fvec_axpy(p_, v, -c, rows_[r].vec);
        if (combo) fvec_axpy(p_, *combo, c, rows_[r].record);
    }
    return v;
}

bool FieldEchelon::insert(FVec v, int id) {
    FVec rec;
    if (track_ && id >= 0) rec.push_back({id, 1});
    while (!v.empty()) {
        int lead = v.front().first;
        int r = pivot_row_[lead];
        if (r < 0) break;
        mpq_class c = v.front().second;
        fvec_axpy(p_, v, -c, rows_[r].vec);
        if (track_) fvec_axpy(p_, rec, -c, rows_[r].record);
    }
    if (v.empty()) {
        relation_ = std::move(rec);
        return false;
    }
    mpq_class inv = field_inv(p_, v.front().second);
    for (auto& e : v) e.second = field_reduce(p_, e.second * inv);
    if (track_)
        for (auto& e : rec) e.second = field_reduce(p_, e.second * inv);
    pivot_row_[v.front().first] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(v), std::move(rec)});
    return true;
}

std::vector<int> FieldEchelon::pivots() const {
    std::vector<int> out;
    for (const auto& r : rows_) out.push_back(r.vec.front().first);
    return out;
}

long field_char_of(const Ring& ring) {
    if (!ring.coefficients_form_field()) throw NonFieldRing(ring.name());
    return ring.characteristic();
}

FVec constant_column(const SparseMatrix& m, int j) {
    FVec v;
    for (const auto& e : m.column(j)) {
        if (!e.second.is_constant()) throw InvalidArgument("non-constant entry in base-field matrix");
        v.push_back({e.first, e.second.constant()});
    }
    return v;
}

SparseVec scalar_column(const Ring& ring, const FVec& v) {
    SparseVec out;
    for (const auto& e : v) {
        Scalar s = ring.from_mpq(e.second);
        if (!s.is_zero()) out.push_back({e.first, s});
    }
    return out;
}

RankKernel rank_and_kernel(const SparseMatrix& a) {
    const Ring& R = a.ring();
    if (!R.is_field()) throw NonFieldRing(R.name());
    long p = R.characteristic();
    FieldEchelon ech(p, a.rows(), true);
    RankKernel out;
    for (int j = 0; j < a.cols(); ++j) {
        if (ech.insert(constant_column(a, j), j)) {
            ++out.rank;
        } else {
            out.kernel_basis.push_back(scalar_column(R, ech.relation()));
        }
    }
    return out;
}

int field_rank(const SparseMatrix& a) {
    long p = field_char_of(a.ring());
    FieldEchelon ech(p, a.rows());
    int r = 0;
    for (int j = 0; j < a.cols(); ++j)
        if (ech.insert(constant_column(a, j), j)) ++r;
    return r;
}

mpz_class scalar_to_mpz(const Scalar& s) {
    if (!s.is_constant()) throw InvalidArgument("non-constant integer entry");
    mpq_class c = s.constant();
    if (c.get_den() != 1) throw InvalidArgument("non-integral entry");
    return c.get_num();
}

std::vector<std::vector<mpz_class>> to_mpz(const SparseMatrix& a) {
    std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols(), 0));
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& e : a.column(j)) m[e.first][j] = scalar_to_mpz(e.second);
    return m;
}

SparseMatrix from_mpz(const Ring& ring, const std::vector<std::vector<mpz_class>>& m) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m[0].size()) : 0;
    SparseMatrix out(ring, r, c);
    for (int j = 0; j < c; ++j) {
        SparseVec v;
        for (int i = 0; i < r; ++i)
            if (m[i][j] != 0) v.push_back({i, ring.from_mpz(m[i][j])});
        out.set_column(j, std::move(v));
    }
    return out;
}

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense dense_identity(int n) {
    Dense d(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

// Tracks A = U * cur * V together with the inverses of U and V.
struct SmithState {
    Dense cur, U, Ui, V, Vi;
    int m, n;

    // row_i += q * row_j
    void row_add(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int c = 0; c < n; ++c) cur[i][c] += q * cur[j][c];
        for (int c = 0; c < m; ++c) Ui[i][c] += q * Ui[j][c];
        for (int r = 0; r < m; ++r) U[r][j] -= q * U[r][i];
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(cur[i], cur[j]);
        std::swap(Ui[i], Ui[j]);
        for (int r = 0; r < m; ++r) std::swap(U[r][i], U[r][j]);
    }
    void row_negate(int i) {
        for (auto& v : cur[i]) v = -v;
        for (auto& v : Ui[i]) v = -v;
        for (int r = 0; r < m; ++r) U[r][i] = -U[r][i];
    }
    // col_j += q * col_i
    void col_add(int j, int i, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < m; ++r) cur[r][j] += q * cur[r][i];
        for (int r = 0; r < n; ++r) Vi[r][j] += q * Vi[r][i];
        for (int c = 0; c < n; ++c) V[i][c] -= q * V[j][c];
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(cur[r][i], cur[r][j]);
        for (int r = 0; r < n; ++r) std::swap(Vi[r][i], Vi[r][j]);
        std::swap(V[i], V[j]);
    }
};

}  // namespace

SNFResult smith_normal_form(const SparseMatrix& a) {
    const Ring& R = a.ring();
    if (!R.is_integers()) throw InvalidArgument("smith_normal_form needs an integer matrix");
    SmithState s;
    s.m = a.rows();
    s.n = a.cols();
    s.cur = to_mpz(a);
    s.U = dense_identity(s.m);
    s.Ui = dense_identity(s.m);
    s.V = dense_identity(s.n);
    s.Vi = dense_identity(s.n);
    int t = 0;
    const int lim = std::min(s.m, s.n);
    while (t < lim) {
        // pivot: smallest absolute value, ties broken by (row, col)
        int pr = -1, pc = -1;
        mpz_class best;
        for (int i = t; i < s.m; ++i)
            for (int j = t; j < s.n; ++j) {
                const mpz_class& v = s.cur[i][j];
                if (v == 0) continue;
                if (pr < 0 || abs(v) < best) {
                    best = abs(v);
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        s.row_swap(t, pr);
        s.col_swap(t, pc);
        bool clean = true;
        for (int i = t + 1; i < s.m; ++i) {
            if (s.cur[i][t] == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), s.cur[i][t].get_mpz_t(), s.cur[t][t].get_mpz_t());
            s.row_add(i, t, -q);
            if (s.cur[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < s.n; ++j) {
            if (s.cur[t][j] == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), s.cur[t][j].get_mpz_t(), s.cur[t][t].get_mpz_t());
            s.col_add(j, t, -q);
            if (s.cur[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        int bad = -1;
        for (int i = t + 1; i < s.m && bad < 0; ++i)
            for (int j = t + 1; j < s.n; ++j)
                if (s.cur[i][j] % s.cur[t][t] != 0) {
                    bad = i;
                    break;
                }
        if (bad >= 0) {
            s.row_add(t, bad, 1);
            continue;
        }
        if (s.cur[t][t] < 0) s.row_negate(t);
        ++t;
    }
    SNFResult out;
    for (int i = 0; i < lim; ++i)
        if (s.cur[i][i] != 0) out.factors.push_back(s.cur[i][i]);
    out.rank = static_cast<int>(out.factors.size());
    out.U = from_mpz(R, s.U);
    out.D = from_mpz(R, s.cur);
    out.V = from_mpz(R, s.V);
    out.U_inv = from_mpz(R, s.Ui);
    out.V_inv = from_mpz(R, s.Vi);
    return out;
}

std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b) {
    const Ring& R = a.ring();
    if (R.is_integers()) {
        SNFResult snf = smith_normal_form(a);
        SparseVec c = snf.U_inv.apply(b);
        std::vector<mpz_class> y(a.cols(), 0);
        for (const auto& e : c) {
            mpz_class v = scalar_to_mpz(e.second);
            int i = e.first;
            if (i >= snf.rank) return std::nullopt;
            if (v % snf.factors[i] != 0) return std::nullopt;
            y[i] = v / snf.factors[i];
        }
        SparseVec yv;
        for (int i = 0; i < a.cols(); ++i)
            if (y[i] != 0) yv.push_back({i, R.from_mpz(y[i])});
        return snf.V_inv.apply(yv);
    }
    long p = field_char_of(R);
    FieldEchelon ech(p, a.rows(), true);
    for (int j = 0; j < a.cols(); ++j) ech.insert(constant_column(a, j), j);
    FVec bv;
    for (const auto& e : b) {
        if (!e.second.is_constant()) throw InvalidArgument("non-constant right-hand side");
        bv.push_back({e.first, e.second.constant()});
    }
    FVec combo;
    FVec rest = ech.reduce(bv, &combo);
    if (!rest.empty()) return std::nullopt;
    return scalar_column(R, combo);
}

bool is_invertible(const SparseMatrix& a) {
    if (a.rows() != a.cols()) return false;
    const Ring& R = a.ring();
    if (R.is_integers()) {
        SNFResult snf = smith_normal_form(a);
        if (snf.rank != a.rows()) return false;
        for (const auto& f : snf.factors)
            if (f != 1) return false;
        return true;
    }
    if (R.kind() == RingKind::IntegersMod && !R.is_field())
        throw NonFieldRing("invertibility over " + R.name());
    if (!a.all_constant()) return false;
    return field_rank(a) == a.rows();
}

SparseMatrix inverse(const SparseMatrix& a) {
    if (!is_invertible(a)) throw InvalidArgument("matrix is not invertible");
    int n = a.rows();
    const Ring& R = a.ring();
    if (R.is_integers()) {
        SNFResult snf = smith_normal_form(a);
        // A = U * I * V, so A^{-1} = V^{-1} * U^{-1}
        return snf.V_inv * snf.U_inv;
    }
    SparseMatrix inv(R, n, n);
    for (int j = 0; j < n; ++j) {
        SparseVec e{{j, R.one()}};
        auto x = solve(a, e);
        inv.set_column(j, *x);
    }
    return inv;
}

SplitSpan split_column_span(const SparseMatrix& s) {
    const Ring& R = s.ring();
    const int n = s.rows();
    SplitSpan out;
    // Fast path: each column is zero or a unit multiple of a standard vector.
    bool coordinate = true;
    std::vector<char> hit(n, 0);
    for (int j = 0; j < s.cols() && coordinate; ++j) {
        const auto& col = s.column(j);
        if (col.empty()) continue;
        if (col.size() != 1 || !R.is_unit(col[0].second)) {
            coordinate = false;
            break;
        }
        hit[col[0].first] = 1;
    }
    if (coordinate) {
        for (int i = 0; i < n; ++i) (hit[i] ? out.span_coords : out.complement_coords).push_back(i);
        auto I = SparseMatrix::identity(R, n);
        out.coordinate = true;
        out.basis = I.select_cols(out.span_coords);
        out.left_inverse = out.basis.transpose();
        out.complement = I.select_cols(out.complement_coords);
        out.complement_projection = out.complement.transpose();
        return out;
    }
    if (R.is_integers()) {
        SNFResult snf = smith_normal_form(s);
        for (const auto& f : snf.factors)
            if (f != 1) throw NotSplitImage("invariant factor " + f.get_str());
        std::vector<int> first, rest;
        for (int i = 0; i < n; ++i) (i < snf.rank ? first : rest).push_back(i);
        out.basis = snf.U.select_cols(first);
        out.complement = snf.U.select_cols(rest);
        out.left_inverse = snf.U_inv.select_rows(first);
        out.complement_projection = snf.U_inv.select_rows(rest);
        return out;
    }
    if (R.kind() == RingKind::IntegersMod && !R.is_field())
        throw NonFieldRing("split over " + R.name());
    if (!s.all_constant()) throw NotSplitImage("non-constant spanning set over a graded ring");
    long p = field_char_of(R);
    FieldEchelon ech(p, n);
    std::vector<int> chosen;
    for (int j = 0; j < s.cols(); ++j)
        if (ech.insert(constant_column(s, j), j)) chosen.push_back(j);
    std::vector<char> is_pivot(n, 0);
    for (int piv : ech.pivots()) is_pivot[piv] = 1;
    std::vector<int> extra;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) extra.push_back(i);
    out.basis = s.select_cols(chosen);
    out.complement = SparseMatrix::identity(R, n).select_cols(extra);
    SparseMatrix full = hstack({out.basis, out.complement});
    SparseMatrix inv = inverse(full);
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) (i < static_cast<int>(chosen.size()) ? top : bottom).push_back(i);
    out.left_inverse = inv.select_rows(top);
    out.complement_projection = inv.select_rows(bottom);
    return out;
}

}  // namespace khl

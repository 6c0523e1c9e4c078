#include "khl/graded.hpp"

#include <functional>

#include "khl/linalg.hpp"

namespace khl {

mpz_class monomial_count(int s, int t) {
    if (t < 0 || s < 0) return 0;
    if (s == 0) return t == 0 ? 1 : 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(s + t - 1),
                 static_cast<unsigned long>(t));
    return out;
}

std::vector<Mono> monomials_of_degree(int nvars, int t) {
    std::vector<Mono> out;
    if (t < 0) return out;
    if (nvars == 0) {
        if (t == 0) out.push_back(0);
        return out;
    }
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[i] = left;
            out.push_back(make_mono(e));
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, t);
    return out;
}

SliceBasis::SliceBasis(const std::vector<int>& degrees, int nvars, int t)
    : nvars_(nvars), t_(t), gen_degree_(degrees), index_(degrees.size()) {
    std::map<int, std::vector<Mono>> cache;
    for (size_t g = 0; g < degrees.size(); ++g) {
        offsets_.push_back(static_cast<int>(elems_.size()));
        int need = t - degrees[g];
        if (need < 0) continue;
        auto it = cache.find(need);
        if (it == cache.end()) it = cache.emplace(need, monomials_of_degree(nvars, need)).first;
        for (Mono m : it->second) {
            index_[g][m] = static_cast<int>(elems_.size());
            elems_.push_back({static_cast<int>(g), m});
        }
    }
}

int SliceBasis::index_of(int gen, Mono m) const {
    auto it = index_[gen].find(m);
    return it == index_[gen].end() ? -1 : it->second;
}

FVec SliceBasis::coordinates(const SparseVec& x) const {
    FVec out;
    for (const auto& [g, s] : x)
        for (const auto& term : s.terms) {
            if (mono_degree(term.mono) + gen_degree_[g] != t_) continue;
            int idx = index_of(g, term.mono);
            if (idx >= 0) out.push_back({idx, term.coef});
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

FVec SliceBasis::coordinates(const std::vector<Scalar>& x) const {
    SparseVec v;
    for (size_t g = 0; g < x.size(); ++g)
        if (!x[g].is_zero()) v.push_back({static_cast<int>(g), x[g]});
    return coordinates(v);
}

SparseVec SliceBasis::element(const Ring& ring, const FVec& v) const {
    std::map<int, Scalar> acc;
    for (const auto& [idx, c] : v) {
        const auto& [g, m] = elems_[idx];
        ring.axpy(acc[g], 1, ring.monomial(m, c));
    }
    SparseVec out;
    for (auto& [g, s] : acc)
        if (!s.is_zero()) out.push_back({g, std::move(s)});
    return out;
}

void check_homogeneous(const SparseMatrix& m, const std::vector<int>& row_degrees,
                       const std::vector<int>& col_degrees) {
    if (static_cast<int>(row_degrees.size()) != m.rows() ||
        static_cast<int>(col_degrees.size()) != m.cols())
        throw DimensionMismatch("degree lists do not match the matrix shape");
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, s] : m.column(j)) {
            int want = col_degrees[j] - row_degrees[i];
            for (const auto& term : s.terms)
                if (mono_degree(term.mono) != want)
                    throw NonHomogeneousEntry("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") should have degree " + std::to_string(want));
        }
}

SparseMatrix graded_slice(const SparseMatrix& m, const std::vector<int>& row_degrees,
                          const std::vector<int>& col_degrees, int t) {
    const Ring& R = m.ring();
    if (!R.is_graded()) throw InvalidArgument("graded_slice needs a graded ring");
    check_homogeneous(m, row_degrees, col_degrees);
    SliceBasis rows(row_degrees, R.nvars(), t);
    SliceBasis cols(col_degrees, R.nvars(), t);
    Ring F = R.base_field();
    SparseMatrix out(F, rows.size(), cols.size());
    for (int c = 0; c < cols.size(); ++c) {
        const auto& [j, mu] = cols.at(c);
        SparseVec v;
        for (const auto& [i, s] : m.column(j))
            for (const auto& term : s.terms) {
                int r = rows.index_of(i, mono_mul(term.mono, mu));
                if (r < 0) throw NonHomogeneousEntry("slice row out of range");
                v.push_back({r, F.from_mpq(term.coef)});
            }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.set_column(c, std::move(v));
    }
    return out;
}

}  // namespace khl

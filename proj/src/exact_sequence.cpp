#include "khl/exact_sequence.hpp"

#include <algorithm>
#include <sstream>

namespace khl {

namespace {

FVec to_fvec(const SparseVec& v) {
    FVec out;
    for (const auto& [i, s] : v)
        if (!s.is_zero()) out.push_back({i, s.constant()});
    return out;
}

const FieldHomologySlice* slice_at(const HomologyAt& h, int t) {
    auto it = h.slices().find(t);
    return it == h.slices().end() ? nullptr : &it->second;
}

long dim_at(const HomologyAt& h, int t) {
    const auto* s = slice_at(h, t);
    return s ? s->dim() : 0;
}

// Induced map on one slice; an empty matrix of the right shape when either side is zero.
SparseMatrix slice_map(const Ring& F, const HomologyMap& m, const HomologyAt& src, const HomologyAt& dst, int t) {
    auto it = m.slices.find(t);
    if (it != m.slices.end()) return it->second;
    return SparseMatrix(F, dim_at(dst, t), dim_at(src, t));
}

}  // namespace

bool LongExactSequence::exact() const {
    return short_exact && std::all_of(terms.begin(), terms.end(), [](const LesTerm& x) { return x.exact(); });
}

std::map<int, long> LongExactSequence::hilbert(char which, int k) const {
    std::map<int, long> out;
    for (const auto& x : terms)
        if (x.which == which && x.k == k) out[x.t] = x.dim;
    return out;
}

std::string LongExactSequence::first_failure() const {
    if (!short_exact) return "not short exact degreewise";
    for (const auto& x : terms)
        if (!x.exact()) {
            std::ostringstream os;
            os << "H_" << x.k << "(" << x.which << ") at degree " << x.t << ": dim " << x.dim << ", ranks in/out "
               << x.rank_in << "/" << x.rank_out << (x.composite_zero ? "" : ", composite nonzero");
            return os.str();
        }
    return {};
}

LongExactSequence long_exact_sequence(const ChainMap& i, const ChainMap& p, std::optional<int> window) {
    const ChainComplex &A = i.src, &B = i.dst, &C = p.dst;
    const Ring& R = B.ring();
    if (!R.coefficients_form_field()) throw NonFieldCoefficients(R.name());
    if (R.is_graded() && !window) throw WindowRequired("graded sequences need a degree window");
    const Ring F = R.base_field();
    std::vector<int> ts;
    for (int t = 0; t <= (R.is_graded() ? *window : 0); ++t) ts.push_back(t);
    const int top = std::max({A.length(), B.length(), C.length()});

    LongExactSequence out;
    out.short_exact = true;
    for (int k = 0; k <= top && out.short_exact; ++k)
        for (int t : ts) {
            SparseMatrix is = field_slice(i.at(k), t), ps = field_slice(p.at(k), t);
            long a = is.cols(), b = is.rows(), c = ps.rows();
            if (field_rank(is) != a || field_rank(ps) != c || a + c != b || !(ps * is).is_zero()) {
                out.short_exact = false;
                break;
            }
        }

    std::vector<HomologyAt> hA, hB, hC;
    for (int k = 0; k <= top + 1; ++k) {
        hA.emplace_back(A, k, window);
        hB.emplace_back(B, k, window);
        hC.emplace_back(C, k, window);
    }
    // δ_k: H_k(C) -> H_{k-1}(A) on slice t
    auto connecting = [&](int k, int t) {
        SparseMatrix m(F, k >= 1 ? dim_at(hA[k - 1], t) : 0, dim_at(hC[k], t));
        if (k == 0 || m.rows() == 0 || m.cols() == 0) return m;
        SparseMatrix ps = field_slice(p.at(k), t), db = field_slice(B.d(k), t), is = field_slice(i.at(k - 1), t);
        const auto& target = *slice_at(hA[k - 1], t);
        const auto& reps = slice_at(hC[k], t)->reps();
        for (size_t j = 0; j < reps.size(); ++j) {
            auto y = solve(ps, scalar_column(F, reps[j]));
            if (!y) throw LiftFailure("p is not surjective on the slice");
            auto a = solve(is, db.apply(*y));
            if (!a) throw LiftFailure("boundary of the lift leaves the image of i");
            auto co = target.coords(to_fvec(*a));
            SparseVec col;
            for (size_t r = 0; r < co.size(); ++r)
                if (co[r] != 0) col.push_back({static_cast<int>(r), F.from_mpq(co[r])});
            m.set_column(static_cast<int>(j), std::move(col));
        }
        return m;
    };

    for (int t : ts) {
        // maps along the sequence, starting with δ_{top+1} into H_top(A)
        std::vector<SparseMatrix> maps;
        std::vector<std::pair<char, int>> spots;
        std::vector<long> dims;
        maps.push_back(connecting(top + 1, t));
        for (int k = top; k >= 0; --k) {
            auto im = induced_map(hA[k], hB[k], i.at(k));
            auto pm = induced_map(hB[k], hC[k], p.at(k));
            spots.push_back({'A', k});
            dims.push_back(dim_at(hA[k], t));
            maps.push_back(slice_map(F, im, hA[k], hB[k], t));
            spots.push_back({'B', k});
            dims.push_back(dim_at(hB[k], t));
            maps.push_back(slice_map(F, pm, hB[k], hC[k], t));
            spots.push_back({'C', k});
            dims.push_back(dim_at(hC[k], t));
            maps.push_back(connecting(k, t));
        }
        for (size_t s = 0; s < spots.size(); ++s) {
            LesTerm term;
            term.which = spots[s].first;
            term.k = spots[s].second;
            term.t = t;
            term.dim = dims[s];
            const SparseMatrix &in = maps[s], &outm = maps[s + 1];
            term.rank_in = (in.rows() && in.cols()) ? field_rank(in) : 0;
            term.rank_out = (outm.rows() && outm.cols()) ? field_rank(outm) : 0;
            term.composite_zero = in.cols() == 0 || outm.rows() == 0 || (outm * in).is_zero();
            out.terms.push_back(term);
        }
    }
    std::stable_sort(out.terms.begin(), out.terms.end(), [](const LesTerm& a, const LesTerm& b) {
        if (a.k != b.k) return a.k > b.k;
        if (a.which != b.which) return a.which < b.which;
        return a.t < b.t;
    });
    return out;
}

}  // namespace khl

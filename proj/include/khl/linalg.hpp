#pragma once

#include <optional>
#include <vector>

#include "khl/matrix.hpp"

namespace khl {

// Sparse vector over a prime field or Q; p == 0 means Q.
using FVec = std::vector<std::pair<int, mpq_class>>;

mpq_class field_reduce(long p, const mpq_class& v);
void fvec_axpy(long p, FVec& v, const mpq_class& c, const FVec& w);

// Incremental row-echelon basis keyed by leading index.  With tracking on,
// every stored vector remembers its expression in the inserted ids.
class FieldEchelon {
public:
    FieldEchelon(long p, int dim, bool track = false);

    // Inserts v under the given id.  Returns true when v was independent;
    // otherwise relation() holds the dependency e_id - sum c_i e_i.  A negative
    // id inserts without a record.
    bool insert(FVec v, int id);
    // Leading-term reduction of v; when combo is given it receives the
    // coefficients (over ids) of the part of v that lies in the span.
    FVec reduce(FVec v, FVec* combo = nullptr) const;
    bool contains(const FVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const FVec& relation() const { return relation_; }
    std::vector<int> pivots() const;

private:
    struct Row {
        FVec vec;
        FVec record;
    };
    long p_;
    int dim_;
    bool track_;
    std::vector<int> pivot_row_;
    std::vector<Row> rows_;
    FVec relation_;
};

long field_char_of(const Ring& ring);  // 0 for Q / Q[..], p for F_p / F_p[..]
// Column j of a matrix with constant entries, as a base-field vector.
FVec constant_column(const SparseMatrix& m, int j);
SparseVec scalar_column(const Ring& ring, const FVec& v);

struct RankKernel {
    int rank = 0;
    std::vector<SparseVec> kernel_basis;
};

RankKernel rank_and_kernel(const SparseMatrix& a);
int field_rank(const SparseMatrix& a);  // constant entries over a field coefficient domain

struct SNFResult {
    SparseMatrix U, D, V;        // A = U * D * V
    SparseMatrix U_inv, V_inv;   // inverses of U and V
    std::vector<mpz_class> factors;  // nonzero diagonal entries, divisibility chain
    int rank = 0;
};

SNFResult smith_normal_form(const SparseMatrix& a);

// Integer matrices ---------------------------------------------------------
std::vector<std::vector<mpz_class>> to_mpz(const SparseMatrix& a);
SparseMatrix from_mpz(const Ring& ring, const std::vector<std::vector<mpz_class>>& m);
mpz_class scalar_to_mpz(const Scalar& s);

// Solve a x = b exactly (over Z via the Smith form, over a field by elimination).
std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b);

bool is_invertible(const SparseMatrix& a);
SparseMatrix inverse(const SparseMatrix& a);

// Column span of S as a direct summand of the ambient free module: a basis B of
// the span, a left inverse L (L B = id, L kills the complement), a complement
// basis C, and its projection K, with B L + C K = id.
struct SplitSpan {
    SparseMatrix basis, left_inverse, complement, complement_projection;
    bool coordinate = false;  // span is spanned by standard basis vectors
    std::vector<int> span_coords, complement_coords;
};

// Throws NotSplitImage when the span is not a direct summand.
SplitSpan split_column_span(const SparseMatrix& s);

}  // namespace khl

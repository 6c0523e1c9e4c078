#pragma once

#include <utility>
#include <vector>

#include "khl/ring.hpp"

namespace khl {

// Sparse column: (row, value) pairs sorted by row, no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Ring ring, int rows, int cols);

    static SparseMatrix identity(const Ring& ring, int n);
    static SparseMatrix zero(const Ring& ring, int rows, int cols) { return {ring, rows, cols}; }
    static SparseMatrix from_ints(const Ring& ring, const std::vector<std::vector<long>>& rows);
    static SparseMatrix from_dense(const Ring& ring, int rows, int cols,
                                   const std::vector<std::vector<Scalar>>& entries);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar at(int r, int c) const;
    void set(int r, int c, const Scalar& v);
    void add_to(int r, int c, const Scalar& v);
    const SparseVec& column(int c) const { return cols_data_[c]; }
    void set_column(int c, SparseVec v);

    long nnz() const;
    bool is_zero() const;
    bool all_constant() const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& s) const;
    SparseVec apply(const SparseVec& v) const;
    bool operator==(const SparseMatrix& o) const;
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    SparseMatrix select_rows(const std::vector<int>& rows) const;
    SparseMatrix select_cols(const std::vector<int>& cols) const;
    std::vector<std::vector<Scalar>> dense() const;
    std::string str() const;

private:
    Ring ring_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> cols_data_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix block_diag(const std::vector<SparseMatrix>& blocks);

// v += c * w for sparse vectors
void sparse_axpy(const Ring& ring, SparseVec& v, const Scalar& c, const SparseVec& w);
SparseVec sparse_scale(const Ring& ring, const SparseVec& v, const Scalar& c);

// Dense accumulator for building one column at a time.
class ColumnAccumulator {
public:
    ColumnAccumulator(const Ring& ring, int rows);
    void add(int row, const Scalar& v);
    void add_scaled(const SparseVec& v, const Scalar& c);
    SparseVec take();

private:
    const Ring* ring_;
    std::vector<Scalar> vals_;
    std::vector<char> used_;
    std::vector<int> touched_;
};

// Collects (row, col, value) contributions and assembles a matrix, summing
// repeated positions.
class MatrixBuilder {
public:
    MatrixBuilder(const Ring& ring, int rows, int cols);
    void add(int row, int col, const Scalar& v);
    void add_block(int row0, int col0, const SparseMatrix& block, int sign = 1);
    SparseMatrix build() const;

private:
    Ring ring_;
    int rows_, cols_;
    std::vector<SparseVec> cols_data_;
};

}  // namespace khl

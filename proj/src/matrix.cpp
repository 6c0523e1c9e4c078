#include "khl/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace khl {

SparseMatrix::SparseMatrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), cols_data_(cols) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(const Ring& ring, int n) {
    SparseMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.cols_data_[i].push_back({i, ring.one()});
    return m;
}

SparseMatrix SparseMatrix::from_ints(const Ring& ring, const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    SparseMatrix m(ring, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged rows");
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.set(i, j, ring.from_int(rows[i][j]));
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Ring& ring, int rows, int cols,
                                      const std::vector<std::vector<Scalar>>& entries) {
    SparseMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!entries[i][j].is_zero()) m.set(i, j, entries[i][j]);
    return m;
}

Scalar SparseMatrix::at(int r, int c) const {
    const auto& col = cols_data_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const std::pair<int, Scalar>& e, int v) { return e.first < v; });
    if (it != col.end() && it->first == r) return it->second;
    return {};
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidArgument("index out of range");
    auto& col = cols_data_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const std::pair<int, Scalar>& e, int x) { return e.first < x; });
    if (it != col.end() && it->first == r) {
        if (v.is_zero()) col.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        col.insert(it, {r, v});
    }
}

void SparseMatrix::add_to(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    set(r, c, ring_.add(at(r, c), v));
}

void SparseMatrix::set_column(int c, SparseVec v) {
    for (const auto& e : v)
        if (e.first < 0 || e.first >= rows_) throw InvalidArgument("row out of range");
    cols_data_.at(c) = std::move(v);
}

long SparseMatrix::nnz() const {
    long n = 0;
    for (const auto& c : cols_data_) n += static_cast<long>(c.size());
    return n;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_data_)
        if (!c.empty()) return false;
    return true;
}

bool SparseMatrix::all_constant() const {
    for (const auto& c : cols_data_)
        for (const auto& e : c)
            if (!e.second.is_constant()) return false;
    return true;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(ring_, cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& e : cols_data_[c]) t.cols_data_[e.first].push_back({c, e.second});
    return t;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    ColumnAccumulator acc(ring_, rows_);
    for (const auto& e : v) acc.add_scaled(cols_data_.at(e.first), e.second);
    return acc.take();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
    if (ring_ != o.ring_) throw MixedRings("matrix product");
    SparseMatrix out(ring_, rows_, o.cols_);
    ColumnAccumulator acc(ring_, rows_);
    for (int j = 0; j < o.cols_; ++j) {
        for (const auto& e : o.cols_data_[j]) acc.add_scaled(cols_data_[e.first], e.second);
        out.cols_data_[j] = acc.take();
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
    if (ring_ != o.ring_) throw MixedRings("matrix sum");
    SparseMatrix out = *this;
    for (int j = 0; j < cols_; ++j) sparse_axpy(ring_, out.cols_data_[j], ring_.one(), o.cols_data_[j]);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    return *this + o.scaled(ring_.from_int(-1));
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
    SparseMatrix out(ring_, rows_, cols_);
    for (int j = 0; j < cols_; ++j) out.cols_data_[j] = sparse_scale(ring_, cols_data_[j], s);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<int>& rows) const {
    std::vector<int> pos(rows_, -1);
    for (size_t i = 0; i < rows.size(); ++i) pos.at(rows[i]) = static_cast<int>(i);
    SparseMatrix out(ring_, static_cast<int>(rows.size()), cols_);
    for (int j = 0; j < cols_; ++j) {
        SparseVec v;
        for (const auto& e : cols_data_[j])
            if (pos[e.first] >= 0) v.push_back({pos[e.first], e.second});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.cols_data_[j] = std::move(v);
    }
    return out;
}

SparseMatrix SparseMatrix::select_cols(const std::vector<int>& cols) const {
    SparseMatrix out(ring_, rows_, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) out.cols_data_[j] = cols_data_.at(cols[j]);
    return out;
}

std::vector<std::vector<Scalar>> SparseMatrix::dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
    for (int j = 0; j < cols_; ++j)
        for (const auto& e : cols_data_[j]) d[e.first][j] = e.second;
    return d;
}

std::string SparseMatrix::str() const {
    std::ostringstream os;
    auto d = dense();
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << ring_.str(d[i][j]);
        os << "]";
    }
    os << "]";
    return os.str();
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.ring() != b.ring()) throw MixedRings("kron");
    const Ring& R = a.ring();
    SparseMatrix out(R, a.rows() * b.rows(), a.cols() * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int jb = 0; jb < b.cols(); ++jb) {
            SparseVec v;
            for (const auto& ea : a.column(ja))
                for (const auto& eb : b.column(jb))
                    v.push_back({ea.first * b.rows() + eb.first, R.mul(ea.second, eb.second)});
            v.erase(std::remove_if(v.begin(), v.end(), [](const auto& e) { return e.second.is_zero(); }),
                    v.end());
            out.set_column(ja * b.cols() + jb, std::move(v));
        }
    return out;
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) throw InvalidArgument("hstack of nothing");
    int rows = blocks[0].rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw DimensionMismatch("hstack");
        cols += b.cols();
    }
    SparseMatrix out(blocks[0].ring(), rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int j = 0; j < b.cols(); ++j) out.set_column(off + j, b.column(j));
        off += b.cols();
    }
    return out;
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) throw InvalidArgument("vstack of nothing");
    int cols = blocks[0].cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack");
        rows += b.rows();
    }
    SparseMatrix out(blocks[0].ring(), rows, cols);
    for (int j = 0; j < cols; ++j) {
        SparseVec v;
        int off = 0;
        for (const auto& b : blocks) {
            for (const auto& e : b.column(j)) v.push_back({e.first + off, e.second});
            off += b.rows();
        }
        out.set_column(j, std::move(v));
    }
    return out;
}

SparseMatrix block_diag(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) throw InvalidArgument("block_diag of nothing");
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    SparseMatrix out(blocks[0].ring(), rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int j = 0; j < b.cols(); ++j) {
            SparseVec v;
            for (const auto& e : b.column(j)) v.push_back({e.first + ro, e.second});
            out.set_column(co + j, std::move(v));
        }
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

void sparse_axpy(const Ring& ring, SparseVec& v, const Scalar& c, const SparseVec& w) {
    if (c.is_zero() || w.empty()) return;
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(std::move(v[i++]));
        } else if (i == v.size() || w[j].first < v[i].first) {
            Scalar t = ring.mul(c, w[j].second);
            if (!t.is_zero()) out.push_back({w[j].first, std::move(t)});
            ++j;
        } else {
            Scalar t = ring.add(v[i].second, ring.mul(c, w[j].second));
            if (!t.is_zero()) out.push_back({v[i].first, std::move(t)});
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

SparseVec sparse_scale(const Ring& ring, const SparseVec& v, const Scalar& c) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& e : v) {
        Scalar t = ring.mul(e.second, c);
        if (!t.is_zero()) out.push_back({e.first, std::move(t)});
    }
    return out;
}

ColumnAccumulator::ColumnAccumulator(const Ring& ring, int rows)
    : ring_(&ring), vals_(rows), used_(rows, 0) {}

void ColumnAccumulator::add(int row, const Scalar& v) {
    if (v.is_zero()) return;
    if (!used_[row]) {
        used_[row] = 1;
        touched_.push_back(row);
        vals_[row] = v;
    } else {
        vals_[row] = ring_->add(vals_[row], v);
    }
}

void ColumnAccumulator::add_scaled(const SparseVec& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& e : v) add(e.first, ring_->mul(e.second, c));
}

SparseVec ColumnAccumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (int r : touched_) {
        if (!vals_[r].is_zero()) out.push_back({r, std::move(vals_[r])});
        vals_[r] = Scalar{};
        used_[r] = 0;
    }
    touched_.clear();
    return out;
}

MatrixBuilder::MatrixBuilder(const Ring& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), cols_data_(cols) {}

void MatrixBuilder::add(int row, int col, const Scalar& v) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw DimensionMismatch("builder index");
    if (!v.is_zero()) cols_data_[col].push_back({row, v});
}

void MatrixBuilder::add_block(int row0, int col0, const SparseMatrix& block, int sign) {
    for (int j = 0; j < block.cols(); ++j)
        for (const auto& [i, v] : block.column(j)) add(row0 + i, col0 + j, sign > 0 ? v : ring_.neg(v));
}

SparseMatrix MatrixBuilder::build() const {
    SparseMatrix out(ring_, rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
        SparseVec c = cols_data_[j];
        std::stable_sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec merged;
        for (auto& e : c) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second = ring_.add(merged.back().second, e.second);
            else
                merged.push_back(std::move(e));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second.is_zero(); }),
                     merged.end());
        out.set_column(j, std::move(merged));
    }
    return out;
}

}  // namespace khl

#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "khl/linalg.hpp"

namespace khl {

// C(s+t-1, t): number of degree-t monomials in s variables.
mpz_class monomial_count(int s, int t);

// Degree-t monomials, largest exponent of the first variable first
// (x^2, xy, y^2).
std::vector<Mono> monomials_of_degree(int nvars, int t);

// Base-field basis of the degree-t part of a graded free module:
// pairs (generator, monomial) with deg(monomial) = t - deg(generator).
class SliceBasis {
public:
    SliceBasis(const std::vector<int>& degrees, int nvars, int t);
    int size() const { return static_cast<int>(elems_.size()); }
    const std::pair<int, Mono>& at(int i) const { return elems_[i]; }
    int index_of(int gen, Mono m) const;  // -1 if absent
    // First index belonging to the given generator.
    int offset(int gen) const { return offsets_[gen]; }

    // Base-field coordinates of a module element x (one Scalar per generator);
    // only its degree-t homogeneous part is read.
    FVec coordinates(const std::vector<Scalar>& x) const;
    FVec coordinates(const SparseVec& x) const;
    // Inverse of coordinates: the element as a sparse vector over the ring.
    SparseVec element(const Ring& ring, const FVec& v) const;

private:
    int nvars_;
    int t_;
    std::vector<std::pair<int, Mono>> elems_;
    std::vector<int> offsets_;
    std::vector<int> gen_degree_;
    std::vector<std::unordered_map<Mono, int>> index_;
};

// Degree-t component of a homogeneous map between graded free modules.  The
// column of generator j (degree col_degrees[j]) must have entries of degree
// col_degrees[j] - row_degrees[i]; NonHomogeneousEntry otherwise.
SparseMatrix graded_slice(const SparseMatrix& m, const std::vector<int>& row_degrees,
                          const std::vector<int>& col_degrees, int t);

// Throws NonHomogeneousEntry unless each entry has the forced degree.
void check_homogeneous(const SparseMatrix& m, const std::vector<int>& row_degrees,
                       const std::vector<int>& col_degrees);

}  // namespace khl

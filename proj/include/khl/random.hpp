#pragma once

#include <cstdint>
#include <random>

#include "khl/complex.hpp"

namespace khl {

// Seeded generator with implementation-independent draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi);  // inclusive
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 eng_;
};

SparseMatrix random_matrix(Rng& rng, const Ring& ring, int rows, int cols, int bound = 9);
ModuleMap random_map(Rng& rng, const Module& dom, const Module& cod, int bound = 9);

// A random complex assembled from elementary pieces R (free) and R -a-> R,
// then conjugated by random invertible changes of basis.  The pieces are
// kept so the homology is known in advance.
struct RandomComplex {
    ChainComplex complex;
    std::vector<int> free_pieces;               // per degree
    std::vector<std::vector<mpz_class>> pairs;  // pairs[k]: multipliers of pieces R_k -> R_{k-1}
};

RandomComplex random_complex(Rng& rng, const Ring& ring, int max_len, int max_rank);

// Graded analogue: pieces R(-s) and R(-s-e) -g-> R(-s) with g homogeneous of degree e.
ChainComplex random_graded_complex(Rng& rng, const Ring& ring, int max_len, int max_rank);

// Chain maps α¹, α² between P -f-> Q and P' -f'-> Q' with
// α²_P = α¹_P + h f and α²_Q = α¹_Q + f' h.
struct HomotopyPair {
    ModuleMap f, f_target, h;
    ModuleMap a1_p, a1_q, a2_p, a2_q;
};

HomotopyPair homotopy_pair(Rng& rng, const Ring& ring, int max_rank);

}  // namespace khl

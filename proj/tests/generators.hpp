#pragma once

#include <random>

#include "khl/module.hpp"

namespace khl::testgen {

inline SparseMatrix random_matrix(std::mt19937& rng, const Ring& R, int rows, int cols, int bound = 9,
                                  int density = 2) {
    std::uniform_int_distribution<int> val(-bound, bound), keep(0, density);
    SparseMatrix m(R, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (keep(rng)) m.set(i, j, R.from_int(val(rng)));
    return m;
}

inline ModuleMap random_map(std::mt19937& rng, const Module& dom, const Module& cod, int bound = 9) {
    return {dom, cod, random_matrix(rng, dom->ring(), cod->rank(), dom->rank(), bound)};
}

inline int uniform(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace khl::testgen

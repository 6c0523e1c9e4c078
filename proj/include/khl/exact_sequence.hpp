#pragma once

#include <string>

#include "khl/complex.hpp"

namespace khl {

// One term of the long exact homology sequence of 0 -> A -> B -> C -> 0,
// at internal degree t (t = 0 for ungraded fields).
struct LesTerm {
    char which = 'A';  // 'A', 'B' or 'C'
    int k = 0;
    int t = 0;
    long dim = 0;
    long rank_in = 0, rank_out = 0;  // ranks of the incoming and outgoing maps
    bool composite_zero = true;
    bool exact() const { return composite_zero && rank_in + rank_out == dim; }
};

struct LongExactSequence {
    bool short_exact = false;  // degreewise: i injective, p surjective, Im i = Ker p
    std::vector<LesTerm> terms;  // ordered H_top(A), H_top(B), H_top(C), H_{top-1}(A), ...
    bool exact() const;
    // t -> dim of H_k of the named complex.
    std::map<int, long> hilbert(char which, int k) const;
    // First failure as text, empty when exact.
    std::string first_failure() const;
};

// Field coefficients only (NonFieldCoefficients); graded rings need the window.
// The connecting map is built by lifting through p, applying d and pulling back through i.
LongExactSequence long_exact_sequence(const ChainMap& i, const ChainMap& p, std::optional<int> window);

}  // namespace khl

#pragma once

#include "khl/complex.hpp"

namespace khl {

using Permutation = std::vector<int>;  // i -> perm[i], zero-based

Permutation compose_perm(const Permutation& a, const Permutation& b);  // a ∘ b
Permutation adjacent_transposition(int n, int i);  // swaps i and i+1
std::vector<int> cycle_type(const Permutation& p);  // descending
// One representative per conjugacy class of Σ_n, by descending partitions.
std::vector<Permutation> class_representatives(int n);

class EquivariantComplex {
public:
    EquivariantComplex(const ChainComplex& base, int n);

    const ChainComplex& complex() const { return complex_; }
    int n() const { return n_; }
    // Factor at position i moves to position perm[i], with the Koszul sign.
    ModuleMap action(const Permutation& perm, int k) const;
    ModuleMap generator(int i, int k) const { return action(adjacent_transposition(n_, i), k); }
    // Composition (p_1..p_n) of the block holding basis element j of degree k.
    const std::vector<int>& composition_of(int k, int j) const;

private:
    struct Block {
        std::vector<int> comp;
        int offset;
        int size;
    };
    ChainComplex base_;
    ChainComplex complex_;
    int n_;
    std::vector<std::vector<Block>> blocks_;
    std::vector<std::vector<int>> block_of_;
    int find_block(int k, const std::vector<int>& comp) const;
};

// P.^{⊗n} with d = Σ_j (-1)^{p_1+..+p_{j-1}} id⊗..⊗d⊗..⊗id.
EquivariantComplex tensor_power_equivariant(const ChainComplex& p, int n);

// Exact relation checks: every action map is a chain map and the Coxeter
// relations hold in every degree.
bool check_equivariance(const EquivariantComplex& e);

struct CharacterValue {
    mpq_class total;                 // summed over the window
    std::map<int, mpq_class> by_degree;  // graded case: t -> trace
};

// NonFieldCoefficients over the integers.
CharacterValue character_on_homology(const EquivariantComplex& e, const Permutation& sigma, int k,
                                     std::optional<int> window = std::nullopt);

// r^{#cycles} · tr(σ on Λ^k((I/I²) ⊗ K_n)) with I/I² free of rank d.
mpq_class predicted_character(int v_rank, int d, int n, int k, const std::vector<int>& cycle_type);
// tr Λ^k from power-sum traces p_j = tr(σ^j), j = 1..k.
mpq_class exterior_trace(int k, const std::vector<mpq_class>& power_traces);

struct KnModule {
    int n;
    Module module;            // basis e_i - e_n, i < n
    ModuleMap inclusion;      // into R[I_n]
    ModuleMap sum;            // R[I_n] -> R
    ModuleMap action(const Permutation& p) const;
    ModuleMap permutation_action(const Permutation& p) const;  // on R[I_n]
};

KnModule kn_module(const Ring& ring, int n);

}  // namespace khl

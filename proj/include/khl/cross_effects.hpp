#pragma once

#include "khl/functors.hpp"

namespace khl {

// cr_k(F)(V_1..V_k) as the image of the alternating projection operator on
// F(V_1 ⊕ .. ⊕ V_k).
struct CrossEffect {
    FunctorTag functor;
    std::vector<Module> args;
    DirectSum sum;          // V_1 ⊕ .. ⊕ V_k
    FunctorModule ambient;  // F of the sum
    Module module;
    ModuleMap include, project;
    std::vector<int> coords;  // ambient words spanning the image
};

// Σ_j (-1)^{k-j} Σ_{|S|=j} F(p_S) on F(V_1 ⊕ .. ⊕ V_k).
ModuleMap cross_effect_operator(FunctorTag f, const std::vector<Module>& args);
CrossEffect cross_effect(FunctorTag f, const std::vector<Module>& args);
// cr_k(F)(f_1..f_k) between two cross effects of the same arity.
ModuleMap cross_effect_map(const CrossEffect& src, const CrossEffect& dst, const std::vector<ModuleMap>& maps);

struct CrossEffectSummand {
    std::vector<int> subset;  // zero-based argument indices
    CrossEffect piece;
    ModuleMap inj, proj;      // into and out of F(V_1 ⊕ .. ⊕ V_l)
};

// F(V_1 ⊕ .. ⊕ V_l) ≅ ⊕_S cr_|S|(F)(V_S), subsets in lexicographic order.
std::vector<CrossEffectSummand> decompose(FunctorTag f, const std::vector<Module>& args);

// Δ_ε: cr_k(F)(V_1..V_k) -> cr_l(F)(V_1^{ε_1}, .., V_k^{ε_k}) and the plus map back.
ModuleMap diagonal_map(FunctorTag f, const std::vector<int>& eps, const std::vector<Module>& args);
ModuleMap plus_map(FunctorTag f, const std::vector<int>& eps, const std::vector<Module>& args);

// Σ_k on cr_k(F)(V, .., V): argument j moves to position perm[j].
ModuleMap cross_effect_action(FunctorTag f, const Module& v, const std::vector<int>& perm);

// True when cr_{k+1}(F) vanishes on free modules of rank probe_rank.
bool functor_degree_probe(FunctorTag f, int k, int probe_rank, const Ring& ring);

// ε ∈ {1..l}^k with |ε| = l, lexicographic.
std::vector<std::vector<int>> compositions(int l, int k);

// Hypotheses of the characterization results, on the base ring A = R.
// plus_i: ⊕_ε cr_d(F)(A..A) -> cr_i(F)(A..A) and diag_i in the other direction.
ModuleMap plus_i(FunctorTag f, int i, const Ring& ring);
ModuleMap diag_i(FunctorTag f, int i, const Ring& ring);
// The d A-module structures a -> cr_d(F)(1,..,a,..,1) on cr_d(F)(A..A) agree for this a.
bool module_structures_coincide(FunctorTag f, int d, const Ring& ring, const Scalar& a);

}  // namespace khl

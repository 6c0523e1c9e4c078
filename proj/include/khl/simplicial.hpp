#pragma once

#include "khl/cross_effects.hpp"
#include "khl/koszul.hpp"

namespace khl {

// Levels X_0..X_L with faces and degeneracies between them.
struct TruncatedSimplicialModule {
    Ring ring;
    std::vector<Module> levels;
    std::vector<std::vector<ModuleMap>> faces;         // faces[n][i]: X_n -> X_{n-1}, empty for n = 0
    std::vector<std::vector<ModuleMap>> degeneracies;  // degeneracies[n][i]: X_n -> X_{n+1}, n < L
    int level_bound() const { return static_cast<int>(levels.size()) - 1; }
};

// Surjections [n] -> [k] by the k-subsets of {1..n} where they step up, lexicographic.
std::vector<std::vector<int>> step_sets(int n, int k);

// Γ(C)_n = ⊕_k ⊕_{S} C_k, blocks ordered by k, then S.
TruncatedSimplicialModule gamma(const ChainComplex& c, int level_bound);
// Γ(α) levelwise.
std::vector<ModuleMap> gamma_map(const ChainMap& alpha, int level_bound);

TruncatedSimplicialModule apply_functor_levelwise(FunctorTag f, const TruncatedSimplicialModule& x);

// First violated simplicial identity, e.g. "d0 d2 = d1 d0 at level 2".
std::optional<std::string> simplicial_identities_check(const TruncatedSimplicialModule& x);

struct Normalization {
    ChainComplex complex;
    std::vector<ModuleMap> quotient;  // X_n -> N_n
    std::vector<ModuleMap> lift;      // N_n -> X_n
};

// X_n / Σ Im(s_i) with ∂ = Σ (-1)^i d_i.  DegeneracySpanNotSplit when a
// degeneracy span is not a direct summand.
Normalization normalize(const TruncatedSimplicialModule& x);

// N F Γ(C), truncated at n·len(C): only words whose letters step at every
// position of {1..n} survive at level n.
struct NfgData {
    ChainComplex complex;
    int level_bound = 0;                   // n·len(C) + 1
    std::vector<FunctorModule> ambient;    // F(Γ(C)_n)
    std::vector<std::vector<int>> words;   // per level: ambient indices of the basis
};

NfgData nfg_data(const ChainComplex& c, FunctorTag f);
ChainComplex nfg(const ChainComplex& c, FunctorTag f);
// normalize(apply_functor_levelwise(f, gamma(c, L))) with the top level checked and dropped.
ChainComplex nfg_generic(const ChainComplex& c, FunctorTag f);
ChainMap nfg_map(const ChainMap& alpha, FunctorTag f);
// N η Γ(C) for a natural transformation η: F -> G of functors of equal degree,
// given by its component at each module.
ChainMap nfg_natural_map(const ChainComplex& c, FunctorTag from, FunctorTag to,
                         const std::function<ModuleMap(const Module&)>& eta);

// Degree n = cr_n(F)(P..P) ⊕ cr_{n+1}(F)(Q,P..P), degree 0 = F(Q).
ChainComplex lemma22_complex(const ModuleMap& f, FunctorTag F);
// The coordinate identification with nfg(map_complex(f), F).
ChainMap lemma22_comparison(const ModuleMap& f, FunctorTag F);

// u^n(f): Kos^n(f) -> N Sym^n Γ(P -> Q) via antisymmetrization into the blocks of Γ.
ChainMap comparison_u(const ModuleMap& f, int n);

}  // namespace khl

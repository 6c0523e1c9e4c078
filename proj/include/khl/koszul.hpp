#pragma once

#include "khl/complex.hpp"

namespace khl {

// Kos^n(f)_k = Λ^k(P) ⊗ Sym^{n-k}(Q) for f: P -> Q.
ChainComplex koszul_complex(const ModuleMap& f, int n);
// Degree k = D^k(P) ⊗ Λ^{n-k}(Q).
ChainComplex dual_koszul_complex(const ModuleMap& f, int n);
// Kos^n(α) for a commutative square α_Q f = f' α_P.
ChainMap koszul_chain_map(const ModuleMap& f, const ModuleMap& f2, const ModuleMap& alpha_p,
                          const ModuleMap& alpha_q, int n);

struct Submodule {
    Module module;
    ModuleMap inclusion;
};

// Column span with a basis of pivot columns (integers: falls back to a
// Smith basis when the pivot columns miss part of the span).
Submodule image_submodule(const ModuleMap& d);
// L_k^n(V) = Im(d_{k+1}) in Kos^n(id_V).
Submodule schur_module(const Module& v, int n, int k);
// Im(d_{k+1}) in the dual Koszul complex of id_V.
Submodule coschur_module(const Module& v, int n, int k);

enum class IdealKind { PrincipalNZD, GradedCI };

struct ConormalData {
    Ring ring;
    IdealKind kind = IdealKind::PrincipalNZD;
    std::vector<Scalar> generators;
    // Basis of I/I²: one element per generator, carrying its degree.
    Module conormal;
    int rank() const { return static_cast<int>(generators.size()); }
};

// Validates the ideal (UnsupportedIdeal / NonHomogeneousEntry on failure).
ConormalData conormal_data(const Ring& ring, const std::vector<Scalar>& generators);
ConormalData conormal_data(const Ring& ring, const std::vector<std::string>& generators);
// Kos^d(ε) for ε: ⊕ R(-deg g_i) -> R, a resolution of R/I.
ChainComplex koszul_resolution(const ConormalData& ideal);

struct ResolutionData {
    ConormalData ideal;
    int rank = 0;  // V = (R/I)^rank
    ChainComplex complex;
    // f: P_1 -> P_0 when the resolution has length one.
    ModuleMap map() const { return complex.d(1); }
};

ResolutionData resolution_for(const ConormalData& ideal, int rank);
// H_0 = V and H_k = 0 above, on the window for graded rings.
bool check_resolution(const ResolutionData& res, std::optional<int> window = std::nullopt);
// The homology descriptor of (R/I)^rank, shifted to internal degree s.
HomologyDegree quotient_homology(const ConormalData& ideal, long rank, int s, std::optional<int> window);

// Witness cycles for a principal ideal (g): word has n indices into the basis of V,
// multipliers c_j give r_j = c_j g.
struct WitnessDatum {
    std::vector<int> word;
    std::vector<Scalar> multipliers;
};
SparseVec thm32_witness(const ResolutionData& res, int n, int k, const WitnessDatum& datum);
// All witnesses with c = 1 over the generators d_{k+1}(basis) of L_k^n(V).
std::vector<WitnessDatum> witness_data(int rank, int n, int k, const Ring& ring);
// Whether the given cycles generate H_k (as R-module; graded: on the window).
bool cycles_generate(const HomologyAt& h, const std::vector<SparseVec>& cycles);
// I H_k = 0 for I = (g_1..g_d).
bool killed_by_ideal(const HomologyAt& h, const ConormalData& ideal);

// H_k(Kos^n(f)) predicted as L_k^n(V) ⊗ (I/I²)^{⊗k}; `dual` uses coSchur modules.
HomologyDegree predicted_koszul_homology(const ConormalData& ideal, int rank, int n, int k,
                                         std::optional<int> window, bool dual = false);

}  // namespace khl

#pragma once

#include <map>
#include <optional>

#include "khl/functors.hpp"
#include "khl/linalg.hpp"

namespace khl {

class ChainComplex {
public:
    ChainComplex() = default;
    // diffs[k-1] is d_k: C_k -> C_{k-1}, k = 1..len.
    ChainComplex(Ring ring, std::vector<Module> modules, std::vector<ModuleMap> diffs);

    const Ring& ring() const { return ring_; }
    int length() const { return static_cast<int>(modules_.size()) - 1; }  // top degree
    int size() const { return static_cast<int>(modules_.size()); }
    // Zero module outside 0..length.
    const Module& module(int k) const;
    int rank(int k) const { return module(k)->rank(); }
    // d_k: C_k -> C_{k-1}; zero outside 1..length.
    ModuleMap d(int k) const;
    const std::vector<Module>& modules() const { return modules_; }

private:
    Ring ring_;
    std::vector<Module> modules_;
    std::vector<ModuleMap> diffs_;
    Module zero_;
};

// Validates shapes and d_k d_{k+1} = 0 (NotAComplex(k) otherwise).
ChainComplex make_complex(std::vector<Module> modules, std::vector<ModuleMap> diffs);
ChainComplex make_complex(const Ring& ring, std::vector<Module> modules, std::vector<ModuleMap> diffs);
// Two-term complex P -> Q with Q in degree 0.
ChainComplex map_complex(const ModuleMap& f);
// V placed in degree k.
ChainComplex concentrated(const Module& v, int k = 0);
// Degree j of C moves to degree j + k.
ChainComplex shift(const ChainComplex& c, int k);

// Degreewise direct sum.
ChainComplex direct_sum_complex(const Ring& ring, const std::vector<ChainComplex>& parts);

struct TensorComplex {
    ChainComplex complex;
    // blocks[m] lists (p, offset) for the summands K_p ⊗ L_{m-p} of degree m.
    std::vector<std::vector<std::pair<int, int>>> blocks;
};

// d(x⊗y) = dx⊗y + (-1)^p x⊗dy on K_p ⊗ L_q.
TensorComplex total_tensor(const ChainComplex& k, const ChainComplex& l);

struct ChainMap {
    ChainComplex src, dst;
    std::vector<ModuleMap> maps;  // maps[k]: src_k -> dst_k
    ModuleMap at(int k) const;
};

// Throws NotChainMap unless f d = d f in every degree.
ChainMap make_chain_map(const ChainComplex& src, const ChainComplex& dst, std::vector<ModuleMap> maps);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_chain_map(const ChainComplex& c);
bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, const std::vector<ModuleMap>& maps);

// Homology descriptors ----------------------------------------------------

struct HomologyDegree {
    std::vector<mpz_class> torsion;  // invariant factors above 1 (integers)
    int free_rank = 0;               // integers
    long dim = 0;                    // fields
    std::map<int, long> hilbert;     // graded: t -> dim, over the window
    bool operator==(const HomologyDegree& o) const {
        return torsion == o.torsion && free_rank == o.free_rank && dim == o.dim && hilbert == o.hilbert;
    }
    bool is_zero() const;
};

struct HomologyDescriptor {
    RingKind kind = RingKind::Integers;
    int window = -1;
    std::vector<HomologyDegree> degrees;
    const HomologyDegree& at(int k) const;
    bool operator==(const HomologyDescriptor& o) const;
    std::string str(int k) const;
    std::string str() const;
};

HomologyDescriptor homology(const ChainComplex& c, std::optional<int> window = std::nullopt);

// Base-field matrix of the degree-t part (t ignored for ungraded field rings).
SparseMatrix field_slice(const ModuleMap& f, int t);
int slice_dim(const Module& v, int t);

// Homology at one degree with explicit generators and coordinates --------

class FieldHomologySlice {
public:
    // d_out: C_k -> C_{k-1}, d_in: C_{k+1} -> C_k, as base-field matrices.
    FieldHomologySlice(long p, const SparseMatrix& d_out, const SparseMatrix& d_in);
    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<FVec>& reps() const { return reps_; }
    // Coordinates of the class of a cycle (NotACycle if z is not one).
    std::vector<mpq_class> coords(const FVec& z) const;
    bool is_boundary(const FVec& z) const;

private:
    long p_;
    SparseMatrix d_out_;
    int nb_ = 0;
    std::vector<FVec> reps_;
    FieldEchelon boundary_ech_;
    FieldEchelon ech_;
};

class HomologyAt {
public:
    // window is required for graded rings; t ranges over 0..window.
    HomologyAt(const ChainComplex& c, int k, std::optional<int> window = std::nullopt);

    RingKind kind() const { return kind_; }
    int degree() const { return k_; }
    // Integers: generators of the nontrivial cyclic summands, order 0 = free.
    const std::vector<SparseVec>& z_generators() const { return z_gens_; }
    const std::vector<mpz_class>& z_orders() const { return z_orders_; }
    std::vector<mpz_class> z_coords(const SparseVec& cycle) const;
    // Field / graded slices (ungraded fields use the single slice t = 0).
    const std::map<int, FieldHomologySlice>& slices() const { return slices_; }
    std::vector<int> slice_degrees() const;
    int window() const { return window_; }
    const ChainComplex& complex() const { return c_; }
    // Ring element of a slice representative.
    SparseVec slice_element(int t, const FVec& v) const;
    FVec slice_coordinates(int t, const SparseVec& x) const;

private:
    ChainComplex c_;
    int k_;
    RingKind kind_;
    int window_ = 0;
    // integers
    SparseMatrix zV_;
    int zrank_ = 0;
    SparseMatrix zUinv_;
    std::vector<int> zkeep_;
    std::vector<SparseVec> z_gens_;
    std::vector<mpz_class> z_orders_;
    // fields
    std::map<int, FieldHomologySlice> slices_;
};

struct HomologyMap {
    RingKind kind = RingKind::Integers;
    std::vector<std::vector<mpz_class>> z;  // rows: target generators, entries reduced mod order
    std::map<int, SparseMatrix> slices;     // t -> base-field matrix
    bool operator==(const HomologyMap& o) const { return z == o.z && slices == o.slices; }
};

HomologyMap induced_map(const HomologyAt& src, const HomologyAt& dst, const ModuleMap& f);
bool is_isomorphism(const HomologyMap& m, const HomologyAt& src, const HomologyAt& dst);
mpq_class slice_trace(const HomologyMap& m, int t);

// Euler characteristics -------------------------------------------------

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const mpz_class& c);
    static LaurentPoly monomial(int e, const mpz_class& c = 1);
    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(int e) const;
    void add_term(int e, const mpz_class& c);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const mpz_class& c) const;
    // T -> T^k
    LaurentPoly adams(int k) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

private:
    std::map<int, mpz_class> terms_;
};

LaurentPoly module_class(const Module& v);
LaurentPoly euler_class(const ChainComplex& c);
// n σ_n = Σ_{i=1}^n ψ_i σ_{n-i}, with ψ_i(T^a) = T^{ia}.
LaurentPoly sigma_of_class(int n, const LaurentPoly& c);
// Hilbert function on 0..window of the class of a graded free module over s variables.
std::map<int, mpz_class> hilbert_of_class(const LaurentPoly& c, int s, int window);

}  // namespace khl

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "khl/graded.hpp"

namespace khl {

enum class LabelKind { Atom, Tuple, Multiset, Wedge, Gamma, Summand };

struct LabelNode;
using Label = std::shared_ptr<const LabelNode>;

struct LabelNode {
    LabelKind kind = LabelKind::Atom;
    std::string name;          // Atom
    std::vector<Label> parts;  // Tuple / Multiset / Wedge / Gamma (one part) / Summand (one part)
    int index = 0;             // Gamma: k; Summand: summand number
    std::vector<int> steps;    // Gamma: step set of the surjection
};

Label atom(const std::string& name);
Label tuple_label(std::vector<Label> parts);
Label multiset_label(std::vector<Label> parts);
Label wedge_label(std::vector<Label> parts);
Label gamma_label(int k, std::vector<int> steps, Label inner);
Label summand_label(int i, Label inner);
std::string label_str(const Label& l);
bool label_equal(const Label& a, const Label& b);

class BasedFreeModule {
public:
    BasedFreeModule(Ring ring, std::vector<Label> basis, std::vector<int> degrees = {});

    const Ring& ring() const { return ring_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Label>& basis() const { return basis_; }
    const Label& label(int i) const { return basis_[i]; }
    // Internal degrees; all zero for ungraded rings.
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int i) const { return degrees_[i]; }
    bool graded() const { return ring_.is_graded(); }
    // Full distinctness check of the labels.
    void validate() const;

private:
    Ring ring_;
    std::vector<Label> basis_;
    std::vector<int> degrees_;
};

using Module = std::shared_ptr<const BasedFreeModule>;

Module make_module(Ring ring, std::vector<Label> basis, std::vector<int> degrees = {});
// Basis e1..er (or prefix1..), with optional internal degrees.
Module free_module(const Ring& ring, int rank, const std::string& prefix = "e",
                   std::vector<int> degrees = {});
Module zero_module(const Ring& ring);
// Same basis with every degree raised by s.
Module twist(const Module& v, int s);
bool same_shape(const Module& a, const Module& b);

class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(Module dom, Module cod, SparseMatrix matrix);

    const Module& dom() const { return dom_; }
    const Module& cod() const { return cod_; }
    const SparseMatrix& matrix() const { return matrix_; }
    const Ring& ring() const { return dom_->ring(); }

    ModuleMap operator*(const ModuleMap& o) const;  // composition this ∘ o
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap scaled(const Scalar& s) const;
    bool operator==(const ModuleMap& o) const { return matrix_ == o.matrix_; }
    bool operator!=(const ModuleMap& o) const { return !(*this == o); }

private:
    Module dom_, cod_;
    SparseMatrix matrix_;
};

ModuleMap identity_map(const Module& v);
ModuleMap zero_map(const Module& dom, const Module& cod);
// Map given by integer entries (rows index the codomain).
ModuleMap map_from_ints(const Module& dom, const Module& cod, const std::vector<std::vector<long>>& rows);

struct DirectSum {
    Module sum;
    std::vector<ModuleMap> inj, proj;
};

DirectSum direct_sum(const std::vector<Module>& parts);
DirectSum direct_sum(const Ring& ring, const std::vector<Module>& parts);
ModuleMap direct_sum_map(const std::vector<ModuleMap>& maps);

// Basis of V ⊗ W ordered (i, j) with j fastest.
Module tensor_product(const Module& a, const Module& b);
ModuleMap tensor_map(const ModuleMap& f, const ModuleMap& g);  // between the tensor products

}  // namespace khl

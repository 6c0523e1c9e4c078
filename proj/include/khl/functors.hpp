#pragma once

#include <functional>
#include <unordered_map>

#include "khl/module.hpp"

namespace khl {

enum class FunctorKind { Sym, Ext, Div, Tensor };

struct FunctorTag {
    FunctorKind kind = FunctorKind::Sym;
    int n = 1;

    static FunctorTag sym(int n) { return {FunctorKind::Sym, n}; }
    static FunctorTag ext(int n) { return {FunctorKind::Ext, n}; }
    static FunctorTag div(int n) { return {FunctorKind::Div, n}; }
    static FunctorTag tensor(int n) { return {FunctorKind::Tensor, n}; }
    // "Sym2", "Ext3", "Div2", "T2"
    static FunctorTag parse(const std::string& s);
    std::string name() const;
    bool operator==(const FunctorTag& o) const { return kind == o.kind && n == o.n; }
};

// A basis element of F(V) as a word in basis indices of V: nondecreasing for
// Sym and Div, increasing for Ext, arbitrary for Tensor.
using Word = std::vector<int>;

struct WordHash {
    size_t operator()(const Word& w) const noexcept {
        size_t h = 1469598103934665603ull;
        for (int x : w) h = (h ^ static_cast<size_t>(x + 1)) * 1099511628211ull;
        return h;
    }
};

// Words in lexicographic order.
std::vector<Word> functor_words(FunctorTag f, int rank);
mpz_class functor_rank(FunctorTag f, int rank);

class WordIndex {
public:
    WordIndex() = default;
    explicit WordIndex(const std::vector<Word>& words);
    int find(const Word& w) const;  // -1 if absent
    int size() const { return static_cast<int>(index_.size()); }

private:
    std::unordered_map<Word, int, WordHash> index_;
};

// Image of the basis element `src` under F(φ), where col(v) is the column of φ
// at basis index v.  The callback receives each target word with its
// coefficient (words may repeat; callers accumulate).
void expand_word(FunctorTag f, const Ring& ring, const Word& src,
                 const std::function<const SparseVec&(int)>& col,
                 const std::function<void(const Word&, const Scalar&)>& emit);

// Same, accumulated and indexed by a target word index.
SparseVec apply_word(FunctorTag f, const Ring& ring, const Word& src,
                     const std::function<const SparseVec&(int)>& col, const WordIndex& target);

struct FunctorModule {
    Module module;
    std::vector<Word> words;
    WordIndex index;
};

FunctorModule functor_module(FunctorTag f, const Module& v);
Module apply_functor_object(FunctorTag f, const Module& v);
ModuleMap apply_functor_map(FunctorTag f, const ModuleMap& phi);
// Variant reusing already-built source and target functor modules.
ModuleMap apply_functor_map(FunctorTag f, const ModuleMap& phi, const FunctorModule& src,
                            const FunctorModule& dst);

// Natural maps between the power functors of one module.
ModuleMap div_to_tensor(const Module& v, int n);   // orbit sums
ModuleMap sym_to_tensor(const Module& v, int n);   // orbit sums, read on Sym
ModuleMap tensor_to_sym(const Module& v, int n);   // multiplication
ModuleMap tensor_to_ext(const Module& v, int n);   // multiplication
ModuleMap ext_to_tensor(const Module& v, int n);   // antisymmetrization
// Σ_n on T^n(V): factor j of the source goes to position perm[j].
ModuleMap tensor_permutation(const Module& v, const std::vector<int>& perm);

// Multiplication F^a(V) ⊗ F^b(V) -> F^{a+b}(V) for F = Sym or Ext.
ModuleMap power_multiply(FunctorKind kind, const Module& v, int a, int b);

int permutation_sign(std::vector<int> p);

}  // namespace khl

#include <numeric>

#include "doctest.h"
#include "khl/cross_effects.hpp"
#include "khl/equivariant.hpp"

using namespace khl;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<FunctorTag>& sample_functors() {
    static const std::vector<FunctorTag> fs{FunctorTag::sym(2), FunctorTag::sym(3), FunctorTag::ext(2),
                                            FunctorTag::ext(3), FunctorTag::div(2), FunctorTag::div(3),
                                            FunctorTag::tensor(2), FunctorTag::tensor(3)};
    return fs;
}

// Image of cross-effect basis element j, written in the ambient words.
std::map<Word, Scalar> in_words(const CrossEffect& ce, const SparseVec& x) {
    std::map<Word, Scalar> out;
    for (const auto& [row, s] : ce.include.matrix().apply(x)) out[ce.ambient.words[row]] = s;
    return out;
}

SparseVec basis_vec(const CrossEffect& ce, const Word& w) {
    int amb = ce.ambient.index.find(w);
    REQUIRE(amb >= 0);
    return ce.project.matrix().apply(SparseVec{{amb, ce.include.ring().one()}});
}

bool unimodular_square(const SparseMatrix& m) {
    if (m.rows() != m.cols()) return false;
    auto snf = smith_normal_form(m);
    if (snf.rank != m.rows()) return false;
    return std::all_of(snf.factors.begin(), snf.factors.end(), [](const mpz_class& x) { return x == 1; });
}

}  // namespace

TEST_CASE("cross effects split off their defining operator") {
    Ring Z = Ring::integers();
    for (const auto& f : sample_functors())
        for (int k = 1; k <= 3; ++k) {
            std::vector<Module> args;
            for (int i = 0; i < k; ++i) args.push_back(free_module(Z, 1 + (i % 2), "v" + std::to_string(i)));
            auto ce = cross_effect(f, args);
            auto op = cross_effect_operator(f, args);
            CAPTURE(f.name());
            CAPTURE(k);
            CHECK(ce.project * ce.include == identity_map(ce.module));
            CHECK(ce.include * ce.project == op);
            CHECK(op * op == op);
        }
}

TEST_CASE("first and higher cross effects") {
    Ring Z = Ring::integers(), Q = Ring::rationals();
    for (const auto& f : sample_functors()) {
        auto V = free_module(Z, 3);
        auto ce = cross_effect(f, {V});
        CHECK(ce.module->rank() == apply_functor_object(f, V)->rank());
        CHECK(ce.include.matrix() == SparseMatrix::identity(Z, ce.module->rank()));
    }
    auto A = free_module(Q, 1);
    CHECK(cross_effect(FunctorTag::sym(2), {A, A}).module->rank() == 1);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                CHECK(cross_effect(FunctorTag::sym(2), {free_module(Q, a), free_module(Q, b), free_module(Q, c)})
                          .module->rank() == 0);
    // cr_k(Sym^n) on free modules of ranks r_i has rank Σ over n = Σ n_i, n_i ≥ 1, of Π C(r_i + n_i - 1, n_i)
    const std::vector<int> ranks{1, 2, 3};
    for (int n = 1; n <= 4; ++n) {
        long expected = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; a + b <= n; ++b) {
                int c = n - a - b;
                if (c < 1) continue;
                expected += binom(ranks[0] + a - 1, a) * binom(ranks[1] + b - 1, b) * binom(ranks[2] + c - 1, c);
            }
        std::vector<Module> args;
        for (int r : ranks) args.push_back(free_module(Z, r));
        CHECK(cross_effect(FunctorTag::sym(n), args).module->rank() == expected);
    }
}

TEST_CASE("cross effects vanish on a zero argument") {
    Ring Z = Ring::integers();
    for (const auto& f : sample_functors())
        for (int pos = 0; pos < 2; ++pos) {
            std::vector<Module> args{free_module(Z, 2), free_module(Z, 2)};
            args[pos] = zero_module(Z);
            CHECK(cross_effect(f, args).module->rank() == 0);
        }
}

TEST_CASE("decomposition into cross effects") {
    Ring Z = Ring::integers();
    auto A = free_module(Z, 1);
    auto sym = decompose(FunctorTag::sym(2), {A, A});
    REQUIRE(sym.size() == 3);
    for (const auto& s : sym) CHECK(s.piece.module->rank() == 1);
    CHECK(sym[0].subset == std::vector<int>{0});
    CHECK(sym[1].subset == std::vector<int>{0, 1});
    CHECK(sym[2].subset == std::vector<int>{1});

    for (int v = 1; v <= 3; ++v)
        for (int w = 1; w <= 3; ++w) {
            auto V = free_module(Z, v, "v"), W = free_module(Z, w, "w");
            auto ext = decompose(FunctorTag::ext(2), {V, W});
            REQUIRE(ext.size() == 3);
            CHECK(ext[0].piece.module->rank() == binom(v, 2));
            CHECK(ext[1].piece.module->rank() == v * w);
            CHECK(ext[2].piece.module->rank() == binom(w, 2));
            auto t = decompose(FunctorTag::tensor(2), {V, W});
            CHECK(t[0].piece.module->rank() == v * v);
            CHECK(t[1].piece.module->rank() == 2 * v * w);
            CHECK(t[2].piece.module->rank() == w * w);
        }

    auto three = decompose(FunctorTag::sym(3), {free_module(Z, 1), free_module(Z, 2), free_module(Z, 1)});
    std::vector<std::vector<int>> order;
    for (const auto& s : three) order.push_back(s.subset);
    CHECK(order == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}});

    for (const auto& f : sample_functors()) {
        std::vector<Module> args{free_module(Z, 2), free_module(Z, 1), free_module(Z, 2)};
        auto parts = decompose(f, args);
        const int n = apply_functor_object(f, direct_sum(args).sum)->rank();
        SparseMatrix total(Z, n, n);
        for (size_t i = 0; i < parts.size(); ++i) {
            total = total + (parts[i].inj * parts[i].proj).matrix();
            for (size_t j = 0; j < parts.size(); ++j) {
                auto pi = parts[i].proj * parts[j].inj;
                if (i == j) CHECK(pi == identity_map(parts[i].piece.module));
                else CHECK(pi.matrix().is_zero());
            }
        }
        CAPTURE(f.name());
        CHECK(total == SparseMatrix::identity(Z, n));
    }
}

TEST_CASE("diagonal maps of symmetric powers") {
    Ring Z = Ring::integers();
    auto V = free_module(Z, 2, "v");
    // v1 v2 -> v1 ⊗ v2 + v2 ⊗ v1 inside Sym^2(V ⊕ V)
    auto src = cross_effect(FunctorTag::sym(2), {V});
    auto dst = cross_effect(FunctorTag::sym(2), {V, V});
    auto delta = diagonal_map(FunctorTag::sym(2), {2}, {V});
    auto image = in_words(dst, delta.matrix().apply(basis_vec(src, {0, 1})));
    CHECK(image == std::map<Word, Scalar>{{{0, 3}, Z.one()}, {{1, 2}, Z.one()}});

    auto W = free_module(Z, 3, "w");
    auto src3 = cross_effect(FunctorTag::sym(3), {W});
    auto dst3 = cross_effect(FunctorTag::sym(3), {W, W, W});
    auto d3 = diagonal_map(FunctorTag::sym(3), {3}, {W});
    auto image3 = in_words(dst3, d3.matrix().apply(basis_vec(src3, {0, 1, 2})));
    std::map<Word, Scalar> expected;
    std::vector<int> perm{0, 1, 2};
    do {
        expected[{perm[0], 3 + perm[1], 6 + perm[2]}] = Z.one();
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(image3.size() == 6);
    CHECK(image3 == expected);
}

TEST_CASE("diagonal maps of tensor powers are 0/1") {
    Ring Z = Ring::integers();
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& eps : compositions(n, k)) {
                std::vector<Module> args;
                for (int i = 0; i < k; ++i) args.push_back(free_module(Z, 2));
                auto d = diagonal_map(FunctorTag::tensor(n), eps, args);
                for (int j = 0; j < d.matrix().cols(); ++j)
                    for (const auto& [row, s] : d.matrix().column(j)) CHECK(s == Z.one());
            }
}

TEST_CASE("plus maps of symmetric powers") {
    Ring Z = Ring::integers();
    auto V = free_module(Z, 2, "v");
    auto src = cross_effect(FunctorTag::sym(2), {V, V});
    auto dst = cross_effect(FunctorTag::sym(2), {V});
    auto plus = plus_map(FunctorTag::sym(2), {2}, {V});
    CHECK(in_words(dst, plus.matrix().apply(basis_vec(src, {0, 3}))) == std::map<Word, Scalar>{{{0, 1}, Z.one()}});
    CHECK(in_words(dst, plus.matrix().apply(basis_vec(src, {1, 3}))) == std::map<Word, Scalar>{{{1, 1}, Z.one()}});

    // v1 ⊗ v2 ⊗ w -> (v1 v2 ⊗ w, 0)
    auto A = free_module(Z, 1, "v"), B = free_module(Z, 1, "w");
    auto src3 = cross_effect(FunctorTag::sym(3), {A, A, B});
    auto dst3 = cross_effect(FunctorTag::sym(3), {A, B});
    auto p3 = plus_map(FunctorTag::sym(3), {2, 1}, {A, B});
    CHECK(in_words(dst3, p3.matrix().apply(basis_vec(src3, {0, 1, 2}))) ==
          std::map<Word, Scalar>{{{0, 0, 1}, Z.one()}});
}

TEST_CASE("plus after diagonal") {
    Ring Z = Ring::integers();
    for (const auto& f : sample_functors())
        for (int r = 1; r <= 2; ++r) {
            auto V = free_module(Z, r);
            auto comp = plus_map(f, {2}, {V}) * diagonal_map(f, {2}, {V});
            auto two = apply_functor_map(f, identity_map(V).scaled(Z.from_int(2)));
            CAPTURE(f.name());
            CHECK(comp.matrix() == two.matrix() - SparseMatrix::identity(Z, two.matrix().rows()).scaled(Z.from_int(2)));
        }
    auto A = free_module(Z, 1);
    auto c = plus_map(FunctorTag::sym(2), {2}, {A}) * diagonal_map(FunctorTag::sym(2), {2}, {A});
    CHECK(c.matrix() == SparseMatrix::from_ints(Z, {{2}}));
}

TEST_CASE("functor degree probes") {
    Ring Z = Ring::integers();
    for (int n = 1; n <= 3; ++n)
        for (auto f : {FunctorTag::sym(n), FunctorTag::ext(n), FunctorTag::div(n), FunctorTag::tensor(n)})
            for (int r = 1; r <= 2; ++r) {
                CAPTURE(f.name());
                CHECK(functor_degree_probe(f, n, r, Z));
                CHECK_FALSE(functor_degree_probe(f, n - 1, r, Z));
            }
}

TEST_CASE("symmetric group action on cross effects") {
    Ring Z = Ring::integers();
    auto V = free_module(Z, 2);
    for (auto f : {FunctorTag::sym(3), FunctorTag::ext(3), FunctorTag::tensor(3), FunctorTag::div(3)}) {
        auto ce = cross_effect(f, {V, V, V});
        auto I = identity_map(ce.module);
        auto s0 = cross_effect_action(f, V, adjacent_transposition(3, 0));
        auto s1 = cross_effect_action(f, V, adjacent_transposition(3, 1));
        CHECK(s0 * s0 == I);
        CHECK(s1 * s1 == I);
        CHECK(s0 * s1 * s0 == s1 * s0 * s1);
        CHECK(cross_effect_action(f, V, {0, 1, 2}) == I);
        Permutation a{1, 2, 0}, b{0, 2, 1};
        CHECK(cross_effect_action(f, V, compose_perm(a, b)) ==
              cross_effect_action(f, V, a) * cross_effect_action(f, V, b));
    }
}

TEST_CASE("characterization hypotheses") {
    Ring Z = Ring::integers();
    for (int d = 1; d <= 4; ++d)
        for (int i = 1; i < d; ++i) {
            CAPTURE(d);
            CAPTURE(i);
            CHECK(unimodular_square(plus_i(FunctorTag::sym(d), i, Z).matrix()));
            CHECK(unimodular_square(diag_i(FunctorTag::div(d), i, Z).matrix()));
            CHECK_FALSE(unimodular_square(plus_i(FunctorTag::div(d), i, Z).matrix()));
        }
    for (int d = 1; d <= 4; ++d) {
        CHECK(apply_functor_object(FunctorTag::ext(d), free_module(Z, d - 1))->rank() == 0);
        CHECK(cross_effect(FunctorTag::ext(d), std::vector<Module>(d, free_module(Z, 1))).module->rank() == 1);
        for (auto f : {FunctorTag::sym(d), FunctorTag::ext(d), FunctorTag::div(d)})
            for (long a : {-1, 2, 3}) CHECK(module_structures_coincide(f, d, Z, Z.from_int(a)));
        CHECK(module_structures_coincide(FunctorTag::tensor(d), d, Z, Z.from_int(5)));
    }
    CHECK(compositions(3, 2) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
    CHECK(compositions(4, 2).size() == 3);
}

#include "doctest.h"
#include "generators.hpp"
#include "khl/functors.hpp"
#include "khl/linalg.hpp"

using namespace khl;
using namespace khl::testgen;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("functor ranks") {
    Ring Z = Ring::integers();
    auto V2 = free_module(Z, 2);
    CHECK(apply_functor_object(FunctorTag::sym(2), V2)->rank() == 3);
    CHECK(apply_functor_object(FunctorTag::ext(3), V2)->rank() == 0);
    CHECK(apply_functor_object(FunctorTag::div(2), V2)->rank() == 3);
    for (int r = 0; r <= 5; ++r)
        for (int n = 0; n <= 4; ++n) {
            auto V = free_module(Z, r);
            // r = 0 and n = 0 gives the rank-1 functor value
            long sym = (r == 0) ? (n == 0) : binom(r + n - 1, n);
            long pw = 1;
            for (int i = 0; i < n; ++i) pw *= r;
            CHECK(apply_functor_object(FunctorTag::sym(n), V)->rank() == sym);
            CHECK(apply_functor_object(FunctorTag::div(n), V)->rank() == sym);
            CHECK(apply_functor_object(FunctorTag::ext(n), V)->rank() == binom(r, n));
            CHECK(apply_functor_object(FunctorTag::tensor(n), V)->rank() == pw);
            for (auto f : {FunctorTag::sym(n), FunctorTag::ext(n), FunctorTag::div(n), FunctorTag::tensor(n)})
                CHECK(functor_rank(f, r) == apply_functor_object(f, V)->rank());
        }
}

TEST_CASE("gradings of functor values add up") {
    Ring R = Ring::graded_poly(0, {"x"});
    auto V = free_module(R, 2, "e", {0, 1});
    auto S = apply_functor_object(FunctorTag::sym(2), V);
    CHECK(S->degrees() == std::vector<int>{0, 1, 2});
    auto L = apply_functor_object(FunctorTag::ext(2), V);
    CHECK(L->degrees() == std::vector<int>{1});
    S->validate();
}

TEST_CASE("divided powers are the symmetric tensors") {
    Ring Q = Ring::rationals();
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n) {
            auto V = free_module(Q, r);
            auto inc = div_to_tensor(V, n);
            // fixed space of all adjacent transpositions, by brute force
            const int N = inc.cod()->rank();
            std::vector<SparseMatrix> blocks;
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<int> perm(n);
                for (int j = 0; j < n; ++j) perm[j] = j;
                std::swap(perm[i], perm[i + 1]);
                blocks.push_back(tensor_permutation(V, perm).matrix() - SparseMatrix::identity(Q, N));
            }
            int fixed_dim = N;
            if (!blocks.empty()) fixed_dim = N - field_rank(vstack(blocks));
            CHECK(field_rank(inc.matrix()) == inc.dom()->rank());
            CHECK(fixed_dim == inc.dom()->rank());
            for (const auto& b : blocks) CHECK((b * inc.matrix()).is_zero());
        }
    auto V = free_module(Q, 2);
    auto inc = div_to_tensor(V, 2);
    // e1⊗e1, e1⊗e2 + e2⊗e1, e2⊗e2
    CHECK(inc.matrix() == SparseMatrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("functor examples on maps") {
    Ring Z = Ring::integers();
    auto V = free_module(Z, 2);
    auto phi = map_from_ints(V, V, {{1, 1}, {0, 1}});
    CHECK(apply_functor_map(FunctorTag::sym(2), phi).matrix() ==
          SparseMatrix::from_ints(Z, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_map(rng, V, V);
        const auto& m = f.matrix();
        Scalar det = Z.sub(Z.mul(m.at(0, 0), m.at(1, 1)), Z.mul(m.at(0, 1), m.at(1, 0)));
        auto e = apply_functor_map(FunctorTag::ext(2), f).matrix();
        CHECK(e.rows() == 1);
        CHECK(e.at(0, 0) == det);
    }
    auto W = free_module(Z, 3);
    CHECK(apply_functor_map(FunctorTag::tensor(2), zero_map(V, W)).matrix().is_zero());
}

TEST_CASE("functoriality on random composable pairs") {
    std::mt19937 rng(11);
    for (const Ring& R : {Ring::integers(), Ring::integers_mod(2), Ring::rationals()})
        for (int trial = 0; trial < 12; ++trial) {
            auto A = free_module(R, uniform(rng, 0, 3));
            auto B = free_module(R, uniform(rng, 0, 3));
            auto C = free_module(R, uniform(rng, 0, 3));
            auto f = random_map(rng, A, B, 3);
            auto g = random_map(rng, B, C, 3);
            for (int n = 0; n <= 3; ++n)
                for (auto F : {FunctorTag::sym(n), FunctorTag::ext(n), FunctorTag::div(n), FunctorTag::tensor(n)}) {
                    CHECK(apply_functor_map(F, g * f) == apply_functor_map(F, g) * apply_functor_map(F, f));
                    CHECK(apply_functor_map(F, identity_map(A)) == identity_map(apply_functor_object(F, A)));
                }
        }
}

TEST_CASE("graded functoriality") {
    Ring R = Ring::graded_poly(0, {"x", "y"});
    auto P = free_module(R, 2, "p", {1, 1});
    auto Q = free_module(R, 1, "q", {0});
    SparseMatrix m(R, 1, 2);
    m.set(0, 0, R.var(0));
    m.set(0, 1, R.var(1));
    ModuleMap f(P, Q, m);
    auto s2 = apply_functor_map(FunctorTag::sym(2), f);
    CHECK(s2.matrix().at(0, 1) == R.parse("x*y"));
    auto d2 = apply_functor_map(FunctorTag::div(2), f);
    CHECK(d2.matrix().at(0, 1) == R.parse("2*x*y"));
    CHECK_THROWS_AS(ModuleMap(Q, P, SparseMatrix::from_ints(R, {{1}, {1}})), NonHomogeneousEntry);
}

TEST_CASE("direct sums") {
    Ring Z = Ring::integers();
    auto s = direct_sum({free_module(Z, 2), free_module(Z, 3)});
    CHECK(s.sum->rank() == 5);
    SparseMatrix total(Z, 5, 5);
    for (size_t i = 0; i < s.inj.size(); ++i) {
        CHECK(s.proj[i] * s.inj[i] == identity_map(s.inj[i].dom()));
        for (size_t j = 0; j < s.inj.size(); ++j)
            if (i != j) CHECK((s.proj[j] * s.inj[i]).matrix().is_zero());
        total = total + (s.inj[i] * s.proj[i]).matrix();
    }
    CHECK(total == SparseMatrix::identity(Z, 5));
    auto one = direct_sum({free_module(Z, 2)});
    CHECK(one.inj[0].matrix() == SparseMatrix::identity(Z, 2));
    CHECK(direct_sum(Z, {}).sum->rank() == 0);
    CHECK_THROWS_AS(direct_sum({free_module(Z, 1), free_module(Ring::rationals(), 1)}), MixedRings);
}

TEST_CASE("tensor products") {
    Ring Z = Ring::integers();
    CHECK(tensor_product(free_module(Z, 2), free_module(Z, 3))->rank() == 6);
    Ring R = Ring::graded_poly(0, {"x"});
    auto V = free_module(R, 3, "v", {0, 1, 2});
    auto L = free_module(R, 1, "l", {1});
    auto VL = tensor_product(V, L);
    CHECK(VL->rank() == 3);
    CHECK(VL->degrees() == std::vector<int>{1, 2, 3});
    std::mt19937 rng(8);
    auto A = free_module(Z, 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_map(rng, A, A), g = random_map(rng, A, A);
        auto fg = tensor_map(f, g).matrix();
        // (f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        CHECK(fg.at(2 * a + b, 2 * i + j) == Z.mul(f.matrix().at(a, i), g.matrix().at(b, j)));
    }
    CHECK_THROWS_AS(tensor_product(free_module(Z, 1), free_module(Ring::rationals(), 1)), MixedRings);
}

TEST_CASE("Cauchy sequence of the second symmetric power of a tensor product") {
    Ring Z = Ring::integers();
    for (int rp = 1; rp <= 3; ++rp)
        for (int rq = 1; rq <= 3; ++rq) {
            auto P = free_module(Z, rp, "p"), Q = free_module(Z, rq, "q");
            auto PQ = tensor_product(P, Q);
            auto e2p = functor_module(FunctorTag::ext(2), P);
            auto e2q = functor_module(FunctorTag::ext(2), Q);
            auto s2p = functor_module(FunctorTag::sym(2), P);
            auto s2q = functor_module(FunctorTag::sym(2), Q);
            auto mid = functor_module(FunctorTag::sym(2), PQ);
            auto left = tensor_product(e2p.module, e2q.module);
            auto right = tensor_product(s2p.module, s2q.module);
            auto pq = [&](int a, int c) { return a * rq + c; };
            auto monomial = [&](int u, int v) { return mid.index.find(u <= v ? Word{u, v} : Word{v, u}); };
            SparseMatrix first(Z, mid.module->rank(), left->rank());
            for (size_t i = 0; i < e2p.words.size(); ++i)
                for (size_t j = 0; j < e2q.words.size(); ++j) {
                    int a = e2p.words[i][0], b = e2p.words[i][1];
                    int c = e2q.words[j][0], d = e2q.words[j][1];
                    int col = static_cast<int>(i * e2q.words.size() + j);
                    first.add_to(monomial(pq(a, c), pq(b, d)), col, Z.one());
                    first.add_to(monomial(pq(a, d), pq(b, c)), col, Z.from_int(-1));
                }
            SparseMatrix second(Z, right->rank(), mid.module->rank());
            for (size_t w = 0; w < mid.words.size(); ++w) {
                int u = mid.words[w][0], v = mid.words[w][1];
                int a = u / rq, c = u % rq, b = v / rq, d = v % rq;
                int sp = s2p.index.find(a <= b ? Word{a, b} : Word{b, a});
                int sq = s2q.index.find(c <= d ? Word{c, d} : Word{d, c});
                second.add_to(sp * static_cast<int>(s2q.words.size()) + sq, static_cast<int>(w), Z.one());
            }
            CHECK((second * first).is_zero());
            auto s1 = smith_normal_form(first);
            auto s2 = smith_normal_form(second);
            CHECK(s1.rank == left->rank());
            CHECK(s2.rank == right->rank());
            CHECK(s1.rank + s2.rank == mid.module->rank());
            for (const auto& f : s1.factors) CHECK(f == 1);
            for (const auto& f : s2.factors) CHECK(f == 1);
        }
}

#include <numeric>

#include "doctest.h"
#include "khl/equivariant.hpp"
#include "khl/random.hpp"

using namespace khl;

namespace {

// Invariant factors of a diagonal matrix by repeated (gcd, lcm) exchange.
std::vector<mpz_class> diagonal_invariants(std::vector<mpz_class> d) {
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            d[i] = g;
            d[j] = l;
        }
    std::vector<mpz_class> out;
    for (const auto& x : d)
        if (x != 1) out.push_back(x);
    return out;
}

ChainComplex koszul_resolution_qxy() {
    Ring R = Ring::graded_poly(0, {"x", "y"});
    auto C0 = free_module(R, 1, "1", {0});
    auto C1 = free_module(R, 2, "e", {1, 1});
    auto C2 = free_module(R, 1, "f", {2});
    SparseMatrix d1(R, 1, 2), d2(R, 2, 1);
    d1.set(0, 0, R.var(0));
    d1.set(0, 1, R.var(1));
    d2.set(0, 0, R.neg(R.var(1)));
    d2.set(1, 0, R.var(0));
    return make_complex({C0, C1, C2}, {ModuleMap(C1, C0, d1), ModuleMap(C2, C1, d2)});
}

ChainComplex times(const Ring& R, long a) {
    auto V = free_module(R, 1);
    return map_complex(ModuleMap(V, V, SparseMatrix::from_ints(R, {{a}})));
}

}  // namespace

TEST_CASE("make_complex validation") {
    Ring Z = Ring::integers();
    auto V = free_module(Z, 2);
    CHECK(make_complex({V}, {}).length() == 0);
    auto c = times(Z, 2);
    CHECK(c.length() == 1);
    auto A = free_module(Z, 1);
    auto d1 = ModuleMap(A, A, SparseMatrix::from_ints(Z, {{1}}));
    try {
        make_complex({A, A, A}, {d1, d1});
        FAIL("expected NotAComplex");
    } catch (const NotAComplex& e) {
        CHECK(e.degree == 1);
    }
}

TEST_CASE("shifts") {
    Ring Z = Ring::integers();
    auto P = free_module(Z, 2);
    auto c0 = shift(concentrated(P), 0);
    CHECK(c0.length() == 0);
    CHECK(c0.rank(0) == 2);
    auto c2 = shift(concentrated(P), 2);
    CHECK(c2.length() == 2);
    CHECK(c2.rank(0) == 0);
    CHECK(c2.rank(1) == 0);
    CHECK(c2.rank(2) == 2);
    auto t = times(Z, 3);
    auto s = shift(shift(t, 1), 2);
    auto s3 = shift(t, 3);
    CHECK(s.length() == s3.length());
    for (int k = 0; k <= s.length(); ++k) {
        CHECK(s.rank(k) == s3.rank(k));
        CHECK(s.d(k).matrix() == s3.d(k).matrix());
    }
}

TEST_CASE("total tensor products") {
    Ring Z = Ring::integers();
    auto K = times(Z, 2), L = times(Z, 3);
    auto T = total_tensor(K, L).complex;
    CHECK(T.rank(0) == 1);
    CHECK(T.rank(1) == 2);
    CHECK(T.rank(2) == 1);
    auto h = homology(T);
    for (int k = 0; k <= 2; ++k) CHECK(h.at(k).is_zero());
    auto unit = concentrated(free_module(Z, 1));
    Rng rng(4);
    for (int trial = 0; trial < 15; ++trial) {
        auto rc = random_complex(rng, Z, 3, 3);
        auto KT = total_tensor(rc.complex, unit).complex;
        CHECK(homology(KT) == homology(rc.complex));
    }
}

TEST_CASE("homology examples") {
    Ring Z = Ring::integers();
    auto h = homology(times(Z, 2));
    CHECK(h.at(0).torsion == std::vector<mpz_class>{2});
    CHECK(h.at(0).free_rank == 0);
    CHECK(h.at(1).is_zero());
    auto hk = homology(koszul_resolution_qxy(), 4);
    CHECK(hk.at(0).hilbert == std::map<int, long>{{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(hk.at(1).is_zero());
    CHECK(hk.at(2).is_zero());
    CHECK_THROWS_AS(homology(koszul_resolution_qxy()), WindowRequired);
    CHECK(homology(times(Z, 1)).at(0).is_zero());
}

TEST_CASE("random complexes have the homology of their pieces") {
    Rng rng(99);
    for (const Ring& R : {Ring::integers(), Ring::rationals(), Ring::integers_mod(3)})
        for (int trial = 0; trial < 40; ++trial) {
            auto rc = random_complex(rng, R, 3, 3);
            auto h = homology(rc.complex);
            for (int k = 0; k <= rc.complex.length(); ++k) {
                if (R.is_integers()) {
                    std::vector<mpz_class> expect;
                    if (k + 1 <= rc.complex.length()) expect = diagonal_invariants(rc.pairs[k + 1]);
                    CHECK(h.at(k).torsion == expect);
                    CHECK(h.at(k).free_rank == rc.free_pieces[k]);
                } else {
                    CHECK(h.at(k).dim == rc.free_pieces[k]);
                }
            }
        }
}

TEST_CASE("integer homology generators and coordinates") {
    Ring Z = Ring::integers();
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto rc = random_complex(rng, Z, 3, 3);
        const auto& c = rc.complex;
        auto h = homology(c);
        for (int k = 0; k <= c.length(); ++k) {
            HomologyAt at(c, k);
            std::vector<mpz_class> torsion;
            int free = 0;
            for (const auto& o : at.z_orders()) (o == 0 ? (void)++free : torsion.push_back(o));
            CHECK(torsion == h.at(k).torsion);
            CHECK(free == h.at(k).free_rank);
            for (size_t g = 0; g < at.z_generators().size(); ++g) {
                auto co = at.z_coords(at.z_generators()[g]);
                for (size_t i = 0; i < co.size(); ++i) CHECK(co[i] == (i == g ? 1 : 0));
            }
            // the identity induces an isomorphism on homology
            auto m = induced_map(at, at, identity_map(c.module(k)));
            CHECK(is_isomorphism(m, at, at));
        }
    }
}

TEST_CASE("field homology coordinates") {
    Ring Q = Ring::rationals();
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto rc = random_complex(rng, Q, 3, 3);
        for (int k = 0; k <= rc.complex.length(); ++k) {
            HomologyAt at(rc.complex, k);
            const auto& sl = at.slices().at(0);
            CHECK(sl.dim() == rc.free_pieces[k]);
            auto m = induced_map(at, at, identity_map(rc.complex.module(k)).scaled(Q.from_int(2)));
            CHECK(slice_trace(m, 0) == 2 * sl.dim());
            CHECK(is_isomorphism(m, at, at));
        }
    }
}

TEST_CASE("Kunneth over a field") {
    Ring Q = Ring::rationals();
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto A = random_complex(rng, Q, 2, 3), B = random_complex(rng, Q, 2, 3);
        auto T = total_tensor(A.complex, B.complex).complex;
        auto h = homology(T), ha = homology(A.complex), hb = homology(B.complex);
        for (int m = 0; m <= T.length(); ++m) {
            long expect = 0;
            for (int p = 0; p <= m; ++p) expect += ha.at(p).dim * hb.at(m - p).dim;
            CHECK(h.at(m).dim == expect);
        }
    }
}

TEST_CASE("Euler classes") {
    auto k = koszul_resolution_qxy();
    LaurentPoly expect = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(2);
    CHECK(euler_class(k) == expect);
    CHECK(euler_class(shift(k, 1)) == -expect);
    Ring Z = Ring::integers();
    CHECK(euler_class(times(Z, 1)).is_zero());
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto rc = random_complex(rng, Z, 3, 3);
        auto h = homology(rc.complex);
        long alt = 0;
        for (int j = 0; j <= rc.complex.length(); ++j) alt += (j % 2 ? -1 : 1) * h.at(j).free_rank;
        CHECK(euler_class(rc.complex) == LaurentPoly::constant(alt));
    }
    Ring R = Ring::graded_poly(0, {"x", "y"});
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_graded_complex(rng, R, 2, 3);
        const int D = 6;
        auto h = homology(c, D);
        auto hs = hilbert_of_class(euler_class(c), 2, D);
        for (int t = 0; t <= D; ++t) {
            long alt = 0;
            for (int j = 0; j <= c.length(); ++j) alt += (j % 2 ? -1 : 1) * h.at(j).hilbert.at(t);
            CHECK(hs[t] == alt);
        }
    }
}

TEST_CASE("sigma of classes") {
    for (int a = -2; a <= 3; ++a)
        for (int n = 0; n <= 4; ++n) CHECK(sigma_of_class(n, LaurentPoly::monomial(a)) == LaurentPoly::monomial(n * a));
    auto one_t = LaurentPoly::constant(1) + LaurentPoly::monomial(1);
    CHECK(sigma_of_class(2, one_t) == one_t + LaurentPoly::monomial(2));
    auto one_minus_t = LaurentPoly::constant(1) - LaurentPoly::monomial(1);
    CHECK(sigma_of_class(2, one_minus_t) == one_minus_t);
}

TEST_CASE("equivariant tensor powers") {
    Ring Z = Ring::integers();
    auto P = times(Z, 2);
    auto e1 = tensor_power_equivariant(P, 1);
    CHECK(e1.complex().length() == 1);
    auto e2 = tensor_power_equivariant(P, 2);
    CHECK(e2.complex().rank(2) == 1);
    CHECK(e2.generator(0, 2).matrix() == SparseMatrix::from_ints(Z, {{-1}}));
    CHECK(check_equivariance(e2));
    Rng rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = random_map(rng, free_module(Z, rng.uniform(1, 2)), free_module(Z, rng.uniform(1, 2)), 5);
        auto e3 = tensor_power_equivariant(map_complex(f), 3);
        CHECK(check_equivariance(e3));
        for (int k = 0; k <= e3.complex().length(); ++k) {
            auto s = e3.generator(0, k), t = e3.generator(1, k);
            CHECK(s * t * s == t * s * t);
        }
    }
    // the n-fold power agrees with iterated total tensors up to block order: same ranks and homology
    auto iter = total_tensor(total_tensor(P, P).complex, P).complex;
    auto e3 = tensor_power_equivariant(P, 3);
    CHECK(homology(iter) == homology(e3.complex()));
}

TEST_CASE("characters on homology") {
    Ring Qx = Ring::graded_poly(0, {"x"});
    auto R0 = free_module(Qx, 1, "1", {0}), R1 = free_module(Qx, 1, "x", {1});
    SparseMatrix mx(Qx, 1, 1);
    mx.set(0, 0, Qx.var(0));
    auto res = map_complex(ModuleMap(R1, R0, mx));
    auto e = tensor_power_equivariant(res, 2);
    Permutation id{0, 1}, tau{1, 0};
    auto h = homology(e.complex(), 5);
    for (int k = 0; k <= 2; ++k) {
        long dim = 0;
        for (const auto& [t, v] : h.at(k).hilbert) dim += v;
        CHECK(character_on_homology(e, id, k, 5).total == dim);
    }
    CHECK(character_on_homology(e, tau, 1, 5).total == -1);
    CHECK(character_on_homology(e, tau, 1, 5).by_degree.at(1) == -1);
    auto e2 = tensor_power_equivariant(koszul_resolution_qxy(), 2);
    for (int k = 0; k <= 2; ++k)
        CHECK(character_on_homology(e2, tau, k, 5).total == predicted_character(1, 2, 2, k, {2}));
    CHECK_THROWS_AS(character_on_homology(tensor_power_equivariant(times(Ring::integers(), 2), 2), tau, 0),
                    NonFieldCoefficients);
}

TEST_CASE("predicted characters") {
    auto binom = [](long n, long k) {
        if (k < 0 || k > n) return 0L;
        long r = 1;
        for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int r = 1; r <= 3; ++r)
        for (int d = 1; d <= 2; ++d)
            for (int n = 1; n <= 4; ++n)
                for (int k = 0; k <= d * (n - 1) + 1; ++k) {
                    long pw = 1;
                    for (int i = 0; i < n; ++i) pw *= r;
                    CHECK(predicted_character(r, d, n, k, std::vector<int>(n, 1)) == pw * binom(d * (n - 1), k));
                }
    // the transposition on V⊗V has trace r, so the sign action contributes -r
    Ring Qx = Ring::graded_poly(0, {"x"});
    for (int r = 1; r <= 3; ++r) {
        auto R0 = free_module(Qx, r, "a", std::vector<int>(r, 0)), R1 = free_module(Qx, r, "b", std::vector<int>(r, 1));
        SparseMatrix mx(Qx, r, r);
        for (int i = 0; i < r; ++i) mx.set(i, i, Qx.var(0));
        auto e = tensor_power_equivariant(map_complex(ModuleMap(R1, R0, mx)), 2);
        auto computed = character_on_homology(e, {1, 0}, 1, 5).total;
        CHECK(predicted_character(r, 1, 2, 1, {2}) == computed);
        CHECK(computed == -r);
    }
    // Λ² trace identity on random diagonalizable data
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> eig(rng.uniform(1, 5));
        for (auto& x : eig) x = rng.uniform(-3, 3);
        mpq_class p1 = 0, p2 = 0;
        for (auto x : eig) {
            p1 += x;
            p2 += x * x;
        }
        mpq_class e2 = 0;
        for (size_t i = 0; i < eig.size(); ++i)
            for (size_t j = i + 1; j < eig.size(); ++j) e2 += eig[i] * eig[j];
        CHECK(exterior_trace(2, {p1, p2}) == (p1 * p1 - p2) / 2);
        CHECK(exterior_trace(2, {p1, p2}) == e2);
    }
}

TEST_CASE("the standard representation K_n") {
    Ring Q = Ring::rationals();
    CHECK(kn_module(Q, 1).module->rank() == 0);
    auto k2 = kn_module(Q, 2);
    CHECK(k2.module->rank() == 1);
    CHECK(k2.action({1, 0}).matrix() == SparseMatrix::from_ints(Q, {{-1}}));
    auto k3 = kn_module(Q, 3);
    CHECK(k3.module->rank() == 2);
    auto a = k3.action({1, 2, 0}).matrix();
    CHECK(Q.add(a.at(0, 0), a.at(1, 1)) == Q.from_int(-1));
    for (int n = 1; n <= 4; ++n) {
        auto kn = kn_module(Q, n);
        CHECK((kn.sum * kn.inclusion).matrix().is_zero());
        for (const auto& p : class_representatives(n))
            CHECK(kn.permutation_action(p) * kn.inclusion == kn.inclusion * kn.action(p));
    }
}

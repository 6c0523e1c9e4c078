#include <random>

#include "doctest.h"
#include "khl/graded.hpp"
#include "khl/linalg.hpp"

using namespace khl;

namespace {

// Bareiss fraction-free determinant, used as an independent oracle.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) swap = i;
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// gcd of all k x k minors over all k, via brute force on small matrices
mpz_class minor_gcd(const std::vector<std::vector<mpz_class>>& a, int k) {
    int m = static_cast<int>(a.size()), n = m ? static_cast<int>(a[0].size()) : 0;
    mpz_class g = 0;
    std::vector<int> rs(k), cs(k);
    std::function<void(int, int, int)> choose_cols;
    std::function<void(int, int)> choose_rows = [&](int pos, int start) {
        if (pos == k) {
            choose_cols(0, 0, 0);
            return;
        }
        for (int i = start; i < m; ++i) {
            rs[pos] = i;
            choose_rows(pos + 1, i + 1);
        }
    };
    choose_cols = [&](int pos, int start, int) {
        if (pos == k) {
            std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
            mpz_class d = bareiss_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
        }
        for (int j = start; j < n; ++j) {
            cs[pos] = j;
            choose_cols(pos + 1, j + 1, 0);
        }
    };
    choose_rows(0, 0);
    return g;
}

SparseMatrix random_int_matrix(std::mt19937& rng, int rows, int cols, const Ring& R) {
    std::uniform_int_distribution<int> val(-9, 9), sparse(0, 2);
    SparseMatrix m(R, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (sparse(rng)) m.set(i, j, R.from_int(val(rng)));
    return m;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    Ring Z = Ring::integers();
    CHECK(Z.str(Z.mul(Z.from_int(-3), Z.from_int(4))) == "-12");
    Ring Z6 = Ring::integers_mod(6);
    CHECK(Z6.add(Z6.from_int(4), Z6.from_int(5)) == Z6.from_int(3));
    CHECK_FALSE(Z6.is_field());
    CHECK(Ring::integers_mod(7).is_field());
    Ring Qxy = Ring::graded_poly(0, {"x", "y"});
    Scalar p = Qxy.parse("(x+y)^2");
    CHECK(p == Qxy.parse("x^2 + 2*x*y + y^2"));
    CHECK(p.homogeneous_degree() == 2);
    CHECK(Qxy.parse("x + 1").homogeneous_degree() == -2);
    CHECK_THROWS_AS(Qxy.parse("z"), ParseError);
    Ring F2x = Ring::graded_poly(2, {"x"});
    CHECK(F2x.parse("(x+1)^2") == F2x.parse("x^2+1"));
}

TEST_CASE("smith normal form examples") {
    Ring Z = Ring::integers();
    auto a = SparseMatrix::from_ints(Z, {{2, 0}, {0, 0}});
    CHECK(smith_normal_form(a).factors == std::vector<mpz_class>{2});
    auto id = SparseMatrix::identity(Z, 3);
    CHECK(smith_normal_form(id).factors == std::vector<mpz_class>{1, 1, 1});
    auto b = SparseMatrix::from_ints(Z, {{2, 4}, {6, 8}});
    auto snf = smith_normal_form(b);
    // oracle: d1 = gcd of entries, d1 d2 = |det|
    auto dense = to_mpz(b);
    mpz_class d1 = minor_gcd(dense, 1);
    mpz_class d2 = abs(bareiss_det(dense)) / d1;
    CHECK(snf.factors == std::vector<mpz_class>{d1, d2});
    CHECK(snf.factors == std::vector<mpz_class>{2, 4});
    CHECK(snf.U * snf.D * snf.V == b);
    CHECK(smith_normal_form(SparseMatrix(Z, 0, 0)).factors.empty());
}

TEST_CASE("smith normal form on random integer matrices") {
    Ring Z = Ring::integers();
    std::mt19937 rng(20261014);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 150; ++trial) {
        int m = dim(rng), n = dim(rng);
        auto a = random_int_matrix(rng, m, n, Z);
        auto snf = smith_normal_form(a);
        REQUIRE(snf.U * snf.D * snf.V == a);
        CHECK(snf.U * snf.U_inv == SparseMatrix::identity(Z, m));
        CHECK(snf.V * snf.V_inv == SparseMatrix::identity(Z, n));
        CHECK(abs(bareiss_det(to_mpz(snf.U))) == 1);
        CHECK(abs(bareiss_det(to_mpz(snf.V))) == 1);
        for (size_t i = 0; i + 1 < snf.factors.size(); ++i) CHECK(snf.factors[i + 1] % snf.factors[i] == 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(snf.D.at(i, j).is_zero());
        // determinantal divisors: d1 ... dk = gcd of k-minors
        mpz_class prod = 1;
        for (size_t k = 0; k < snf.factors.size() && k < 3; ++k) {
            prod *= snf.factors[k];
            CHECK(prod == minor_gcd(to_mpz(a), static_cast<int>(k + 1)));
        }
    }
}

TEST_CASE("rank and kernel over fields") {
    Ring Q = Ring::rationals();
    auto id = SparseMatrix::identity(Q, 2);
    auto rk = rank_and_kernel(id);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel_basis.empty());
    auto ones = SparseMatrix::from_ints(Q, {{1, 1}, {1, 1}});
    rk = rank_and_kernel(ones);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel_basis.size() == 1);
    CHECK(ones.apply(rk.kernel_basis[0]).empty());
    auto a = SparseMatrix::from_ints(Q, {{1, 2, 3}, {4, 5, 6}});
    rk = rank_and_kernel(a);
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel_basis.size() == 1);
    // the kernel vector is proportional to (1, -2, 1)
    const auto& k = rk.kernel_basis[0];
    REQUIRE(k.size() == 3);
    mpq_class s = k[0].second.constant();
    CHECK(k[1].second.constant() == -2 * s);
    CHECK(k[2].second.constant() == s);
    CHECK_THROWS_AS(rank_and_kernel(SparseMatrix::identity(Ring::integers(), 2)), NonFieldRing);
    CHECK_THROWS_AS(rank_and_kernel(SparseMatrix::identity(Ring::integers_mod(4), 2)), NonFieldRing);
}

TEST_CASE("random field matrices: rank symmetry and nullity") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dim(1, 7);
    for (const Ring& F : {Ring::rationals(), Ring::integers_mod(2), Ring::integers_mod(5)}) {
        for (int trial = 0; trial < 60; ++trial) {
            int m = dim(rng), n = dim(rng);
            auto a = random_int_matrix(rng, m, n, F);
            auto rk = rank_and_kernel(a);
            CHECK(rk.rank == rank_and_kernel(a.transpose()).rank);
            CHECK(rk.rank + static_cast<int>(rk.kernel_basis.size()) == n);
            for (const auto& v : rk.kernel_basis) CHECK(a.apply(v).empty());
            SparseMatrix kb(F, n, static_cast<int>(rk.kernel_basis.size()));
            for (size_t j = 0; j < rk.kernel_basis.size(); ++j) kb.set_column(static_cast<int>(j), rk.kernel_basis[j]);
            CHECK(field_rank(kb) == kb.cols());
        }
    }
}

TEST_CASE("solve and split spans") {
    Ring Z = Ring::integers();
    auto a = SparseMatrix::from_ints(Z, {{2, 0}, {0, 3}});
    CHECK(solve(a, {{0, Z.from_int(4)}, {1, Z.from_int(9)}}).has_value());
    CHECK_FALSE(solve(a, {{0, Z.from_int(1)}}).has_value());
    auto s = SparseMatrix::from_ints(Z, {{1, 1}, {0, 1}, {1, 2}});
    auto sp = split_column_span(s);
    auto I = SparseMatrix::identity(Z, 3);
    CHECK(sp.left_inverse * sp.basis == SparseMatrix::identity(Z, 2));
    CHECK(sp.basis * sp.left_inverse + sp.complement * sp.complement_projection == I);
    CHECK_THROWS_AS(split_column_span(SparseMatrix::from_ints(Z, {{2}, {0}})), NotSplitImage);
    Ring Q = Ring::rationals();
    auto sq = split_column_span(SparseMatrix::from_ints(Q, {{2, 4}, {1, 2}, {0, 0}}));
    CHECK(sq.basis.cols() == 1);
    CHECK(sq.left_inverse * sq.basis == SparseMatrix::identity(Q, 1));
    CHECK(sq.basis * sq.left_inverse + sq.complement * sq.complement_projection == SparseMatrix::identity(Q, 3));
}

TEST_CASE("monomial counts") {
    CHECK(monomial_count(1, 5) == 1);
    CHECK(monomial_count(2, 3) == 4);
    CHECK(monomial_count(3, 4) == 15);
    for (int s = 1; s <= 4; ++s)
        for (int t = 0; t <= 5; ++t)
            CHECK(monomial_count(s, t) == static_cast<long>(monomials_of_degree(s, t).size()));
}

TEST_CASE("graded slices") {
    Ring Qx = Ring::graded_poly(0, {"x"});
    SparseMatrix mx(Qx, 1, 1);
    mx.set(0, 0, Qx.var(0));
    auto s = graded_slice(mx, {0}, {1}, 1);
    CHECK(s == SparseMatrix::from_ints(Ring::rationals(), {{1}}));
    auto z = graded_slice(SparseMatrix(Qx, 2, 3), {0, 0}, {1, 1, 2}, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);  // one monomial per generator in one variable
    CHECK(z.is_zero());

    Ring Qxy = Ring::graded_poly(0, {"x", "y"});
    SparseMatrix xy(Qxy, 1, 2);
    xy.set(0, 0, Qxy.var(0));
    xy.set(0, 1, Qxy.var(1));
    auto sl = graded_slice(xy, {0}, {1, 1}, 2);
    CHECK(sl.rows() == 3);
    CHECK(sl.cols() == 4);
    CHECK(field_rank(sl) == 3);

    SparseMatrix bad(Qxy, 1, 1);
    bad.set(0, 0, Qxy.parse("x + 1"));
    CHECK_THROWS_AS(graded_slice(bad, {0}, {1}, 1), NonHomogeneousEntry);
}

TEST_CASE("graded slices respect composition") {
    Ring R = Ring::graded_poly(3, {"x", "y"});
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-2, 2), deg(0, 2), dim(1, 3);
    auto random_homogeneous = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        SparseMatrix m(R, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) {
                int d = cols[j] - rows[i];
                if (d < 0) continue;
                Scalar v;
                for (Mono mono : monomials_of_degree(2, d)) R.axpy(v, coef(rng), R.monomial(mono, 1));
                m.set(static_cast<int>(i), static_cast<int>(j), v);
            }
        return m;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto degs = [&](int n) {
            std::vector<int> d(n);
            for (auto& x : d) x = deg(rng);
            return d;
        };
        auto a = degs(dim(rng)), b = degs(dim(rng)), c = degs(dim(rng));
        for (auto& x : b) x += 1;
        for (auto& x : c) x += 2;
        auto M = random_homogeneous(a, b);
        auto N = random_homogeneous(b, c);
        for (int t = 0; t <= 5; ++t)
            CHECK(graded_slice(M * N, a, c, t) == graded_slice(M, a, b, t) * graded_slice(N, b, c, t));
    }
}

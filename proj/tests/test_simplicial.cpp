#include "doctest.h"
#include "khl/exact_sequence.hpp"
#include "khl/random.hpp"
#include "khl/simplicial.hpp"

using namespace khl;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ChainComplex times(const Ring& R, long a) {
    auto P = free_module(R, 1, "p"), Q = free_module(R, 1, "q");
    return map_complex(ModuleMap(P, Q, SparseMatrix::from_ints(R, {{a}})));
}

bool same_complex(const ChainComplex& a, const ChainComplex& b) {
    if (a.length() != b.length()) return false;
    for (int k = 0; k <= a.length(); ++k)
        if (a.rank(k) != b.rank(k)) return false;
    for (int k = 1; k <= a.length(); ++k)
        if (a.d(k).matrix() != b.d(k).matrix()) return false;
    return true;
}

bool iso_chain_map(const ChainMap& m) {
    if (!is_chain_map(m.src, m.dst, m.maps)) return false;
    for (int k = 0; k <= std::max(m.src.length(), m.dst.length()); ++k) {
        const SparseMatrix a = m.at(k).matrix();
        if (a.rows() != a.cols()) return false;
        if (a.rows() && !is_invertible(a)) return false;
    }
    return true;
}

ChainMap pair_map(const ModuleMap& f, const ModuleMap& g, const ModuleMap& ap, const ModuleMap& aq) {
    return make_chain_map(map_complex(f), map_complex(g), {aq, ap});
}

}  // namespace

TEST_CASE("surjections by step sets") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            auto s = step_sets(n, k);
            CHECK(static_cast<long>(s.size()) == binom(n, k));
            CHECK(std::is_sorted(s.begin(), s.end()));
            for (const auto& x : s) CHECK(static_cast<int>(x.size()) == k);
        }
    CHECK(step_sets(3, 2) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(step_sets(2, 3).empty());
}

TEST_CASE("gamma of small complexes") {
    Ring Z = Ring::integers();
    auto P = free_module(Z, 2, "p");
    auto constant = gamma(concentrated(P), 4);
    for (int n = 0; n <= 4; ++n) {
        CHECK(constant.levels[n]->rank() == 2);
        for (const auto& d : constant.faces[n]) CHECK(d.matrix() == SparseMatrix::identity(Z, 2));
        if (n < 4)
            for (const auto& s : constant.degeneracies[n]) CHECK(s.matrix() == SparseMatrix::identity(Z, 2));
    }
    auto Q = free_module(Z, 3, "q");
    auto two = gamma(map_complex(ModuleMap(P, Q, SparseMatrix::from_ints(Z, {{1, 0}, {0, 2}, {1, 1}}))), 5);
    for (int n = 0; n <= 5; ++n) CHECK(two.levels[n]->rank() == 3 + 2 * n);
    auto shifted = gamma(concentrated(P, 1), 5);
    for (int n = 0; n <= 5; ++n) CHECK(shifted.levels[n]->rank() == 2 * n);
    auto deep = gamma(concentrated(P, 2), 5);
    for (int n = 0; n <= 5; ++n) CHECK(deep.levels[n]->rank() == 2 * binom(n, 2));
}

TEST_CASE("simplicial identities") {
    Ring Z = Ring::integers();
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        auto rc = random_complex(rng, Z, 3, 3);
        auto x = gamma(rc.complex, 4);
        CHECK_FALSE(simplicial_identities_check(x).has_value());
        CHECK_FALSE(simplicial_identities_check(apply_functor_levelwise(FunctorTag::sym(2), gamma(rc.complex, 3))));
    }
    auto c = gamma(concentrated(free_module(Z, 1)), 3);
    CHECK_FALSE(simplicial_identities_check(c));
    c.faces[2][2] = c.faces[2][2].scaled(Z.from_int(2));
    auto bad = simplicial_identities_check(c);
    REQUIRE(bad.has_value());
    CHECK(*bad == "d0 d2 = d1 d0 at level 2");
    auto e = gamma(concentrated(free_module(Z, 1)), 3);
    e.degeneracies[1][0] = zero_map(e.levels[1], e.levels[2]);
    auto bad2 = simplicial_identities_check(e);
    REQUIRE(bad2.has_value());
    CHECK(bad2->find("s") != std::string::npos);
}

TEST_CASE("normalization inverts gamma") {
    Rng rng(2024);
    int checked = 0;
    for (const Ring& R : {Ring::integers(), Ring::rationals()})
        for (int t = 0; t < 25; ++t) {
            auto rc = random_complex(rng, R, 3, 3);
            const auto& c = rc.complex;
            auto norm = normalize(gamma(c, c.length() + 1));
            CHECK(norm.complex.rank(c.length() + 1) == 0);
            for (int k = 0; k <= c.length(); ++k) CHECK(norm.complex.rank(k) == c.rank(k));
            for (int k = 1; k <= c.length(); ++k) CHECK(norm.complex.d(k).matrix() == c.d(k).matrix());
            for (int k = 0; k <= c.length(); ++k)
                CHECK(norm.quotient[k].matrix() * norm.lift[k].matrix() == SparseMatrix::identity(R, c.rank(k)));
            ++checked;
        }
    CHECK(checked == 50);
    Ring Z = Ring::integers();
    auto P = free_module(Z, 2);
    auto n0 = normalize(gamma(concentrated(P), 3)).complex;
    CHECK(n0.rank(0) == 2);
    for (int k = 1; k <= 3; ++k) CHECK(n0.rank(k) == 0);
}

TEST_CASE("degeneracy spans split") {
    Ring Z = Ring::integers();
    auto x = gamma(times(Z, 2), 2);
    CHECK(x.levels[2]->rank() == 3);
    const auto& s0 = x.degeneracies[1][0].matrix();
    const auto& s1 = x.degeneracies[1][1].matrix();
    CHECK(smith_normal_form(s0).rank == 2);
    CHECK(smith_normal_form(s1).rank == 2);
    auto both = smith_normal_form(hstack({s0, s1}));
    CHECK(both.rank == 3);
    for (const auto& f : both.factors) CHECK(f == 1);
    auto bad = x;
    bad.degeneracies[1][0] = bad.degeneracies[1][0].scaled(Z.from_int(2));
    bad.degeneracies[1][1] = bad.degeneracies[1][1].scaled(Z.from_int(2));
    CHECK_THROWS_AS(normalize(bad), DegeneracySpanNotSplit);
}

TEST_CASE("levelwise functors") {
    Ring Z = Ring::integers();
    auto c = times(Z, 3);
    auto x = gamma(c, 3);
    auto y = apply_functor_levelwise(FunctorTag::sym(1), x);
    for (int n = 0; n <= 3; ++n) {
        CHECK(y.levels[n]->rank() == x.levels[n]->rank());
        for (int i = 0; i <= n && n >= 1; ++i) CHECK(y.faces[n][i].matrix() == x.faces[n][i].matrix());
    }
    auto sq = apply_functor_levelwise(FunctorTag::sym(2), gamma(concentrated(free_module(Z, 2)), 3));
    for (int n = 0; n <= 3; ++n) CHECK(sq.levels[n]->rank() == 3);
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : sq.faces[n]) CHECK(d.matrix() == SparseMatrix::identity(Z, 3));
}

TEST_CASE("nfg examples") {
    Ring Z = Ring::integers();
    for (int r = 1; r <= 3; ++r) {
        auto P = free_module(Z, r);
        auto c = nfg(concentrated(P, 1), FunctorTag::sym(2));
        CHECK(c.length() == 2);
        CHECK(c.rank(0) == 0);
        CHECK(c.rank(1) == binom(r + 1, 2));
        CHECK(c.rank(2) == r * r);
        auto h = homology(c);
        CHECK(h.at(1).is_zero());
        CHECK(h.at(2).free_rank == binom(r, 2));
        CHECK(h.at(2).torsion.empty());
        CHECK(c.d(2).matrix() == tensor_to_sym(P, 2).matrix().scaled(Z.from_int(-1)));
        for (int n = 1; n <= 3; ++n) {
            auto s = nfg(concentrated(P), FunctorTag::sym(n));
            CHECK(s.length() == 0);
            CHECK(s.rank(0) == binom(r + n - 1, n));
        }
    }
}

TEST_CASE("fast path agrees with the generic pipeline") {
    Rng rng(99);
    for (const Ring& R : {Ring::integers(), Ring::rationals()})
        for (int n = 1; n <= 3; ++n)
            for (auto F : {FunctorTag::sym(n), FunctorTag::ext(n), FunctorTag::div(n), FunctorTag::tensor(n)})
                for (int t = 0; t < 2; ++t) {
                    auto P = free_module(R, rng.uniform(1, 2), "p"), Q = free_module(R, rng.uniform(1, 2), "q");
                    auto c = map_complex(random_map(rng, P, Q, 4));
                    CAPTURE(F.name());
                    CHECK(same_complex(nfg(c, F), nfg_generic(c, F)));
                }
    Ring Z = Ring::integers();
    for (int t = 0; t < 4; ++t) {
        auto rc = random_complex(rng, Z, 2, 2);
        CHECK(same_complex(nfg(rc.complex, FunctorTag::sym(2)), nfg_generic(rc.complex, FunctorTag::sym(2))));
        CHECK(same_complex(nfg(rc.complex, FunctorTag::ext(2)), nfg_generic(rc.complex, FunctorTag::ext(2))));
    }
}

TEST_CASE("cross-effect description of N F Γ(P -> Q)") {
    Ring Z = Ring::integers();
    auto c = lemma22_complex(times(Z, 2).d(1), FunctorTag::sym(2));
    CHECK(c.length() == 2);
    CHECK(c.rank(0) == 1);
    CHECK(c.rank(1) == 2);
    CHECK(c.rank(2) == 1);
    auto f = times(Z, 5).d(1);
    auto one = lemma22_complex(f, FunctorTag::sym(1));
    CHECK(one.length() == 1);
    CHECK(one.d(1).matrix() == f.matrix());
    Rng rng(5);
    for (const Ring& R : {Ring::integers(), Ring::rationals()})
        for (int n = 1; n <= 3; ++n)
            for (auto F : {FunctorTag::sym(n), FunctorTag::ext(n), FunctorTag::div(n), FunctorTag::tensor(n)})
                for (int t = 0; t < 3; ++t) {
                    auto P = free_module(R, rng.uniform(1, 3), "p"), Q = free_module(R, rng.uniform(1, 3), "q");
                    auto g = random_map(rng, P, Q, 5);
                    CAPTURE(F.name());
                    auto cmp = lemma22_comparison(g, F);
                    CHECK(iso_chain_map(cmp));
                }
}

TEST_CASE("comparison map u") {
    Ring Z = Ring::integers();
    auto f = times(Z, 7).d(1);
    auto u1 = comparison_u(f, 1);
    CHECK(u1.at(0).matrix() == SparseMatrix::identity(Z, 1));
    CHECK(u1.at(1).matrix() == SparseMatrix::identity(Z, 1));
    for (long m : {2, 3, 4, 6})
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; n <= 3; ++n) {
                auto res = resolution_for(conormal_data(Z, {Z.from_int(m)}), r);
                auto u = comparison_u(res.map(), n);
                auto hk = homology(u.src), hn = homology(u.dst);
                CHECK(hk == hn);
                for (int k = 0; k <= n; ++k) {
                    HomologyAt a(u.src, k), b(u.dst, k);
                    CHECK(is_isomorphism(induced_map(a, b, u.at(k)), a, b));
                }
            }
    auto P = free_module(Z, 3, "p");
    for (int n = 1; n <= 3; ++n) {
        auto u = comparison_u(ModuleMap(P, zero_module(Z), SparseMatrix(Z, 0, 3)), n);
        for (int k = 0; k < n; ++k) CHECK(u.src.rank(k) == 0);
        CHECK(u.src.rank(n) == binom(3, n));
        for (int k = 0; k <= n; ++k) {
            HomologyAt a(u.src, k), b(u.dst, k);
            CHECK(is_isomorphism(induced_map(a, b, u.at(k)), a, b));
        }
    }
    Ring Qx = Ring::graded_poly(0, {"x"});
    auto res = resolution_for(conormal_data(Qx, {Qx.var(0)}), 2);
    for (int n = 1; n <= 3; ++n) {
        auto u = comparison_u(res.map(), n);
        for (int k = 0; k <= n; ++k) {
            HomologyAt a(u.src, k, 5), b(u.dst, k, 5);
            CHECK(is_isomorphism(induced_map(a, b, u.at(k)), a, b));
        }
    }
}

TEST_CASE("homotopic maps induce equal maps") {
    Rng rng(31);
    Ring Z = Ring::integers();
    for (int t = 0; t < 25; ++t) {
        auto hp = homotopy_pair(rng, Z, 2);
        auto a1 = pair_map(hp.f, hp.f_target, hp.a1_p, hp.a1_q);
        auto a2 = pair_map(hp.f, hp.f_target, hp.a2_p, hp.a2_q);
        for (int n = 1; n <= 3; ++n) {
            auto k1 = koszul_chain_map(hp.f, hp.f_target, hp.a1_p, hp.a1_q, n);
            auto k2 = koszul_chain_map(hp.f, hp.f_target, hp.a2_p, hp.a2_q, n);
            auto g1 = nfg_map(a1, FunctorTag::sym(n));
            auto g2 = nfg_map(a2, FunctorTag::sym(n));
            for (int k = 0; k <= n; ++k) {
                HomologyAt s(k1.src, k), d(k1.dst, k);
                CHECK(induced_map(s, d, k1.at(k)) == induced_map(s, d, k2.at(k)));
                HomologyAt gs(g1.src, k), gd(g1.dst, k);
                CHECK(induced_map(gs, gd, g1.at(k)) == induced_map(gs, gd, g2.at(k)));
            }
        }
    }
}

TEST_CASE("second symmetric power of a codimension two resolution") {
    Ring R = Ring::graded_poly(0, {"x", "y"});
    auto ideal = conormal_data(R, std::vector<std::string>{"x", "y"});
    for (int r = 1; r <= 2; ++r) {
        auto res = resolution_for(ideal, r);
        auto c = nfg(res.complex, FunctorTag::sym(2));
        auto h = homology(c, 5);
        auto expect = [&](int deg, long dim) {
            std::map<int, long> m;
            for (int t = 0; t <= 5; ++t) m[t] = t == deg ? dim : 0;
            return m;
        };
        CAPTURE(r);
        CHECK(h.at(0).hilbert == expect(0, binom(r + 1, 2)));
        CHECK(h.at(1).hilbert == expect(1, 2 * binom(r, 2)));
        CHECK(h.at(2).hilbert == expect(2, binom(r + 1, 2)));
        for (int k = 3; k <= 5; ++k) CHECK(h.at(k).is_zero());
    }
}

TEST_CASE("divided square in characteristic two") {
    Ring R = Ring::graded_poly(2, {"x"});
    auto res = resolution_for(conormal_data(R, {R.var(0)}), 1);
    auto h = homology(nfg(res.complex, FunctorTag::div(2)), 4);
    long total = 0;
    for (const auto& [t, d] : h.at(0).hilbert) total += d;
    CHECK(total == 2);
    Ring Q = Ring::graded_poly(0, {"x"});
    auto resq = resolution_for(conormal_data(Q, {Q.var(0)}), 1);
    auto hq = homology(nfg(resq.complex, FunctorTag::div(2)), 4);
    long tq = 0;
    for (const auto& [t, d] : hq.at(0).hilbert) tq += d;
    CHECK(tq == 1);
}

TEST_CASE("truncation bound") {
    Ring Z = Ring::integers();
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        auto rc = random_complex(rng, Z, 2, 2);
        for (int n = 1; n <= 2; ++n) {
            auto d = nfg_data(rc.complex, FunctorTag::sym(n));
            CHECK(d.level_bound == n * rc.complex.length() + 1);
            CHECK(d.complex.length() == n * rc.complex.length());
            CHECK(d.words[d.level_bound].empty());
        }
    }
}

namespace {

std::map<int, long> concentrated_at(int window, int deg, long dim) {
    std::map<int, long> m;
    for (int t = 0; t <= window; ++t) m[t] = t == deg ? dim : 0;
    return m;
}

struct FunctorSequence {
    ChainMap i, p;
};

// N D²Γ -> N T²Γ -> N Λ²Γ, or N Λ²Γ -> N T²Γ -> N Sym²Γ.
FunctorSequence functor_sequence(const ChainComplex& c, bool divided) {
    if (divided)
        return {nfg_natural_map(c, FunctorTag::div(2), FunctorTag::tensor(2),
                                [](const Module& m) { return div_to_tensor(m, 2); }),
                nfg_natural_map(c, FunctorTag::tensor(2), FunctorTag::ext(2),
                                [](const Module& m) { return tensor_to_ext(m, 2); })};
    return {nfg_natural_map(c, FunctorTag::ext(2), FunctorTag::tensor(2),
                            [](const Module& m) { return ext_to_tensor(m, 2); }),
            nfg_natural_map(c, FunctorTag::tensor(2), FunctorTag::sym(2),
                            [](const Module& m) { return tensor_to_sym(m, 2); })};
}

}  // namespace

TEST_CASE("long exact sequences of the second powers") {
    const int W = 5;
    for (long ch : {0L, 2L}) {
        Ring R = Ring::graded_poly(ch, {"x"});
        for (int r = 1; r <= 2; ++r) {
            auto res = resolution_for(conormal_data(R, {R.var(0)}), r);
            auto seq = functor_sequence(res.complex, true);
            auto les = long_exact_sequence(seq.i, seq.p, W);
            CAPTURE(ch);
            CAPTURE(r);
            CHECK(les.short_exact);
            CHECK(les.first_failure() == "");
            CHECK(les.hilbert('B', 1) == concentrated_at(W, 1, r * r));
            CHECK(les.hilbert('C', 1) == concentrated_at(W, 1, binom(r + 1, 2)));
            CHECK(les.hilbert('B', 0) == concentrated_at(W, 0, r * r));
            CHECK(les.hilbert('C', 0) == concentrated_at(W, 0, binom(r, 2)));
            if (r == 1) {
                long total = 0;
                for (const auto& [t, d] : les.hilbert('A', 0)) total += d;
                CHECK(total == (ch == 2 ? 2 : 1));
            }
        }
    }
    Ring R = Ring::graded_poly(0, {"x", "y"});
    auto ideal = conormal_data(R, std::vector<std::string>{"x", "y"});
    for (int r = 1; r <= 2; ++r) {
        auto res = resolution_for(ideal, r);
        auto seq = functor_sequence(res.complex, false);
        auto les = long_exact_sequence(seq.i, seq.p, W);
        CAPTURE(r);
        CHECK(les.exact());
        CHECK(les.hilbert('B', 2) == concentrated_at(W, 2, r * r));
        CHECK(les.hilbert('C', 2) == concentrated_at(W, 2, binom(r + 1, 2)));
        CHECK(les.hilbert('B', 1) == concentrated_at(W, 1, 2 * r * r));
        CHECK(les.hilbert('C', 1) == concentrated_at(W, 1, 2 * binom(r, 2)));
        CHECK(les.hilbert('A', 0) == concentrated_at(W, 0, binom(r, 2)));
        CHECK(les.hilbert('B', 0) == concentrated_at(W, 0, r * r));
        CHECK(les.hilbert('C', 0) == concentrated_at(W, 0, binom(r + 1, 2)));
        CHECK(les.hilbert('C', 3) == concentrated_at(W, 0, 0));
    }
    {
        Ring Qx = Ring::graded_poly(0, {"x"});
        auto res = resolution_for(conormal_data(Qx, {Qx.var(0)}), 1);
        auto seq = functor_sequence(res.complex, true);
        auto bad = long_exact_sequence(seq.i, identity_chain_map(seq.i.dst), W);
        CHECK_FALSE(bad.short_exact);
        CHECK_FALSE(bad.exact());
        CHECK(bad.first_failure() == "not short exact degreewise");
    }
    CHECK_THROWS_AS(long_exact_sequence(functor_sequence(times(Ring::integers(), 2), true).i,
                                        functor_sequence(times(Ring::integers(), 2), true).p, std::nullopt),
                    NonFieldCoefficients);
}

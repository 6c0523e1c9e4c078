#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "khl/errors.hpp"

namespace khl {

// Exponent vector packed one byte per variable (at most 8 variables,
// exponents below 256).
using Mono = std::uint64_t;

constexpr int kMaxVars = 8;

inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (8 * i)) & 0xffu); }
int mono_degree(Mono m);
Mono mono_mul(Mono a, Mono b);
Mono make_mono(const std::vector<int>& exps);
std::vector<int> mono_exps(Mono m, int nvars);
// Exact quotient a / b; returns false when b does not divide a.
bool mono_div(Mono a, Mono b, Mono& out);

struct Term {
    Mono mono;
    mpq_class coef;
    bool operator==(const Term& o) const { return mono == o.mono && coef == o.coef; }
};

// A ring element: finite sum of monomials with nonzero normalized coefficients,
// sorted by packed monomial.  Non-graded rings only ever use the unit monomial.
struct Scalar {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].mono == 0); }
    mpq_class constant() const;
    // Degree of a homogeneous element; -1 for zero, -2 if not homogeneous.
    int homogeneous_degree() const;
    mpq_class coefficient(Mono m) const;
    bool operator==(const Scalar& o) const { return terms == o.terms; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
};

enum class RingKind { Integers, IntegersMod, Rationals, GradedPoly };

class Ring {
public:
    Ring() = default;
    static Ring integers();
    static Ring rationals();
    static Ring integers_mod(long m);
    // base_char 0 means coefficients in Q, otherwise a prime p.
    static Ring graded_poly(long base_char, std::vector<std::string> vars);

    RingKind kind() const { return kind_; }
    long modulus() const { return mod_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }

    bool is_graded() const { return kind_ == RingKind::GradedPoly; }
    bool is_integers() const { return kind_ == RingKind::Integers; }
    bool is_field() const;
    // Coefficient domain of the graded ring (or the ring itself) is a field.
    bool coefficients_form_field() const;
    long characteristic() const { return mod_; }
    Ring base_field() const;
    std::string name() const;

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && mod_ == o.mod_ && vars_ == o.vars_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    mpq_class reduce(const mpq_class& c) const;

    Scalar zero() const { return {}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    Scalar from_mpq(const mpq_class& v) const;
    Scalar monomial(Mono m, const mpq_class& c) const;
    Scalar var(int i) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar scale(const Scalar& a, const mpq_class& c) const;
    // a += c * b in place
    void axpy(Scalar& a, const mpq_class& c, const Scalar& b) const;
    Scalar pow(const Scalar& a, int e) const;
    bool is_unit(const Scalar& a) const;
    Scalar inverse(const Scalar& a) const;

    Scalar parse(const std::string& text) const;
    std::string str(const Scalar& a) const;

private:
    RingKind kind_ = RingKind::Integers;
    long mod_ = 0;
    std::vector<std::string> vars_;
};

bool is_prime(long p);

}  // namespace khl

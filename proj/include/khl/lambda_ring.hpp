#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "khl/errors.hpp"

namespace khl {

// Integer polynomial in at most kLambdaVars line variables; each exponent
// stays below 16.  Variables 0..2 are u1..u3 (the class C), 3..6 are
// t1..t4 (x) and 7..10 are y1..y4 (a second class y).
constexpr int kLambdaVars = 11;
constexpr int kMaxU = 3, kMaxT = 4, kMaxY = 4;
int u_var(int i);  // zero-based
int t_var(int j);
int y_var(int j);

class LambdaElement {
public:
    using Key = std::uint64_t;

    LambdaElement() = default;
    static LambdaElement constant(const mpz_class& c);
    static LambdaElement variable(int v);

    LambdaElement operator+(const LambdaElement& o) const;
    LambdaElement operator-(const LambdaElement& o) const;
    LambdaElement operator*(const LambdaElement& o) const;
    LambdaElement operator-() const;
    LambdaElement& operator+=(const LambdaElement& o) { return *this = *this + o; }
    LambdaElement scaled(const mpz_class& c) const;
    LambdaElement pow(int e) const;
    bool operator==(const LambdaElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const LambdaElement& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    // Monomial terms sorted by the lex order with u1 largest.
    const std::vector<std::pair<Key, mpz_class>>& terms() const { return terms_; }
    static int exponent(Key k, int v);
    static Key make_key(const std::vector<int>& exps);

    LambdaElement substitute(int v, const mpz_class& value) const;
    mpz_class evaluate(const std::vector<mpz_class>& point) const;  // one value per variable
    // Invariance under every transposition of the listed variables.
    bool is_symmetric_in(const std::vector<int>& vars) const;
    LambdaElement swap_vars(int a, int b) const;
    std::string str() const;

private:
    std::vector<std::pair<Key, mpz_class>> terms_;
    static LambdaElement from_map(std::map<Key, mpz_class>&& m);
    friend std::optional<LambdaElement> exact_quotient(const LambdaElement&, const LambdaElement&);
};

// Σ of the given line variables.
LambdaElement line_sum(const std::vector<int>& vars);
LambdaElement lines_u(int d);
LambdaElement lines_t(int n);
LambdaElement lines_y(int n);

// Split form: a sum of monomials with positive coefficients, each monomial a line.
bool is_split_form(const LambdaElement& e);

// NotSplitForm unless e is in split form.
LambdaElement lambda_k(int k, const LambdaElement& e);
LambdaElement sigma_k(int k, const LambdaElement& e);
LambdaElement adams_n(int n, const LambdaElement& e);       // Newton polynomial in the λ_i
LambdaElement power_sum(int n, const LambdaElement& e);     // Σ line^n
LambdaElement schur_op(int n, int k, const LambdaElement& e);
LambdaElement bott(int n, const LambdaElement& c);
LambdaElement lambda_minus1(const LambdaElement& c);        // Π (1 - line)

// λ_k of a difference A - B of split elements: Σ_i λ_i(A) (-1)^{k-i} σ_{k-i}(B).
LambdaElement lambda_virtual(int k, const LambdaElement& e);

// Formal polynomial in λ_1, λ_2, ... without constant term.  A term is keyed
// by the multiset of λ indices it multiplies.
class OperationExpr {
public:
    using Term = std::vector<int>;  // sorted, nonempty

    static OperationExpr lambda(int i);
    static OperationExpr sigma(int n);
    static OperationExpr psi(int n);
    static OperationExpr schur(int n, int k);

    OperationExpr operator+(const OperationExpr& o) const;
    OperationExpr operator-(const OperationExpr& o) const;
    OperationExpr operator*(const OperationExpr& o) const;
    OperationExpr scaled(const mpz_class& c) const;
    bool operator==(const OperationExpr& o) const { return terms_ == o.terms_; }

    const std::map<Term, mpz_class>& terms() const { return terms_; }
    int weight() const;  // largest Σ of indices over the terms
    // Substitutes λ_i(e) using the virtual rule, so e may have negative lines.
    LambdaElement evaluate(const LambdaElement& e) const;
    std::string str() const;

private:
    std::map<Term, mpz_class> terms_;
    static OperationExpr from_terms(std::map<Term, mpz_class>&& t);
};

// μ(C, x) = μ(x·λ_{-1}(C)) / λ_{-1}(C).  NotDivisible if the quotient is not a polynomial.
LambdaElement relative_op(const OperationExpr& mu, const LambdaElement& c, const LambdaElement& x);
// μ(1, x): computed for C = u1 and then u1 = 1.
LambdaElement relative_op_trivial_line(const OperationExpr& mu, const LambdaElement& x);

std::optional<LambdaElement> exact_quotient(const LambdaElement& p, const LambdaElement& d);

struct IdentityResult {
    std::string name;
    std::map<std::string, int> params;
    bool pass = false;
    std::string detail;  // on failure: a substitution at which the two sides differ
};

struct IdentityParams {
    int d = 1;   // lines in C
    int n = 2;   // operation degree
    int N = 2;   // lines in x
    int M = 1;   // lines in y, where used
    int a = 1, b = 1;                 // degrees of the two factors in the product rule
    int kind_a = 0, kind_b = 0;       // 0 λ, 1 σ, 2 ψ
};

// Exact comparison; on failure the detail names a point where the sides differ.
IdentityResult compare_sides(std::string name, std::map<std::string, int> params, const LambdaElement& lhs,
                             const LambdaElement& rhs);

// Catalogue (see identity_names()); the returned parameters are those that
// the identity actually depends on.
IdentityResult verify_identity(const std::string& name, const IdentityParams& p);
const std::vector<std::string>& identity_names();

// Every parameter combination for the name within d ≤ 3, n ≤ 4, N ≤ 4.
std::vector<IdentityParams> identity_grid(const std::string& name);

}  // namespace khl

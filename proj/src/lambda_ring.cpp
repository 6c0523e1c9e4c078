#include "khl/lambda_ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace khl {

namespace {

constexpr int kFieldBits = 5;
constexpr LambdaElement::Key kFieldMask = 0x1f;

int shift_of(int v) { return kFieldBits * (kLambdaVars - 1 - v); }

constexpr LambdaElement::Key guard_mask() {
    LambdaElement::Key g = 0;
    for (int v = 0; v < kLambdaVars; ++v) g |= LambdaElement::Key{0x10} << (kFieldBits * v);
    return g;
}

LambdaElement::Key add_keys(LambdaElement::Key a, LambdaElement::Key b) {
    LambdaElement::Key s = a + b;
    if (s & guard_mask()) throw InvalidArgument("exponent overflow in line polynomial");
    return s;
}

std::string var_name(int v) {
    if (v < kMaxU) return "u" + std::to_string(v + 1);
    if (v < kMaxU + kMaxT) return "t" + std::to_string(v - kMaxU + 1);
    return "y" + std::to_string(v - kMaxU - kMaxT + 1);
}

void require_split(const LambdaElement& e, const char* what) {
    if (!is_split_form(e)) throw NotSplitForm(std::string(what) + " needs a sum of lines, got " + e.str());
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

int u_var(int i) {
    if (i < 0 || i >= kMaxU) throw InvalidArgument("u index out of range");
    return i;
}
int t_var(int j) {
    if (j < 0 || j >= kMaxT) throw InvalidArgument("t index out of range");
    return kMaxU + j;
}
int y_var(int j) {
    if (j < 0 || j >= kMaxY) throw InvalidArgument("y index out of range");
    return kMaxU + kMaxT + j;
}

// ---- polynomial arithmetic ----

LambdaElement LambdaElement::from_map(std::map<Key, mpz_class>&& m) {
    LambdaElement out;
    out.terms_.reserve(m.size());
    for (auto& [k, c] : m)
        if (c != 0) out.terms_.emplace_back(k, std::move(c));
    return out;
}

LambdaElement LambdaElement::constant(const mpz_class& c) {
    LambdaElement out;
    if (c != 0) out.terms_.emplace_back(Key{0}, c);
    return out;
}

LambdaElement LambdaElement::variable(int v) {
    if (v < 0 || v >= kLambdaVars) throw InvalidArgument("no such line variable");
    LambdaElement out;
    out.terms_.emplace_back(Key{1} << shift_of(v), mpz_class(1));
    return out;
}

int LambdaElement::exponent(Key k, int v) { return static_cast<int>((k >> shift_of(v)) & kFieldMask); }

LambdaElement::Key LambdaElement::make_key(const std::vector<int>& exps) {
    Key k = 0;
    for (size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] < 0 || exps[v] > 15) throw InvalidArgument("exponent out of range");
        k |= static_cast<Key>(exps[v]) << shift_of(static_cast<int>(v));
    }
    return k;
}

LambdaElement LambdaElement::operator+(const LambdaElement& o) const {
    LambdaElement out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

LambdaElement LambdaElement::operator-() const {
    LambdaElement out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

LambdaElement LambdaElement::operator-(const LambdaElement& o) const { return *this + (-o); }

LambdaElement LambdaElement::scaled(const mpz_class& c) const {
    if (c == 0) return {};
    LambdaElement out = *this;
    for (auto& t : out.terms_) t.second *= c;
    return out;
}

LambdaElement LambdaElement::operator*(const LambdaElement& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::unordered_map<Key, mpz_class> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    mpz_class prod;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            prod = ca * cb;
            acc[add_keys(ka, kb)] += prod;
        }
    LambdaElement out;
    out.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) out.terms_.emplace_back(k, std::move(c));
    std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

LambdaElement LambdaElement::pow(int e) const {
    if (e < 0) throw InvalidArgument("negative power");
    LambdaElement out = constant(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

LambdaElement LambdaElement::substitute(int v, const mpz_class& value) const {
    std::map<Key, mpz_class> m;
    for (const auto& [k, c] : terms_) {
        int e = exponent(k, v);
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), e);
        m[k & ~(kFieldMask << shift_of(v))] += c * p;
    }
    return from_map(std::move(m));
}

mpz_class LambdaElement::evaluate(const std::vector<mpz_class>& point) const {
    mpz_class total = 0, p;
    for (const auto& [k, c] : terms_) {
        mpz_class term = c;
        for (int v = 0; v < kLambdaVars; ++v) {
            int e = exponent(k, v);
            if (!e) continue;
            mpz_pow_ui(p.get_mpz_t(), point.at(v).get_mpz_t(), e);
            term *= p;
        }
        total += term;
    }
    return total;
}

LambdaElement LambdaElement::swap_vars(int a, int b) const {
    std::map<Key, mpz_class> m;
    for (const auto& [k, c] : terms_) {
        Key ea = (k >> shift_of(a)) & kFieldMask, eb = (k >> shift_of(b)) & kFieldMask;
        Key cleared = k & ~(kFieldMask << shift_of(a)) & ~(kFieldMask << shift_of(b));
        m[cleared | (ea << shift_of(b)) | (eb << shift_of(a))] += c;
    }
    return from_map(std::move(m));
}

bool LambdaElement::is_symmetric_in(const std::vector<int>& vars) const {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (swap_vars(vars[i], vars[j]) != *this) return false;
    return true;
}

std::string LambdaElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string mono;
        for (int v = 0; v < kLambdaVars; ++v) {
            int e = exponent(k, v);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        mpz_class a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (mono.empty()) os << a;
        else if (a == 1) os << mono;
        else os << a << "*" << mono;
        first = false;
    }
    return os.str();
}

std::optional<LambdaElement> exact_quotient(const LambdaElement& p, const LambdaElement& d) {
    if (d.is_zero()) throw InvalidArgument("division by zero");
    const auto& [ld, cd] = d.terms().back();
    std::map<LambdaElement::Key, mpz_class> rem(p.terms().begin(), p.terms().end());
    std::map<LambdaElement::Key, mpz_class> quo;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        LambdaElement::Key lt = top->first;
        for (int v = 0; v < kLambdaVars; ++v)
            if (LambdaElement::exponent(lt, v) < LambdaElement::exponent(ld, v)) return std::nullopt;
        if (!mpz_divisible_p(top->second.get_mpz_t(), cd.get_mpz_t())) return std::nullopt;
        mpz_class qc = top->second / cd;
        LambdaElement::Key qk = lt - ld;
        quo[qk] += qc;
        for (const auto& [k, c] : d.terms()) {
            auto& slot = rem[add_keys(qk, k)];
            slot -= qc * c;
            if (slot == 0) rem.erase(add_keys(qk, k));
        }
    }
    return LambdaElement::from_map(std::move(quo));
}

// ---- line elements ----

LambdaElement line_sum(const std::vector<int>& vars) {
    LambdaElement out;
    for (int v : vars) out += LambdaElement::variable(v);
    return out;
}

LambdaElement lines_u(int d) {
    std::vector<int> v;
    for (int i = 0; i < d; ++i) v.push_back(u_var(i));
    return line_sum(v);
}
LambdaElement lines_t(int n) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) v.push_back(t_var(i));
    return line_sum(v);
}
LambdaElement lines_y(int n) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) v.push_back(y_var(i));
    return line_sum(v);
}

bool is_split_form(const LambdaElement& e) {
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.second > 0; });
}

namespace {

LambdaElement monomial_of(LambdaElement::Key k) {
    LambdaElement m = LambdaElement::constant(1);
    for (int v = 0; v < kLambdaVars; ++v)
        for (int e = 0; e < LambdaElement::exponent(k, v); ++e) m = m * LambdaElement::variable(v);
    return m;
}

// λ_0..λ_top of a split element, as elementary symmetric functions of its lines.
std::vector<LambdaElement> elementary_all(int top, const LambdaElement& e) {
    std::vector<LambdaElement> E(top + 1);
    E[0] = LambdaElement::constant(1);
    for (const auto& [k, c] : e.terms()) {
        LambdaElement m = monomial_of(k);
        std::vector<LambdaElement> mp{LambdaElement::constant(1)};
        for (int i = 1; i <= top; ++i) mp.push_back(mp.back() * m);
        std::vector<LambdaElement> next(top + 1);
        // (1 + m t)^c
        for (int j = 0; j <= top; ++j)
            for (int i = 0; i <= j && mpz_class(i) <= c; ++i) {
                if (E[j - i].is_zero()) continue;
                next[j] += (E[j - i] * mp[i]).scaled(binomial(c.get_si(), i));
            }
        E = std::move(next);
    }
    return E;
}

// σ_0..σ_top from λ_0..λ_top by σ_n = Σ_{i=1}^{n} (-1)^{i-1} λ_i σ_{n-i}.
std::vector<LambdaElement> sigma_from_lambda(const std::vector<LambdaElement>& lam) {
    const int top = static_cast<int>(lam.size()) - 1;
    std::vector<LambdaElement> s(top + 1);
    s[0] = LambdaElement::constant(1);
    for (int n = 1; n <= top; ++n)
        for (int i = 1; i <= n; ++i) {
            LambdaElement term = lam[i] * s[n - i];
            s[n] += (i % 2) ? term : -term;
        }
    return s;
}

std::vector<LambdaElement> lambda_virtual_all(int top, const LambdaElement& e) {
    LambdaElement pos, neg;
    for (const auto& [k, c] : e.terms()) {
        LambdaElement m = monomial_of(k);
        if (c > 0) pos += m.scaled(c);
        else neg += m.scaled(-c);
    }
    auto la = elementary_all(top, pos);
    if (neg.is_zero()) return la;
    auto sb = sigma_from_lambda(elementary_all(top, neg));
    std::vector<LambdaElement> out(top + 1);
    for (int k = 0; k <= top; ++k)
        for (int i = 0; i <= k; ++i) {
            LambdaElement term = la[i] * sb[k - i];
            out[k] += ((k - i) % 2) ? -term : term;
        }
    return out;
}

}  // namespace

LambdaElement lambda_k(int k, const LambdaElement& e) {
    if (k < 0) throw InvalidArgument("negative λ index");
    require_split(e, "lambda_k");
    return elementary_all(k, e)[k];
}

LambdaElement lambda_virtual(int k, const LambdaElement& e) {
    if (k < 0) throw InvalidArgument("negative λ index");
    return lambda_virtual_all(k, e)[k];
}

LambdaElement sigma_k(int k, const LambdaElement& e) {
    if (k < 0) throw InvalidArgument("negative σ index");
    require_split(e, "sigma_k");
    return sigma_from_lambda(elementary_all(k, e))[k];
}

LambdaElement adams_n(int n, const LambdaElement& e) {
    if (n < 1) throw InvalidArgument("Adams operations start at 1");
    require_split(e, "adams_n");
    return OperationExpr::psi(n).evaluate(e);
}

LambdaElement power_sum(int n, const LambdaElement& e) {
    require_split(e, "power_sum");
    LambdaElement out;
    for (const auto& [k, c] : e.terms()) out += monomial_of(k).pow(n).scaled(c);
    return out;
}

LambdaElement schur_op(int n, int k, const LambdaElement& e) {
    require_split(e, "schur_op");
    return OperationExpr::schur(n, k).evaluate(e);
}

LambdaElement bott(int n, const LambdaElement& c) {
    if (n < 1) throw InvalidArgument("Bott elements start at 1");
    require_split(c, "bott");
    LambdaElement out = LambdaElement::constant(1);
    for (const auto& [k, mult] : c.terms()) {
        LambdaElement m = monomial_of(k), geo;
        for (int i = 0; i < n; ++i) geo += m.pow(i);
        out = out * geo.pow(static_cast<int>(mult.get_si()));
    }
    return out;
}

LambdaElement lambda_minus1(const LambdaElement& c) {
    require_split(c, "lambda_minus1");
    LambdaElement out = LambdaElement::constant(1);
    for (const auto& [k, mult] : c.terms())
        out = out * (LambdaElement::constant(1) - monomial_of(k)).pow(static_cast<int>(mult.get_si()));
    return out;
}

// ---- operation expressions ----

namespace {

using TermMap = std::map<OperationExpr::Term, mpz_class>;

TermMap mul_terms(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b) {
            OperationExpr::Term t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            std::sort(t.begin(), t.end());
            out[t] += ca * cb;
        }
    return out;
}

void add_into(TermMap& acc, const TermMap& x, const mpz_class& c) {
    for (const auto& [t, v] : x) acc[t] += c * v;
}

TermMap single(int i) { return {{OperationExpr::Term{i}, mpz_class(1)}}; }

// σ_0..σ_n with σ_0 = 1 represented by the empty term.
std::vector<TermMap> sigma_terms(int n) {
    std::vector<TermMap> s(n + 1);
    s[0][{}] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 1; i <= m; ++i) add_into(s[m], mul_terms(single(i), s[m - i]), i % 2 ? 1 : -1);
    return s;
}

}  // namespace

OperationExpr OperationExpr::from_terms(TermMap&& t) {
    OperationExpr out;
    for (auto& [k, c] : t) {
        if (c == 0) continue;
        if (k.empty()) throw InvalidArgument("operation expressions have no constant term");
        out.terms_.emplace(k, std::move(c));
    }
    return out;
}

OperationExpr OperationExpr::lambda(int i) {
    if (i < 1) throw InvalidArgument("λ index starts at 1");
    return from_terms(single(i));
}

OperationExpr OperationExpr::sigma(int n) {
    if (n < 1) throw InvalidArgument("σ index starts at 1");
    return from_terms(std::move(sigma_terms(n)[n]));
}

OperationExpr OperationExpr::psi(int n) {
    if (n < 1) throw InvalidArgument("ψ index starts at 1");
    std::vector<TermMap> p(n + 1);
    for (int m = 1; m <= n; ++m) {
        for (int i = 1; i < m; ++i) add_into(p[m], mul_terms(single(i), p[m - i]), i % 2 ? 1 : -1);
        add_into(p[m], single(m), (m % 2 ? 1 : -1) * m);
    }
    return from_terms(std::move(p[n]));
}

OperationExpr OperationExpr::schur(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw InvalidArgument("schur operation needs 0 <= k < n");
    auto s = sigma_terms(n);
    TermMap out;
    for (int i = k + 1; i <= n; ++i) add_into(out, mul_terms(single(i), s[n - i]), (i - k - 1) % 2 ? -1 : 1);
    return from_terms(std::move(out));
}

OperationExpr OperationExpr::operator+(const OperationExpr& o) const {
    TermMap t = terms_;
    add_into(t, o.terms_, 1);
    return from_terms(std::move(t));
}

OperationExpr OperationExpr::operator-(const OperationExpr& o) const {
    TermMap t = terms_;
    add_into(t, o.terms_, -1);
    return from_terms(std::move(t));
}

OperationExpr OperationExpr::operator*(const OperationExpr& o) const { return from_terms(mul_terms(terms_, o.terms_)); }

OperationExpr OperationExpr::scaled(const mpz_class& c) const {
    TermMap t;
    add_into(t, terms_, c);
    return from_terms(std::move(t));
}

int OperationExpr::weight() const {
    int w = 0;
    for (const auto& [t, c] : terms_) {
        int s = 0;
        for (int i : t) s += i;
        w = std::max(w, s);
    }
    return w;
}

LambdaElement OperationExpr::evaluate(const LambdaElement& e) const {
    int top = 0;
    for (const auto& [t, c] : terms_) top = std::max(top, t.back());
    auto lam = lambda_virtual_all(top, e);
    LambdaElement out;
    for (const auto& [t, c] : terms_) {
        LambdaElement prod = lam[t[0]];
        for (size_t i = 1; i < t.size(); ++i) prod = prod * lam[t[i]];
        out += prod.scaled(c);
    }
    return out;
}

std::string OperationExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (a != 1) os << a << "*";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? "*" : "") << "l" << t[i];
        first = false;
    }
    return os.str();
}

LambdaElement relative_op(const OperationExpr& mu, const LambdaElement& c, const LambdaElement& x) {
    require_split(x, "relative_op");
    LambdaElement lm1 = lambda_minus1(c);
    if (lm1.is_zero()) throw InvalidArgument("λ_{-1}(C) vanishes; use relative_op_trivial_line");
    auto q = exact_quotient(mu.evaluate(x * lm1), lm1);
    if (!q) throw NotDivisible(mu.str() + " applied to x·λ_{-1}(C)");
    return *q;
}

LambdaElement relative_op_trivial_line(const OperationExpr& mu, const LambdaElement& x) {
    return relative_op(mu, LambdaElement::variable(u_var(0)), x).substitute(u_var(0), 1);
}

// ---- identity catalogue ----

namespace {

OperationExpr op_of(int kind, int deg) {
    switch (kind) {
        case 0: return OperationExpr::lambda(deg);
        case 1: return OperationExpr::sigma(deg);
        case 2: return OperationExpr::psi(deg);
    }
    throw InvalidArgument("operation kind is 0, 1 or 2");
}

std::string describe_difference(const LambdaElement& lhs, const LambdaElement& rhs) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int shift = 0; shift < 8; ++shift) {
        std::vector<mpz_class> pt;
        for (int v = 0; v < kLambdaVars; ++v) pt.push_back(primes[v] + shift);
        mpz_class a = lhs.evaluate(pt), b = rhs.evaluate(pt);
        if (a == b) continue;
        std::ostringstream os;
        std::vector<int> used;
        for (const auto* e : {&lhs, &rhs})
            for (const auto& [k, c] : e->terms())
                for (int v = 0; v < kLambdaVars; ++v)
                    if (LambdaElement::exponent(k, v)) used.push_back(v);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        for (size_t i = 0; i < used.size(); ++i) os << (i ? ", " : "") << var_name(used[i]) << "=" << pt[used[i]];
        os << ": lhs=" << a << " rhs=" << b;
        return os.str();
    }
    return "sides differ as polynomials: lhs-rhs = " + (lhs - rhs).str();
}

void check_range(const IdentityParams& p) {
    if (p.d < 0 || p.d > kMaxU || p.N < 1 || p.N > kMaxT || p.M < 1 || p.M > kMaxY || p.n < 1)
        throw InvalidArgument("identity parameters outside d <= 3, N <= 4, M <= 4");
}

}  // namespace

IdentityResult compare_sides(std::string name, std::map<std::string, int> params, const LambdaElement& lhs,
                             const LambdaElement& rhs) {
    IdentityResult r{std::move(name), std::move(params), lhs == rhs, {}};
    if (!r.pass) r.detail = describe_difference(lhs, rhs);
    return r;
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names{
        "product_rule",         "sum_rule",        "adams_bott",      "line_schur_expansion",
        "trivial_line_adams",   "sigma2_alternation", "sigma3_rank2", "generating_series",
        "newton_power_sum",     "adams_additive", "adams_multiplicative", "sigma_negation"};
    return names;
}

IdentityResult verify_identity(const std::string& name, const IdentityParams& p) {
    check_range(p);
    const LambdaElement C = lines_u(p.d), x = lines_t(p.N), y = lines_y(p.M);
    if (name == "product_rule") {
        if (p.d < 1) throw InvalidArgument("product_rule needs d >= 1");
        OperationExpr m1 = op_of(p.kind_a, p.a), m2 = op_of(p.kind_b, p.b);
        return compare_sides(name, {{"d", p.d}, {"N", p.N}, {"a", p.a}, {"b", p.b}, {"kind_a", p.kind_a}, {"kind_b", p.kind_b}},
                       relative_op(m1 * m2, C, x),
                       relative_op(m1, C, x) * relative_op(m2, C, x) * lambda_minus1(C));
    }
    if (name == "sum_rule") {
        if (p.d < 1) throw InvalidArgument("sum_rule needs d >= 1");
        auto sx = [&](int i) { return relative_op(OperationExpr::sigma(i), C, x); };
        auto sy = [&](int i) { return relative_op(OperationExpr::sigma(i), C, y); };
        LambdaElement rhs = sx(p.n) + sy(p.n), lm1 = lambda_minus1(C);
        for (int i = 1; i < p.n; ++i) rhs += sx(i) * sy(p.n - i) * lm1;
        return compare_sides(name, {{"d", p.d}, {"n", p.n}, {"N", p.N}, {"M", p.M}},
                       relative_op(OperationExpr::sigma(p.n), C, x + y), rhs);
    }
    if (name == "adams_bott") {
        if (p.d < 1) throw InvalidArgument("adams_bott needs d >= 1");
        return compare_sides(name, {{"d", p.d}, {"n", p.n}, {"N", p.N}}, relative_op(OperationExpr::psi(p.n), C, x),
                       bott(p.n, C) * adams_n(p.n, x));
    }
    if (name == "line_schur_expansion") {
        const LambdaElement line = lines_u(1);
        LambdaElement rhs;
        for (int k = 0; k < p.n; ++k) {
            LambdaElement term = schur_op(p.n, k, x) * line.pow(k);
            rhs += k % 2 ? -term : term;
        }
        return compare_sides(name, {{"n", p.n}, {"N", p.N}}, relative_op(OperationExpr::sigma(p.n), line, x), rhs);
    }
    if (name == "trivial_line_adams") {
        return compare_sides(name, {{"n", p.n}, {"N", p.N}}, relative_op_trivial_line(OperationExpr::sigma(p.n), x),
                       adams_n(p.n, x));
    }
    if (name == "sigma2_alternation") {
        if (p.d < 1) throw InvalidArgument("sigma2_alternation needs d >= 1");
        LambdaElement s2 = sigma_k(2, x), l2 = lambda_k(2, x), rhs;
        for (int i = 0; i <= p.d; ++i) {
            LambdaElement term = (i % 2 ? l2 : s2) * lambda_k(i, C);
            rhs += i % 2 ? -term : term;
        }
        return compare_sides(name, {{"d", p.d}, {"N", p.N}}, relative_op(OperationExpr::sigma(2), C, x), rhs);
    }
    if (name == "sigma3_rank2") {
        const LambdaElement C2 = lines_u(2);
        LambdaElement s3 = sigma_k(3, x), s13 = schur_op(3, 1, x), l2c = lambda_k(2, C2);
        LambdaElement rhs = s3 - s13 * C2 + (sigma_k(2, x) * x * l2c + lambda_k(3, x) * sigma_k(2, C2)) -
                            s13 * C2 * l2c + s3 * l2c * l2c;
        return compare_sides(name, {{"d", 2}, {"N", p.N}}, relative_op(OperationExpr::sigma(3), C2, x), rhs);
    }
    if (name == "generating_series") {
        LambdaElement acc;
        for (int i = 0; i <= p.n; ++i) {
            LambdaElement term = lambda_k(i, x) * sigma_k(p.n - i, x);
            acc += i % 2 ? -term : term;
        }
        return compare_sides(name, {{"n", p.n}, {"N", p.N}}, acc, {});
    }
    if (name == "newton_power_sum")
        return compare_sides(name, {{"n", p.n}, {"N", p.N}}, adams_n(p.n, x), power_sum(p.n, x));
    if (name == "adams_additive")
        return compare_sides(name, {{"n", p.n}, {"N", p.N}, {"M", p.M}}, adams_n(p.n, x + y), adams_n(p.n, x) + adams_n(p.n, y));
    if (name == "adams_multiplicative")
        return compare_sides(name, {{"n", p.n}, {"N", p.N}, {"M", p.M}}, adams_n(p.n, x * y), adams_n(p.n, x) * adams_n(p.n, y));
    if (name == "sigma_negation") {
        LambdaElement s = OperationExpr::sigma(p.n).evaluate(-x);
        LambdaElement l = lambda_k(p.n, x);
        return compare_sides(name, {{"n", p.n}, {"N", p.N}}, s, p.n % 2 ? -l : l);
    }
    throw InvalidArgument("unknown identity " + name);
}

std::vector<IdentityParams> identity_grid(const std::string& name) {
    std::vector<IdentityParams> out;
    auto base = [](int d, int n, int N, int M) {
        IdentityParams p;
        p.d = d;
        p.n = n;
        p.N = N;
        p.M = M;
        return p;
    };
    if (name == "product_rule") {
        for (int d = 1; d <= 3; ++d)
            for (int N = 1; N <= 4; ++N)
                for (int a = 1; a <= 3; ++a)
                    for (int b = 1; a + b <= 4; ++b)
                        for (int ka = 0; ka < 3; ++ka)
                            for (int kb = 0; kb < 3; ++kb) {
                                // the identity is symmetric in the two factors
                                if (std::make_pair(ka, a) > std::make_pair(kb, b)) continue;
                                IdentityParams p = base(d, a + b, N, 1);
                                p.a = a;
                                p.b = b;
                                p.kind_a = ka;
                                p.kind_b = kb;
                                out.push_back(p);
                            }
    } else if (name == "sum_rule") {
        for (int d = 1; d <= 3; ++d)
            for (int n = 1; n <= 4; ++n)
                for (int N = 1; N <= 4; ++N)
                    for (int M = 1; M <= 4; ++M)
                        out.push_back(base(d, n, N, M));
    } else if (name == "adams_bott") {
        for (int d = 1; d <= 3; ++d)
            for (int n = 1; n <= 4; ++n)
                for (int N = 1; N <= 4; ++N) out.push_back(base(d, n, N, 1));
    } else if (name == "sigma2_alternation") {
        for (int d = 1; d <= 3; ++d)
            for (int N = 1; N <= 4; ++N) out.push_back(base(d, 2, N, 1));
    } else if (name == "sigma3_rank2") {
        for (int N = 1; N <= 4; ++N) out.push_back(base(2, 3, N, 1));
    } else if (name == "adams_additive" || name == "adams_multiplicative") {
        for (int n = 1; n <= 4; ++n)
            for (int N = 1; N <= 4; ++N)
                for (int M = 1; M <= 2; ++M) out.push_back(base(1, n, N, M));
    } else if (name == "generating_series" || name == "newton_power_sum" || name == "sigma_negation" ||
               name == "line_schur_expansion" || name == "trivial_line_adams") {
        for (int n = 1; n <= 4; ++n)
            for (int N = 1; N <= 4; ++N) out.push_back(base(1, n, N, 1));
    } else {
        throw InvalidArgument("unknown identity " + name);
    }
    return out;
}

}  // namespace khl

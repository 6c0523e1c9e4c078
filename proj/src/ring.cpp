#include "khl/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace khl {

int mono_degree(Mono m) {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += mono_exp(m, i);
    return d;
}

Mono mono_mul(Mono a, Mono b) {
    Mono out = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = mono_exp(a, i) + mono_exp(b, i);
        if (e > 255) throw InvalidArgument("monomial exponent overflow");
        out |= static_cast<Mono>(e) << (8 * i);
    }
    return out;
}

bool mono_div(Mono a, Mono b, Mono& out) {
    out = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = mono_exp(a, i) - mono_exp(b, i);
        if (e < 0) return false;
        out |= static_cast<Mono>(e) << (8 * i);
    }
    return true;
}

Mono make_mono(const std::vector<int>& exps) {
    if (exps.size() > static_cast<size_t>(kMaxVars)) throw InvalidArgument("too many variables");
    Mono m = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 255) throw InvalidArgument("exponent out of range");
        m |= static_cast<Mono>(exps[i]) << (8 * i);
    }
    return m;
}

std::vector<int> mono_exps(Mono m, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
    return e;
}

mpq_class Scalar::constant() const {
    for (const auto& t : terms)
        if (t.mono == 0) return t.coef;
    return 0;
}

int Scalar::homogeneous_degree() const {
    if (terms.empty()) return -1;
    int d = mono_degree(terms[0].mono);
    for (const auto& t : terms)
        if (mono_degree(t.mono) != d) return -2;
    return d;
}

mpq_class Scalar::coefficient(Mono m) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), m,
                               [](const Term& t, Mono v) { return t.mono < v; });
    if (it != terms.end() && it->mono == m) return it->coef;
    return 0;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Ring Ring::integers() { return Ring(); }

Ring Ring::rationals() {
    Ring r;
    r.kind_ = RingKind::Rationals;
    return r;
}

Ring Ring::integers_mod(long m) {
    if (m < 2) throw InvalidArgument("IntegersMod needs m >= 2");
    Ring r;
    r.kind_ = RingKind::IntegersMod;
    r.mod_ = m;
    return r;
}

Ring Ring::graded_poly(long base_char, std::vector<std::string> vars) {
    if (base_char != 0 && !is_prime(base_char))
        throw InvalidArgument("graded polynomial base must be a field");
    if (vars.size() > static_cast<size_t>(kMaxVars)) throw InvalidArgument("too many variables");
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("variable names must be distinct");
    Ring r;
    r.kind_ = RingKind::GradedPoly;
    r.mod_ = base_char;
    r.vars_ = std::move(vars);
    return r;
}

bool Ring::is_field() const {
    switch (kind_) {
        case RingKind::Rationals: return true;
        case RingKind::IntegersMod: return is_prime(mod_);
        default: return false;
    }
}

bool Ring::coefficients_form_field() const {
    if (kind_ == RingKind::GradedPoly) return true;
    return is_field();
}

Ring Ring::base_field() const {
    if (kind_ != RingKind::GradedPoly) return *this;
    return mod_ == 0 ? rationals() : integers_mod(mod_);
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::IntegersMod: return "Z/" + std::to_string(mod_);
        case RingKind::GradedPoly: {
            std::string s = mod_ == 0 ? "Q[" : "F" + std::to_string(mod_) + "[";
            for (size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
            return s + "]";
        }
    }
    return "?";
}

static mpz_class mod_inverse(const mpz_class& a, long m) {
    mpz_class inv, mm = m;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw InvalidArgument("denominator not invertible modulo " + std::to_string(m));
    return inv;
}

mpq_class Ring::reduce(const mpq_class& c) const {
    if (mod_ == 0) {
        if (kind_ == RingKind::Integers && c.get_den() != 1)
            throw InvalidArgument("non-integral value in Z");
        return c;
    }
    mpz_class m = mod_;
    mpz_class num = c.get_num() % m;
    if (num < 0) num += m;
    if (c.get_den() != 1) {
        num = (num * mod_inverse(c.get_den(), mod_)) % m;
    }
    return mpq_class(num);
}

Scalar Ring::from_int(long v) const { return from_mpq(mpq_class(v)); }
Scalar Ring::from_mpz(const mpz_class& v) const { return from_mpq(mpq_class(v)); }

Scalar Ring::from_mpq(const mpq_class& v) const { return monomial(0, v); }

Scalar Ring::monomial(Mono m, const mpq_class& c) const {
    Scalar s;
    if (m != 0 && kind_ != RingKind::GradedPoly) throw InvalidArgument("monomial in ungraded ring");
    mpq_class r = reduce(c);
    if (r != 0) s.terms.push_back({m, r});
    return s;
}

Scalar Ring::var(int i) const {
    if (kind_ != RingKind::GradedPoly || i < 0 || i >= nvars()) throw InvalidArgument("no such variable");
    return monomial(static_cast<Mono>(1) << (8 * i), 1);
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
    Scalar out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].mono < b.terms[j].mono)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].mono < a.terms[i].mono) {
            out.terms.push_back(b.terms[j++]);
        } else {
            mpq_class c = reduce(a.terms[i].coef + b.terms[j].coef);
            if (c != 0) out.terms.push_back({a.terms[i].mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

Scalar Ring::neg(const Scalar& a) const { return scale(a, -1); }

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Ring::scale(const Scalar& a, const mpq_class& c) const {
    Scalar out;
    if (c == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        mpq_class v = reduce(t.coef * c);
        if (v != 0) out.terms.push_back({t.mono, v});
    }
    return out;
}

void Ring::axpy(Scalar& a, const mpq_class& c, const Scalar& b) const {
    if (c == 0 || b.is_zero()) return;
    if (a.is_constant() && b.is_constant()) {
        mpq_class v = reduce(a.constant() + c * b.constant());
        a.terms.clear();
        if (v != 0) a.terms.push_back({0, v});
        return;
    }
    a = add(a, scale(b, c));
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
    Scalar out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.terms.size() == 1 && b.terms.size() == 1) {
        mpq_class c = reduce(a.terms[0].coef * b.terms[0].coef);
        if (c != 0) out.terms.push_back({mono_mul(a.terms[0].mono, b.terms[0].mono), c});
        return out;
    }
    std::vector<Term> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) raw.push_back({mono_mul(x.mono, y.mono), x.coef * y.coef});
    std::sort(raw.begin(), raw.end(), [](const Term& p, const Term& q) { return p.mono < q.mono; });
    for (size_t i = 0; i < raw.size();) {
        size_t j = i;
        mpq_class c = 0;
        while (j < raw.size() && raw[j].mono == raw[i].mono) c += raw[j++].coef;
        c = reduce(c);
        if (c != 0) out.terms.push_back({raw[i].mono, c});
        i = j;
    }
    return out;
}

Scalar Ring::pow(const Scalar& a, int e) const {
    Scalar r = one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

bool Ring::is_unit(const Scalar& a) const {
    if (!a.is_constant() || a.is_zero()) return false;
    mpq_class c = a.constant();
    switch (kind_) {
        case RingKind::Integers: return c == 1 || c == -1;
        case RingKind::Rationals: return true;
        case RingKind::IntegersMod: return gcd(c.get_num(), mpz_class(mod_)) == 1;
        case RingKind::GradedPoly: return true;
    }
    return false;
}

Scalar Ring::inverse(const Scalar& a) const {
    if (!is_unit(a)) throw InvalidArgument("element is not a unit");
    mpq_class c = a.constant();
    if (mod_ != 0) return from_mpz(mod_inverse(c.get_num(), mod_));
    return from_mpq(1 / c);
}

namespace {

struct Parser {
    const Ring& ring;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
    }
    int read_int() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }
    Scalar expr() {
        skip();
        Scalar acc;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                break;
            }
            Scalar t = term();
            acc = sign > 0 ? ring.add(acc, t) : ring.sub(acc, t);
            first = false;
            skip();
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
        }
        return acc;
    }
    Scalar term() {
        Scalar acc = factor();
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc = ring.mul(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }
    Scalar power(Scalar base) {
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            base = ring.pow(base, read_int());
        }
        return base;
    }
    Scalar factor() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar inner = expr();
            skip();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpq_class v(mpz_class(s.substr(start, pos - start)));
            skip();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                skip();
                size_t st = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (st == pos) fail("expected denominator");
                v /= mpq_class(mpz_class(s.substr(st, pos - st)));
            }
            return power(ring.from_mpq(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            const auto& vs = ring.vars();
            auto it = std::find(vs.begin(), vs.end(), name);
            if (it == vs.end()) fail("unknown variable '" + name + "'");
            return power(ring.var(static_cast<int>(it - vs.begin())));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Scalar Ring::parse(const std::string& text) const {
    Parser p{*this, text};
    Scalar v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

std::string Ring::str(const Scalar& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest-degree terms first reads more naturally.
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        mpq_class c = it->coef;
        bool negative = c < 0 && mod_ == 0;
        if (negative) c = -c;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        std::string mono;
        for (int i = 0; i < nvars(); ++i) {
            int e = mono_exp(it->mono, i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) os << c.get_str();
        else if (c == 1) os << mono;
        else os << c.get_str() << "*" << mono;
    }
    return os.str();
}

}  // namespace khl

/*
   Copyright 2026 The qcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <cctype>

#include "qcodes/poly.hpp"

namespace qcodes {

namespace {

using Coeff = DensePolynomial::Coeff;

Coeff inverse_mod(Coeff a, unsigned p) {
    if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
    return static_cast<Coeff>(powmod(a, p - 2, p));
}

}  // namespace

DensePolynomial::DensePolynomial(unsigned p, const std::vector<i64>& coeffs) : p_(p) {
    if (p < 2) throw std::invalid_argument("DensePolynomial: modulus must be a prime >= 2");
    coeffs_.reserve(coeffs.size());
    for (i64 c : coeffs) coeffs_.push_back(static_cast<Coeff>(mod_canonical(c, p)));
    trim();
}

DensePolynomial DensePolynomial::constant(unsigned p, i64 c) { return DensePolynomial(p, std::vector<i64>{c}); }

DensePolynomial DensePolynomial::monomial(unsigned p, i64 c, std::size_t degree) {
    std::vector<i64> v(degree + 1, 0);
    v[degree] = c;
    return DensePolynomial(p, v);
}

Coeff DensePolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void DensePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void DensePolynomial::check_same_field(const DensePolynomial& other) const {
    if (p_ != other.p_) throw std::invalid_argument("polynomials over different prime fields");
}

DensePolynomial DensePolynomial::monic() const {
    if (is_zero()) return *this;
    DensePolynomial out = *this;
    const Coeff inv = inverse_mod(leading(), p_);
    for (auto& c : out.coeffs_) c = c * inv % p_;
    return out;
}

DensePolynomial DensePolynomial::derivative() const {
    DensePolynomial out(p_);
    if (coeffs_.size() <= 1) return out;
    out.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.coeffs_[i - 1] = static_cast<Coeff>(coeffs_[i] * (i % p_) % p_);
    out.trim();
    return out;
}

Coeff DensePolynomial::evaluate(Coeff at) const {
    u64 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * at + *it) % p_;
    return static_cast<Coeff>(acc);
}

DensePolynomial DensePolynomial::operator-() const {
    DensePolynomial out = *this;
    for (auto& c : out.coeffs_) c = (p_ - c) % p_;
    return out;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) % p_;
    trim();
    return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + p_ - rhs.coeffs_[i]) % p_;
    trim();
    return *this;
}

DensePolynomial& DensePolynomial::operator*=(const DensePolynomial& rhs) {
    check_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<u64> acc(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) acc[i + j] += u64{coeffs_[i]} * rhs.coeffs_[j];
    }
    coeffs_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) coeffs_[i] = static_cast<Coeff>(acc[i] % p_);
    trim();
    return *this;
}

DensePolynomial& DensePolynomial::scale(i64 c) {
    const auto k = static_cast<Coeff>(mod_canonical(c, p_));
    for (auto& v : coeffs_) v = v * k % p_;
    trim();
    return *this;
}

bool canonical_less(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

DivMod poly_divmod(const DensePolynomial& f, const DensePolynomial& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.p() != g.p()) throw std::invalid_argument("polynomials over different prime fields");
    const unsigned p = f.p();
    const int dg = g.degree();
    if (f.degree() < dg) return {DensePolynomial(p), f};

    std::vector<i64> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<i64> quot(static_cast<std::size_t>(f.degree() - dg + 1), 0);
    const u64 inv_lead = inverse_mod(g.leading(), p);
    const auto gc = g.coeffs();
    for (int i = f.degree(); i >= dg; --i) {
        const u64 c = static_cast<u64>(rem[static_cast<std::size_t>(i)]) % p;
        if (c == 0) continue;
        const u64 q = c * inv_lead % p;
        quot[static_cast<std::size_t>(i - dg)] = static_cast<i64>(q);
        for (int j = 0; j <= dg; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dg + j)];
            r = static_cast<i64>((static_cast<u64>(r) + p * p - q * gc[static_cast<std::size_t>(j)] % p) % p);
        }
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {DensePolynomial(p, quot), DensePolynomial(p, rem)};
}

DensePolynomial poly_gcd(const DensePolynomial& f, const DensePolynomial& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    DensePolynomial a = f;
    DensePolynomial b = g;
    while (!b.is_zero()) {
        DensePolynomial r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

DensePolynomial poly_pow(const DensePolynomial& base, u64 exp) {
    DensePolynomial result = DensePolynomial::constant(base.p(), 1);
    DensePolynomial b = base;
    while (exp != 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp != 0) b *= b;
    }
    return result;
}

DensePolynomial poly_mulmod(const DensePolynomial& a, const DensePolynomial& b, const DensePolynomial& mod) {
    return poly_divmod(a * b, mod).remainder;
}

DensePolynomial poly_powmod(const DensePolynomial& base, u64 exp, const DensePolynomial& mod) {
    DensePolynomial result = poly_divmod(DensePolynomial::constant(base.p(), 1), mod).remainder;
    DensePolynomial b = poly_divmod(base, mod).remainder;
    while (exp != 0) {
        if (exp & 1U) result = poly_mulmod(result, b, mod);
        exp >>= 1U;
        if (exp != 0) b = poly_mulmod(b, b, mod);
    }
    return result;
}

DensePolynomial xq_pow_mod(const DensePolynomial& f, unsigned k) {
    if (f.degree() < 1) throw std::domain_error("xq_pow_mod: modulus must be nonconstant");
    DensePolynomial h = poly_divmod(DensePolynomial::x(f.p()), f).remainder;
    for (unsigned i = 0; i < k; ++i) h = poly_powmod(h, f.p(), f);
    return h;
}

bool is_irreducible(const DensePolynomial& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const DensePolynomial x = DensePolynomial::x(f.p());
    DensePolynomial h = poly_divmod(x, f).remainder;
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        h = poly_powmod(h, f.p(), f);
        if (!poly_gcd(f, h - x).is_one()) return false;
    }
    return true;
}

DensePolynomial Factorization::expand() const {
    DensePolynomial out = DensePolynomial::constant(p, unit);
    for (const auto& term : factors) out *= poly_pow(term.factor, term.multiplicity);
    return out;
}

std::vector<std::pair<int, unsigned>> Factorization::degree_multiset() const {
    std::vector<std::pair<int, unsigned>> out;
    out.reserve(factors.size());
    for (const auto& t : factors) out.emplace_back(t.factor.degree(), t.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FactorTerm> squarefree_decomposition(const DensePolynomial& monic_f) {
    if (!monic_f.is_monic()) throw std::invalid_argument("squarefree_decomposition: input must be monic");
    const unsigned p = monic_f.p();
    std::vector<FactorTerm> out;
    if (monic_f.degree() == 0) return out;

    DensePolynomial c = poly_gcd(monic_f, monic_f.derivative());
    DensePolynomial w = poly_divmod(monic_f, c).quotient;
    unsigned i = 1;
    while (!w.is_one()) {
        DensePolynomial y = poly_gcd(w, c);
        DensePolynomial z = poly_divmod(w, y).quotient;
        if (!z.is_one()) out.push_back({z, i});
        ++i;
        w = std::move(y);
        c = poly_divmod(c, w).quotient;
    }
    if (!c.is_one()) {
        // Whatever is left has zero derivative, so it is a polynomial in x^p.
        std::vector<i64> root;
        for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) root.push_back(c.coeff(static_cast<std::size_t>(k)));
        for (auto& term : squarefree_decomposition(DensePolynomial(p, root))) {
            term.multiplicity *= p;
            out.push_back(std::move(term));
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorTerm& a, const FactorTerm& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

std::vector<std::pair<unsigned, DensePolynomial>> distinct_degree_split(const DensePolynomial& f) {
    if (!f.is_monic()) throw std::invalid_argument("distinct_degree_split: input must be monic");
    std::vector<std::pair<unsigned, DensePolynomial>> out;
    const DensePolynomial x = DensePolynomial::x(f.p());
    DensePolynomial rest = f;
    DensePolynomial h = x;
    for (unsigned d = 1; rest.degree() > 0; ++d) {
        if (rest.degree() < static_cast<int>(2 * d)) {
            out.emplace_back(static_cast<unsigned>(rest.degree()), rest);
            break;
        }
        h = poly_powmod(h, rest.p(), rest);
        DensePolynomial g = poly_gcd(rest, h - x);
        if (!g.is_one()) {
            rest = poly_divmod(rest, g).quotient;
            h = poly_divmod(h, rest).remainder;
            out.emplace_back(d, std::move(g));
        }
    }
    return out;
}

namespace {

u64 splitmix64(u64 x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

class CounterStream {
   public:
    explicit CounterStream(u64 key) : key_(key) {}
    u64 next() { return splitmix64(key_ ^ splitmix64(counter_++)); }

   private:
    u64 key_;
    u64 counter_ = 0;
};

u64 key_from_coefficients(const DensePolynomial& f) {
    u64 h = splitmix64(f.p());
    for (Coeff c : f.coeffs()) h = splitmix64(h ^ c);
    return h;
}

// a^((p^d - 1)/2) mod g, written as (a^(1 + p + ... + p^(d-1)))^((p-1)/2) to stay in 64 bits.
DensePolynomial half_norm_power(const DensePolynomial& a, unsigned d, const DensePolynomial& g) {
    const unsigned p = g.p();
    DensePolynomial t = a;
    DensePolynomial acc = a;
    for (unsigned i = 1; i < d; ++i) {
        t = poly_powmod(t, p, g);
        acc = poly_mulmod(acc, t, g);
    }
    return poly_powmod(acc, (p - 1) / 2, g);
}

void equal_degree_split(const DensePolynomial& g, unsigned d, CounterStream& rng, std::vector<DensePolynomial>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const unsigned p = g.p();
    const DensePolynomial one = DensePolynomial::constant(p, 1);
    for (;;) {
        std::vector<i64> coeffs(static_cast<std::size_t>(g.degree()));
        for (auto& c : coeffs) c = static_cast<i64>(rng.next() % p);
        DensePolynomial a(p, coeffs);
        if (a.degree() < 1) continue;
        DensePolynomial split = poly_gcd(g, a);
        if (split.is_one()) split = poly_gcd(g, half_norm_power(a, d, g) - one);
        if (split.is_one() || split.degree() == g.degree()) continue;
        equal_degree_split(split, d, rng, out);
        equal_degree_split(poly_divmod(g, split).quotient, d, rng, out);
        return;
    }
}

}  // namespace

Factorization factor(const DensePolynomial& f, std::optional<u64> seed) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    if (f.p() % 2 == 0) throw std::invalid_argument("factor: modulus must be an odd prime");
    Factorization out;
    out.p = f.p();
    out.unit = f.leading();
    CounterStream rng(seed ? splitmix64(*seed) : key_from_coefficients(f));
    for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
        for (const auto& [d, block] : distinct_degree_split(part)) {
            std::vector<DensePolynomial> irreducibles;
            equal_degree_split(block, d, rng, irreducibles);
            for (auto& q : irreducibles) out.factors.push_back({std::move(q), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorTerm& a, const FactorTerm& b) { return canonical_less(a.factor, b.factor); });
    return out;
}

// ---- text format ----------------------------------------------------------

ParseError::ParseError(const std::string& message, std::string text, std::size_t position)
    : std::invalid_argument(message + " at column " + std::to_string(position + 1)),
      text_(std::move(text)),
      position_(position) {}

std::string ParseError::caret_diagnostic() const {
    return text_ + "\n" + std::string(std::min(position_, text_.size()), ' ') + "^";
}

namespace {

constexpr u64 kMaxExponent = 1U << 20U;

class ExpressionParser {
   public:
    ExpressionParser(std::string_view text, unsigned p) : text_(text), p_(p) {}

    DensePolynomial parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        DensePolynomial value = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return value;
    }

   private:
    DensePolynomial expr() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        DensePolynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            if (c == '+')
                acc += term();
            else
                acc -= term();
        }
    }

    DensePolynomial term() {
        DensePolynomial acc = power();
        for (;;) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc *= power();
            } else if (starts_primary()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    DensePolynomial power() {
        DensePolynomial base = primary();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        const std::size_t where = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        u64 e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<u64>(text_[pos_++] - '0');
            if (e > kMaxExponent) fail_at("exponent too large", where);
        }
        return poly_pow(base, e);
    }

    DensePolynomial primary() {
        skip_space();
        const char c = peek();
        if (c == 'x' || c == 'X') {
            ++pos_;
            return DensePolynomial::x(p_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            u64 v = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + static_cast<u64>(text_[pos_++] - '0')) % p_;
            return DensePolynomial::constant(p_, static_cast<i64>(v));
        }
        if (c == '(') {
            const std::size_t open = pos_++;
            DensePolynomial inner = expr();
            skip_space();
            if (peek() != ')') {
                if (at_end()) fail_at("unbalanced '('", open);
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    bool starts_primary() const {
        const char c = peek();
        return c == 'x' || c == 'X' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, std::string(text_), at);
    }

    std::string_view text_;
    unsigned p_;
    std::size_t pos_ = 0;
};

DensePolynomial parse_coefficient_list(std::string_view text, unsigned p) {
    std::vector<i64> coeffs;
    std::size_t pos = 0;
    for (;;) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer coefficient", std::string(text), pos);
        u64 v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = (v * 10 + static_cast<u64>(text[pos++] - '0')) % p;
        coeffs.push_back(neg ? -static_cast<i64>(v) : static_cast<i64>(v));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", std::string(text), pos);
        ++pos;
    }
    return DensePolynomial(p, coeffs);
}

}  // namespace

DensePolynomial parse_polynomial(std::string_view text, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("parse_polynomial: modulus must be prime");
    if (text.find(',') != std::string_view::npos) return parse_coefficient_list(text, p);
    return ExpressionParser(text, p).parse();
}

std::string to_string(const DensePolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const Coeff c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string to_coeff_list(const DensePolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out;
}

std::string to_string(const Factorization& fac) {
    std::string out;
    if (fac.unit != 1 || fac.factors.empty()) out = std::to_string(fac.unit);
    for (const auto& [q, mult] : fac.factors) {
        if (!out.empty()) out += ' ';
        const bool bare = q.degree() == 1 && q.coeff(0) == 0;
        out += bare ? "x" : "(" + to_string(q) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

}  // namespace qcodes

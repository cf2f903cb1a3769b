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

#ifndef QCODES_POLY_HPP
#define QCODES_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcodes/numtheory.hpp"

namespace qcodes {

/**
 * Univariate polynomial over Z_p, coefficients stored low degree first.
 *
 * The coefficient vector never carries a trailing zero, so the zero
 * polynomial is the empty vector and degree() == -1 for it.
 */
class DensePolynomial {
   public:
    using Coeff = std::uint32_t;

    DensePolynomial() = default;
    explicit DensePolynomial(unsigned p) : p_(p) {}
    /// Coefficients are reduced modulo p; negative inputs are allowed.
    DensePolynomial(unsigned p, const std::vector<i64>& coeffs);

    static DensePolynomial constant(unsigned p, i64 c);
    static DensePolynomial monomial(unsigned p, i64 c, std::size_t degree);
    static DensePolynomial x(unsigned p) { return monomial(p, 1, 1); }

    unsigned p() const noexcept { return p_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    Coeff coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Coeff leading() const;

    DensePolynomial monic() const;
    DensePolynomial derivative() const;
    Coeff evaluate(Coeff at) const;

    DensePolynomial operator-() const;
    DensePolynomial& operator+=(const DensePolynomial& rhs);
    DensePolynomial& operator-=(const DensePolynomial& rhs);
    DensePolynomial& operator*=(const DensePolynomial& rhs);
    DensePolynomial& scale(i64 c);

    friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
    friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
    friend DensePolynomial operator*(DensePolynomial a, const DensePolynomial& b) { return a *= b; }

    friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

   private:
    void trim();
    void check_same_field(const DensePolynomial& other) const;

    unsigned p_ = 0;
    std::vector<Coeff> coeffs_;
};

/// Canonical factor order: degree ascending, then coefficient vector ascending (low degree first).
bool canonical_less(const DensePolynomial& a, const DensePolynomial& b);

struct DivMod {
    DensePolynomial quotient;
    DensePolynomial remainder;
};

/// f = g * quotient + remainder with deg remainder < deg g. Throws std::domain_error for g = 0.
DivMod poly_divmod(const DensePolynomial& f, const DensePolynomial& g);

/// Monic gcd via Euclid. Throws std::domain_error when both inputs are zero.
DensePolynomial poly_gcd(const DensePolynomial& f, const DensePolynomial& g);

DensePolynomial poly_pow(const DensePolynomial& base, u64 exp);
DensePolynomial poly_mulmod(const DensePolynomial& a, const DensePolynomial& b, const DensePolynomial& mod);
DensePolynomial poly_powmod(const DensePolynomial& base, u64 exp, const DensePolynomial& mod);

/// x^(p^k) mod f by k successive p-th powerings. Throws std::domain_error for constant f.
DensePolynomial xq_pow_mod(const DensePolynomial& f, unsigned k);

/// Irreducibility over Z_p: gcd(f, x^(p^k) - x) = 1 for every k <= deg f / 2.
bool is_irreducible(const DensePolynomial& f);

struct FactorTerm {
    DensePolynomial factor;
    unsigned multiplicity = 1;

    friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

struct Factorization {
    unsigned p = 0;
    DensePolynomial::Coeff unit = 1;
    std::vector<FactorTerm> factors;

    /// unit * prod factor^multiplicity.
    DensePolynomial expand() const;
    /// (degree, multiplicity) pairs, one per irreducible factor, in canonical order.
    std::vector<std::pair<int, unsigned>> degree_multiset() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Square-free part decomposition of a monic polynomial: (g_i, i) with f = prod g_i^i.
std::vector<FactorTerm> squarefree_decomposition(const DensePolynomial& monic_f);

/// Distinct-degree split of a monic square-free polynomial: (d, product of all degree-d factors).
std::vector<std::pair<unsigned, DensePolynomial>> distinct_degree_split(const DensePolynomial& f);

/**
 * Complete factorization over Z_p (p odd).
 *
 * Equal-degree splitting draws from a counter-based stream. Without a seed the
 * stream is keyed by the input coefficients, so results are reproducible.
 */
Factorization factor(const DensePolynomial& f, std::optional<u64> seed = std::nullopt);

// ---- text format ----------------------------------------------------------

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& message, std::string text, std::size_t position);
    std::size_t position() const noexcept { return position_; }
    /// The input line followed by a caret under the offending column.
    std::string caret_diagnostic() const;

   private:
    std::string text_;
    std::size_t position_;
};

/**
 * Accepts either a coefficient list ("4,0,0,1" == x^3 + 4, low degree first)
 * or an expression over x with integers, + - * ^ and parentheses, e.g.
 * "(x+1)^8 - 1" or "3x^4(x+3)^4 - x^4".
 */
DensePolynomial parse_polynomial(std::string_view text, unsigned p);

/// Human form, descending degree: "x^3 + 2x + 1". Parses back to the same polynomial.
std::string to_string(const DensePolynomial& f);
/// Comma-separated coefficients, low degree first.
std::string to_coeff_list(const DensePolynomial& f);
/// "3 (x^3 + 3x^2 + 2) (x + 4)^2"; parses back to the expanded polynomial.
std::string to_string(const Factorization& fac);

inline std::ostream& operator<<(std::ostream& os, const DensePolynomial& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const FactorTerm& t) {
    return os << '(' << to_string(t.factor) << ")^" << t.multiplicity;
}
inline std::ostream& operator<<(std::ostream& os, const Factorization& f) { return os << to_string(f); }

}  // namespace qcodes

#endif

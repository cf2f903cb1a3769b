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

#ifndef QCODES_FIELD_HPP
#define QCODES_FIELD_HPP

#include <array>
#include <cstdint>
#include <iterator>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

#include "qcodes/numtheory.hpp"
#include "qcodes/poly.hpp"

namespace qcodes {

inline constexpr unsigned kMaxExtensionDegree = 8;
/// Log/antilog/Zech tables are only built up to this degree.
inline constexpr unsigned kMaxTableDegree = 6;

/// Element of F_{p^m} in polynomial coordinates; coordinate i is the coefficient of x^i.
class FieldElement {
   public:
    FieldElement() = default;
    explicit FieldElement(unsigned m) : m_(static_cast<std::uint8_t>(m)) {}

    unsigned degree_bound() const noexcept { return m_; }
    std::span<const std::uint8_t> coeffs() const noexcept { return {c_.data(), m_}; }
    std::uint8_t operator[](std::size_t i) const noexcept { return c_[i]; }
    std::uint8_t& operator[](std::size_t i) noexcept { return c_[i]; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

   private:
    std::array<std::uint8_t, kMaxExtensionDegree> c_{};
    std::uint8_t m_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/**
 * Discrete-log view of the multiplicative group, indexed by element codes
 * (code = sum c_i p^i). Exponents live in [0, q-1); kNone marks log(0).
 */
struct LogTables {
    static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

    std::vector<std::uint32_t> antilog;  ///< antilog[k] = code of alpha^k
    std::vector<std::uint32_t> log;      ///< log[code]; kNone for code 0
    std::vector<std::uint32_t> zech;     ///< zech[k] = log(1 + alpha^k); kNone when 1 + alpha^k = 0
};

class NonzeroRange;

/**
 * Immutable description of F_{p^m}. Copies share state; all members are safe
 * to call concurrently, including the first call to tables().
 */
class FieldContext {
   public:
    /// Throws std::invalid_argument unless p is an odd prime below 256 and 1 <= m <= 8.
    static FieldContext build(unsigned p, unsigned m);

    unsigned p() const noexcept;
    unsigned m() const noexcept;
    u64 q() const noexcept;
    u64 q_minus_1() const noexcept;
    u64 s() const noexcept;
    const DensePolynomial& modulus() const noexcept;
    const FieldElement& generator() const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of an integer in the prime subfield.
    FieldElement constant(i64 c) const;
    /// Throws std::invalid_argument for more than m coordinates.
    FieldElement from_coeffs(const std::vector<i64>& coeffs) const;

    u64 encode(const FieldElement& x) const;
    FieldElement decode(u64 code) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Throws std::domain_error for a = 0.
    FieldElement inv(const FieldElement& a) const;
    /// Square-and-multiply; pow(0, 0) = 1.
    FieldElement pow(const FieldElement& a, u64 n) const;
    /// alpha^k for any k; reduced modulo q - 1.
    FieldElement generator_power(u64 k) const;

    /// Quadratic character: +1 on nonzero squares, -1 otherwise. Throws std::domain_error at 0.
    int eta(const FieldElement& x) const;
    bool in_prime_subfield(const FieldElement& x) const;

    /// Horner evaluation of a Z_p polynomial at x.
    FieldElement evaluate(const DensePolynomial& f, const FieldElement& x) const;

    NonzeroRange enumerate_nonzero() const;

    bool has_tables() const noexcept { return m() <= kMaxTableDegree; }
    /// Built once on first use. Throws std::length_error when m exceeds kMaxTableDegree.
    const LogTables& tables() const;

    /// Coordinate-wise sum of two element codes.
    u64 add_codes(u64 a, u64 b) const;

   private:
    struct Impl;
    explicit FieldContext(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void check(const FieldElement& x) const;

    std::shared_ptr<const Impl> impl_;
};

/// Forward range over alpha^0, alpha^1, ..., alpha^(q-2).
class NonzeroRange {
   public:
    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = FieldElement;
        using difference_type = std::ptrdiff_t;
        using pointer = const FieldElement*;
        using reference = const FieldElement&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

       private:
        friend class NonzeroRange;
        iterator(const FieldContext* ctx, u64 index, FieldElement current) : ctx_(ctx), index_(index), current_(current) {}
        const FieldContext* ctx_ = nullptr;
        u64 index_ = 0;
        FieldElement current_;
    };

    explicit NonzeroRange(FieldContext ctx) : ctx_(std::move(ctx)) {}
    iterator begin() const;
    iterator end() const;

   private:
    FieldContext ctx_;
};

inline NonzeroRange FieldContext::enumerate_nonzero() const { return NonzeroRange(*this); }

}  // namespace qcodes

#endif

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

#ifndef QCODES_EXTENSION_HPP
#define QCODES_EXTENSION_HPP

#include <vector>

#include "qcodes/field.hpp"
#include "qcodes/poly.hpp"

namespace qcodes {

/// Largest field searched by roots_in_extension.
inline constexpr u64 kMaxRootSearchOrder = 15625;

/// Every root of f in F_{p^m}, by evaluation at each element (0 first, then alpha^0, alpha^1, ...).
/// Throws std::length_error if q exceeds kMaxRootSearchOrder, std::invalid_argument if deg f < 1.
std::vector<FieldElement> roots_in_extension(const FieldContext& ctx, const DensePolynomial& f);

/// Minimal polynomial of x over Z_p: the product of (X - x^(p^j)) over the Frobenius orbit of x.
DensePolynomial min_poly(const FieldContext& ctx, const FieldElement& x);

}  // namespace qcodes

#endif

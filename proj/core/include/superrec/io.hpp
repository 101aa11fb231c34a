/*
 * Copyright 2026 The superrec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUPERREC_IO_HPP
#define SUPERREC_IO_HPP

#include <string>

#include "superrec/coeff_table.hpp"
#include "superrec/curve.hpp"

namespace superrec {

/// Curve files: a JSON document with fields sector, N, tau, phi, psi, D, Q
/// and an optional "symbols" list extending the ring. Values are rationals
/// ("p/q", integers) or declared symbol names. Loading completes the psi
/// mirror entries; validation stays the caller's entry point.
SuperCurve load_curve_file(const std::string& path);
SuperCurve parse_curve_json(const std::string& text);
std::string curve_to_json(const SuperCurve& curve);

/// Coefficient-table export: one record per cell with
/// {two_g, bos_indices, fer_indices, poly_terms}; polynomials are lists of
/// {exponents, numerator, denominator}. Records follow the canonical key
/// order, so identical runs serialize byte-identically.
std::string table_to_json(const CoeffTable& table);
void write_file(const std::string& path, const std::string& text);

/// Series reports in the shared schema with an extra lambda_exponent key.
std::string lambda_series_to_json(const Poly& series, int lambda_order);

}  // namespace superrec

#endif

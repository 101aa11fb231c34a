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

#ifndef SUPERREC_AIRY_HPP
#define SUPERREC_AIRY_HPP

#include "superrec/coeff_table.hpp"
#include "superrec/constraint_coeffs.hpp"
#include "superrec/curve.hpp"
#include "superrec/fock.hpp"

namespace superrec {

struct IndexBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  int chi_max = 5;
  int index_bound = 0;  // 0 = heuristic choice
  /// Solve mixed cells from the fermionic constraint family instead of the
  /// bosonic one (the dual route of the overdetermination check).
  bool fermionic_route = false;
  /// Verify the zero-tail assumption beyond index_bound and the alternate
  /// in-level determinations; violations raise IndexBoundError.
  bool check_certificate = true;
  bool check_alternates = false;
};

int default_index_bound(const SuperCurve& curve, int chi_max);

/// Solves the constraint recursions for all cells with
/// 3 <= 2g+n+2m <= chi_max and indices <= index_bound. F_{1,1|0}(k) = D_k
/// is the seed; every level is obtained by a triangular sweep in the
/// leading index.
CoeffTable airy_solve(const SuperCurve& curve, const SolveOptions& opt);

/// 𝘍 as a Fock element: sum over cells of hbar^{g-1} F x^I theta^J with
/// the symmetry weights folded in. With `lambda_graded`, coefficients are
/// pushed through the Lambda^2 = hbar T regrading.
FockElement assemble_free_energy(const CoeffTable& table,
                                 bool lambda_graded = false);

struct ConstraintReport {
  struct Line {
    char op;  // 'H' or 'F'
    int i;
    bool clean;
    int max_bad_degree;  // highest degree with a nonzero residual term
  };
  bool all_zero = true;
  std::vector<Line> lines;
  std::string summary() const;
};

/// Applies every H_i, F_i to Z = exp(F) and reports residuals on the
/// degree window guaranteed by the table truncation.
ConstraintReport verify_constraints(const SuperCurve& curve,
                                    const CoeffTable& table, int chi_max,
                                    int i_max = 0);

}  // namespace superrec

#endif

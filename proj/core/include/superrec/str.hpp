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

#ifndef SUPERREC_STR_HPP
#define SUPERREC_STR_HPP

#include "superrec/coeff_table.hpp"
#include "superrec/curve.hpp"

namespace superrec {

/// Correlator coefficients in the polarized basis together with the cached
/// expansions every residue extraction reads.
struct OmegaTable {
  CoeffTable table;
  int z_lo = 0;   // window used for all one-variable assemblies
  int z_hi = 0;
};

enum class KernelKind { bb, bf };

/// Recursion kernels as truncated double expansions; slot 1 is the
/// spectator variable z0, slot 2 the residue variable z. K^{BB} vanishes
/// to order N+1 in z (asserted).
BiLaurent kernel(const SuperCurve& curve, KernelKind kind, int hi1, int hi2);

enum class QKind { bb, ff, bf };

struct StrOptions {
  int chi_max = 5;
  int index_bound = 0;  // 0 = heuristic (same formula as the solver)
  /// Check the quadratic loop equations on every computed cell.
  bool check_loop_equations = true;
  /// Recompute mixed cells through the fermionic recursion as well.
  bool check_dual_route = false;
  /// Width of the vanishing-tail window recomputed past index_bound.
  int tail_window = 0;  // 0 = N + support width
};

/// The residue recursion: computes every cell with 3 <= chi <= chi_max by
/// extracting basis coefficients of the recursion formulas. omega_{1,1|0}
/// is input (the D-terms), never computed.
OmegaTable str_recurse(const SuperCurve& curve, const StrOptions& opt);

/// One assembled Q-combination in the residue variable, with spectators
/// contracted to basis coefficients. For QKind::bf the first fermionic
/// spectator index is the second slot of the pair being computed.
LaurentForm q_terms(const SuperCurve& curve, const OmegaTable& table,
                    int two_g, QKind kind, const std::vector<int>& bos_spect,
                    const std::vector<int>& fer_spect, bool tilde = true);

}  // namespace superrec

#endif

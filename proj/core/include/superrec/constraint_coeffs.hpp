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

#ifndef SUPERREC_CONSTRAINT_COEFFS_HPP
#define SUPERREC_CONSTRAINT_COEFFS_HPP

#include "superrec/curve.hpp"

namespace superrec {

/// Structure constants of the constraint operators H_i, F_i in their
/// expanded normal form. Out-of-range curve parameters are zero.

/// C_k = tau_{k-N+1} + sum_{p=1}^{N-1} tau_{-p} phi_{p,k-N+1} / p, k >= 0.
Poly coeff_c(const SuperCurve& curve, int k);

/// C'_k: same with Q in place of tau.
Poly coeff_cp(const SuperCurve& curve, int k);

/// C_i^{j,k|} (the :JJ: block), j,k nonzero mode indices.
Poly coeff_cbb(const SuperCurve& curve, int i, int j, int k);

/// C_i^{|j,k} (the :Gamma Gamma: block), fermionic labels j,k (mode j+f).
Poly coeff_cff(const SuperCurve& curve, int i, int j, int k);

/// C_i^{j|k} (the :J Gamma: block), bosonic j, fermionic label k.
Poly coeff_cbf(const SuperCurve& curve, int i, int j, int k);

/// D~_i = sum_{k>=0} tau_{k-(N-1)} D_{i+k}.
Poly dtilde(const SuperCurve& curve, int i);

/// Largest k with C_k or C'_k possibly nonzero.
int coeff_c_support(const SuperCurve& curve);

/// Largest second index in the phi / psi supports (0 when empty).
int phi_psi_width(const SuperCurve& curve);

}  // namespace superrec

#endif

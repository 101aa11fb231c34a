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

#ifndef SUPERREC_CURVE_HPP
#define SUPERREC_CURVE_HPP

#include <map>
#include <string>
#include <vector>

#include "superrec/laurent.hpp"
#include "superrec/poly.hpp"

namespace superrec {

enum class Sector { ns, r };

/// 2f: 1 for NS, 0 for R.
inline int two_f(Sector s) { return s == Sector::ns ? 1 : 0; }
inline ThetaKind theta_kind(Sector s) {
  return s == Sector::ns ? ThetaKind::ns : ThetaKind::r;
}
std::string sector_name(Sector s);

/// The seven-parameter record fixing one super spectral curve.
///
/// tau: dilaton shifts, l >= -(N-1), tau_{-(N-1)} != 0.
/// phi: bosonic polarization, symmetric, indices >= 1.
/// psi: fermionic polarization; NS antisymmetric (indices >= 0), R subject
///      to psi_00 = 0 and psi_kl + psi_lk + psi_0k psi_0l = 0.
/// D:   D-terms, 1 <= k <= N. Q: crosscap parameters, l >= -(N-1).
struct SuperCurve {
  Sector sector = Sector::ns;
  int N = 1;
  ContextPtr ctx;
  std::map<int, Poly> tau;
  std::map<std::pair<int, int>, Poly> phi;
  std::map<std::pair<int, int>, Poly> psi;
  std::map<int, Poly> D;
  std::map<int, Poly> Q;

  // Out-of-range parameters are zero by convention.
  Poly tau_at(int l) const;
  Poly phi_at(int k, int l) const;  // symmetric lookup
  Poly psi_at(int k, int l) const;  // stored order only; loaders complete maps
  Poly d_at(int k) const;
  Poly q_at(int l) const;

  /// Fills in the mirror psi entries (minus for NS, constraint for R) so
  /// that psi_at can stay a plain lookup.
  void complete_psi();
};

struct Violation {
  std::string param;
  std::string message;
};

/// Checks every curve invariant; violations are data, not exceptions.
std::vector<Violation> validate(const SuperCurve& curve);

enum class BasisKind { dxi, eta_neg, eta_pos };

/// Scalar part of a basis form, truncated to [its principal exponent, hi].
/// dxi: index l in Z (dxi_0 = dz/z). eta_neg: j >= 0 is eta_{-j-f}
/// (j = 0 in R is the zero mode eta_0). eta_pos: NS l >= 0 is eta_{l+1/2},
/// R l >= 1 is eta_l.
LaurentForm basis_scalar(const SuperCurve& curve, BasisKind kind, int index,
                         int hi);

/// Basis forms with their weights attached (dxi carries dz, eta carries
/// Theta^F).
LaurentForm basis_series(const SuperCurve& curve, BasisKind kind, int index,
                         int hi);

/// omega_{0,1|0} and omega_{1/2,1|0} as truncated one-forms.
LaurentForm dilaton_form(const SuperCurve& curve, int hi);
LaurentForm crosscap_form(const SuperCurve& curve, int hi);

enum class TwoPointKind { bosonic, ns, r };
enum class ExpansionDomain { z1_outer, z1_inner };  // |z1|>|z2| vs |z1|<|z2|

/// Double expansion of omega_{0,2|0} / omega^F_{0,0|2} from the defining
/// formulas, truncated to the given per-variable orders.
BiLaurent two_point_series(const SuperCurve& curve, TwoPointKind kind,
                           ExpansionDomain domain, int hi1, int hi2);

/// Residue pairings Omega^B, Omega^NS, Omega^R at z = 0. The bosonic kind
/// requires a residue-free first argument (dxi_0 is excluded from its
/// domain).
Poly pairing(TwoPointKind kind, const LaurentForm& a, const LaurentForm& b);

}  // namespace superrec

#endif

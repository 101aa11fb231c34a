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

#include "superrec/constraint_coeffs.hpp"

#include <algorithm>

namespace superrec {

namespace {

Poly linear_coeff(const SuperCurve& curve, const std::map<int, Poly>& par,
                  int k) {
  auto at = [&](int l) {
    if (l < -(curve.N - 1)) return Poly::zero(curve.ctx);
    auto it = par.find(l);
    return it == par.end() ? Poly::zero(curve.ctx) : it->second;
  };
  Poly r = at(k - curve.N + 1);
  for (int p = 1; p <= curve.N - 1; ++p) {
    Poly t = curve.tau_at(-p) * curve.phi_at(p, k - curve.N + 1);
    r += t.scaled(frac(1, p));
  }
  return r;
}

}  // namespace

Poly coeff_c(const SuperCurve& curve, int k) {
  return linear_coeff(curve, curve.tau, k);
}

Poly coeff_cp(const SuperCurve& curve, int k) {
  // Same phi dressing as C_k but the leading parameter is Q.
  auto at = [&](int l) { return curve.q_at(l); };
  Poly r = at(k - curve.N + 1);
  for (int p = 1; p <= curve.N - 1; ++p) {
    Poly t = curve.q_at(-p) * curve.phi_at(p, k - curve.N + 1);
    r += t.scaled(frac(1, p));
  }
  return r;
}

Poly coeff_cbb(const SuperCurve& curve, int i, int j, int k) {
  Poly r = Poly::zero(curve.ctx);
  if (j == 0 || k == 0) return r;
  if (j + k == curve.N + i - 1) r += Poly::one(curve.ctx);
  r += curve.phi_at(j, k - curve.N - i + 1).scaled(frac(1, j));
  r += curve.phi_at(j - curve.N - i + 1, k).scaled(frac(1, k));
  return r;
}

Poly coeff_cff(const SuperCurve& curve, int i, int j, int k) {
  const int tf = two_f(curve.sector);
  Poly r = Poly::zero(curve.ctx);
  if (j + k + tf == i + curve.N - 1)
    r += Poly::constant(curve.ctx, frac(k - j, 2));
  Poly a = curve.psi_at(j, k - curve.N - i + 1);
  r += a.scaled(frac(2 * k + tf - curve.N - i + 1, 2));
  Poly b = curve.psi_at(k, j - curve.N - i + 1);
  r -= b.scaled(frac(2 * j + tf - curve.N - i + 1, 2));
  return r;
}

Poly coeff_cbf(const SuperCurve& curve, int i, int j, int k) {
  Poly r = Poly::zero(curve.ctx);
  if (j == 0) return r;
  if (j + k == curve.N + i - 1) r += Poly::one(curve.ctx);
  r += curve.phi_at(j, k - curve.N - i + 1).scaled(frac(1, j));
  r += curve.psi_at(k, j - curve.N - i + 1 - two_f(curve.sector));
  return r;
}

Poly dtilde(const SuperCurve& curve, int i) {
  Poly r = Poly::zero(curve.ctx);
  for (int k = 0; i + k <= curve.N; ++k)
    r += curve.tau_at(k - (curve.N - 1)) * curve.d_at(i + k);
  return r;
}

int coeff_c_support(const SuperCurve& curve) {
  int tau_max = 0, q_max = 0, phi2_max = 0;
  for (const auto& [l, v] : curve.tau)
    if (!v.is_zero()) tau_max = std::max(tau_max, l);
  for (const auto& [l, v] : curve.Q)
    if (!v.is_zero()) q_max = std::max(q_max, l);
  for (const auto& [kl, v] : curve.phi)
    if (!v.is_zero())
      phi2_max = std::max({phi2_max, kl.first, kl.second});
  return curve.N - 1 + std::max({tau_max, q_max, phi2_max});
}

int phi_psi_width(const SuperCurve& curve) {
  int w = 0;
  for (const auto& [kl, v] : curve.phi)
    if (!v.is_zero()) w = std::max({w, kl.first, kl.second});
  for (const auto& [kl, v] : curve.psi)
    if (!v.is_zero()) w = std::max({w, kl.first, kl.second});
  return w;
}

}  // namespace superrec

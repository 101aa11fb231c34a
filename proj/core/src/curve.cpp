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

#include "superrec/curve.hpp"

namespace superrec {

std::string sector_name(Sector s) { return s == Sector::ns ? "NS" : "R"; }

Poly SuperCurve::tau_at(int l) const {
  if (l < -(N - 1)) return Poly::zero(ctx);
  auto it = tau.find(l);
  return it == tau.end() ? Poly::zero(ctx) : it->second;
}

Poly SuperCurve::phi_at(int k, int l) const {
  if (k < 1 || l < 1) return Poly::zero(ctx);
  auto it = phi.find({k, l});
  if (it != phi.end()) return it->second;
  it = phi.find({l, k});
  return it == phi.end() ? Poly::zero(ctx) : it->second;
}

Poly SuperCurve::psi_at(int k, int l) const {
  if (k < 0 || l < 0) return Poly::zero(ctx);
  auto it = psi.find({k, l});
  return it == psi.end() ? Poly::zero(ctx) : it->second;
}

Poly SuperCurve::d_at(int k) const {
  if (k < 1 || k > N) return Poly::zero(ctx);
  auto it = D.find(k);
  return it == D.end() ? Poly::zero(ctx) : it->second;
}

Poly SuperCurve::q_at(int l) const {
  if (l < -(N - 1)) return Poly::zero(ctx);
  auto it = Q.find(l);
  return it == Q.end() ? Poly::zero(ctx) : it->second;
}

void SuperCurve::complete_psi() {
  auto stored = psi;
  for (const auto& [kl, v] : stored) {
    auto mirror = std::make_pair(kl.second, kl.first);
    if (psi.count(mirror)) continue;
    if (sector == Sector::ns) {
      psi.emplace(mirror, -v);
    } else {
      // psi_lk = -psi_kl - psi_0k psi_0l
      Poly corr = psi_at(0, kl.first) * psi_at(0, kl.second);
      psi.emplace(mirror, -v - corr);
    }
  }
}

std::vector<Violation> validate(const SuperCurve& curve) {
  std::vector<Violation> out;
  if (curve.N < 1) out.push_back({"N", "N must be a positive integer"});
  if (curve.tau_at(-(curve.N - 1)).is_zero())
    out.push_back({"tau", "tau_{-(N-1)} must not vanish"});
  for (const auto& [l, v] : curve.tau)
    if (l < -(curve.N - 1) && !v.is_zero())
      out.push_back({"tau", "tau_" + std::to_string(l) + " below -(N-1)"});
  for (const auto& [l, v] : curve.Q)
    if (l < -(curve.N - 1) && !v.is_zero())
      out.push_back({"Q", "Q_" + std::to_string(l) + " below -(N-1)"});
  for (const auto& [k, v] : curve.D)
    if ((k < 1 || k > curve.N) && !v.is_zero())
      out.push_back({"D", "D_" + std::to_string(k) + " outside 1..N"});
  for (const auto& [kl, v] : curve.phi) {
    if (kl.first < 1 || kl.second < 1)
      out.push_back({"phi", "phi indices must be >= 1"});
    if (curve.phi.count({kl.second, kl.first}) &&
        !(curve.phi.at({kl.second, kl.first}) == v))
      out.push_back({"phi", "phi_{" + std::to_string(kl.first) + "," +
                                std::to_string(kl.second) +
                                "} breaks symmetry"});
  }
  for (const auto& [kl, v] : curve.psi)
    if (kl.first < 0 || kl.second < 0)
      out.push_back({"psi", "psi indices must be >= 0"});
  if (curve.sector == Sector::ns) {
    for (const auto& [kl, v] : curve.psi) {
      Poly sum = v + curve.psi_at(kl.second, kl.first);
      if (!sum.is_zero())
        out.push_back({"psi", "psi^NS_{" + std::to_string(kl.first) + "," +
                                  std::to_string(kl.second) +
                                  "} breaks antisymmetry"});
    }
  } else {
    if (!curve.psi_at(0, 0).is_zero())
      out.push_back({"psi", "psi00^R must vanish"});
    for (const auto& [kl, v] : curve.psi) {
      Poly rel = v + curve.psi_at(kl.second, kl.first) +
                 curve.psi_at(0, kl.first) * curve.psi_at(0, kl.second);
      if (!rel.is_zero())
        out.push_back({"psi", "psi^R_{" + std::to_string(kl.first) + "," +
                                  std::to_string(kl.second) +
                                  "} breaks the twisted constraint"});
    }
  }
  return out;
}

LaurentForm basis_scalar(const SuperCurve& curve, BasisKind kind, int index,
                         int hi) {
  const auto& ctx = curve.ctx;
  const int tf = two_f(curve.sector);
  LaurentForm f(ctx, 0, hi, FormWeight{});
  switch (kind) {
    case BasisKind::dxi: {
      if (index > 0)
        return LaurentForm::monomial(ctx, index - 1, Poly::one(ctx),
                                     FormWeight{});
      if (index == 0)
        return LaurentForm::monomial(ctx, -1, Poly::one(ctx), FormWeight{});
      const int l = -index;
      f = LaurentForm(ctx, -l - 1, hi, FormWeight{});
      f.add_coeff(-l - 1, Poly::one(ctx));
      Rational inv_l = Rational(1) / l;
      for (int m = 1; m <= hi + 1; ++m)
        f.add_coeff(m - 1, curve.phi_at(l, m).scaled(inv_l));
      return f;
    }
    case BasisKind::eta_pos: {
      // NS: eta_{l+1/2} = z^l Theta, l >= 0. R: eta_l = z^{l-1} Theta, l >= 1.
      if (curve.sector == Sector::ns) {
        if (index < 0) throw std::invalid_argument("eta_pos: NS index >= 0");
        return LaurentForm::monomial(ctx, index, Poly::one(ctx), FormWeight{});
      }
      if (index < 1) throw std::invalid_argument("eta_pos: R index >= 1");
      return LaurentForm::monomial(ctx, index - 1, Poly::one(ctx),
                                   FormWeight{});
    }
    case BasisKind::eta_neg: {
      const int j = index;
      if (j < 0) throw std::invalid_argument("eta_neg: index >= 0");
      f = LaurentForm(ctx, -j - 1, hi, FormWeight{});
      f.add_coeff(-j - 1, Poly::one(ctx));
      // NS tail: psi_{jk} z^k; R tail: psi_{jk} z^{k-1}.
      const int shift = tf == 1 ? 0 : -1;
      for (int k = 0; k <= hi + 1 - shift; ++k)
        f.add_coeff(k + shift, curve.psi_at(j, k));
      return f;
    }
  }
  throw std::logic_error("basis_scalar: unreachable");
}

LaurentForm basis_series(const SuperCurve& curve, BasisKind kind, int index,
                         int hi) {
  LaurentForm f = basis_scalar(curve, kind, index, hi);
  FormWeight w;
  if (kind == BasisKind::dxi)
    w = FormWeight{1, ThetaKind::none};
  else
    w = FormWeight{0, theta_kind(curve.sector)};
  LaurentForm r(curve.ctx, f.lo(), f.hi(), w);
  for (const auto& [e, c] : f.coeffs()) r.add_coeff(e, c);
  return r;
}

LaurentForm dilaton_form(const SuperCurve& curve, int hi) {
  LaurentForm f(curve.ctx, -curve.N, hi, FormWeight{1, ThetaKind::none});
  for (const auto& [l, v] : curve.tau) {
    LaurentForm b = basis_series(curve, BasisKind::dxi, l, hi);
    f += b.scaled(v);
  }
  return f;
}

LaurentForm crosscap_form(const SuperCurve& curve, int hi) {
  LaurentForm f(curve.ctx, -curve.N, hi, FormWeight{1, ThetaKind::none});
  for (const auto& [l, v] : curve.Q) {
    LaurentForm b = basis_series(curve, BasisKind::dxi, l, hi);
    f += b.scaled(v);
  }
  return f;
}

BiLaurent two_point_series(const SuperCurve& curve, TwoPointKind kind,
                           ExpansionDomain domain, int hi1, int hi2) {
  BiLaurent b;
  b.ctx = curve.ctx;
  b.hi1 = hi1;
  b.hi2 = hi2;
  const Poly one = Poly::one(curve.ctx);
  auto add = [&b, hi1, hi2](int e1, int e2, const Poly& c) {
    if (e1 <= hi1 && e2 <= hi2) b.add(e1, e2, c);
  };
  switch (kind) {
    case TwoPointKind::bosonic: {
      b.w1 = b.w2 = FormWeight{1, ThetaKind::none};
      b.lo1 = b.lo2 = -2;
      // dz1 dz2 / (z1-z2)^2 = sum_{l>=1} l outer^{-l-1} inner^{l-1}.
      for (int l = 1; l <= std::max(hi2, hi1) + 2; ++l) {
        if (domain == ExpansionDomain::z1_outer)
          add(-l - 1, l - 1, one.scaled(l));
        else
          add(l - 1, -l - 1, one.scaled(l));
      }
      for (const auto& [kl, v] : curve.phi)
        add(kl.first - 1, kl.second - 1, v);
      return b;
    }
    case TwoPointKind::ns: {
      if (curve.sector != Sector::ns)
        throw std::invalid_argument("two_point_series: NS kind on R curve");
      b.w1 = b.w2 = FormWeight{0, ThetaKind::ns};
      b.lo1 = b.lo2 = -1;
      // -Theta1 Theta2/(z1-z2) = sum_{l>=0} inner^l outer^{-l-1}.
      for (int l = 0; l <= std::max(hi1, hi2) + 1; ++l) {
        if (domain == ExpansionDomain::z1_inner)
          add(l, -l - 1, one);
        else
          add(-l - 1, l, -one);
      }
      for (const auto& [kl, v] : curve.psi)
        add(kl.first, kl.second, v);
      return b;
    }
    case TwoPointKind::r: {
      if (curve.sector != Sector::r)
        throw std::invalid_argument("two_point_series: R kind on NS curve");
      b.w1 = b.w2 = FormWeight{0, ThetaKind::r};
      b.lo1 = b.lo2 = -1;
      // -1/2 (z1+z2)/(z1-z2) Theta1 Theta2/(z1 z2): in |z1|<|z2| this is
      // (1/2) z1^{-1} z2^{-1} + sum_{p>=1} z1^{p-1} z2^{-p-1}; mirrored with
      // an overall sign for the other domain.
      const bool inner1 = domain == ExpansionDomain::z1_inner;
      add(-1, -1, inner1 ? one.scaled(frac(1, 2))
                         : one.scaled(frac(-1, 2)));
      for (int p = 1; p <= std::max(hi1, hi2) + 1; ++p) {
        if (inner1)
          add(p - 1, -p - 1, one);
        else
          add(-p - 1, p - 1, -one);
      }
      for (const auto& [kl, v] : curve.psi) {
        // - (psi_{k-1,l-1} - psi_{l-1,k-1}) / (1+delta) * eta_l(z1) eta_k(z2)
        //   / (2 z1 z2), indices k,l >= 1.
        const int k = kl.first + 1, l = kl.second + 1;
        Poly num = curve.psi_at(k - 1, l - 1) - curve.psi_at(l - 1, k - 1);
        Rational den = ((k - 1) * (l - 1) == 0) ? 2 : 1;
        Poly c = num.scaled(frac(-1, 2) / den);
        add(l - 2, k - 2, c);
      }
      return b;
    }
  }
  throw std::logic_error("two_point_series: unreachable");
}

Poly pairing(TwoPointKind kind, const LaurentForm& a, const LaurentForm& b) {
  if (kind == TwoPointKind::bosonic) {
    if (a.weight().dz != 1 || a.weight().theta != ThetaKind::none ||
        b.weight().dz != 1 || b.weight().theta != ThetaKind::none)
      throw std::invalid_argument("pairing: bosonic arguments must be dz forms");
    if (!residue(a).is_zero())
      throw std::domain_error(
          "pairing: bosonic argument has a residue, no primitive exists");
    // f1 = integral of a, then Res f1 b.
    LaurentForm f1(a.context(), a.lo() + 1, a.hi() + 1, FormWeight{});
    for (const auto& [e, c] : a.coeffs()) {
      if (e == -1) continue;
      f1.add_coeff(e + 1, c.scaled(frac(1, e + 1)));
    }
    return residue(f1 * b);
  }
  return residue(a * b);
}

}  // namespace superrec

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

#include "superrec/gaiotto.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superrec/constraint_coeffs.hpp"
#include "superrec/operator_expr.hpp"

namespace superrec {

namespace {

Poly hbar(const ContextPtr& ctx, int half_powers = 2) {
  return Poly::symbol(ctx, Context::kHHalf, half_powers);
}

}  // namespace

GaiottoSpec GaiottoSpec::make(ContextPtr ctx, Sector sector, bool calibrated) {
  GaiottoSpec s;
  s.ctx = ctx;
  s.sector = sector;
  s.calibrated = calibrated;
  s.tau0 = Poly::symbol(ctx, Context::kTau0);
  s.q = Poly::symbol(ctx, Context::kQ0);
  return s;
}

SuperCurve build_gaiotto_curve(const GaiottoSpec& spec) {
  SuperCurve c;
  c.sector = spec.sector;
  c.N = 1;
  c.ctx = spec.ctx;
  c.tau[0] = spec.tau0;
  c.Q[0] = spec.q;
  // D_1 = -(1+2f)/2 T; the sign pairs with the -hbar*Dtilde constant of the
  // constraints so that F_{1,1|0}(1) = D_1 and the L_1 eigenvalues come out
  // as stated. Calibrated mode rescales D_1 -> -D_1/tau0.
  const Rational half_weight = frac(1 + two_f(spec.sector), 2);
  Poly d = Poly::symbol(spec.ctx, Context::kT, 1).scaled(-half_weight);
  if (spec.calibrated) d = -(d * spec.tau0.inverse());
  c.D[1] = d;
  return c;
}

SuperCurve build_gaiotto_curve(ContextPtr ctx, Sector sector) {
  return build_gaiotto_curve(GaiottoSpec::make(std::move(ctx), sector));
}

PartitionFunction partition_function(const GaiottoSpec& spec, int chi_max) {
  if (chi_max < 3)
    throw std::invalid_argument("partition_function: chi_max >= 3");
  PartitionFunction pf;
  pf.spec = spec;
  pf.chi_max = chi_max;
  SuperCurve curve = build_gaiotto_curve(spec);
  SolveOptions opt;
  opt.chi_max = chi_max;
  // Indices are bounded by the genus on this family of curves.
  opt.index_bound = std::max(1, (chi_max - 1) / 2);
  pf.table = airy_solve(curve, opt);
  FockElement f = assemble_free_energy(pf.table, /*lambda_graded=*/true);
  pf.z = fock_exp(f, chi_max - 2);
  pf.eigenvalue = regrade(hbar(spec.ctx) * dtilde(curve, 1));
  return pf;
}

std::string WhittakerReport::summary() const {
  std::ostringstream os;
  os << "eigenvalue: " << eigenvalue.to_string() << "\n";
  os << "Delta_rep: " << delta_rep.to_string() << "\n";
  os << "Delta (printed convention, for comparison): "
     << delta_printed.to_string() << "\n";
  for (const auto& l : lines) {
    std::string idx = l.index2 % 2 == 0 ? std::to_string(l.index2 / 2)
                                         : std::to_string(l.index2) + "/2";
    os << l.op << "[" << idx << "]: "
       << (l.clean ? "annihilates Z" : "NONZERO residual") << "\n";
  }
  os << "verified through Lambda order " << lambda_order_checked << "\n";
  return os.str();
}

WhittakerReport whittaker_residuals(const PartitionFunction& pf, int n_max,
                                    int extra_r) {
  const auto& spec = pf.spec;
  const auto& ctx = spec.ctx;
  const int tf = two_f(spec.sector);
  const int cutoff = pf.chi_max - 2;
  WhittakerReport report;
  report.eigenvalue = pf.eigenvalue;
  report.lambda_order_checked = cutoff + 1;

  const int zmax = pf.z.max_mode_index();
  auto gen = [&](GenKind kind, int index2) {
    const int window = zmax + std::abs(index2) / 2 + 2;
    return build_generator(ctx, spec.sector, kind, index2, window, spec.tau0,
                           spec.q);
  };

  // Highest-weight data of the vacuum.
  FockElement vac = FockElement::vacuum(ctx);
  FockElement l0v = gen(GenKind::l, 0).apply(vac, 4);
  report.delta_rep = l0v.coeff(FockMonomial{});
  Poly qq = spec.q * spec.q;
  report.delta_printed =
      (spec.tau0 * spec.tau0 - hbar(ctx) * qq).scaled(frac(1, 2));
  if (spec.sector == Sector::r)
    report.delta_printed += hbar(ctx).scaled(frac(1, 16));

  auto check = [&](char opname, int index2, const OperatorExpr& op,
                   const Poly& lambda) {
    FockElement resid = op.apply(pf.z, cutoff + 1);
    if (!lambda.is_zero())
      resid -= pf.z.scaled(lambda).truncated(cutoff + 1);
    WhittakerReport::Line line{opname, index2, resid.is_zero()};
    if (!line.clean) report.all_zero = false;
    report.lines.push_back(line);
  };

  check('L', 2, gen(GenKind::l, 2), pf.eigenvalue);
  for (int n = 2; n <= n_max; ++n)
    check('L', 2 * n, gen(GenKind::l, 2 * n), Poly());
  // NS: r = 3/2, 5/2, ...; R: r = 1, 2, ... (G_{1/2} is unconstrained in NS).
  const int r2_first = tf == 1 ? 3 : 2;
  for (int r2 = r2_first; r2 <= 2 * (n_max + extra_r); r2 += 2)
    check('G', r2, gen(GenKind::g, r2), Poly());
  return report;
}

std::string NormReport::summary() const {
  std::ostringstream os;
  os << "(Z|Z) = " << zz.to_string() << "\n";
  os << "F_Nek = " << f_nek.to_string() << "\n";
  os << "Lambda exponents:";
  for (int e : lambda_exponents) os << " " << e;
  os << "\nmin h^{1/2} exponent of F_Nek: " << min_h_half_exponent << "\n";
  return os.str();
}

Poly poly_log_onep(const Poly& u, int lambda_order) {
  const auto& ctx = u.context();
  if (u.min_exponent(Context::kLambda) < 1 && !u.is_zero())
    throw std::domain_error("poly_log_onep: expansion needs positive order");
  Poly result = Poly::zero(ctx);
  Poly power = Poly::one(ctx);
  const int kmax = u.is_zero() ? 0 : lambda_order / u.min_exponent(
                                         Context::kLambda);
  for (int k = 1; k <= kmax; ++k) {
    power = (power * u).dropped_above(Context::kLambda, lambda_order);
    if (power.is_zero()) break;
    result += power.scaled(frac(k % 2 == 1 ? 1 : -1, k));
  }
  return result;
}

NormReport nekrasov_series(const PartitionFunction& pf, int lambda_order) {
  const int required_chi = lambda_order / 2 + 1;
  if (pf.chi_max < required_chi)
    throw std::invalid_argument(
        "nekrasov_series: lambda order " + std::to_string(lambda_order) +
        " needs chi_max >= " + std::to_string(required_chi));
  NormReport report;
  report.lambda_order = lambda_order;
  Poly zz = dagger_pair(pf.spec.sector, pf.z, pf.z);
  report.zz = zz.dropped_above(Context::kLambda, lambda_order);
  std::set<int> exps;
  for (const auto& [e, c] : report.zz.terms()) exps.insert(e[Context::kLambda]);
  report.lambda_exponents.assign(exps.begin(), exps.end());
  Poly u = report.zz - Poly::one(pf.spec.ctx);
  report.f_nek = hbar(pf.spec.ctx) * poly_log_onep(u, lambda_order);
  report.min_h_half_exponent = report.f_nek.min_exponent(Context::kHHalf);
  return report;
}

}  // namespace superrec

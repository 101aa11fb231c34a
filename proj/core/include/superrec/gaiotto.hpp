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

#ifndef SUPERREC_GAIOTTO_HPP
#define SUPERREC_GAIOTTO_HPP

#include "superrec/airy.hpp"
#include "superrec/coeff_table.hpp"
#include "superrec/curve.hpp"
#include "superrec/fock.hpp"

namespace superrec {

/// The one-parameter-family specialization: N = 1, phi = psi = 0,
/// tau = tau0 at l = 0, Q at l = 0, and a single D-term proportional to T.
/// In raw normalization the partition function obeys
/// (L_1 + (1+2f)/2 tau0 Lambda^2) Z = 0; the calibrated normalization
/// rescales D_1 -> -D_1/tau0 so that the eigenvalue becomes Lambda^2 (NS)
/// resp. Lambda^2/2 (R).
struct GaiottoSpec {
  Sector sector = Sector::ns;
  bool calibrated = false;
  Poly tau0;  // defaults to the tau0 symbol
  Poly q;     // defaults to the Q0 symbol
  ContextPtr ctx;

  static GaiottoSpec make(ContextPtr ctx, Sector sector,
                          bool calibrated = false);
};

SuperCurve build_gaiotto_curve(const GaiottoSpec& spec);
SuperCurve build_gaiotto_curve(ContextPtr ctx, Sector sector);

struct PartitionFunction {
  GaiottoSpec spec;
  int chi_max = 0;
  CoeffTable table;       // T-graded coefficients
  FockElement z;          // exp of the Lambda-graded free energy
  Poly eigenvalue;        // L_1 eigenvalue in the chosen normalization
};

/// Z = exp(F) with coefficients regraded to Lambda and h^{1/2}; the
/// constant term is exactly 1.
PartitionFunction partition_function(const GaiottoSpec& spec, int chi_max);

struct WhittakerReport {
  struct Line {
    char op;     // 'L' or 'G'
    int index2;  // doubled mode index
    bool clean;
  };
  bool all_zero = true;
  int lambda_order_checked = 0;  // residuals vanish for all terms within
                                 // the guaranteed degree window
  Poly eigenvalue;
  Poly delta_rep;        // L_0 highest weight in this representation
  Poly delta_printed;    // 1/2 (tau0^2 - hbar Q^2) (+ hbar/16 in R),
                         // reported for comparison only
  std::vector<Line> lines;
  std::string summary() const;
};

/// Checks (L_1 - eigenvalue) Z, L_{n>1} Z and the sector-appropriate
/// G_r Z through the truncation order.
WhittakerReport whittaker_residuals(const PartitionFunction& pf, int n_max = 6,
                                    int extra_r = 2);

struct NormReport {
  Poly zz;     // (Z|Z) through the requested Lambda order
  Poly f_nek;  // hbar log (Z|Z)
  std::vector<int> lambda_exponents;
  int min_h_half_exponent = 0;  // over f_nek
  int lambda_order = 0;
  std::string summary() const;
};

/// (Z|Z) via the conjugate pairing and F_Nek = hbar log (Z|Z). Requires
/// pf.chi_max >= lambda_order/2 + 1 (reported in the error otherwise).
NormReport nekrasov_series(const PartitionFunction& pf, int lambda_order);

/// Truncated log of 1 + (positive Lambda-order terms).
Poly poly_log_onep(const Poly& u, int lambda_order);

}  // namespace superrec

#endif

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

#ifndef SUPERREC_LAURENT_HPP
#define SUPERREC_LAURENT_HPP

#include <limits>
#include <map>
#include <utility>

#include "superrec/poly.hpp"

namespace superrec {

struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ThetaKind { none, ns, r };

/// dz may be -1: recursion kernels divide by a one-form.
struct FormWeight {
  int dz = 0;
  ThetaKind theta = ThetaKind::none;
  friend bool operator==(const FormWeight&, const FormWeight&) = default;
};

/// Truncated formal Laurent series in one variable with a form weight.
///
/// `lo` is a hard lower bound of the underlying series (nothing exists
/// below it); `hi` is the last computed exponent. Reads above `hi` throw,
/// reads below `lo` are exactly zero. Theta factors square to dz (NS) or
/// z*dz (R) and reduce eagerly on multiplication.
class LaurentForm {
 public:
  static constexpr int kExactHi = std::numeric_limits<int>::max() / 4;

  LaurentForm() = default;
  LaurentForm(ContextPtr ctx, int lo, int hi, FormWeight w)
      : ctx_(std::move(ctx)), lo_(lo), hi_(hi), weight_(w) {}

  static LaurentForm monomial(ContextPtr ctx, int exp, Poly c, FormWeight w);

  const ContextPtr& context() const { return ctx_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const FormWeight& weight() const { return weight_; }
  const std::map<int, Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Exact coefficient; zero below the window, error above it.
  Poly coeff(int exp) const;
  void add_coeff(int exp, const Poly& c);

  LaurentForm& operator+=(const LaurentForm& o);
  friend LaurentForm operator+(LaurentForm a, const LaurentForm& b) {
    return a += b;
  }
  friend LaurentForm operator*(const LaurentForm& a, const LaurentForm& b);
  LaurentForm scaled(const Poly& c) const;
  LaurentForm scaled(const Rational& c) const;
  LaurentForm negated() const;

  /// Multiplies by z^k.
  LaurentForm shifted(int k) const;

  /// d/dz on the scalar part; raises the dz weight by one.
  LaurentForm derivative() const;

  /// Series inverse up to exponent hi_target. The leading coefficient must
  /// be a single-term Poly.
  LaurentForm inverse(int hi_target) const;

  /// this / b, valid through exponent hi_target.
  LaurentForm divided_by(const LaurentForm& b, int hi_target) const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  int lo_ = 0;
  int hi_ = kExactHi;
  FormWeight weight_;
  std::map<int, Poly> coeffs_;
};

/// Coefficient of z^{-1} dz. The window must cover -1 and the weight must
/// be a plain one-form (reduce thetas first).
Poly residue(const LaurentForm& form);

/// Truncated expansion in two ordered variables. Weights and windows are
/// tracked per slot; coefficients are keyed by (e1, e2).
struct BiLaurent {
  ContextPtr ctx;
  FormWeight w1, w2;
  int lo1 = 0, hi1 = LaurentForm::kExactHi;
  int lo2 = 0, hi2 = LaurentForm::kExactHi;
  std::map<std::pair<int, int>, Poly> coeffs;

  void add(int e1, int e2, const Poly& c);
  Poly coeff(int e1, int e2) const;

  /// Tensor swap z1 <-> z2 with the Grassmann sign when both slots carry a
  /// theta factor.
  BiLaurent swapped() const;

  /// Evaluation on the diagonal z2 = z1, reducing Theta_1 Theta_2 in the
  /// written order.
  LaurentForm diagonal() const;
};

}  // namespace superrec

#endif

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

#ifndef SUPERREC_OPERATOR_EXPR_HPP
#define SUPERREC_OPERATOR_EXPR_HPP

#include "superrec/constraint_coeffs.hpp"
#include "superrec/curve.hpp"
#include "superrec/fock.hpp"

namespace superrec {

/// Split mode alphabet. J_0 never appears in words (it is the constant
/// tau0 + h Q0, folded at build time). The R zero mode is kept split:
/// gzm = theta^0/2 (creator half), gzp = hbar d/dtheta^0 (annihilator half).
struct Mode {
  enum Kind : uint8_t { j, g, gzp, gzm } kind;
  int idx2;  // doubled index; 2a for J_a, 2r for Gamma_r, 0 for gz*
  auto operator<=>(const Mode&) const = default;
};

bool mode_is_fermionic(Mode m);
bool mode_is_creator(Mode m);

using Word = std::vector<Mode>;  // canonically ordered, <= 4 modes

/// Normal-ordered sum of mode words with Poly coefficients.
///
/// `window2` is the exactness guarantee: the expression agrees with its
/// infinite counterpart on every word whose mode indices all satisfy
/// |idx2| <= window2. `shift2` bounds |sum of idx2| over words.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  OperatorExpr(ContextPtr ctx, Sector sector)
      : ctx_(std::move(ctx)), sector_(sector) {}

  const ContextPtr& context() const { return ctx_; }
  Sector sector() const { return sector_; }
  const std::map<Word, Poly>& terms() const { return terms_; }
  int window2() const { return window2_; }
  int shift2() const { return shift2_; }
  int parity() const { return parity_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds `coeff * (m1 m2 ...)` in the given (not necessarily canonical)
  /// order; normal ordering and R zero-mode splitting happen here.
  void emit(const std::vector<Mode>& modes, const Poly& coeff);
  void add_constant(const Poly& c) { emit({}, c); }

  void set_window2(int w) { window2_ = w; }
  void note_shift2(int s);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr scaled(const Poly& c) const;
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// [a,b]_s: anticommutator iff both operands are odd.
  static OperatorExpr super_commutator(const OperatorExpr& a,
                                       const OperatorExpr& b);

  /// True iff no stored word has all |idx2| <= check_window2. Throws when
  /// the expression's guarantee does not cover the requested window.
  bool vanishes_on_window(int check_window2) const;

  /// Exact action on a Fock element, truncated by weighted degree. Throws
  /// when the materialized window cannot cover the element.
  FockElement apply(const FockElement& v, int degree_cutoff) const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  Sector sector_ = Sector::ns;
  std::map<Word, Poly> terms_;
  int window2_ = std::numeric_limits<int>::max() / 4;
  int shift2_ = 0;
  int parity_ = 0;
  bool parity_set_ = false;
};

enum class GenKind { l, g };

/// Super Virasoro generators L_n / G_r in the free-field representation
/// with background charge, materialized to a mode window. `index2` is 2n
/// resp. 2r; tau0/Q0 default to the ring symbols.
OperatorExpr build_generator(ContextPtr ctx, Sector sector, GenKind kind,
                             int index2, int window, const Poly& tau0,
                             const Poly& q0);
OperatorExpr build_generator(ContextPtr ctx, Sector sector, GenKind kind,
                             int index2, int window);

enum class ConstraintKind { h, f };

/// Constraint operators H_i / F_i of a curve in expanded normal form
/// (linear C/C' sums, background tail, quadratic blocks, constant
/// -hbar*Dtilde_i for H).
OperatorExpr build_constraint(const SuperCurve& curve, int i,
                              ConstraintKind kind, int window);

/// [a,b]_s - expected_rhs, normal ordered. The zero operator (on the
/// guaranteed window) certifies the relation.
OperatorExpr commutator_residual(const OperatorExpr& a, const OperatorExpr& b,
                                 const OperatorExpr& expected_rhs);

struct VirasoroSweepReport {
  bool all_zero = true;
  int relations_checked = 0;
  std::vector<std::string> failures;
};

/// Checks every algebra relation with |m|,|n| <= max_mode and all
/// sector-admissible |r|,|s| <= max_r2/2, including the central terms with
/// c = hbar(3/2 - 3 Q0^2). Residuals are verified on a window wide enough
/// that the eventually-polynomial word coefficients are pinned exactly.
VirasoroSweepReport virasoro_sweep(ContextPtr ctx, Sector sector, int max_mode,
                                   int max_r2);

}  // namespace superrec

#endif

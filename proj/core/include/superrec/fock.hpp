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

#ifndef SUPERREC_FOCK_HPP
#define SUPERREC_FOCK_HPP

#include <compare>
#include <map>
#include <vector>

#include "superrec/curve.hpp"
#include "superrec/poly.hpp"

namespace superrec {

/// x-multiset (ascending, indices >= 1) and theta set (strictly ascending,
/// indices >= 0). Reordering signs live in the coefficients.
struct FockMonomial {
  std::vector<int> bos;
  std::vector<int> fer;
  auto operator<=>(const FockMonomial&) const = default;
  int parity() const { return static_cast<int>(fer.size()) & 1; }
  int var_count() const { return static_cast<int>(bos.size() + fer.size()); }
};

/// Finite linear combination of Fock monomials with Poly coefficients.
class FockElement {
 public:
  FockElement() = default;
  explicit FockElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static FockElement vacuum(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::map<FockMonomial, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FockMonomial& m, const Poly& c);
  Poly coeff(const FockMonomial& m) const;

  FockElement& operator+=(const FockElement& o);
  FockElement& operator-=(const FockElement& o);
  friend FockElement operator+(FockElement a, const FockElement& b) {
    return a += b;
  }
  friend FockElement operator-(FockElement a, const FockElement& b) {
    return a -= b;
  }
  FockElement scaled(const Poly& c) const;
  FockElement scaled(const Rational& c) const;

  friend bool operator==(const FockElement& a, const FockElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Graded product (thetas anticommute; colliding thetas annihilate).
  friend FockElement operator*(const FockElement& a, const FockElement& b);

  // Elementary variable operations. Derivatives are left derivatives and
  // carry no hbar; mode actions add it.
  FockElement mul_x(int i, const Rational& scale = 1) const;
  FockElement mul_theta(int j) const;
  FockElement d_x(int i) const;
  FockElement d_theta(int j) const;

  /// Largest variable index present (fermionic label j counts as j + 1 so
  /// that it bounds the mode index in both sectors).
  int max_mode_index() const;

  /// Drops all (monomial, coefficient-term) pairs of weighted degree
  /// > cutoff, with deg x = deg theta = 1, deg hbar = 2, deg Lambda = 1.
  FockElement truncated(int degree_cutoff) const;
  int min_degree() const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::map<FockMonomial, Poly> terms_;
};

/// exp of an element with strictly positive minimum degree, truncated.
FockElement fock_exp(const FockElement& f, int degree_cutoff);

/// Heisenberg / Clifford mode labels. J: bosonic index a (a = 0 acts as the
/// constant tau0 + h Q0). Gamma: fermionic label with doubled index 2r
/// (NS: odd, R: even; 2r = 0 is the full R zero mode).
struct ModeLabel {
  enum Kind { j, gamma } kind;
  int idx2;
};

/// Single-mode action in the free-field representation.
FockElement apply_mode(Sector sector, ModeLabel mode, const FockElement& v,
                       const Poly& j0_value);

/// Conjugate pairing (bra | ket): the bra is rewritten through daggered
/// modes, applied to the ket, and all variables are set to zero.
Poly dagger_pair(Sector sector, const FockElement& bra, const FockElement& ket);

}  // namespace superrec

#endif

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

#ifndef SUPERREC_POLY_HPP
#define SUPERREC_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace superrec {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into an exact rational.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/// Canonicalized num/den (the raw two-argument mpq_class constructor does
/// not reduce).
inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Fixed symbol set of one computation run.
///
/// The first five symbols are always tau0, Q0, T, Lambda, h_half with
/// h_half = hbar^{1/2}; extra symbols may be declared at construction
/// (symbolic parameter mode). Exponents are integers: negative powers of
/// tau0 appear in solved tables (every triangular solve divides by the
/// leading dilaton coefficient) and negative powers of h_half appear after
/// the Lambda^2 = hbar*T regrading.
class Context {
 public:
  static constexpr int kTau0 = 0;
  static constexpr int kQ0 = 1;
  static constexpr int kT = 2;
  static constexpr int kLambda = 3;
  static constexpr int kHHalf = 4;

  Context() : names_{"tau0", "Q0", "T", "Lambda", "h_half"} {}
  explicit Context(const std::vector<std::string>& extra_symbols) : Context() {
    for (const auto& s : extra_symbols) {
      if (find(s) >= 0) throw std::invalid_argument("duplicate symbol: " + s);
      names_.push_back(s);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int find(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == s) return i;
    return -1;
  }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const Context>;
using ExpVec = std::vector<int32_t>;

/// deg x = deg theta = 1, deg hbar = 2 and Lambda^2 = hbar*T give weight 1
/// to both h_half and Lambda; parameters are weightless.
int exponent_weight(const ExpVec& e);

/// Sparse exact multivariate Laurent polynomial over Q.
///
/// Invariants: no stored zero coefficients; every exponent vector has one
/// entry per context symbol. Equality is exact. A default-constructed Poly
/// is the context-free zero and combines with any context.
class Poly {
 public:
  using TermMap = std::map<ExpVec, Rational>;

  Poly() = default;
  static Poly zero(ContextPtr ctx) { return Poly(std::move(ctx)); }
  static Poly constant(ContextPtr ctx, const Rational& c);
  static Poly one(ContextPtr ctx) { return constant(std::move(ctx), 1); }
  static Poly monomial(ContextPtr ctx, ExpVec e, const Rational& c);
  static Poly symbol(ContextPtr ctx, int sym, int exponent = 1,
                     const Rational& c = 1);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact coefficient of a canonical exponent vector; zero if absent.
  Rational coeff_of(const ExpVec& e) const;

  /// Multiplies by a single symbol power.
  Poly shifted(int sym, int exponent) const;

  /// Inverse of a single-term Poly. Throws for sums: triangular solves
  /// require a monomial (or rational) pivot.
  Poly inverse() const;

  /// Smallest/largest exponent of one symbol over all terms (0 if zero poly).
  int min_exponent(int sym) const;
  int max_exponent(int sym) const;

  /// Drops all terms whose exponent of `sym` exceeds `max_exp`.
  Poly dropped_above(int sym, int max_exp) const;

  /// Smallest weighted degree over terms; `fallback` for the zero poly.
  int min_weighted_degree(int fallback = 0) const;

  std::string to_string() const;

 private:
  explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  void insert_term(const ExpVec& e, const Rational& c);
  void adopt(const Poly& o);

  ContextPtr ctx_;
  TermMap terms_;
};

/// The Lambda^2 = hbar*T change of variables: T^d -> Lambda^{2d} h_half^{-2d}.
Poly regrade(const Poly& p);
/// Inverse substitution (Lambda exponents must be even).
Poly unregrade(const Poly& p);

}  // namespace superrec

#endif

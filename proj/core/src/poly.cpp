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

#include "superrec/poly.hpp"

#include <algorithm>
#include <sstream>

namespace superrec {

Rational rational_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

int exponent_weight(const ExpVec& e) {
  int w = 0;
  if (static_cast<int>(e.size()) > Context::kLambda) w += e[Context::kLambda];
  if (static_cast<int>(e.size()) > Context::kHHalf) w += e[Context::kHHalf];
  return w;
}

Poly Poly::constant(ContextPtr ctx, const Rational& c) {
  Poly p(std::move(ctx));
  if (c != 0) p.terms_.emplace(ExpVec(p.ctx_->size(), 0), c);
  return p;
}

Poly Poly::monomial(ContextPtr ctx, ExpVec e, const Rational& c) {
  Poly p(std::move(ctx));
  if (static_cast<int>(e.size()) != p.ctx_->size())
    throw std::invalid_argument("monomial: exponent vector size mismatch");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

Poly Poly::symbol(ContextPtr ctx, int sym, int exponent, const Rational& c) {
  ExpVec e(ctx->size(), 0);
  e.at(sym) = exponent;
  return monomial(std::move(ctx), std::move(e), c);
}

void Poly::adopt(const Poly& o) {
  if (!ctx_) ctx_ = o.ctx_;
}

void Poly::insert_term(const ExpVec& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.ctx_ ? a.ctx_ : b.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  ExpVec e(a.terms_.begin()->first.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(ctx_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Rational Poly::coeff_of(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::shifted(int sym, int exponent) const {
  if (exponent == 0) return *this;
  Poly r(ctx_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2.at(sym) += exponent;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

Poly Poly::inverse() const {
  if (!is_single_term())
    throw std::domain_error("Poly::inverse: pivot is not a single term: " +
                            to_string());
  const auto& [e, c] = *terms_.begin();
  ExpVec einv(e.size());
  for (size_t i = 0; i < e.size(); ++i) einv[i] = -e[i];
  return monomial(ctx_, std::move(einv), Rational(1) / c);
}

int Poly::min_exponent(int sym) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[sym] < m) m = e[sym];
    first = false;
  }
  return m;
}

int Poly::max_exponent(int sym) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[sym] > m) m = e[sym];
    first = false;
  }
  return m;
}

Poly Poly::dropped_above(int sym, int max_exp) const {
  Poly r(ctx_);
  for (const auto& [e, c] : terms_)
    if (e[sym] <= max_exp) r.terms_.emplace(e, c);
  return r;
}

int Poly::min_weighted_degree(int fallback) const {
  if (terms_.empty()) return fallback;
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int w = exponent_weight(e);
    if (first || w < m) m = w;
    first = false;
  }
  return m;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) os << "*" << ctx_->name(static_cast<int>(i)) << "^" << e[i];
  }
  return os.str();
}

Poly regrade(const Poly& p) {
  Poly r = Poly::zero(p.context());
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2 = e;
    int d = e2[Context::kT];
    e2[Context::kT] = 0;
    e2[Context::kLambda] += 2 * d;
    e2[Context::kHHalf] -= 2 * d;
    r += Poly::monomial(p.context(), std::move(e2), c);
  }
  return r;
}

Poly unregrade(const Poly& p) {
  Poly r = Poly::zero(p.context());
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2 = e;
    int l = e2[Context::kLambda];
    if (l % 2 != 0)
      throw std::domain_error("unregrade: odd Lambda exponent");
    e2[Context::kLambda] = 0;
    e2[Context::kT] += l / 2;
    e2[Context::kHHalf] += l;
    r += Poly::monomial(p.context(), std::move(e2), c);
  }
  return r;
}

}  // namespace superrec

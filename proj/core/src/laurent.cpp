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

#include "superrec/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace superrec {

namespace {

int sat_add(int a, int b) {
  if (a >= LaurentForm::kExactHi || b >= LaurentForm::kExactHi)
    return LaurentForm::kExactHi;
  return a + b;
}

// Theta_z^2 = dz in the NS sector and z dz in the R sector.
int theta_square_shift(ThetaKind k) { return k == ThetaKind::r ? 1 : 0; }

FormWeight combine_weights(const FormWeight& a, const FormWeight& b,
                           int& exp_shift) {
  FormWeight w;
  w.dz = a.dz + b.dz;
  exp_shift = 0;
  if (a.theta == ThetaKind::none) {
    w.theta = b.theta;
  } else if (b.theta == ThetaKind::none) {
    w.theta = a.theta;
  } else if (a.theta == b.theta) {
    w.theta = ThetaKind::none;
    w.dz += 1;
    exp_shift = theta_square_shift(a.theta);
  } else {
    throw std::invalid_argument("LaurentForm: mixed NS/R theta factors");
  }
  return w;
}

}  // namespace

LaurentForm LaurentForm::monomial(ContextPtr ctx, int exp, Poly c,
                                  FormWeight w) {
  LaurentForm f(std::move(ctx), exp, kExactHi, w);
  if (!c.is_zero()) f.coeffs_.emplace(exp, std::move(c));
  return f;
}

Poly LaurentForm::coeff(int exp) const {
  if (exp > hi_)
    throw WindowError("LaurentForm::coeff: exponent " + std::to_string(exp) +
                      " beyond computed window hi=" + std::to_string(hi_));
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Poly::zero(ctx_) : it->second;
}

void LaurentForm::add_coeff(int exp, const Poly& c) {
  if (c.is_zero()) return;
  if (exp < lo_) lo_ = exp;
  auto [it, fresh] = coeffs_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LaurentForm& LaurentForm::operator+=(const LaurentForm& o) {
  if (!ctx_) ctx_ = o.ctx_;
  if (!(weight_ == o.weight_) && !o.coeffs_.empty() && !coeffs_.empty())
    throw std::invalid_argument("LaurentForm: adding mismatched weights");
  if (coeffs_.empty() && !o.coeffs_.empty()) weight_ = o.weight_;
  lo_ = std::min(lo_, o.lo_);
  hi_ = std::min(hi_, o.hi_);
  for (const auto& [e, c] : o.coeffs_) add_coeff(e, c);
  return *this;
}

LaurentForm operator*(const LaurentForm& a, const LaurentForm& b) {
  int shift = 0;
  FormWeight w = combine_weights(a.weight_, b.weight_, shift);
  LaurentForm r(a.ctx_ ? a.ctx_ : b.ctx_, sat_add(a.lo_, b.lo_) + shift,
                std::min(sat_add(a.hi_, b.lo_), sat_add(a.lo_, b.hi_)) + shift,
                w);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      int e = ea + eb + shift;
      if (e <= r.hi_) r.add_coeff(e, ca * cb);
    }
  return r;
}

LaurentForm LaurentForm::scaled(const Poly& c) const {
  LaurentForm r(ctx_, lo_, hi_, weight_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
  return r;
}

LaurentForm LaurentForm::scaled(const Rational& c) const {
  LaurentForm r(ctx_, lo_, hi_, weight_);
  if (c == 0) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v.scaled(c));
  return r;
}

LaurentForm LaurentForm::negated() const {
  LaurentForm r(ctx_, lo_, hi_, weight_);
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, -v);
  return r;
}

LaurentForm LaurentForm::shifted(int k) const {
  LaurentForm r(ctx_, sat_add(lo_, k), sat_add(hi_, k), weight_);
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e + k, v);
  return r;
}

LaurentForm LaurentForm::derivative() const {
  FormWeight w = weight_;
  w.dz += 1;
  LaurentForm r(ctx_, lo_ - 1, sat_add(hi_, -1), w);
  for (const auto& [e, v] : coeffs_)
    if (e != 0) r.coeffs_.emplace(e - 1, v.scaled(e));
  return r;
}

LaurentForm LaurentForm::inverse(int hi_target) const {
  if (coeffs_.empty())
    throw std::domain_error("LaurentForm::inverse of zero series");
  if (weight_.theta != ThetaKind::none)
    throw std::invalid_argument("LaurentForm::inverse: theta-weighted form");
  // Everything below the first stored exponent is exactly zero, so the true
  // leading term sits at L.
  const int L = coeffs_.begin()->first;
  const FormWeight w{-weight_.dz, ThetaKind::none};
  const int order = hi_target + L;  // highest regular coefficient needed
  if (order < 0) return LaurentForm(ctx_, -L, hi_target, w);
  if (hi_ < hi_target + 2 * L)
    throw WindowError("LaurentForm::inverse: input window too small");
  const Poly lead_inv = coeffs_.begin()->second.inverse();
  LaurentForm r(ctx_, -L, hi_target, w);
  std::vector<Poly> v(static_cast<size_t>(order) + 1, Poly::zero(ctx_));
  v[0] = lead_inv;
  for (int j = 1; j <= order; ++j) {
    Poly s = Poly::zero(ctx_);
    for (int k = 1; k <= j; ++k) {
      auto it = coeffs_.find(L + k);
      if (it == coeffs_.end()) continue;
      s += it->second * v[static_cast<size_t>(j - k)];
    }
    v[static_cast<size_t>(j)] = -(lead_inv * s);
  }
  for (int j = 0; j <= order; ++j)
    if (!v[static_cast<size_t>(j)].is_zero())
      r.coeffs_.emplace(j - L, v[static_cast<size_t>(j)]);
  return r;
}

LaurentForm LaurentForm::divided_by(const LaurentForm& b, int hi_target) const {
  LaurentForm binv = b.inverse(hi_target - lo_);
  return (*this) * binv;
}

std::string LaurentForm::to_string() const {
  std::ostringstream os;
  os << "[" << lo_ << "," << (hi_ >= kExactHi ? std::string("inf")
                                              : std::to_string(hi_))
     << "] ";
  for (const auto& [e, c] : coeffs_)
    os << "z^" << e << "*(" << c.to_string() << ") ";
  os << "(dz^" << weight_.dz << ")";
  return os.str();
}

Poly residue(const LaurentForm& form) {
  if (form.weight().theta != ThetaKind::none || form.weight().dz != 1)
    throw std::invalid_argument(
        "residue: form must be a plain one-form after theta reduction");
  if (form.hi() < -1)
    throw WindowError("residue: window does not cover exponent -1");
  return form.coeff(-1);
}

void BiLaurent::add(int e1, int e2, const Poly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(e1, e2);
  auto [it, fresh] = coeffs.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

Poly BiLaurent::coeff(int e1, int e2) const {
  if (e1 > hi1 || e2 > hi2)
    throw WindowError("BiLaurent::coeff beyond window");
  auto it = coeffs.find({e1, e2});
  return it == coeffs.end() ? Poly::zero(ctx) : it->second;
}

BiLaurent BiLaurent::swapped() const {
  BiLaurent r;
  r.ctx = ctx;
  r.w1 = w2;
  r.w2 = w1;
  r.lo1 = lo2;
  r.hi1 = hi2;
  r.lo2 = lo1;
  r.hi2 = hi1;
  const bool both_theta =
      w1.theta != ThetaKind::none && w2.theta != ThetaKind::none;
  for (const auto& [e, c] : coeffs)
    r.add(e.second, e.first, both_theta ? -c : c);
  return r;
}

LaurentForm BiLaurent::diagonal() const {
  int shift = 0;
  FormWeight w = combine_weights(w1, w2, shift);
  LaurentForm r(ctx, lo1 + lo2 + shift,
                std::min(sat_add(hi1, lo2), sat_add(hi2, lo1)) + shift, w);
  for (const auto& [e, c] : coeffs) {
    int exp = e.first + e.second + shift;
    if (exp <= r.hi()) r.add_coeff(exp, c);
  }
  return r;
}

}  // namespace superrec

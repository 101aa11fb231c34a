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

#include "superrec/fock.hpp"

#include <algorithm>
#include <sstream>

namespace superrec {

namespace {

// Sign and merged list for theta_a * theta^{list}; false when a collides.
bool theta_insert(int a, const std::vector<int>& fer, std::vector<int>& out,
                  int& sign) {
  out.clear();
  out.reserve(fer.size() + 1);
  size_t pos = 0;
  while (pos < fer.size() && fer[pos] < a) ++pos;
  if (pos < fer.size() && fer[pos] == a) return false;
  out.insert(out.end(), fer.begin(), fer.begin() + pos);
  out.push_back(a);
  out.insert(out.end(), fer.begin() + pos, fer.end());
  sign = (pos % 2 == 0) ? 1 : -1;
  return true;
}

Poly hbar(const ContextPtr& ctx, int half_powers = 2) {
  return Poly::symbol(ctx, Context::kHHalf, half_powers);
}

}  // namespace

FockElement FockElement::vacuum(ContextPtr ctx) {
  FockElement f(ctx);
  f.add_term(FockMonomial{}, Poly::one(ctx));
  return f;
}

void FockElement::add_term(const FockMonomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly FockElement::coeff(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly::zero(ctx_) : it->second;
}

FockElement& FockElement::operator+=(const FockElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockElement FockElement::scaled(const Poly& c) const {
  FockElement r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

FockElement FockElement::scaled(const Rational& c) const {
  FockElement r(ctx_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v.scaled(c));
  return r;
}

FockElement operator*(const FockElement& a, const FockElement& b) {
  FockElement r(a.ctx_ ? a.ctx_ : b.ctx_);
  std::vector<int> bos, fer;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // Fermionic merge: count crossings of mb's thetas moving into ma's.
      bool dead = false;
      long crossings = 0;
      fer.clear();
      size_t ia = 0, ib = 0;
      while (ia < ma.fer.size() && ib < mb.fer.size()) {
        if (ma.fer[ia] < mb.fer[ib]) {
          fer.push_back(ma.fer[ia++]);
        } else if (ma.fer[ia] > mb.fer[ib]) {
          crossings += static_cast<long>(ma.fer.size() - ia);
          fer.push_back(mb.fer[ib++]);
        } else {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      while (ia < ma.fer.size()) fer.push_back(ma.fer[ia++]);
      while (ib < mb.fer.size()) fer.push_back(mb.fer[ib++]);
      bos.resize(ma.bos.size() + mb.bos.size());
      std::merge(ma.bos.begin(), ma.bos.end(), mb.bos.begin(), mb.bos.end(),
                 bos.begin());
      Poly c = ca * cb;
      if (crossings % 2 != 0) c = -c;
      r.add_term(FockMonomial{bos, fer}, c);
    }
  }
  return r;
}

FockElement FockElement::mul_x(int i, const Rational& scale) const {
  FockElement r(ctx_);
  for (const auto& [m, c] : terms_) {
    FockMonomial m2 = m;
    m2.bos.insert(std::upper_bound(m2.bos.begin(), m2.bos.end(), i), i);
    r.add_term(m2, c.scaled(scale));
  }
  return r;
}

FockElement FockElement::mul_theta(int j) const {
  FockElement r(ctx_);
  std::vector<int> fer;
  for (const auto& [m, c] : terms_) {
    int sign = 1;
    if (!theta_insert(j, m.fer, fer, sign)) continue;
    r.add_term(FockMonomial{m.bos, fer}, sign > 0 ? c : -c);
  }
  return r;
}

FockElement FockElement::d_x(int i) const {
  FockElement r(ctx_);
  for (const auto& [m, c] : terms_) {
    auto range = std::equal_range(m.bos.begin(), m.bos.end(), i);
    long mult = range.second - range.first;
    if (mult == 0) continue;
    FockMonomial m2 = m;
    m2.bos.erase(m2.bos.begin() + (range.first - m.bos.begin()));
    r.add_term(m2, c.scaled(mult));
  }
  return r;
}

FockElement FockElement::d_theta(int j) const {
  FockElement r(ctx_);
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(m.fer.begin(), m.fer.end(), j);
    if (it == m.fer.end() || *it != j) continue;
    long pos = it - m.fer.begin();
    FockMonomial m2 = m;
    m2.fer.erase(m2.fer.begin() + pos);
    r.add_term(m2, pos % 2 == 0 ? c : -c);
  }
  return r;
}

int FockElement::max_mode_index() const {
  int m = 0;
  for (const auto& [mon, c] : terms_) {
    if (!mon.bos.empty()) m = std::max(m, mon.bos.back());
    if (!mon.fer.empty()) m = std::max(m, mon.fer.back() + 1);
  }
  return m;
}

FockElement FockElement::truncated(int degree_cutoff) const {
  FockElement r(ctx_);
  for (const auto& [m, c] : terms_) {
    Poly kept = Poly::zero(ctx_);
    for (const auto& [e, v] : c.terms()) {
      if (m.var_count() + exponent_weight(e) <= degree_cutoff)
        kept += Poly::monomial(ctx_, e, v);
    }
    r.add_term(m, kept);
  }
  return r;
}

int FockElement::min_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int d = m.var_count() + c.min_weighted_degree();
    if (first || d < best) best = d;
    first = false;
  }
  return first ? 0 : best;
}

std::string FockElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (const auto& [m, c] : terms_) {
    os << "(" << c.to_string() << ")";
    for (int i : m.bos) os << " x" << i;
    for (int j : m.fer) os << " th" << j;
    os << " ; ";
  }
  return os.str();
}

FockElement fock_exp(const FockElement& f, int degree_cutoff) {
  if (!f.is_zero() && f.min_degree() < 1)
    throw std::domain_error("fock_exp: element has terms of degree < 1");
  FockElement acc = FockElement::vacuum(f.context());
  FockElement power = acc;
  for (int k = 1; k <= degree_cutoff; ++k) {
    power = (power * f).truncated(degree_cutoff).scaled(frac(1, k));
    if (power.is_zero()) break;
    acc += power;
  }
  return acc;
}

FockElement apply_mode(Sector sector, ModeLabel mode, const FockElement& v,
                       const Poly& j0_value) {
  const auto& ctx = v.context();
  if (mode.kind == ModeLabel::j) {
    if (mode.idx2 % 2 != 0)
      throw std::invalid_argument("apply_mode: J index must be an integer");
    int a = mode.idx2 / 2;
    if (a == 0) return v.scaled(j0_value);
    if (a < 0) return v.mul_x(-a, Rational(-a));
    return v.d_x(a).scaled(hbar(ctx));
  }
  const int tf = two_f(sector);
  if (((mode.idx2 % 2) + 2) % 2 != tf % 2)
    throw std::invalid_argument("apply_mode: Gamma index parity mismatch");
  if (sector == Sector::ns) {
    // Gamma_{i+1/2} = hbar d/dtheta^i, Gamma_{-i-1/2} = theta^i.
    int i = (std::abs(mode.idx2) - 1) / 2;
    if (mode.idx2 < 0) return v.mul_theta(i);
    return v.d_theta(i).scaled(hbar(ctx));
  }
  int r = mode.idx2 / 2;
  if (r < 0) return v.mul_theta(-r);
  if (r > 0) return v.d_theta(r).scaled(hbar(ctx));
  // Gamma_0 = theta^0/2 + hbar d/dtheta^0.
  return v.mul_theta(0).scaled(frac(1, 2)) + v.d_theta(0).scaled(hbar(ctx));
}

Poly dagger_pair(Sector sector, const FockElement& bra,
                 const FockElement& ket) {
  const auto& ctx = bra.context() ? bra.context() : ket.context();
  Poly result = Poly::zero(ctx);
  auto ib = bra.terms().begin();
  auto ik = ket.terms().begin();
  while (ib != bra.terms().end() && ik != ket.terms().end()) {
    if (ib->first < ik->first) {
      ++ib;
      continue;
    }
    if (ik->first < ib->first) {
      ++ik;
      continue;
    }
    const FockMonomial& m = ib->first;
    // x^i with multiplicity mu pairs to mu! (hbar/i)^mu; each theta pairs to
    // hbar, and theta^0 in the R sector to 2 hbar.
    Poly w = Poly::one(ctx);
    size_t p = 0;
    while (p < m.bos.size()) {
      size_t q = p;
      while (q < m.bos.size() && m.bos[q] == m.bos[p]) ++q;
      long mu = static_cast<long>(q - p);
      Rational factor = 1;
      for (long t = 1; t <= mu; ++t) factor *= Rational(t) / m.bos[p];
      w *= hbar(ctx, static_cast<int>(2 * mu)).scaled(factor);
      p = q;
    }
    if (!m.fer.empty()) {
      Rational zero_mode_factor =
          (sector == Sector::r && m.fer.front() == 0) ? 2 : 1;
      w *= hbar(ctx, static_cast<int>(2 * m.fer.size()))
               .scaled(zero_mode_factor);
    }
    result += ib->second * ik->second * w;
    ++ib;
    ++ik;
  }
  return result;
}

}  // namespace superrec

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

#include "superrec/str.hpp"

#include <algorithm>
#include <functional>

#include "superrec/airy.hpp"
#include "superrec/constraint_coeffs.hpp"

namespace superrec {

namespace {

struct FamKey {
  bool fermionic = false;
  int two_g = 0;
  std::vector<int> bos;
  std::vector<int> fer;
  auto operator<=>(const FamKey&) const = default;
};

std::vector<int> erase_one(const std::vector<int>& v, int value) {
  std::vector<int> r = v;
  r.erase(std::find(r.begin(), r.end(), value));
  return r;
}

std::vector<int> insert_sorted(const std::vector<int>& v, int value) {
  std::vector<int> r = v;
  r.insert(std::upper_bound(r.begin(), r.end(), value), value);
  return r;
}

std::vector<int> sorted_union(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> r(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), r.begin());
  return r;
}

long count_of(const std::vector<int>& v, int value) {
  auto range = std::equal_range(v.begin(), v.end(), value);
  return range.second - range.first;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      return false;
  }
  return true;
}

Rational slot_multiplicity(const std::vector<int>& merged,
                           const std::vector<int>& part) {
  Rational r = 1;
  size_t i = 0;
  while (i < part.size()) {
    size_t j = i;
    while (j < part.size() && part[j] == part[i]) ++j;
    long take = static_cast<long>(j - i);
    long have = count_of(merged, part[i]);
    Rational b = 1;
    for (long t = 0; t < take; ++t) b *= Rational(have - t) / (t + 1);
    r *= b;
    i = j;
  }
  return r;
}

using Entry = std::pair<const CellKey, Poly>;

class Recursor {
 public:
  using Sink =
      std::function<void(const FamKey&, QKind, const LaurentForm&, const Poly&)>;

  Recursor(const SuperCurve& curve, const StrOptions& opt)
      : curve_(curve),
        ctx_(curve.ctx),
        opt_(opt),
        tf_(two_f(curve.sector)),
        bound_(opt.index_bound),
        tailw_(opt.tail_window) {
    if (tailw_ <= 0)
      tailw_ = curve.N + std::max(coeff_c_support(curve), phi_psi_width(curve));
    reach_ = bound_ + tailw_;
    z_lo_ = -(2 * reach_ + 2 * curve_.N + 8);
    z_hi_ = 1 - z_lo_;
    out_.z_lo = z_lo_;
    out_.z_hi = z_hi_;
    out_.table = CoeffTable(ctx_, opt.chi_max, bound_);
    for (int a = 1; a <= reach_ + 1; ++a)
      eb_.emplace(a, basis_scalar(curve_, BasisKind::dxi, -a, z_hi_));
    for (int j = 0; j <= reach_ + 1; ++j)
      ef_.emplace(j, basis_scalar(curve_, BasisKind::eta_neg, j, z_hi_));
    w01_ = strip_weight(dilaton_form(curve_, z_hi_));
    whalf_ = strip_weight(crosscap_form(curve_, z_hi_));
    w01_inv_ = w01_.inverse(-1 - z_lo_);
    q0_ = curve_.q_at(0);
  }

  static LaurentForm strip_weight(const LaurentForm& f) {
    LaurentForm r(f.context(), f.lo(), f.hi(), FormWeight{});
    for (const auto& [e, c] : f.coeffs()) r.add_coeff(e, c);
    return r;
  }

  LaurentForm scalar_zero() const {
    return LaurentForm(ctx_, z_lo_, z_hi_, FormWeight{});
  }

  const LaurentForm& eb(int a) const { return eb_.at(a); }
  const LaurentForm& ef(int j) const { return ef_.at(j); }
  const LaurentForm& w01() const { return w01_; }
  int reach() const { return reach_; }

  static LaurentForm dscalar(const LaurentForm& f) {
    LaurentForm r(f.context(), f.lo() - 1, f.hi() - 1, FormWeight{});
    for (const auto& [e, c] : f.coeffs())
      if (e != 0) r.add_coeff(e - 1, c.scaled(e));
    return r;
  }

  // eta^+ scalar: NS z^l (label l >= 0), R z^{l-1} (l >= 1); the R label 0
  // positive leg is eta_0 itself.
  LaurentForm ef_pos(int l) const {
    if (tf_ == 1)
      return LaurentForm::monomial(ctx_, l, Poly::one(ctx_), FormWeight{});
    if (l == 0) return ef_.at(0);
    return LaurentForm::monomial(ctx_, l - 1, Poly::one(ctx_), FormWeight{});
  }

  // Theta_z^2 = z^{1-2f} dz folded into scalar products.
  LaurentForm mul_ff(const LaurentForm& a, const LaurentForm& b) const {
    return (a * b).shifted(1 - tf_);
  }

  OmegaTable run() {
    seed();
    for (int chi = 4; chi <= opt_.chi_max; ++chi) {
      acc_.clear();
      auto sink = [this](const FamKey& fam, QKind, const LaurentForm& piece,
                         const Poly& value) {
        if (value.is_zero() || piece.is_zero()) return;
        auto it = acc_.find(fam);
        if (it == acc_.end()) it = acc_.emplace(fam, scalar_zero()).first;
        it->second += piece.scaled(value);
      };
      scatter_level(chi, by_level_, sink);
      extract_level(chi);
    }
    return std::move(out_);
  }

  void scatter_level(
      int chi,
      const std::map<int, std::vector<const Entry*>>& levels,
      const Sink& sink) const {
    auto at = levels.find(chi - 1);
    if (at != levels.end())
      for (const auto* e : at->second) scatter_single(*e, sink);
    for (int chi1 = 3; chi1 <= chi - 2; ++chi1) {
      int chi2 = chi + 1 - chi1;
      if (chi2 < 3) continue;
      auto i1 = levels.find(chi1);
      auto i2 = levels.find(chi2);
      if (i1 == levels.end() || i2 == levels.end()) continue;
      for (const auto* e1 : i1->second)
        for (const auto* e2 : i2->second) scatter_pair(*e1, *e2, sink);
    }
  }

  void scatter_single(const Entry& entry, const Sink& sink) const {
    const CellKey& cell = entry.first;
    const Poly& v = entry.second;

    // ---- pieces of Q^{BB} (true weight dz^2) ----
    for (size_t p = 0; p < cell.bos.size(); ++p) {
      if (p > 0 && cell.bos[p] == cell.bos[p - 1]) continue;
      int a = cell.bos[p];
      std::vector<int> spect = erase_one(cell.bos, a);
      sink(FamKey{false, cell.two_g + 1, spect, cell.fer}, QKind::bb,
           w01half_eb(a), v);
      if (!q0_.is_zero())
        sink(FamKey{false, cell.two_g + 1, spect, cell.fer}, QKind::bb,
             dscalar(eb_.at(a)).scaled(q0_).scaled(frac(1, 2)), v);
      for (int ip = 1; ip <= reach_; ++ip) {
        std::vector<int> tgt = insert_sorted(spect, ip);
        Rational mult = Rational(ip) * count_of(tgt, ip);
        sink(FamKey{false, cell.two_g, tgt, cell.fer}, QKind::bb,
             eb_.at(a).shifted(ip - 1), v.scaled(mult));
      }
    }
    for (size_t p = 0; p < cell.bos.size(); ++p) {
      if (p > 0 && cell.bos[p] == cell.bos[p - 1]) continue;
      for (size_t q = p; q < cell.bos.size(); ++q) {
        if (q > p && cell.bos[q] == cell.bos[q - 1]) continue;
        int k = cell.bos[p], l = cell.bos[q];
        if (k == l && count_of(cell.bos, k) < 2) continue;
        std::vector<int> spect = erase_one(erase_one(cell.bos, k), l);
        LaurentForm piece = eb_.at(k) * eb_.at(l);
        Rational w = (k == l) ? frac(1, 2) : Rational(1);
        sink(FamKey{false, cell.two_g + 2, spect, cell.fer}, QKind::bb, piece,
             v.scaled(w));
      }
    }

    // ---- pieces of Q^{FF} (true weight dz^2) ----
    for (size_t p = 0; p < cell.fer.size(); ++p) {
      for (size_t q = p + 1; q < cell.fer.size(); ++q) {
        int k = cell.fer[p], l = cell.fer[q];
        std::vector<int> rest = erase_one(erase_one(cell.fer, k), l);
        int s = merge_sign({k, l}, rest);
        LaurentForm piece = mul_ff(dscalar(ef_.at(k)), ef_.at(l));
        LaurentForm piece2 = mul_ff(dscalar(ef_.at(l)), ef_.at(k));
        piece += piece2.negated();
        sink(FamKey{false, cell.two_g + 2, cell.bos, rest}, QKind::ff, piece,
             v.scaled(frac(-s, 2)));
      }
    }
    for (size_t p = 0; p < cell.fer.size(); ++p) {
      int b = cell.fer[p];
      std::vector<int> rest = erase_one(cell.fer, b);
      int sb = merge_sign({b}, rest);
      for (int jc = 0; jc <= reach_; ++jc) {
        if (std::binary_search(rest.begin(), rest.end(), jc)) continue;
        std::vector<int> tgt = insert_sorted(rest, jc);
        long pos = std::lower_bound(tgt.begin(), tgt.end(), jc) - tgt.begin();
        Rational sign = pos % 2 == 0 ? 1 : -1;
        Rational halve = (tf_ == 0 && jc == 0) ? frac(1, 2) : Rational(1);
        LaurentForm piece = mul_ff(dscalar(ef_pos(jc)), ef_.at(b));
        piece += mul_ff(dscalar(ef_.at(b)), ef_pos(jc)).negated();
        sink(FamKey{false, cell.two_g, cell.bos, tgt}, QKind::ff, piece,
             v.scaled(frac(1, 2) * halve * sign * sb));
      }
    }

    // ---- pieces of Q^{BF} (true weight dz Theta) ----
    for (size_t p = 0; p < cell.fer.size(); ++p) {
      int c = cell.fer[p];
      std::vector<int> rest = erase_one(cell.fer, c);
      int sc = merge_sign({c}, rest);
      sink(FamKey{true, cell.two_g + 1, cell.bos, rest}, QKind::bf,
           w01half_ef(c), v.scaled(sc));
      if (!q0_.is_zero()) {
        LaurentForm piece = dscalar(ef_.at(c));
        if (tf_ == 0)
          piece += ef_.at(c).shifted(-1).scaled(
              Poly::constant(ctx_, frac(1, 2)));
        sink(FamKey{true, cell.two_g + 1, cell.bos, rest}, QKind::bf,
             piece.scaled(q0_), v.scaled(sc));
      }
      for (int ip = 1; ip <= reach_; ++ip) {
        std::vector<int> tgt = insert_sorted(cell.bos, ip);
        Rational mult = Rational(ip) * count_of(tgt, ip) * sc;
        sink(FamKey{true, cell.two_g, tgt, rest}, QKind::bf,
             ef_.at(c).shifted(ip - 1), v.scaled(mult));
      }
    }
    for (size_t p = 0; p < cell.bos.size(); ++p) {
      if (p > 0 && cell.bos[p] == cell.bos[p - 1]) continue;
      int a = cell.bos[p];
      std::vector<int> spect = erase_one(cell.bos, a);
      for (size_t q = 0; q < cell.fer.size(); ++q) {
        int c = cell.fer[q];
        std::vector<int> rest = erase_one(cell.fer, c);
        int sc = merge_sign({c}, rest);
        sink(FamKey{true, cell.two_g + 2, spect, rest}, QKind::bf,
             eb_.at(a) * ef_.at(c), v.scaled(sc));
      }
      for (int jc = 0; jc <= reach_; ++jc) {
        if (std::binary_search(cell.fer.begin(), cell.fer.end(), jc))
          continue;
        std::vector<int> tgt = insert_sorted(cell.fer, jc);
        long pos = std::lower_bound(tgt.begin(), tgt.end(), jc) - tgt.begin();
        Rational sign = pos % 2 == 0 ? 1 : -1;
        Rational halve = (tf_ == 0 && jc == 0) ? frac(1, 2) : Rational(1);
        sink(FamKey{true, cell.two_g, spect, tgt}, QKind::bf,
             eb_.at(a) * ef_pos(jc), v.scaled(sign * halve));
      }
    }
  }

  void scatter_pair(const Entry& e1, const Entry& e2, const Sink& sink) const {
    const CellKey& c1 = e1.first;
    const CellKey& c2 = e2.first;
    const int two_g = c1.two_g + c2.two_g;
    const Poly v12 = e1.second * e2.second;

    if (disjoint(c1.fer, c2.fer)) {
      int sigma = merge_sign(c1.fer, c2.fer);
      std::vector<int> fer = sorted_union(c1.fer, c2.fer);
      for (size_t p = 0; p < c1.bos.size(); ++p) {
        if (p > 0 && c1.bos[p] == c1.bos[p - 1]) continue;
        int k = c1.bos[p];
        std::vector<int> i1 = erase_one(c1.bos, k);
        for (size_t q = 0; q < c2.bos.size(); ++q) {
          if (q > 0 && c2.bos[q] == c2.bos[q - 1]) continue;
          int l = c2.bos[q];
          std::vector<int> i2 = erase_one(c2.bos, l);
          std::vector<int> bos = sorted_union(i1, i2);
          Rational mult = slot_multiplicity(bos, i1) * sigma * frac(1, 2);
          sink(FamKey{false, two_g, bos, fer}, QKind::bb,
               eb_.at(k) * eb_.at(l), v12.scaled(mult));
        }
      }
    }
    for (size_t p = 0; p < c1.fer.size(); ++p) {
      int k = c1.fer[p];
      std::vector<int> j1 = erase_one(c1.fer, k);
      int sk = merge_sign({k}, j1);
      for (size_t q = 0; q < c2.fer.size(); ++q) {
        int l = c2.fer[q];
        std::vector<int> j2 = erase_one(c2.fer, l);
        if (!disjoint(j1, j2)) continue;
        int sl = merge_sign({l}, j2);
        std::vector<int> bos = sorted_union(c1.bos, c2.bos);
        std::vector<int> fer = sorted_union(j1, j2);
        Rational mult = slot_multiplicity(bos, c1.bos) *
                        (sk * sl * merge_sign(j1, j2)) * frac(1, 2);
        sink(FamKey{false, two_g, bos, fer}, QKind::ff,
             mul_ff(dscalar(ef_.at(k)), ef_.at(l)), v12.scaled(mult));
      }
    }
    for (size_t p = 0; p < c1.bos.size(); ++p) {
      if (p > 0 && c1.bos[p] == c1.bos[p - 1]) continue;
      int k = c1.bos[p];
      std::vector<int> i1 = erase_one(c1.bos, k);
      for (size_t q = 0; q < c2.fer.size(); ++q) {
        int l = c2.fer[q];
        std::vector<int> j2 = erase_one(c2.fer, l);
        if (!disjoint(c1.fer, j2)) continue;
        int sl = merge_sign({l}, j2);
        std::vector<int> bos = sorted_union(i1, c2.bos);
        std::vector<int> fer = sorted_union(c1.fer, j2);
        Rational mult =
            slot_multiplicity(bos, i1) * (sl * merge_sign(c1.fer, j2));
        sink(FamKey{true, two_g, bos, fer}, QKind::bf,
             eb_.at(k) * ef_.at(l), v12.scaled(mult));
      }
    }
  }

 private:
  LaurentForm w01half_eb(int a) const {
    auto it = whalf_eb_.find(a);
    if (it == whalf_eb_.end())
      it = whalf_eb_.emplace(a, whalf_ * eb_.at(a)).first;
    return it->second;
  }
  LaurentForm w01half_ef(int c) const {
    auto it = whalf_ef_.find(c);
    if (it == whalf_ef_.end())
      it = whalf_ef_.emplace(c, whalf_ * ef_.at(c)).first;
    return it->second;
  }

  void seed() {
    for (int k = 1; k <= std::min(curve_.N, bound_); ++k) {
      Poly d = curve_.d_at(k);
      if (!d.is_zero()) out_.table.set(CellKey{2, {k}, {}}, d);
    }
    by_level_[3] = collect_level(3);
  }

  std::vector<const Entry*> collect_level(int chi) {
    std::vector<const Entry*> out;
    for (const auto& kv : out_.table.entries())
      if (kv.first.chi() == chi) out.push_back(&kv);
    return out;
  }

  // The bosonic recursion owns every cell with a bosonic slot; purely
  // fermionic cells come from the fermionic recursion.
  bool family_is_owner(const FamKey& fam) const {
    if (fam.fermionic) return fam.bos.empty();
    return true;
  }

  void extract_level(int chi) {
    std::vector<std::pair<CellKey, Poly>> solved;
    std::vector<std::pair<CellKey, Poly>> alternates;
    for (const auto& [fam, form] : acc_) {
      const bool spect_ok =
          (fam.bos.empty() || fam.bos.back() <= bound_) &&
          (fam.fer.empty() || fam.fer.back() <= bound_);
      const bool owner = family_is_owner(fam) && spect_ok;
      // Non-owner families of in-range cells only matter for the dual-route
      // symmetry checks; their cells are covered by the owner family.
      if (!owner && spect_ok && !opt_.check_dual_route) continue;
      LaurentForm g = form * w01_inv_;
      const int i_lo =
          fam.fermionic ? (fam.fer.empty() ? 1 : fam.fer.back() + 1)
                        : std::max(1, fam.bos.empty() ? 1 : fam.bos.back());
      for (int l = 1; l <= reach_; ++l) {
        Poly value = -g.coeff(-1 - l);
        if (value.is_zero()) continue;
        if (!spect_ok)
          throw IndexBoundError(
              "str_recurse: nonzero cell with a spectator index beyond "
              "index_bound");
        if (l > bound_)
          throw IndexBoundError(
              "str_recurse: nonzero coefficient at index " +
              std::to_string(l) + " beyond index_bound");
        CellKey cell;
        Poly canonical;
        if (fam.fermionic) {
          int sign = merge_sign({l}, fam.fer);
          cell = CellKey{fam.two_g, fam.bos, insert_sorted(fam.fer, l)};
          canonical = sign > 0 ? value : -value;
        } else {
          cell = CellKey{fam.two_g, insert_sorted(fam.bos, l), fam.fer};
          canonical = value;
        }
        if (owner && l >= i_lo)
          solved.push_back({cell, canonical});
        else if (opt_.check_dual_route)
          alternates.push_back({cell, canonical});
      }
    }
    for (auto& [cell, value] : solved) out_.table.set(cell, value);
    for (const auto& [cell, value] : alternates)
      if (!(out_.table.get_canonical(cell) == value))
        throw std::runtime_error(
            "str_recurse: alternate extraction disagrees on a cell "
            "(symmetry check failed)");
    if (opt_.check_loop_equations) certify_level();
    by_level_[chi] = collect_level(chi);
  }

  // Quadratic loop equations: all moments Res z^{i+N} Q vanish once the
  // omega_{0,1|0} boundary is restored.
  void certify_level() const {
    for (const auto& [fam, form] : acc_) {
      LaurentForm full = form;
      LaurentForm boundary =
          LaurentForm(ctx_, z_lo_, z_hi_, FormWeight{});
      for (int a = 1; a <= bound_; ++a) {
        Poly fa;
        std::vector<int> idx;
        if (fam.fermionic) {
          idx.push_back(a);
          idx.insert(idx.end(), fam.fer.begin(), fam.fer.end());
          fa = out_.table.get(fam.two_g, fam.bos, idx);
        } else {
          idx.push_back(a);
          idx.insert(idx.end(), fam.bos.begin(), fam.bos.end());
          fa = out_.table.get(fam.two_g, idx, fam.fer);
        }
        if (fa.is_zero()) continue;
        boundary += (fam.fermionic ? ef_.at(a) : eb_.at(a)).scaled(fa);
      }
      full += w01_ * boundary;
      for (int i = 1; i <= reach_; ++i)
        if (!full.coeff(-1 - (i + curve_.N)).is_zero())
          throw std::runtime_error(
              "str_recurse: quadratic loop equation violated at moment " +
              std::to_string(i));
    }
  }

  const SuperCurve& curve_;
  ContextPtr ctx_;
  StrOptions opt_;
  int tf_;
  int bound_;
  int tailw_;
  int reach_;
  int z_lo_ = 0, z_hi_ = 0;
  OmegaTable out_;
  Poly q0_;
  std::map<int, LaurentForm> eb_, ef_;
  mutable std::map<int, LaurentForm> whalf_eb_, whalf_ef_;
  LaurentForm w01_, whalf_, w01_inv_;
  std::map<FamKey, LaurentForm> acc_;
  std::map<int, std::vector<const Entry*>> by_level_;
};

}  // namespace

BiLaurent kernel(const SuperCurve& curve, KernelKind kind, int hi1, int hi2) {
  auto violations = validate(curve);
  if (!violations.empty()) throw std::invalid_argument("kernel: invalid curve");
  const auto& ctx = curve.ctx;
  const int zhi = hi2 + 2 * curve.N + 2;
  LaurentForm w01 =
      Recursor::strip_weight(dilaton_form(curve, zhi + 2 * curve.N + 2));
  LaurentForm w01_inv = w01.inverse(zhi);
  BiLaurent k;
  k.ctx = ctx;
  k.hi1 = hi1;
  k.hi2 = hi2;
  if (kind == KernelKind::bb) {
    k.w1 = FormWeight{1, ThetaKind::none};
    k.w2 = FormWeight{-1, ThetaKind::none};
    k.lo1 = -hi2 - 3;
    k.lo2 = curve.N + 1;
    for (int l = 1; l <= hi2 + 1; ++l) {
      LaurentForm zl = w01_inv.shifted(l);
      LaurentForm e0 = basis_scalar(curve, BasisKind::dxi, -l, hi1);
      for (const auto& [e1, c1] : e0.coeffs())
        for (const auto& [e2, c2] : zl.coeffs())
          if (e2 <= hi2) k.add(e1, e2, -(c1 * c2));
    }
    for (const auto& [e, c] : k.coeffs)
      if (e.second < curve.N + 1)
        throw std::logic_error("kernel: K^BB fails the order-(N+1) zero");
    return k;
  }
  const int tf = two_f(curve.sector);
  k.w1 = FormWeight{0, theta_kind(curve.sector)};
  k.w2 = FormWeight{-1, theta_kind(curve.sector)};
  k.lo1 = -hi2 - 4;
  k.lo2 = 0;
  for (int l = 1; l <= hi2 + 2; ++l) {
    LaurentForm zl = w01_inv.shifted(tf == 1 ? l : l - 1);
    LaurentForm e0 = basis_scalar(curve, BasisKind::eta_neg, l, hi1);
    for (const auto& [e1, c1] : e0.coeffs())
      for (const auto& [e2, c2] : zl.coeffs())
        if (e2 <= hi2) k.add(e1, e2, (c1 * c2).scaled(frac(-1, 2)));
  }
  return k;
}

LaurentForm q_terms(const SuperCurve& curve, const OmegaTable& table,
                    int two_g, QKind kind, const std::vector<int>& bos_spect,
                    const std::vector<int>& fer_spect, bool tilde) {
  StrOptions opt;
  opt.chi_max = table.table.chi_max();
  opt.index_bound = table.table.index_bound();
  opt.check_loop_equations = false;
  Recursor rec(curve, opt);
  const FamKey want{kind == QKind::bf, two_g, bos_spect, fer_spect};
  LaurentForm out = rec.scalar_zero();
  Recursor::Sink sink = [&](const FamKey& fam, QKind piece_kind,
                            const LaurentForm& piece, const Poly& value) {
    if (fam != want || piece_kind != kind || value.is_zero()) return;
    out += piece.scaled(value);
  };
  std::map<int, std::vector<const Entry*>> levels;
  for (const auto& kv : table.table.entries())
    levels[kv.first.chi()].push_back(&kv);
  const int chi = two_g +
                  static_cast<int>(bos_spect.size() + fer_spect.size()) + 1;
  rec.scatter_level(chi, levels, sink);
  if (!tilde && kind != QKind::ff) {
    // Restore the omega_{0,1|0} boundary term.
    LaurentForm boundary = rec.scalar_zero();
    for (int a = 1; a <= table.table.index_bound(); ++a) {
      std::vector<int> idx{a};
      Poly fa;
      if (want.fermionic) {
        idx.insert(idx.end(), fer_spect.begin(), fer_spect.end());
        fa = table.table.get(two_g, bos_spect, idx);
      } else {
        idx.insert(idx.end(), bos_spect.begin(), bos_spect.end());
        fa = table.table.get(two_g, idx, fer_spect);
      }
      if (fa.is_zero()) continue;
      boundary += (want.fermionic ? rec.ef(a) : rec.eb(a)).scaled(fa);
    }
    out += rec.w01() * boundary;
  }
  return out;
}

OmegaTable str_recurse(const SuperCurve& curve, const StrOptions& opt) {
  auto violations = validate(curve);
  if (!violations.empty())
    throw std::invalid_argument("str_recurse: invalid curve: " +
                                violations.front().message);
  if (opt.chi_max < 3)
    throw std::invalid_argument("str_recurse: chi_max must be >= 3");
  StrOptions o = opt;
  if (o.index_bound <= 0) o.index_bound = default_index_bound(curve, o.chi_max);
  if (o.index_bound < curve.N)
    throw std::invalid_argument("str_recurse: index_bound below N");
  Recursor rec(curve, o);
  return rec.run();
}

}  // namespace superrec

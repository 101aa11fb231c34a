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

#include "superrec/airy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superrec/operator_expr.hpp"

namespace superrec {

namespace {

// One constraint equation: the cell {i} u I | J (bosonic family) or
// I | {i} u J (fermionic family). `i` is the leading slot the triangular
// sweep solves for.
struct EqKey {
  bool fermionic = false;
  int two_g = 0;
  int i = 0;
  std::vector<int> bos;
  std::vector<int> fer;
  auto operator<=>(const EqKey&) const = default;
};

struct FamilyKey {
  bool fermionic = false;
  int two_g = 0;
  std::vector<int> bos;
  std::vector<int> fer;
  auto operator<=>(const FamilyKey&) const = default;
};

std::vector<int> sorted_union(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> r(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), r.begin());
  return r;
}

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

// Number of slot subsets of the union realizing the (a, union-minus-a)
// content split: product of binomials over values.
Rational slot_multiplicity(const std::vector<int>& merged,
                           const std::vector<int>& part) {
  Rational r = 1;
  size_t i = 0;
  while (i < part.size()) {
    size_t j = i;
    while (j < part.size() && part[j] == part[i]) ++j;
    long take = static_cast<long>(j - i);
    long have = count_of(merged, part[i]);
    // binom(have, take)
    Rational b = 1;
    for (long t = 0; t < take; ++t) b *= Rational(have - t) / (t + 1);
    r *= b;
    i = j;
  }
  return r;
}

class Solver {
 public:
  Solver(const SuperCurve& curve, const SolveOptions& opt)
      : curve_(curve),
        ctx_(curve.ctx),
        opt_(opt),
        tf_(two_f(curve.sector)),
        bound_(opt.index_bound),
        table_(curve.ctx, opt.chi_max, opt.index_bound) {
    csup_ = coeff_c_support(curve_);
    c_.reserve(static_cast<size_t>(csup_) + 1);
    for (int k = 0; k <= csup_; ++k) c_.push_back(coeff_c(curve_, k));
    cp_.assign(static_cast<size_t>(csup_) + 1, Poly::zero(ctx_));
    for (int k = 0; k <= csup_; ++k) cp_[static_cast<size_t>(k)] =
        coeff_cp(curve_, k);
    c0_inv_ = c_[0].inverse();
    q0_ = curve_.q_at(0);
    for (const auto& [kl, v] : curve_.phi)
      if (!v.is_zero()) {
        phi_rows_[kl.first].push_back(kl.second);
        phi_rows_[kl.second].push_back(kl.first);
      }
    for (const auto& [kl, v] : curve_.psi)
      if (!v.is_zero()) psi_rows_[kl.first].push_back(kl.second);
  }

  CoeffTable run() {
    seed();
    for (int chi = 4; chi <= opt_.chi_max; ++chi) {
      acc_.clear();
      scatter_level(chi);
      sweep_level(chi);
    }
    return std::move(table_);
  }

 private:
  using Acc = std::map<EqKey, Poly>;

  void seed() {
    // F_{1,1|0}(k) = D_k; the remaining chi = 3 cells vanish, which the
    // level-4 scatter then sees automatically.
    for (int k = 1; k <= std::min(curve_.N, bound_); ++k) {
      Poly d = curve_.d_at(k);
      if (!d.is_zero()) table_.set(CellKey{2, {k}, {}}, d);
    }
    by_level_[3] = collect_level(3);
  }

  std::vector<const std::pair<const CellKey, Poly>*> collect_level(int chi) {
    std::vector<const std::pair<const CellKey, Poly>*> out;
    for (const auto& kv : table_.entries())
      if (kv.first.chi() == chi) out.push_back(&kv);
    return out;
  }

  void deposit(EqKey key, const Poly& value) {
    if (value.is_zero()) return;
    auto [it, fresh] = acc_.emplace(std::move(key), value);
    if (!fresh) {
      it->second += value;
      if (it->second.is_zero()) acc_.erase(it);
    }
  }

  // Candidate equation indices i with a nonzero structure constant.
  std::vector<int> cbb_is(int k, int l) const {
    std::set<int> s;
    maybe(s, k + l - curve_.N + 1);
    row_candidates(s, phi_rows_, k, l, 0);
    row_candidates(s, phi_rows_, l, k, 0);
    return {s.begin(), s.end()};
  }
  std::vector<int> cff_is(int j, int k) const {
    std::set<int> s;
    maybe(s, j + k + tf_ - curve_.N + 1);
    row_candidates(s, psi_rows_, j, k, 0);
    row_candidates(s, psi_rows_, k, j, 0);
    return {s.begin(), s.end()};
  }
  std::vector<int> cbf_is(int j, int k) const {
    std::set<int> s;
    maybe(s, j + k - curve_.N + 1);
    row_candidates(s, phi_rows_, j, k, 0);
    row_candidates(s, psi_rows_, k, j, tf_);
    return {s.begin(), s.end()};
  }

  void maybe(std::set<int>& s, int i) const {
    if (i >= 1) s.insert(i);
  }
  // For a structure constant containing par_{row, other-N-i+1-off}.
  void row_candidates(std::set<int>& s,
                      const std::map<int, std::vector<int>>& rows, int row,
                      int other, int off) const {
    auto it = rows.find(row);
    if (it == rows.end()) return;
    for (int m : it->second) maybe(s, other - curve_.N + 1 - off - m);
  }

  void scatter_level(int chi) {
    const auto& lower = by_level_;
    // Linear and removal passes read level chi-1.
    auto at = lower.find(chi - 1);
    if (at != lower.end())
      for (const auto* e : at->second) scatter_single(chi, *e);
    // Product passes read ordered pairs with chi1 + chi2 = chi + 1.
    for (int chi1 = 3; chi1 <= chi - 2; ++chi1) {
      int chi2 = chi + 1 - chi1;
      if (chi2 < 3) continue;
      auto i1 = lower.find(chi1);
      auto i2 = lower.find(chi2);
      if (i1 == lower.end() || i2 == lower.end()) continue;
      for (const auto* e1 : i1->second)
        for (const auto* e2 : i2->second) scatter_pair(*e1, *e2);
    }
  }

  void scatter_single(int chi, const std::pair<const CellKey, Poly>& entry) {
    const CellKey& cell = entry.first;
    const Poly& v = entry.second;
    (void)chi;

    // --- contributions to bosonic equations ---
    // C'_k and Q0 tails: source plays F_{g-1/2,n+1|2m}(a, I | J).
    for (int apos = 0; apos < static_cast<int>(cell.bos.size()); ++apos) {
      int a = cell.bos[apos];
      if (apos > 0 && cell.bos[apos - 1] == a) continue;
      std::vector<int> spect = erase_one(cell.bos, a);
      for (int k = 0; k <= csup_; ++k) {
        if (cp_[static_cast<size_t>(k)].is_zero()) continue;
        int i = a - k;
        if (i < 1) continue;
        deposit(EqKey{false, cell.two_g + 1, i, spect, cell.fer},
                cp_[static_cast<size_t>(k)] * v);
      }
      if (!q0_.is_zero()) {
        int i = a - curve_.N + 1;
        if (i >= 1)
          deposit(EqKey{false, cell.two_g + 1, i, spect, cell.fer},
                  (q0_ * v).scaled(frac(-(a + 1), 2)));
      }
      // Bosonic removal: source plays F_{g,n|2m}(k, I\c | J).
      for (int ic = 1; ic <= a - curve_.N; ++ic) {
        int i = a - curve_.N + 1 - ic;
        if (i < 1) break;
        std::vector<int> tgt = insert_sorted(spect, ic);
        Rational mult = Rational(ic) * count_of(tgt, ic);
        deposit(EqKey{false, cell.two_g, i, tgt, cell.fer}, v.scaled(mult));
      }
    }
    // Quadratic diagonal: source plays F_{g-1,n+2|2m}(k, l, I | J).
    for (size_t p = 0; p < cell.bos.size(); ++p) {
      if (p > 0 && cell.bos[p] == cell.bos[p - 1]) continue;
      for (size_t q = p; q < cell.bos.size(); ++q) {
        if (q > p && cell.bos[q] == cell.bos[q - 1]) continue;
        int k = cell.bos[p], l = cell.bos[q];
        if (k == l && count_of(cell.bos, k) < 2) continue;
        std::vector<int> spect = erase_one(erase_one(cell.bos, k), l);
        for (int i : cbb_is(k, l)) {
          Poly c = coeff_cbb(curve_, i, k, l);
          if (k == l) c = c.scaled(frac(1, 2));
          deposit(EqKey{false, cell.two_g + 2, i, spect, cell.fer}, c * v);
        }
      }
    }
    // Fermionic diagonal: source plays -F_{g-1,n|2m+2}(I | k, l, J).
    for (size_t p = 0; p < cell.fer.size(); ++p) {
      for (size_t q = p + 1; q < cell.fer.size(); ++q) {
        int k = cell.fer[p], l = cell.fer[q];
        std::vector<int> rest = erase_one(erase_one(cell.fer, k), l);
        int s = merge_sign({k, l}, rest);
        for (int i : cff_is(k, l)) {
          Poly c = coeff_cff(curve_, i, k, l);
          deposit(EqKey{false, cell.two_g + 2, i, cell.bos, rest},
                  (c * v).scaled(-s));
        }
      }
    }
    // Fermionic removal: source plays F_{g,n|2m}(I | k, J\c).
    for (size_t p = 0; p < cell.fer.size(); ++p) {
      int k = cell.fer[p];
      std::vector<int> rest = erase_one(cell.fer, k);
      int sk = merge_sign({k}, rest);
      int jc_max = std::max(k - curve_.N, 0);
      for (int jc = 0; jc <= jc_max; ++jc) {
        if (std::binary_search(rest.begin(), rest.end(), jc)) continue;
        std::vector<int> tgt = insert_sorted(rest, jc);
        long pos = std::lower_bound(tgt.begin(), tgt.end(), jc) - tgt.begin();
        int csign = pos % 2 == 0 ? 1 : -1;
        Rational halve =
            (tf_ == 0 && jc == 0) ? frac(1, 2) : Rational(1);
        for (int i : cff_is(-jc - tf_, k)) {
          Poly c = coeff_cff(curve_, i, -jc - tf_, k);
          deposit(EqKey{false, cell.two_g, i, cell.bos, tgt},
                  (c * v).scaled(halve * csign * sk));
        }
      }
    }

    // --- contributions to fermionic equations ---
    // C'_k and Q0 tails: source plays F_{g-1/2,n|2m}(I | a, J).
    for (size_t p = 0; p < cell.fer.size(); ++p) {
      int a = cell.fer[p];
      std::vector<int> rest = erase_one(cell.fer, a);
      int sa = merge_sign({a}, rest);
      for (int k = 0; k <= csup_; ++k) {
        if (cp_[static_cast<size_t>(k)].is_zero()) continue;
        int i = a - k;
        if (i < 1) continue;
        deposit(EqKey{true, cell.two_g + 1, i, cell.bos, rest},
                (cp_[static_cast<size_t>(k)] * v).scaled(sa));
      }
      if (!q0_.is_zero()) {
        int i = a - curve_.N + 1;
        if (i >= 1) {
          Rational coeff = -(Rational(a + 1) - frac(1 - tf_, 2));
          deposit(EqKey{true, cell.two_g + 1, i, cell.bos, rest},
                  (q0_ * v).scaled(coeff * sa));
        }
      }
      // Bosonic removal into fermionic equations:
      // source plays F_{g,n-1|2m}(I\c | k, J) with k = a.
      for (int ic = 1; ic <= a - curve_.N + 1; ++ic) {
        for (int i : cbf_is(-ic, a)) {
          Poly c = coeff_cbf(curve_, i, -ic, a);
          std::vector<int> tgt = insert_sorted(cell.bos, ic);
          Rational mult = Rational(ic) * count_of(tgt, ic);
          deposit(EqKey{true, cell.two_g, i, tgt, rest},
                  (c * v).scaled(mult * sa));
        }
      }
    }
    // Mixed diagonal: source plays F_{g-1,n+1|2m}(k, I | l, J).
    for (int kpos = 0; kpos < static_cast<int>(cell.bos.size()); ++kpos) {
      int k = cell.bos[kpos];
      if (kpos > 0 && cell.bos[kpos - 1] == k) continue;
      std::vector<int> spect = erase_one(cell.bos, k);
      for (size_t p = 0; p < cell.fer.size(); ++p) {
        int l = cell.fer[p];
        std::vector<int> rest = erase_one(cell.fer, l);
        int sl = merge_sign({l}, rest);
        for (int i : cbf_is(k, l)) {
          Poly c = coeff_cbf(curve_, i, k, l);
          deposit(EqKey{true, cell.two_g + 2, i, spect, rest},
                  (c * v).scaled(sl));
        }
      }
    }
    // Fermionic removal into fermionic equations:
    // source plays F_{g,n+1|2m-2}(k, I | J\c).
    for (int kpos = 0; kpos < static_cast<int>(cell.bos.size()); ++kpos) {
      int k = cell.bos[kpos];
      if (kpos > 0 && cell.bos[kpos - 1] == k) continue;
      std::vector<int> spect = erase_one(cell.bos, k);
      int jc_max = std::max(k - curve_.N, 0);
      for (int jc = 0; jc <= jc_max; ++jc) {
        if (std::binary_search(cell.fer.begin(), cell.fer.end(), jc)) continue;
        std::vector<int> tgt = insert_sorted(cell.fer, jc);
        long pos = std::lower_bound(tgt.begin(), tgt.end(), jc) - tgt.begin();
        int csign = pos % 2 == 0 ? 1 : -1;
        Rational halve =
            (tf_ == 0 && jc == 0) ? frac(1, 2) : Rational(1);
        for (int i : cbf_is(k, -jc - tf_)) {
          Poly c = coeff_cbf(curve_, i, k, -jc - tf_);
          deposit(EqKey{true, cell.two_g, i, spect, tgt},
                  (c * v).scaled(halve * csign));
        }
      }
    }
  }

  void scatter_pair(const std::pair<const CellKey, Poly>& e1,
                    const std::pair<const CellKey, Poly>& e2) {
    const CellKey& c1 = e1.first;
    const CellKey& c2 = e2.first;
    const int two_g = c1.two_g + c2.two_g;
    const Poly v12 = e1.second * e2.second;
    const bool fer_disjoint = disjoint(c1.fer, c2.fer);

    // Bosonic equations, :JJ: splits.
    if (fer_disjoint) {
      for (size_t p = 0; p < c1.bos.size(); ++p) {
        if (p > 0 && c1.bos[p] == c1.bos[p - 1]) continue;
        int k = c1.bos[p];
        std::vector<int> i1 = erase_one(c1.bos, k);
        for (size_t q = 0; q < c2.bos.size(); ++q) {
          if (q > 0 && c2.bos[q] == c2.bos[q - 1]) continue;
          int l = c2.bos[q];
          std::vector<int> i2 = erase_one(c2.bos, l);
          std::vector<int> bos = sorted_union(i1, i2);
          Rational mult =
              slot_multiplicity(bos, i1) * merge_sign(c1.fer, c2.fer);
          std::vector<int> fer = sorted_union(c1.fer, c2.fer);
          for (int i : cbb_is(k, l)) {
            Poly c = coeff_cbb(curve_, i, k, l).scaled(mult * frac(1, 2));
            deposit(EqKey{false, two_g, i, bos, fer}, c * v12);
          }
        }
      }
    }
    // Bosonic equations, :Gamma Gamma: splits.
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
                        (sk * sl * merge_sign(j1, j2));
        for (int i : cff_is(k, l)) {
          Poly c = coeff_cff(curve_, i, k, l).scaled(mult * frac(1, 2));
          deposit(EqKey{false, two_g, i, bos, fer}, c * v12);
        }
      }
    }
    // Fermionic equations, :J Gamma: splits (e1 bosonic slot, e2 fermionic).
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
        for (int i : cbf_is(k, l)) {
          Poly c = coeff_cbf(curve_, i, k, l).scaled(mult);
          deposit(EqKey{true, two_g, i, bos, fer}, c * v12);
        }
      }
    }
  }

  // Within each family the canonical determinations are the equations whose
  // solved slot is the cell's largest index of its own species; ties are
  // allowed for the bosonic multiset and forbidden for fermions.
  int family_i_lo(const FamilyKey& fam) const {
    if (fam.fermionic)
      return fam.fer.empty() ? 1 : fam.fer.back() + 1;
    return std::max(1, fam.bos.empty() ? 1 : fam.bos.back());
  }

  // Canonical owner of a cell under the chosen route.
  bool solves_via_fermionic(size_t n, size_t m2) const {
    if (n == 0) return true;
    if (m2 == 0) return false;
    return opt_.fermionic_route;
  }

  void sweep_level(int chi) {
    std::map<FamilyKey, std::map<int, Poly, std::greater<int>>> families;
    for (const auto& [eq, val] : acc_)
      families[FamilyKey{eq.fermionic, eq.two_g, eq.bos, eq.fer}][eq.i] = val;

    std::vector<std::pair<EqKey, Poly>> checks;
    for (auto& [fam, eqs] : families) {
      const size_t n = fam.bos.size() + (fam.fermionic ? 0 : 1);
      const size_t m2 = fam.fer.size() + (fam.fermionic ? 1 : 0);
      const bool owner = solves_via_fermionic(n, m2) == fam.fermionic;
      const bool spectators_ok =
          (fam.bos.empty() || fam.bos.back() <= bound_) &&
          (fam.fer.empty() || fam.fer.back() <= bound_);
      if (!owner || !spectators_ok) {
        for (const auto& [i, val] : eqs)
          checks.push_back({EqKey{fam.fermionic, fam.two_g, i, fam.bos,
                                  fam.fer},
                            val});
        continue;
      }
      const int i_lo = family_i_lo(fam);
      const int i_hi = eqs.begin()->first;  // largest deposited index
      for (int i = std::min(i_hi, bound_); i >= i_lo; --i) {
        Poly rhs = Poly::zero(ctx_);
        auto it = eqs.find(i);
        if (it != eqs.end()) rhs += it->second;
        for (int k = 1; k <= csup_; ++k) {
          if (c_[static_cast<size_t>(k)].is_zero()) continue;
          rhs += c_[static_cast<size_t>(k)] * chain_read(fam, i + k);
        }
        if (rhs.is_zero()) continue;
        Poly value = -(rhs * c0_inv_);
        set_solved(fam, i, value);
      }
      for (const auto& [i, val] : eqs)
        if (i > bound_)
          checks.push_back(
              {EqKey{fam.fermionic, fam.two_g, i, fam.bos, fam.fer}, val});
        else if (i < i_lo)
          checks.push_back(
              {EqKey{fam.fermionic, fam.two_g, i, fam.bos, fam.fer}, val});
    }
    by_level_[chi] = collect_level(chi);
    if (opt_.check_certificate) run_checks(checks);
  }

  Poly chain_read(const FamilyKey& fam, int idx) const {
    if (idx > bound_) return Poly::zero(ctx_);
    if (fam.fermionic)
      return table_.get(fam.two_g, fam.bos, prepend(idx, fam.fer));
    return table_.get(fam.two_g, prepend(idx, fam.bos), fam.fer);
  }

  static std::vector<int> prepend(int idx, const std::vector<int>& v) {
    std::vector<int> r;
    r.reserve(v.size() + 1);
    r.push_back(idx);
    r.insert(r.end(), v.begin(), v.end());
    return r;
  }

  void set_solved(const FamilyKey& fam, int i, const Poly& value) {
    if (fam.fermionic) {
      // The solved value is F(I | i, J); fold the sign of sorting i in.
      int sign = merge_sign({i}, fam.fer);
      table_.set(CellKey{fam.two_g, fam.bos, insert_sorted(fam.fer, i)},
                 sign > 0 ? value : -value);
    } else {
      table_.set(CellKey{fam.two_g, insert_sorted(fam.bos, i), fam.fer},
                 value);
    }
  }

  void run_checks(const std::vector<std::pair<EqKey, Poly>>& checks) {
    for (const auto& [eq, acc_val] : checks) {
      const bool alternate =
          eq.i <= bound_ &&
          (eq.bos.empty() || eq.bos.back() <= bound_) &&
          (eq.fer.empty() || eq.fer.back() <= bound_);
      if (alternate && !opt_.check_alternates) continue;
      FamilyKey fam{eq.fermionic, eq.two_g, eq.bos, eq.fer};
      Poly resid = acc_val;
      for (int k = 0; k <= csup_; ++k) {
        if (c_[static_cast<size_t>(k)].is_zero()) continue;
        resid += c_[static_cast<size_t>(k)] * chain_read(fam, eq.i + k);
      }
      if (!resid.is_zero()) {
        if (alternate)
          throw IndexBoundError(
              "alternate constraint determination disagrees (overdetermination "
              "check failed)");
        throw IndexBoundError("index_bound insufficient: constraint with "
                              "leading index " +
                              std::to_string(eq.i) +
                              " has a nonzero residual under the zero-tail "
                              "assumption");
      }
    }
  }

  const SuperCurve& curve_;
  ContextPtr ctx_;
  SolveOptions opt_;
  int tf_;
  int bound_;
  CoeffTable table_;
  int csup_ = 0;
  std::vector<Poly> c_, cp_;
  Poly c0_inv_, q0_;
  std::map<int, std::vector<int>> phi_rows_, psi_rows_;
  Acc acc_;
  std::map<int, std::vector<const std::pair<const CellKey, Poly>*>> by_level_;
};

}  // namespace

int default_index_bound(const SuperCurve& curve, int chi_max) {
  const int growth =
      curve.N + std::max(coeff_c_support(curve), phi_psi_width(curve));
  return curve.N + std::max(0, chi_max - 3) * growth;
}

CoeffTable airy_solve(const SuperCurve& curve, const SolveOptions& opt) {
  auto violations = validate(curve);
  if (!violations.empty())
    throw std::invalid_argument("airy_solve: invalid curve: " +
                                violations.front().message);
  if (opt.chi_max < 3)
    throw std::invalid_argument("airy_solve: chi_max must be >= 3");
  SolveOptions o = opt;
  if (o.index_bound <= 0) o.index_bound = default_index_bound(curve, o.chi_max);
  if (o.index_bound < curve.N)
    throw std::invalid_argument("airy_solve: index_bound below N");
  Solver solver(curve, o);
  return solver.run();
}

FockElement assemble_free_energy(const CoeffTable& table, bool lambda_graded) {
  const auto& ctx = table.context();
  FockElement f(ctx);
  for (const auto& [cell, value] : table.entries()) {
    // hbar^{g-1} carries 2(g-1) = two_g - 2 half-powers.
    Poly coeff = Poly::symbol(ctx, Context::kHHalf, cell.two_g - 2);
    Poly v = lambda_graded ? regrade(value) : value;
    Rational weight = 1;
    size_t p = 0;
    while (p < cell.bos.size()) {
      size_t q = p;
      while (q < cell.bos.size() && cell.bos[q] == cell.bos[p]) ++q;
      for (size_t t = 2; t <= q - p; ++t) weight /= static_cast<long>(t);
      p = q;
    }
    f.add_term(FockMonomial{cell.bos, cell.fer}, (coeff * v).scaled(weight));
  }
  return f;
}

std::string ConstraintReport::summary() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << l.op << "_" << l.i << ": "
       << (l.clean ? "zero residual"
                   : "NONZERO residual at degree <= " +
                         std::to_string(l.max_bad_degree))
       << "\n";
  }
  return os.str();
}

ConstraintReport verify_constraints(const SuperCurve& curve,
                                    const CoeffTable& table, int chi_max,
                                    int i_max) {
  ConstraintReport report;
  if (i_max <= 0)
    i_max = table.index_bound() + curve.N + coeff_c_support(curve);
  const int cutoff = chi_max - 2;
  FockElement z = fock_exp(assemble_free_energy(table), cutoff);
  const int zmax = z.max_mode_index();
  for (int i = 1; i <= i_max; ++i) {
    for (ConstraintKind kind : {ConstraintKind::h, ConstraintKind::f}) {
      const int window = zmax + 2 * (curve.N + i) +
                         2 * std::max(coeff_c_support(curve),
                                      phi_psi_width(curve)) +
                         4;
      OperatorExpr op = build_constraint(curve, i, kind, window);
      FockElement resid = op.apply(z, cutoff + 1);
      ConstraintReport::Line line{kind == ConstraintKind::h ? 'H' : 'F', i,
                                  true, -1};
      for (const auto& [m, c] : resid.terms()) {
        for (const auto& [e, r] : c.terms()) {
          int deg = m.var_count() + exponent_weight(e);
          line.clean = false;
          line.max_bad_degree = std::max(line.max_bad_degree, deg);
        }
      }
      if (!line.clean) report.all_zero = false;
      report.lines.push_back(line);
    }
  }
  return report;
}

}  // namespace superrec

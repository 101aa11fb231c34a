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

#include "superrec/operator_expr.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace superrec {

namespace {

Poly hbar(const ContextPtr& ctx, int half_powers = 2) {
  return Poly::symbol(ctx, Context::kHHalf, half_powers);
}

Poly hbar_half(const ContextPtr& ctx) { return hbar(ctx, 1); }

// Canonical placement: creators before annihilators, each group ascending
// by (idx2, kind).
std::tuple<int, int, int> mode_key(Mode m) {
  return {mode_is_creator(m) ? 0 : 1, m.idx2, static_cast<int>(m.kind)};
}

bool out_of_order(Mode a, Mode b) { return mode_key(a) > mode_key(b); }

// Anticommutator {a,b} for fermionic mode pairs; commutator [a,b] for J's.
Poly bracket_constant(const ContextPtr& ctx, Mode a, Mode b) {
  if (a.kind == Mode::j && b.kind == Mode::j) {
    if (a.idx2 + b.idx2 == 0) return hbar(ctx).scaled(Rational(a.idx2) / 2);
    return Poly::zero(ctx);
  }
  if (a.kind == Mode::j || b.kind == Mode::j) return Poly::zero(ctx);
  if (a.kind == Mode::g && b.kind == Mode::g)
    return a.idx2 + b.idx2 == 0 ? hbar(ctx) : Poly::zero(ctx);
  if ((a.kind == Mode::gzp && b.kind == Mode::gzm) ||
      (a.kind == Mode::gzm && b.kind == Mode::gzp))
    return hbar(ctx).scaled(frac(1, 2));
  return Poly::zero(ctx);
}

}  // namespace

bool mode_is_fermionic(Mode m) { return m.kind != Mode::j; }

bool mode_is_creator(Mode m) {
  switch (m.kind) {
    case Mode::j:
    case Mode::g:
      return m.idx2 < 0;
    case Mode::gzm:
      return true;
    case Mode::gzp:
      return false;
  }
  return false;
}

void OperatorExpr::note_shift2(int s) { shift2_ = std::max(shift2_, s); }

void OperatorExpr::emit(const std::vector<Mode>& modes, const Poly& coeff) {
  if (coeff.is_zero()) return;
  // Expand R zero modes into their creator/annihilator halves first.
  for (size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].kind == Mode::g && modes[i].idx2 == 0) {
      std::vector<Mode> a = modes, b = modes;
      a[i] = Mode{Mode::gzm, 0};
      b[i] = Mode{Mode::gzp, 0};
      emit(a, coeff);
      emit(b, coeff);
      return;
    }
  }
  // Bubble into canonical order, collecting bracket constants.
  std::vector<std::pair<std::vector<Mode>, Poly>> work{{modes, coeff}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    bool emitted = true;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      Mode a = w[i], b = w[i + 1];
      if (a == b && mode_is_fermionic(a)) {
        emitted = false;  // theta^2 = d^2 = 0
        break;
      }
      if (!out_of_order(a, b)) continue;
      const bool both_fer = mode_is_fermionic(a) && mode_is_fermionic(b);
      Poly cons = bracket_constant(ctx_, a, b);
      if (!cons.is_zero()) {
        std::vector<Mode> contracted;
        contracted.reserve(w.size() - 2);
        contracted.insert(contracted.end(), w.begin(), w.begin() + i);
        contracted.insert(contracted.end(), w.begin() + i + 2, w.end());
        work.emplace_back(std::move(contracted), c * cons);
      }
      std::vector<Mode> swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      work.emplace_back(std::move(swapped), both_fer ? -c : c);
      emitted = false;
      break;
    }
    if (!emitted) continue;
    int fer = 0;
    int total2 = 0;
    for (Mode m : w) {
      if (mode_is_fermionic(m)) ++fer;
      total2 += m.idx2;
    }
    if (parity_set_ && (fer & 1) != parity_)
      throw std::logic_error("OperatorExpr: mixed parity");
    parity_ = fer & 1;
    parity_set_ = true;
    note_shift2(std::abs(total2));
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  if (!ctx_) {
    ctx_ = o.ctx_;
    sector_ = o.sector_;
  }
  window2_ = std::min(window2_, o.window2_);
  for (const auto& [w, c] : o.terms_) emit(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  if (!ctx_) {
    ctx_ = o.ctx_;
    sector_ = o.sector_;
  }
  window2_ = std::min(window2_, o.window2_);
  for (const auto& [w, c] : o.terms_) emit(w, -c);
  return *this;
}

OperatorExpr OperatorExpr::scaled(const Poly& c) const {
  OperatorExpr r(ctx_, sector_);
  r.window2_ = window2_;
  for (const auto& [w, v] : terms_) r.emit(w, v * c);
  return r;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr r(a.ctx_ ? a.ctx_ : b.ctx_, a.ctx_ ? a.sector_ : b.sector_);
  r.window2_ = std::min(a.window2_, b.window2_) - (a.shift2_ + b.shift2_);
  std::vector<Mode> w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w.clear();
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.emit(w, ca * cb);
    }
  }
  return r;
}

OperatorExpr OperatorExpr::super_commutator(const OperatorExpr& a,
                                            const OperatorExpr& b) {
  OperatorExpr ab = a * b;
  OperatorExpr ba = b * a;
  const bool anticommute = a.parity_ == 1 && b.parity_ == 1;
  if (anticommute)
    ab += ba;
  else
    ab -= ba;
  return ab;
}

bool OperatorExpr::vanishes_on_window(int check_window2) const {
  if (window2_ < check_window2)
    throw WindowError("OperatorExpr: exactness window " +
                      std::to_string(window2_) +
                      " below requested check window " +
                      std::to_string(check_window2));
  for (const auto& [w, c] : terms_) {
    bool inside = true;
    for (Mode m : w)
      if (std::abs(m.idx2) > check_window2) inside = false;
    if (inside) return false;
  }
  return true;
}

FockElement OperatorExpr::apply(const FockElement& v, int degree_cutoff) const {
  const int need = 2 * v.max_mode_index() + shift2_;
  if (window2_ < need)
    throw WindowError("OperatorExpr::apply: window2 " +
                      std::to_string(window2_) + " < required " +
                      std::to_string(need));
  FockElement out(v.context());
  for (const auto& [w, c] : terms_) {
    FockElement cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) {
      const Mode m = *it;
      switch (m.kind) {
        case Mode::j: {
          int a = m.idx2 / 2;
          cur = a < 0 ? cur.mul_x(-a, Rational(-a))
                      : cur.d_x(a).scaled(hbar(ctx_));
          break;
        }
        case Mode::g: {
          // theta label: NS j = (|2r|-1)/2, R j = |r|.
          int label = sector_ == Sector::ns ? (std::abs(m.idx2) - 1) / 2
                                            : std::abs(m.idx2) / 2;
          cur = m.idx2 < 0 ? cur.mul_theta(label)
                           : cur.d_theta(label).scaled(hbar(ctx_));
          break;
        }
        case Mode::gzp:
          cur = cur.d_theta(0).scaled(hbar(ctx_));
          break;
        case Mode::gzm:
          cur = cur.mul_theta(0).scaled(frac(1, 2));
          break;
      }
    }
    out += cur.scaled(c);
  }
  return out.truncated(degree_cutoff);
}

std::string OperatorExpr::to_string() const {
  std::ostringstream os;
  for (const auto& [w, c] : terms_) {
    os << "(" << c.to_string() << ")";
    for (Mode m : w) {
      switch (m.kind) {
        case Mode::j:
          os << " J[" << m.idx2 / 2 << "]";
          break;
        case Mode::g:
          os << " G[" << m.idx2 << "/2]";
          break;
        case Mode::gzp:
          os << " gz+";
          break;
        case Mode::gzm:
          os << " gz-";
          break;
      }
    }
    os << " ; ";
  }
  return os.str();
}

OperatorExpr build_generator(ContextPtr ctx, Sector sector, GenKind kind,
                             int index2, int window, const Poly& tau0,
                             const Poly& q0) {
  const int tf = two_f(sector);
  const int w2 = 2 * window;
  OperatorExpr op(ctx, sector);
  op.set_window2(w2);
  const Poly j0 = tau0 + hbar_half(ctx) * q0;

  if (kind == GenKind::l) {
    if (index2 % 2 != 0)
      throw std::invalid_argument("build_generator: L index must be integer");
    const int n = index2 / 2;
    op.note_shift2(std::abs(index2));
    // 1/2 sum_j :J_{-j} J_{n+j}: over canonical pairs a <= b, a+b = n.
    for (int a = -window; a <= window; ++a) {
      int b = n - a;
      if (a > b) break;
      if (a == 0 || b == 0 || std::abs(b) > window) continue;
      Rational coeff = (a == b) ? frac(1, 2) : Rational(1);
      op.emit({Mode{Mode::j, 2 * a}, Mode{Mode::j, 2 * b}},
              Poly::constant(ctx, coeff));
    }
    // Pairs containing J_0 collapse to a linear term (or a constant at n=0).
    if (n != 0)
      op.emit({Mode{Mode::j, 2 * n}}, j0);
    else
      op.add_constant((j0 * j0).scaled(frac(1, 2)));
    // 1/2 sum_s (n/2+s) :Gamma_{-s} Gamma_{s+n}: gives (t-r)/2 on the
    // canonical pair r < t, r+t = n.
    for (int r2 = -w2 + tf; r2 <= w2; r2 += 2) {
      int t2 = index2 - r2;
      if (r2 >= t2 || std::abs(t2) > w2) continue;
      op.emit({Mode{Mode::g, r2}, Mode{Mode::g, t2}},
              Poly::constant(ctx, frac(t2 - r2, 4)));
    }
    if (n == 0 && sector == Sector::r)
      op.add_constant(hbar(ctx).scaled(frac(1, 16)));
    // Background charge tail -(n+1)/2 h^{1/2} Q0 J_n.
    Poly tail = (hbar_half(ctx) * q0).scaled(frac(-(n + 1), 2));
    if (n != 0)
      op.emit({Mode{Mode::j, 2 * n}}, tail);
    else
      op.add_constant(tail * j0);
    return op;
  }

  if (((index2 % 2) + 2) % 2 != tf)
    throw std::invalid_argument("build_generator: G index parity mismatch");
  op.note_shift2(std::abs(index2));
  // sum_j :J_{-j} Gamma_{j+r}: ; the j = 0 term is linear.
  for (int a = -window; a <= window; ++a) {
    if (a == 0) continue;
    int t2 = index2 - 2 * a;
    if (std::abs(t2) > w2) continue;
    op.emit({Mode{Mode::j, 2 * a}, Mode{Mode::g, t2}}, Poly::one(ctx));
  }
  op.emit({Mode{Mode::g, index2}}, j0);
  // -(r+1/2) h^{1/2} Q0 Gamma_r.
  op.emit({Mode{Mode::g, index2}},
          (hbar_half(ctx) * q0).scaled(frac(-(index2 + 1), 2)));
  return op;
}

OperatorExpr build_generator(ContextPtr ctx, Sector sector, GenKind kind,
                             int index2, int window) {
  Poly tau0 = Poly::symbol(ctx, Context::kTau0);
  Poly q0 = Poly::symbol(ctx, Context::kQ0);
  return build_generator(std::move(ctx), sector, kind, index2, window, tau0,
                         q0);
}

OperatorExpr build_constraint(const SuperCurve& curve, int i,
                              ConstraintKind kind, int window) {
  if (i < 1) throw std::invalid_argument("build_constraint: i >= 1");
  const auto& ctx = curve.ctx;
  const Sector sector = curve.sector;
  const int tf = two_f(sector);
  const int N = curve.N;
  OperatorExpr op(ctx, sector);
  op.set_window2(2 * window);
  const Poly q0 = curve.q_at(0);
  const int csup = coeff_c_support(curve);
  const int width = phi_psi_width(curve);

  if (kind == ConstraintKind::h) {
    op.note_shift2(2 * (N + i - 1 + std::max(csup, width)));
    for (int k = 0; k <= csup; ++k) {
      Poly lin = coeff_c(curve, k) + hbar_half(ctx) * coeff_cp(curve, k);
      op.emit({Mode{Mode::j, 2 * (i + k)}}, lin);
    }
    op.emit({Mode{Mode::j, 2 * (i + N - 1)}},
            (hbar_half(ctx) * q0).scaled(frac(-(N + i), 2)));
    // Quadratic :JJ: block. Candidates: the delta diagonal j+k = N+i-1 and
    // the phi-dressed pairs.
    std::set<std::pair<int, int>> jj;
    for (int j = -window; j <= window; ++j) {
      int k = N + i - 1 - j;
      if (j != 0 && k != 0 && std::abs(k) <= window)
        jj.insert({std::min(j, k), std::max(j, k)});
    }
    for (const auto& [kl, v] : curve.phi) {
      if (v.is_zero()) continue;
      for (auto [j, m] : {kl, std::pair<int, int>{kl.second, kl.first}}) {
        int k = N + i - 1 + m;
        if (j != 0 && k != 0 && std::abs(j) <= window &&
            std::abs(k) <= window)
          jj.insert({std::min(j, k), std::max(j, k)});
      }
    }
    for (auto [j, k] : jj) {
      Poly c = coeff_cbb(curve, i, j, k);
      if (j == k) c = c.scaled(frac(1, 2));
      op.emit({Mode{Mode::j, 2 * j}, Mode{Mode::j, 2 * k}}, c);
    }
    // Quadratic :Gamma Gamma: block with antisymmetric coefficients.
    std::set<std::pair<int, int>> ff;
    auto put_ff = [&](int j, int k) {
      if (j == k) return;
      int lo = std::min(j, k), hi = std::max(j, k);
      if (std::abs(2 * lo + tf) <= 2 * window &&
          std::abs(2 * hi + tf) <= 2 * window)
        ff.insert({lo, hi});
    };
    for (int j = -window - 1; j <= window; ++j) put_ff(j, i + N - 1 - tf - j);
    for (const auto& [kl, v] : curve.psi) {
      if (v.is_zero()) continue;
      put_ff(kl.first, N + i - 1 + kl.second);
      put_ff(N + i - 1 + kl.second, kl.first);
    }
    for (auto [j, k] : ff)
      op.emit({Mode{Mode::g, 2 * j + tf}, Mode{Mode::g, 2 * k + tf}},
              coeff_cff(curve, i, j, k));
    // Constant: -hbar Dtilde_i (the sign that keeps F_{1,1|0}(k) = D_k).
    op.add_constant(-(hbar(ctx) * dtilde(curve, i)));
    return op;
  }

  op.note_shift2(2 * (N + i + std::max(csup, width)) + tf);
  for (int k = 0; k <= csup; ++k) {
    Poly lin = coeff_c(curve, k) + hbar_half(ctx) * coeff_cp(curve, k);
    op.emit({Mode{Mode::g, 2 * (i + k) + tf}}, lin);
  }
  op.emit({Mode{Mode::g, 2 * (N + i - 1) + tf}},
          (hbar_half(ctx) * q0).scaled(frac(-(2 * (N + i) - (1 - tf)), 2)));
  // Mixed :J Gamma: block.
  std::set<std::pair<int, int>> jf;
  auto put_jf = [&](int j, int k) {
    if (j != 0 && std::abs(2 * j) <= 2 * window &&
        std::abs(2 * k + tf) <= 2 * window)
      jf.insert({j, k});
  };
  for (int j = -window; j <= window; ++j) put_jf(j, N + i - 1 - j);
  for (const auto& [kl, v] : curve.phi) {
    if (v.is_zero()) continue;
    put_jf(kl.first, N + i - 1 + kl.second);
    put_jf(kl.second, N + i - 1 + kl.first);
  }
  for (const auto& [kl, v] : curve.psi) {
    if (v.is_zero()) continue;
    put_jf(N + i - 1 + tf + kl.second, kl.first);
  }
  for (auto [j, k] : jf)
    op.emit({Mode{Mode::j, 2 * j}, Mode{Mode::g, 2 * k + tf}},
            coeff_cbf(curve, i, j, k));
  return op;
}

OperatorExpr commutator_residual(const OperatorExpr& a, const OperatorExpr& b,
                                 const OperatorExpr& expected_rhs) {
  OperatorExpr r = OperatorExpr::super_commutator(a, b);
  r -= expected_rhs;
  return r;
}

VirasoroSweepReport virasoro_sweep(ContextPtr ctx, Sector sector, int max_mode,
                                   int max_r2) {
  VirasoroSweepReport report;
  const int tf = two_f(sector);
  // Word coefficients of both sides are piecewise polynomial of degree <= 2
  // in the running mode index, with all breakpoints inside
  // |idx| <= 2*max_mode + 2; agreement on the window below pins them
  // everywhere.
  const int w = 6 * max_mode;
  const int check2 = 2 * w - 8 * max_mode - 4;
  const Poly q0 = Poly::symbol(ctx, Context::kQ0);
  const Poly tau0 = Poly::symbol(ctx, Context::kTau0);
  // hbar * c with c = hbar (3/2 - 3 Q0^2).
  const Poly hc = hbar(ctx, 4) * (Poly::constant(ctx, frac(3, 2)) -
                                  (q0 * q0).scaled(3));
  auto lgen = [&](int n) {
    return build_generator(ctx, sector, GenKind::l, 2 * n, w, tau0, q0);
  };
  auto ggen = [&](int r2) {
    return build_generator(ctx, sector, GenKind::g, r2, w, tau0, q0);
  };
  auto run = [&](const std::string& name, const OperatorExpr& resid) {
    ++report.relations_checked;
    if (!resid.vanishes_on_window(check2)) {
      report.all_zero = false;
      report.failures.push_back(name);
    }
  };

  for (int m = -max_mode; m <= max_mode; ++m) {
    for (int n = -max_mode; n <= max_mode; ++n) {
      OperatorExpr rhs = lgen(m + n).scaled(hbar(ctx).scaled(m - n));
      if (m + n == 0) {
        long w3 = static_cast<long>(m) * m * m - m;
        rhs.add_constant(hc.scaled(frac(w3, 12)));
      }
      run("[L_" + std::to_string(m) + ",L_" + std::to_string(n) + "]",
          commutator_residual(lgen(m), lgen(n), rhs));
    }
    for (int r2 = -max_r2 + ((max_r2 + tf) % 2); r2 <= max_r2; r2 += 2) {
      if (((r2 % 2) + 2) % 2 != tf % 2) continue;
      // [L_m, G_r] = hbar (m/2 - r) G_{m+r}
      OperatorExpr rhs =
          ggen(2 * m + r2).scaled(hbar(ctx).scaled(frac(2 * m - 2 * r2, 4)));
      run("[L_" + std::to_string(m) + ",G_" + std::to_string(r2) + "/2]",
          commutator_residual(lgen(m), ggen(r2), rhs));
    }
  }
  for (int r2 = -max_r2; r2 <= max_r2; ++r2) {
    if (((r2 % 2) + 2) % 2 != tf % 2) continue;
    for (int s2 = -max_r2; s2 <= max_r2; ++s2) {
      if (((s2 % 2) + 2) % 2 != tf % 2) continue;
      // {G_r, G_s} = 2 hbar L_{r+s} + hbar (c/3)(r^2 - 1/4) delta_{r+s,0}
      OperatorExpr rhs =
          lgen((r2 + s2) / 2).scaled(hbar(ctx).scaled(2));
      if (r2 + s2 == 0) {
        long num = static_cast<long>(r2) * r2 - 1;
        rhs.add_constant(hc.scaled(frac(num, 12)));
      }
      run("{G_" + std::to_string(r2) + "/2,G_" + std::to_string(s2) + "/2}",
          commutator_residual(ggen(r2), ggen(s2), rhs));
    }
  }
  return report;
}

}  // namespace superrec

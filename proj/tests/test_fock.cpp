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

#include <doctest.h>

#include "superrec/fock.hpp"
#include "test_support.hpp"

using namespace superrec;
using namespace superrec::testing;

namespace {

Poly j0_sym() { return sym(Context::kTau0) + hb(1) * sym(Context::kQ0); }

FockElement mono(std::vector<int> bos, std::vector<int> fer) {
  FockElement f(ctx());
  f.add_term(FockMonomial{std::move(bos), std::move(fer)}, Poly::one(ctx()));
  return f;
}

}  // namespace

TEST_CASE("mode actions in the free-field representation") {
  FockElement one = FockElement::vacuum(ctx());
  // J_{-3} 1 = 3 x^3
  FockElement r =
      apply_mode(Sector::ns, ModeLabel{ModeLabel::j, -6}, one, j0_sym());
  CHECK(r == mono({3}, {}).scaled(rat(3)));
  // Gamma_{1/2} theta^0 = hbar (NS)
  FockElement th0 = mono({}, {0});
  r = apply_mode(Sector::ns, ModeLabel{ModeLabel::gamma, 1}, th0, j0_sym());
  CHECK(r == one.scaled(hb()));
  // Gamma_0 1 = theta^0/2 (R)
  r = apply_mode(Sector::r, ModeLabel{ModeLabel::gamma, 0}, one, j0_sym());
  CHECK(r == mono({}, {0}).scaled(rat(1, 2)));
  // J_0 1 = (tau0 + h Q0) 1
  r = apply_mode(Sector::ns, ModeLabel{ModeLabel::j, 0}, one, j0_sym());
  CHECK(r == one.scaled(j0_sym()));
}

TEST_CASE("derivative modes satisfy the super Leibniz rule") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    FockMonomial mv, mw;
    auto fill = [&](FockMonomial& m) {
      int nb = static_cast<int>(rng.next() % 2);
      for (int i = 0; i < nb; ++i)
        m.bos.push_back(1 + static_cast<int>(rng.next() % 3));
      std::sort(m.bos.begin(), m.bos.end());
      int nf = static_cast<int>(rng.next() % 3);
      for (int j = 0; j < nf; ++j) {
        int v = static_cast<int>(rng.next() % 4);
        if (!std::binary_search(m.fer.begin(), m.fer.end(), v))
          m.fer.insert(std::upper_bound(m.fer.begin(), m.fer.end(), v), v);
      }
    };
    fill(mv);
    fill(mw);
    FockElement v = mono(mv.bos, mv.fer);
    FockElement w = mono(mw.bos, mw.fer);
    FockElement vw = v * w;
    if (vw.is_zero()) continue;
    int j = static_cast<int>(rng.next() % 4);
    // d/dtheta^j (vw) = (dv) w + (-1)^{|v|} v (dw)
    FockElement lhs = vw.d_theta(j);
    FockElement rhs = v.d_theta(j) * w;
    FockElement vdw = v * w.d_theta(j);
    if (mv.parity() == 1) rhs -= vdw;
    else rhs += vdw;
    CHECK(lhs == rhs);
    // bosonic derivative: plain Leibniz
    int i = 1 + static_cast<int>(rng.next() % 3);
    CHECK(vw.d_x(i) == v.d_x(i) * w + v * w.d_x(i));
  }
}

TEST_CASE("conjugate pairing spot values") {
  FockElement one = FockElement::vacuum(ctx());
  CHECK(dagger_pair(Sector::ns, one, one) == Poly::one(ctx()));
  CHECK(dagger_pair(Sector::ns, mono({1}, {}), mono({1}, {})) == hb());
  CHECK(dagger_pair(Sector::ns, mono({}, {1}), mono({}, {1})) == hb());
  CHECK(dagger_pair(Sector::r, mono({}, {1}), mono({}, {1})) == hb());
  CHECK(dagger_pair(Sector::ns, mono({1}, {}), mono({2}, {})).is_zero());
  // R zero mode: theta^0 pairs to 2 hbar.
  CHECK(dagger_pair(Sector::r, mono({}, {0}), mono({}, {0})) ==
        hb().scaled(2));
  CHECK(dagger_pair(Sector::ns, mono({}, {0}), mono({}, {0})) == hb());
  // x^i with multiplicity mu pairs to mu! (hbar/i)^mu.
  CHECK(dagger_pair(Sector::ns, mono({2, 2, 2}, {}), mono({2, 2, 2}, {})) ==
        hb(6).scaled(frac(6, 8)));
}

TEST_CASE("conjugate pairing is bilinear and symmetric on bosons") {
  Rng rng(55);
  for (int trial = 0; trial < 15; ++trial) {
    FockElement a = random_fock(rng, 3, 3);
    FockElement b = random_fock(rng, 3, 3);
    FockElement c = random_fock(rng, 3, 2);
    Poly s = Poly::constant(ctx(), rng.small_rational());
    CHECK(dagger_pair(Sector::ns, a.scaled(s) + c, b) ==
          s * dagger_pair(Sector::ns, a, b) + dagger_pair(Sector::ns, c, b));
    CHECK(dagger_pair(Sector::ns, a, b.scaled(s)) ==
          s * dagger_pair(Sector::ns, a, b));
  }
  for (int trial = 0; trial < 10; ++trial) {
    // bosonic-only elements pair symmetrically
    FockElement a(ctx()), b(ctx());
    for (int t = 0; t < 3; ++t) {
      FockMonomial m;
      int nb = static_cast<int>(rng.next() % 3);
      for (int i = 0; i < nb; ++i)
        m.bos.push_back(1 + static_cast<int>(rng.next() % 3));
      std::sort(m.bos.begin(), m.bos.end());
      a.add_term(m, Poly::constant(ctx(), rng.small_rational()));
      FockMonomial m2;
      int nb2 = static_cast<int>(rng.next() % 3);
      for (int i = 0; i < nb2; ++i)
        m2.bos.push_back(1 + static_cast<int>(rng.next() % 3));
      std::sort(m2.bos.begin(), m2.bos.end());
      b.add_term(m2, Poly::constant(ctx(), rng.small_rational()));
    }
    CHECK(dagger_pair(Sector::ns, a, b) == dagger_pair(Sector::ns, b, a));
  }
}

TEST_CASE("exp truncation by weighted degree") {
  FockElement x1 = mono({1}, {});
  FockElement z = fock_exp(x1, 3);
  CHECK(z.coeff(FockMonomial{}) == Poly::one(ctx()));
  CHECK(z.coeff(FockMonomial{{1}, {}}) == Poly::one(ctx()));
  CHECK(z.coeff(FockMonomial{{1, 1}, {}}) == Poly::constant(ctx(), frac(1, 2)));
  CHECK(z.coeff(FockMonomial{{1, 1, 1}, {}}) ==
        Poly::constant(ctx(), frac(1, 6)));
  CHECK(z.coeff(FockMonomial{{1, 1, 1, 1}, {}}).is_zero());
  // hbar carries degree 2: no square term below the cutoff
  FockElement hx = x1.scaled(hb());
  FockElement z2 = fock_exp(hx, 3);
  CHECK(z2.coeff(FockMonomial{{1}, {}}) == hb());
  CHECK(z2.coeff(FockMonomial{{1, 1}, {}}).is_zero());
}

TEST_CASE("grassmann products track signs and collisions") {
  CHECK((mono({}, {0}) * mono({}, {0})).is_zero());
  CHECK(mono({}, {1}) * mono({}, {0}) == mono({}, {0, 1}).scaled(rat(-1)));
  CHECK(mono({}, {0}) * mono({}, {1}) == mono({}, {0, 1}));
  CHECK(mono({}, {0, 2}) * mono({}, {1}) ==
        mono({}, {0, 1, 2}).scaled(rat(-1)));
}

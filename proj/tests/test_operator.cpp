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

#include "superrec/operator_expr.hpp"
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

// hbar c / 12 with c = hbar (3/2 - 3 Q0^2).
Poly central_c() {
  return hb() * (rat(3, 2) - sym(Context::kQ0, 2).scaled(3));
}

OperatorExpr constant_op(Sector s, const Poly& c) {
  OperatorExpr op(ctx(), s);
  op.add_constant(c);
  return op;
}

}  // namespace

TEST_CASE("generators annihilate or scale the vacuum as stated") {
  FockElement one = FockElement::vacuum(ctx());
  // (NS, L, 1) applied to 1 is zero
  OperatorExpr l1 = build_generator(ctx(), Sector::ns, GenKind::l, 2, 12);
  CHECK(l1.apply(one, 8).is_zero());
  // (R, L, 0) contains the constant hbar/16
  OperatorExpr l0r = build_generator(ctx(), Sector::r, GenKind::l, 0, 12);
  auto it = l0r.terms().find(Word{});
  REQUIRE(it != l0r.terms().end());
  ExpVec e(ctx()->size(), 0);
  e[Context::kHHalf] = 2;
  CHECK(it->second.coeff_of(e) == frac(1, 16));
  // (NS, L, 1) applied to x^1 gives hbar tau0
  FockElement x1 = mono({1}, {});
  CHECK(l1.apply(x1, 8) ==
        FockElement::vacuum(ctx()).scaled(hb() * sym(Context::kTau0)));
  // L_0 1 = Delta_rep 1 with Delta_rep = tau0 (tau0 + h Q0) / 2
  OperatorExpr l0 = build_generator(ctx(), Sector::ns, GenKind::l, 0, 12);
  FockElement v = l0.apply(one, 8);
  CHECK(v == one.scaled((sym(Context::kTau0) * j0_sym()).scaled(frac(1, 2))));
  // G_{3/2} 1 = 0 (NS annihilator side)
  OperatorExpr g32 = build_generator(ctx(), Sector::ns, GenKind::g, 3, 12);
  CHECK(g32.apply(one, 8).is_zero());
  // R sector: the vacuum is a highest-weight state for n, r > 0.
  for (int n : {1, 2, 3}) {
    CHECK(build_generator(ctx(), Sector::r, GenKind::l, 2 * n, 12)
              .apply(one, 8)
              .is_zero());
    CHECK(build_generator(ctx(), Sector::r, GenKind::g, 2 * n, 12)
              .apply(one, 8)
              .is_zero());
  }
  // G_0 1 is proportional to theta^0 (the fermionic level-0 partner).
  FockElement g0v =
      build_generator(ctx(), Sector::r, GenKind::g, 0, 12).apply(one, 8);
  FockElement th0(ctx());
  th0.add_term(FockMonomial{{}, {0}}, Poly::one(ctx()));
  CHECK(g0v == th0.scaled((sym(Context::kTau0) + hb(1) * sym(Context::kQ0))
                              .scaled(frac(1, 2)) -
                          (hb(1) * sym(Context::kQ0)).scaled(frac(1, 4))));
}

TEST_CASE("normal ordering reproduces the Heisenberg contraction") {
  // J_1 J_{-1} applied to 1: hbar + x^1-part from the reordered term.
  OperatorExpr op(ctx(), Sector::ns);
  op.emit({Mode{Mode::j, 2}, Mode{Mode::j, -2}}, Poly::one(ctx()));
  FockElement one = FockElement::vacuum(ctx());
  FockElement r = op.apply(one, 6);
  CHECK(r.coeff(FockMonomial{}) == hb());
  // the normal-ordered remainder x^1 hbar d_1 kills the vacuum
  CHECK(r == one.scaled(hb()));
}

TEST_CASE("super Virasoro relations hold as operator identities") {
  const int w = 24;
  for (Sector s : {Sector::ns, Sector::r}) {
    // [L_2, L_{-2}] = 4 hbar L_0 + (hbar c / 12) * 6
    OperatorExpr l2 = build_generator(ctx(), s, GenKind::l, 4, w);
    OperatorExpr lm2 = build_generator(ctx(), s, GenKind::l, -4, w);
    OperatorExpr rhs =
        build_generator(ctx(), s, GenKind::l, 0, w).scaled(hb().scaled(4));
    rhs += constant_op(s, central_c().scaled(frac(6, 12)) * hb());
    OperatorExpr resid = commutator_residual(l2, lm2, rhs);
    CHECK(resid.vanishes_on_window(2 * (w - 10)));
  }
  // {G_{1/2}, G_{-1/2}} = 2 hbar L_0 (NS; the central term vanishes there)
  OperatorExpr g = build_generator(ctx(), Sector::ns, GenKind::g, 1, w);
  OperatorExpr gm = build_generator(ctx(), Sector::ns, GenKind::g, -1, w);
  OperatorExpr rhs =
      build_generator(ctx(), Sector::ns, GenKind::l, 0, w).scaled(hb().scaled(2));
  CHECK(commutator_residual(g, gm, rhs).vanishes_on_window(2 * (w - 6)));
  // [J_2, Gamma_{3/2}] = 0
  OperatorExpr j2(ctx(), Sector::ns);
  j2.emit({Mode{Mode::j, 4}}, Poly::one(ctx()));
  OperatorExpr g32(ctx(), Sector::ns);
  g32.emit({Mode{Mode::g, 3}}, Poly::one(ctx()));
  OperatorExpr zero(ctx(), Sector::ns);
  CHECK(commutator_residual(j2, g32, zero).vanishes_on_window(2 * w - 20));
}

TEST_CASE("gaiotto constraints specialize to bare generators") {
  // R curve: F_1 = G_1 exactly (trivial conjugation).
  SuperCurve c = gaiotto_r();
  OperatorExpr f1 = build_constraint(c, 1, ConstraintKind::f, 14);
  OperatorExpr g1 = build_generator(ctx(), Sector::r, GenKind::g, 2, 14);
  OperatorExpr diff = f1;
  diff -= g1;
  CHECK(diff.vanishes_on_window(2 * 14 - 8));
  // NS: H_1 constant part is +hbar tau0 T (with D_1 = -T).
  SuperCurve cns = gaiotto_ns();
  OperatorExpr h1 = build_constraint(cns, 1, ConstraintKind::h, 14);
  auto it = h1.terms().find(Word{});
  REQUIRE(it != h1.terms().end());
  CHECK(it->second == hb() * sym(Context::kTau0) * sym(Context::kT));
  // Linear h^{1/2} part of H_i: (1-i)/2 Q J_i.
  for (int i : {1, 2, 3}) {
    OperatorExpr hi = build_constraint(cns, i, ConstraintKind::h, 14);
    auto lin = hi.terms().find(Word{Mode{Mode::j, 2 * i}});
    Poly expect = sym(Context::kTau0) +
                  (hb(1) * sym(Context::kQ0)).scaled(frac(1 - i, 2));
    REQUIRE(lin != hi.terms().end());
    CHECK(lin->second == expect);
  }
}

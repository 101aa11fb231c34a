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

#include "superrec/laurent.hpp"
#include "test_support.hpp"

using namespace superrec;
using namespace superrec::testing;

TEST_CASE("residues read the z^{-1} dz coefficient") {
  FormWeight dz{1, ThetaKind::none};
  CHECK(residue(LaurentForm::monomial(ctx(), -1, rat(1), dz)) == rat(1));
  CHECK(residue(LaurentForm::monomial(ctx(), 3, rat(5), dz)).is_zero());
  CHECK(residue(LaurentForm::monomial(ctx(), -4, rat(5), dz)).is_zero());
}

TEST_CASE("residue requires a window covering -1") {
  LaurentForm f(ctx(), 2, 9, FormWeight{1, ThetaKind::none});
  f.add_coeff(3, rat(1));
  CHECK(residue(f).is_zero());  // lower bound 2: nothing at -1, exactly zero
  LaurentForm g(ctx(), -5, -3, FormWeight{1, ThetaKind::none});
  CHECK_THROWS_AS((void)residue(g), WindowError);
}

TEST_CASE("R-sector theta factors square to z dz") {
  // (Theta^R/z)^2 = z dz / z^2, residue 1.
  LaurentForm eta0 =
      LaurentForm::monomial(ctx(), -1, rat(1), FormWeight{0, ThetaKind::r});
  LaurentForm sq = eta0 * eta0;
  CHECK(sq.weight().dz == 1);
  CHECK(sq.weight().theta == ThetaKind::none);
  CHECK(residue(sq) == rat(1));
  // NS squares to dz without the shift.
  LaurentForm ns =
      LaurentForm::monomial(ctx(), -1, rat(1), FormWeight{0, ThetaKind::ns});
  CHECK(residue(ns * ns).is_zero());
}

TEST_CASE("series inversion against multiplication") {
  LaurentForm f(ctx(), -2, 10, FormWeight{});
  f.add_coeff(-2, rat(2));
  f.add_coeff(0, rat(1));
  f.add_coeff(1, rat(-3, 2));
  LaurentForm inv = f.inverse(6);
  LaurentForm prod = f * inv;
  for (int e = prod.lo(); e <= std::min(prod.hi(), 4); ++e)
    CHECK(prod.coeff(e) == (e == 0 ? rat(1) : rat(0)));
}

TEST_CASE("derivative raises the dz weight") {
  LaurentForm f(ctx(), -3, 5, FormWeight{1, ThetaKind::none});
  f.add_coeff(-3, rat(1));
  f.add_coeff(2, rat(4));
  LaurentForm d = f.derivative();
  CHECK(d.weight().dz == 2);
  CHECK(d.coeff(-4) == rat(-3));
  CHECK(d.coeff(1) == rat(8));
}

TEST_CASE("window arithmetic under products") {
  LaurentForm a(ctx(), -1, 3, FormWeight{});
  a.add_coeff(-1, rat(1));
  LaurentForm b(ctx(), 0, 2, FormWeight{});
  b.add_coeff(0, rat(1));
  LaurentForm p = a * b;
  CHECK(p.hi() == std::min(3 + 0, 2 - 1));
  CHECK_THROWS_AS((void)p.coeff(p.hi() + 1), WindowError);
}

TEST_CASE("bi-variable swap flips the sign for double theta factors") {
  BiLaurent b;
  b.ctx = ctx();
  b.w1 = b.w2 = FormWeight{0, ThetaKind::ns};
  b.add(0, 2, rat(5));
  BiLaurent s = b.swapped();
  CHECK(s.coeff(2, 0) == rat(-5));
  BiLaurent c;
  c.ctx = ctx();
  c.w1 = c.w2 = FormWeight{1, ThetaKind::none};
  c.add(0, 2, rat(5));
  CHECK(c.swapped().coeff(2, 0) == rat(5));
}

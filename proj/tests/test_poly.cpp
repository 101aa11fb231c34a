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

#include "superrec/poly.hpp"
#include "test_support.hpp"

using namespace superrec;
using namespace superrec::testing;

namespace {

Poly random_poly(Rng& rng, int terms) {
  Poly p = Poly::zero(ctx());
  for (int t = 0; t < terms; ++t) {
    ExpVec e(ctx()->size(), 0);
    e[Context::kTau0] = static_cast<int>(rng.next() % 3);
    e[Context::kQ0] = static_cast<int>(rng.next() % 2);
    e[Context::kT] = static_cast<int>(rng.next() % 3);
    e[Context::kHHalf] = static_cast<int>(rng.next() % 5) - 2;
    p += Poly::monomial(ctx(), e, rng.small_rational());
  }
  return p;
}

}  // namespace

TEST_CASE("half powers of hbar multiply by exponent addition") {
  CHECK(hb(1) * hb(1) == hb(2));
}

TEST_CASE("binomial expansion of the J0 constant") {
  Poly j0 = sym(Context::kTau0) + hb(1) * sym(Context::kQ0);
  Poly sq = j0 * j0;
  Poly expected = sym(Context::kTau0, 2) +
                  (hb(1) * sym(Context::kTau0) * sym(Context::kQ0)).scaled(2) +
                  hb(2) * sym(Context::kQ0, 2);
  CHECK(sq == expected);
}

TEST_CASE("adding zero is the identity") {
  Rng rng(7);
  Poly p = random_poly(rng, 4);
  CHECK(p + Poly::zero(ctx()) == p);
}

TEST_CASE("coeff_of reads exact coefficients") {
  Poly j0 = sym(Context::kTau0) + hb(1) * sym(Context::kQ0);
  ExpVec e(ctx()->size(), 0);
  e[Context::kHHalf] = 1;
  e[Context::kQ0] = 1;
  CHECK(j0.coeff_of(e) == Rational(1));

  Poly ht = hb(2) * sym(Context::kT);
  ExpVec lam2(ctx()->size(), 0);
  lam2[Context::kLambda] = 2;
  CHECK(ht.coeff_of(lam2) == Rational(0));

  Poly p = sym(Context::kT).scaled(frac(3, 2));
  ExpVec t(ctx()->size(), 0);
  t[Context::kT] = 1;
  CHECK(p.coeff_of(t) == frac(3, 2));
}

TEST_CASE("regrading replaces T by Lambda^2/hbar") {
  // genus 1, p = T -> hbar^{-1} Lambda^2
  Poly t = sym(Context::kT);
  Poly r = regrade(t);
  CHECK(r == sym(Context::kLambda, 2) * hb(-2));
  // genus 2, p = hbar*T -> Lambda^2 at hbar power 0
  Poly r2 = regrade(hb(2) * t);
  CHECK(r2 == sym(Context::kLambda, 2));
  CHECK(regrade(Poly::zero(ctx())).is_zero());
}

TEST_CASE("regrade is linear and inverts by resubstitution") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = random_poly(rng, 3);
    Poly b = random_poly(rng, 3);
    CHECK(regrade(a + b) == regrade(a) + regrade(b));
    CHECK(unregrade(regrade(a)) == a);
  }
}

TEST_CASE("multiplication is commutative and associative") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Poly a = random_poly(rng, 3);
    Poly b = random_poly(rng, 3);
    Poly c = random_poly(rng, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("single-term inverse and the non-monomial pivot error") {
  Poly m = sym(Context::kTau0, 2).scaled(frac(3, 4));
  CHECK(m * m.inverse() == Poly::one(ctx()));
  Poly s = sym(Context::kTau0) + sym(Context::kT);
  CHECK_THROWS_AS((void)s.inverse(), std::domain_error);
}

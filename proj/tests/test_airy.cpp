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

#include <numeric>

#include "superrec/airy.hpp"
#include "test_support.hpp"

using namespace superrec;
using namespace superrec::testing;

namespace {

CoeffTable solve_gaiotto(Sector s, int chi_max, bool fermionic_route = false) {
  SuperCurve c = s == Sector::ns ? gaiotto_ns() : gaiotto_r();
  SolveOptions opt;
  opt.chi_max = chi_max;
  opt.index_bound = std::max(1, (chi_max - 1) / 2);
  opt.fermionic_route = fermionic_route;
  opt.check_alternates = true;
  return airy_solve(c, opt);
}

int index_sum(const CellKey& k) {
  int s = std::accumulate(k.bos.begin(), k.bos.end(), 0);
  return std::accumulate(k.fer.begin(), k.fer.end(), s);
}

}  // namespace

TEST_CASE("base cases: the D-terms seed the table and chi=3 cells vanish") {
  SuperCurve c = gaiotto_ns();
  CoeffTable t = solve_gaiotto(Sector::ns, 5);
  CHECK(t.get(2, {1}, {}) == c.d_at(1));
  CHECK(t.get(2, {2}, {}).is_zero());
  // F_{1/2,2|0} = F_{1/2,0|2} = F_{0,3|0} = F_{0,1|2} = 0
  for (const auto& [key, value] : t.entries()) {
    CHECK(key.two_g >= 2);  // nothing below genus 1 survives
    CHECK(!value.is_zero());
  }
  CHECK(t.get(1, {1, 1}, {}).is_zero());
  CHECK(t.get(1, {}, {0, 1}).is_zero());
  CHECK(t.get(0, {1, 1, 1}, {}).is_zero());
}

TEST_CASE("frozen level-5 values on the NS gaiotto curve") {
  CoeffTable t = solve_gaiotto(Sector::ns, 5);
  // F_{2,1|0}(2) = -D_1^2/(2 tau0) = -T^2/(2 tau0)
  Poly expect = (sym(Context::kT, 2) * sym(Context::kTau0, -1))
                    .scaled(frac(-1, 2));
  CHECK(t.get(4, {2}, {}) == expect);
  CHECK(t.get(4, {1}, {}).is_zero());
  for (int i = 1; i <= 2; ++i) CHECK(t.get(3, {i}, {}).is_zero());
}

TEST_CASE("gaiotto tables satisfy the T-grading and vanishing bounds") {
  for (Sector s : {Sector::ns, Sector::r}) {
    CoeffTable t = solve_gaiotto(s, 6);
    const int tf = two_f(s);
    for (const auto& [key, value] : t.entries()) {
      const int sum = index_sum(key) + tf * static_cast<int>(key.fer.size()) / 2;
      // T-degree equals the index sum (both extremesagree for monomials).
      CHECK(value.min_exponent(Context::kT) == sum);
      CHECK(value.max_exponent(Context::kT) == sum);
      // vanishing above the genus: 2*sum <= two_g
      CHECK(2 * sum <= key.two_g);
    }
  }
}

TEST_CASE("constraint operators annihilate the solved partition function") {
  for (Sector s : {Sector::ns, Sector::r}) {
    SuperCurve c = s == Sector::ns ? gaiotto_ns() : gaiotto_r();
    CoeffTable t = solve_gaiotto(s, 5);
    ConstraintReport rep = verify_constraints(c, t, 5);
    CHECK(rep.all_zero);
  }
}

TEST_CASE("a perturbed coefficient leaves a nonzero residual") {
  SuperCurve c = gaiotto_ns();
  CoeffTable t = solve_gaiotto(Sector::ns, 5);
  CoeffTable broken = t;
  broken.set(CellKey{4, {2}, {}},
             t.get(4, {2}, {}) + Poly::one(ctx()));
  ConstraintReport rep = verify_constraints(c, broken, 5);
  CHECK(!rep.all_zero);
}

TEST_CASE("the bosonic and fermionic constraint routes agree") {
  for (Sector s : {Sector::ns, Sector::r}) {
    CoeffTable a = solve_gaiotto(s, 6, false);
    CoeffTable b = solve_gaiotto(s, 6, true);
    CHECK(a == b);
  }
  for (uint64_t seed : {201u, 202u}) {
    SuperCurve c = random_curve(seed % 2 ? Sector::ns : Sector::r, 2, seed);
    SolveOptions opt;
    opt.chi_max = 5;
    opt.index_bound = 10;
    CoeffTable a = airy_solve(c, opt);
    opt.fermionic_route = true;
    CoeffTable b = airy_solve(c, opt);
    CHECK(a == b);
  }
}

TEST_CASE("random curves solve with certificates and clean residuals") {
  for (uint64_t seed : {301u, 302u, 303u}) {
    for (Sector s : {Sector::ns, Sector::r}) {
      int N = 1 + static_cast<int>(seed % 2);
      SuperCurve c = random_curve(s, N, seed + (s == Sector::r ? 50 : 0));
      SolveOptions opt;
      opt.chi_max = 5;
      opt.index_bound = 12;
      opt.check_alternates = true;
      CoeffTable t = airy_solve(c, opt);
      ConstraintReport rep = verify_constraints(c, t, 5);
      CHECK(rep.all_zero);
    }
  }
}

TEST_CASE("an index bound below the support is rejected") {
  // F_{2,1|0}(2) is nonzero on the NS gaiotto curve, so bound 1 must fail
  // the zero-tail certificate.
  SuperCurve c = gaiotto_ns();
  SolveOptions opt;
  opt.chi_max = 5;
  opt.index_bound = 1;
  CHECK_THROWS_AS((void)airy_solve(c, opt), IndexBoundError);
}

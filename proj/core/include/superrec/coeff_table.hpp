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

#ifndef SUPERREC_COEFF_TABLE_HPP
#define SUPERREC_COEFF_TABLE_HPP

#include <compare>
#include <map>
#include <vector>

#include "superrec/poly.hpp"

namespace superrec {

/// Canonical cell key: twice the genus, ascending bosonic multiset
/// (indices >= 1), strictly ascending fermionic tuple (indices >= 0, even
/// length).
struct CellKey {
  int two_g = 0;
  std::vector<int> bos;
  std::vector<int> fer;
  auto operator<=>(const CellKey&) const = default;
  int chi() const {
    return two_g + static_cast<int>(bos.size() + fer.size());
  }
};

/// Sorts a fermionic index list; multiplies sign by the permutation parity,
/// returns false on repeated indices.
bool canonical_fermions(std::vector<int>& fer, int& sign);

/// Merge parity of two disjoint ascending lists (J1, J2) into their sorted
/// union: +1 when the concatenation is an even permutation.
int merge_sign(const std::vector<int>& j1, const std::vector<int>& j2);

/// Memoized F_{g,n|2m} coefficients. Reads at permuted indices fold the
/// bosonic symmetry and fermionic antisymmetry into a sign; absent cells
/// read as zero.
class CoeffTable {
 public:
  CoeffTable() = default;
  CoeffTable(ContextPtr ctx, int chi_max, int index_bound)
      : ctx_(std::move(ctx)), chi_max_(chi_max), index_bound_(index_bound) {}

  const ContextPtr& context() const { return ctx_; }
  int chi_max() const { return chi_max_; }
  int index_bound() const { return index_bound_; }
  const std::map<CellKey, Poly>& entries() const { return entries_; }

  void set(CellKey key, Poly value);

  /// Signed read at arbitrary index orderings.
  Poly get(int two_g, std::vector<int> bos, std::vector<int> fer) const;
  Poly get_canonical(const CellKey& key) const;

  friend bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  ContextPtr ctx_;
  int chi_max_ = 0;
  int index_bound_ = 0;
  std::map<CellKey, Poly> entries_;
};

}  // namespace superrec

#endif

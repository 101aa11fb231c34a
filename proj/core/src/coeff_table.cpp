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

#include "superrec/coeff_table.hpp"

#include <algorithm>

namespace superrec {

bool canonical_fermions(std::vector<int>& fer, int& sign) {
  // Insertion sort with inversion counting; lists are short.
  for (size_t i = 1; i < fer.size(); ++i) {
    int v = fer[i];
    size_t j = i;
    while (j > 0 && fer[j - 1] > v) {
      fer[j] = fer[j - 1];
      --j;
      sign = -sign;
    }
    fer[j] = v;
  }
  for (size_t i = 1; i < fer.size(); ++i)
    if (fer[i] == fer[i - 1]) return false;
  return true;
}

int merge_sign(const std::vector<int>& j1, const std::vector<int>& j2) {
  long inversions = 0;
  size_t a = 0;
  for (int v : j2) {
    while (a < j1.size() && j1[a] < v) ++a;
    inversions += static_cast<long>(j1.size() - a);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

void CoeffTable::set(CellKey key, Poly value) {
  if (value.is_zero()) {
    entries_.erase(key);
    return;
  }
  entries_[std::move(key)] = std::move(value);
}

Poly CoeffTable::get_canonical(const CellKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Poly::zero(ctx_) : it->second;
}

Poly CoeffTable::get(int two_g, std::vector<int> bos,
                     std::vector<int> fer) const {
  std::sort(bos.begin(), bos.end());
  int sign = 1;
  if (!canonical_fermions(fer, sign)) return Poly::zero(ctx_);
  Poly v = get_canonical(CellKey{two_g, std::move(bos), std::move(fer)});
  return sign > 0 ? v : -v;
}

}  // namespace superrec

// Copyright 2026 The g2nil Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "g2nil/matrix.hpp"

namespace g2nil {

std::tuple<int, int, int> signature(const ScalarMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DimensionError("signature of a non-symmetric matrix");
  ScalarMatrix a = symmetric;
  const std::size_t n = a.rows();
  int pos = 0, neg = 0, zero = 0;
  // Apply a simultaneous row/column operation, keeping `a` symmetric.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };
  auto swap_both = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_both(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) {
          ++zero;  // row k is entirely zero in the remaining block
          continue;
        }
        add_multiple(k, j, Scalar(1));  // new a(k,k) = 2 a(k,j) + a(j,j) = 2 a(k,j)
      }
    }
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      add_multiple(i, k, -(a(i, k) * inv));
    }
    (a(k, k).sign() > 0 ? pos : neg) += 1;
  }
  return {pos, neg, zero};
}

}  // namespace g2nil

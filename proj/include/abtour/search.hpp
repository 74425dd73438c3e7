// Copyright 2026 The abtour Authors
//
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

#ifndef ABTOUR_SEARCH_HPP_
#define ABTOUR_SEARCH_HPP_

#include <concepts>

namespace abtour {

// first_true returns the smallest v in [lo, hi] with pred(v) true, assuming
// pred is monotone on that range (false on a possibly empty prefix, then true).
// Returns hi + 1 if pred is false everywhere. pred is only called inside
// [lo, hi].
template <std::integral T, std::predicate<T> Pred>
T first_true(T lo, T hi, Pred pred) {
  T end = hi + 1;
  while (lo < end) {
    const T mid = lo + (end - lo) / 2;
    if (pred(mid)) {
      end = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace abtour

#endif  // ABTOUR_SEARCH_HPP_

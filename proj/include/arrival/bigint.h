// Copyright 2026 The Arrival Authors
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

#ifndef ARRIVAL_BIGINT_H_
#define ARRIVAL_BIGINT_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrival {

// Train counts and flow values. Visit counts reach 2^n, so fixed-width words
// are not enough once n exceeds 62.
// Expression templates off: results of arithmetic are plain values, so
// `auto` and `?:` behave.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

inline BigInt pow2(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

// Number of bits needed to write `value` (0 for 0).
inline unsigned bit_length(const BigInt& value) {
  return value.is_zero() ? 0u
                         : static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
}

}  // namespace arrival

#endif  // ARRIVAL_BIGINT_H_

// Copyright 2026 the polystat authors
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

#ifndef POLYSTAT_RNG_HPP
#define POLYSTAT_RNG_HPP

#include <cstdint>

namespace polystat {

// Counter-based generator in the splitmix64 family.  A stream is a (key,
// counter) pair; output i of a stream depends only on (key, i), so streams
// can be split and consumed in any order with identical results.  Every
// randomized operation in the library takes one of these explicitly.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(uint64_t seed, uint64_t stream)
      : key_(mix(mix(seed + kGolden) ^ mix(stream + kSalt))), ctr_(0) {}

  // Derive an independent stream indexed by `index`.
  RngStream substream(uint64_t index) const {
    RngStream s;
    s.key_ = mix(key_ ^ mix(index + kSalt));
    s.ctr_ = 0;
    return s;
  }

  uint64_t next() { return mix(key_ + (++ctr_) * kGolden); }

  // Unbiased uniform draw from [0, n), n >= 1.
  uint64_t below(uint64_t n) {
    uint64_t threshold = (-n) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform double in [0, 1) with 53 bits.
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  bool coin() { return next() >> 63; }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr uint64_t kSalt = 0xD1B54A32D192ED03ull;

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  uint64_t key_;
  uint64_t ctr_;
};

}  // namespace polystat

#endif  // POLYSTAT_RNG_HPP

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

#ifndef POLYSTAT_FFPOLY_HPP
#define POLYSTAT_FFPOLY_HPP

#include <cstdint>
#include <vector>

#include "polystat/intpoly.hpp"
#include "polystat/rng.hpp"

namespace polystat {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(uint64_t n);
uint64_t next_prime_u64(uint64_t n);  // smallest prime > n
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

// A certified prime modulus.  For odd p the Montgomery constants are
// precomputed; arithmetic helpers take and return ordinary residues.
class PrimeModulus {
 public:
  static PrimeModulus create(uint64_t p);  // throws if p is not prime

  uint64_t p() const { return p_; }
  bool certified() const { return certified_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ || s < a ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a ? p_ - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;  // a != 0

  // Montgomery kernels (odd p only); values in Montgomery form.
  uint64_t to_mont(uint64_t a) const;
  uint64_t from_mont(uint64_t a) const;
  uint64_t mont_mul(uint64_t a, uint64_t b) const;
  uint64_t mont_one() const { return one_; }
  bool has_mont() const { return p_ & 1; }

 private:
  uint64_t p_ = 0;
  bool certified_ = false;
  uint64_t ninv_ = 0;  // -p^{-1} mod 2^64
  uint64_t r2_ = 0;    // (2^64)^2 mod p
  uint64_t one_ = 0;   // 2^64 mod p
};

// Polynomial over F_p, residues in [0, p), least-degree-first.  The leading
// coefficient is nonzero unless the polynomial is zero.
class FFPoly {
 public:
  FFPoly() = default;
  FFPoly(std::vector<uint64_t> coeffs, PrimeModulus mod);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<uint64_t>& coeffs() const { return c_; }
  const PrimeModulus& modulus() const { return mod_; }
  uint64_t leading() const { return c_.back(); }
  uint64_t eval(uint64_t x) const;
  bool operator==(const FFPoly& o) const { return c_ == o.c_; }

  FFPoly operator+(const FFPoly& o) const;
  FFPoly operator-(const FFPoly& o) const;
  FFPoly operator*(const FFPoly& o) const;
  FFPoly monic() const;
  FFPoly derivative() const;

 private:
  void normalize();
  std::vector<uint64_t> c_;
  PrimeModulus mod_;
};

// Reduce an integer polynomial mod p; the degree may drop.
FFPoly reduce_mod(const IntPoly& p, const PrimeModulus& mod);

// (quotient, remainder) with divisor != 0.
std::pair<FFPoly, FFPoly> divrem(const FFPoly& a, const FFPoly& b);
FFPoly gcd(const FFPoly& a, const FFPoly& b);  // monic gcd

// Number of distinct roots in F_p: deg gcd(x^p - x, f).  f != 0.
long count_distinct_roots(const FFPoly& f);

// The distinct roots themselves (order unspecified but deterministic for a
// fixed rng stream).
std::vector<uint64_t> distinct_roots(const FFPoly& f, RngStream& rng);

// Multiset of irreducible-factor degrees with multiplicity, ascending.
std::vector<long> degree_sequence(const FFPoly& f, RngStream& rng);

// Full factorization: monic irreducible factors with multiplicities plus the
// leading unit; the product reconstructs f exactly.
struct FFFactorization {
  uint64_t unit = 1;
  std::vector<std::pair<FFPoly, unsigned>> factors;
};
FFFactorization factorize(const FFPoly& f, RngStream& rng);

}  // namespace polystat

#endif  // POLYSTAT_FFPOLY_HPP

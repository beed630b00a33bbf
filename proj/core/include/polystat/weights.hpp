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

#ifndef POLYSTAT_WEIGHTS_HPP
#define POLYSTAT_WEIGHTS_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystat {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Prime-sum kernel: either the box kernel h_X supported on (X - log 2, X],
// or the exponentially tilted k-fold uniform convolution g_{X,k} supported
// on [X/2, X].
class WeightSpec {
 public:
  enum class Kind { HX, GXK };

  static WeightSpec hx(double X);
  static WeightSpec gxk(double X, int k);  // requires k >= 4 and X >= 2k

  Kind kind() const { return kind_; }
  double X() const { return X_; }
  int k() const { return k_; }
  std::string name() const;

  double eval(double u) const;
  double support_lo() const { return kind_ == Kind::HX ? X_ - M_LN2 : X_ / 2; }
  double support_hi() const { return X_; }

 private:
  Kind kind_;
  double X_;
  int k_;
};

inline double eval_weight(const WeightSpec& w, double u) { return w.eval(u); }

// Density of the sum of k independent uniforms on [0,1] at s (Irwin-Hall),
// evaluated from the exact piecewise polynomial (alternating binomial sum).
double irwin_hall_density(int k, double s);

// Closed-form Laplace transform G_{X,k}(s) with a series fallback near s = 1
// so that G(1) = 1 exactly.
std::complex<double> laplace_G(double X, int k, std::complex<double> s);
double laplace_G_real(double X, int k, double sigma);

// Primes with log p in [X/2, X]: lo = ceil(e^{X/2}), hi = floor(e^X).
struct PrimeRange {
  double X = 0;
  uint64_t lo = 0;
  uint64_t hi = 0;
  static PrimeRange from_X(double X, double cap = 22.0);
};

// Simple sieve for the base primes.
std::vector<uint32_t> small_primes_upto(uint32_t n);

struct SieveOptions {
  uint64_t segment_span = 1ull << 21;
  unsigned threads = 0;          // 0: env/default
  std::string cache_path;        // optional on-disk segment cache
};

// Calls fn(segment_index, primes) for every segment covering [lo, hi], in
// unspecified concurrent order; within a segment the primes are ascending.
// Segment boundaries depend only on (lo, hi, span), so callers can reduce
// per-segment results deterministically by index.
void for_each_prime_segment(
    uint64_t lo, uint64_t hi, const SieveOptions& opts,
    const std::function<void(std::size_t, const std::vector<uint64_t>&)>& fn);

std::size_t segment_count(uint64_t lo, uint64_t hi, uint64_t span);

// Sequential ascending enumeration.
void for_each_prime(uint64_t lo, uint64_t hi,
                    const std::function<void(uint64_t)>& fn);

// Buffered ascending prime stream over [range.lo, range.hi].
class PrimeStream {
 public:
  explicit PrimeStream(PrimeRange range, SieveOptions opts = {});
  std::optional<uint64_t> next();

 private:
  void refill();
  PrimeRange range_;
  SieveOptions opts_;
  uint64_t cursor_;
  std::vector<uint64_t> buffer_;
  std::size_t pos_ = 0;
  bool done_ = false;
};

// Compensated (Kahan) accumulator.
struct KahanAcc {
  double sum = 0;
  double c = 0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

struct SumOptions {
  double sieve_cap = 22.0;
  unsigned threads = 0;
  std::string cache_path;
  uint64_t segment_span = 1ull << 21;
};

// sum over primes of f(p) * log(p) * w(log p), Kahan-compensated; segment
// partials are merged in ascending order so the result does not depend on
// the thread count.
double weighted_prime_sum(const WeightSpec& w,
                          const std::function<double(uint64_t)>& f,
                          const SumOptions& opts = {});

// w-mass: sum of log(p) * w(log p).
double weight_mass(const WeightSpec& w, const SumOptions& opts = {});

}  // namespace polystat

#endif  // POLYSTAT_WEIGHTS_HPP

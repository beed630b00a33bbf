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

#include "polystat/weights.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <mutex>

#include "polystat/parallel.hpp"

namespace polystat {

WeightSpec WeightSpec::hx(double X) {
  if (!(X > 0)) throw ConfigError("h_X requires X > 0");
  WeightSpec w;
  w.kind_ = Kind::HX;
  w.X_ = X;
  w.k_ = 0;
  return w;
}

WeightSpec WeightSpec::gxk(double X, int k) {
  if (k < 4) throw ConfigError("g_{X,k} requires k >= 4");
  if (!(X >= 2.0 * k)) throw ConfigError("g_{X,k} requires X >= 2k");
  if (k > 48) throw ConfigError("g_{X,k}: k > 48 not supported");
  WeightSpec w;
  w.kind_ = Kind::GXK;
  w.X_ = X;
  w.k_ = k;
  return w;
}

std::string WeightSpec::name() const {
  char buf[64];
  if (kind_ == Kind::HX)
    std::snprintf(buf, sizeof buf, "h_X(X=%g)", X_);
  else
    std::snprintf(buf, sizeof buf, "g_{X,k}(X=%g,k=%d)", X_, k_);
  return buf;
}

double irwin_hall_density(int k, double s) {
  if (k < 1) throw std::invalid_argument("irwin_hall_density: k >= 1");
  if (!(s > 0) || !(s < k)) return 0.0;
  // 1/(k-1)! * sum_{j<=s} (-1)^j C(k,j) (s-j)^(k-1)
  long double fact = 1.0L;
  for (int i = 2; i < k; ++i) fact *= i;
  long double acc = 0.0L;
  long double binom = 1.0L;  // C(k, 0)
  int jmax = static_cast<int>(std::floor(s));
  for (int j = 0; j <= jmax; ++j) {
    long double term = binom * std::pow(static_cast<long double>(s - j),
                                        static_cast<long double>(k - 1));
    acc += (j & 1) ? -term : term;
    binom = binom * (k - j) / (j + 1);
  }
  long double v = acc / fact;
  return v > 0 ? static_cast<double>(v) : 0.0;
}

double WeightSpec::eval(double u) const {
  if (kind_ == Kind::HX)
    return (u > X_ - M_LN2 && u <= X_) ? 2.0 * std::exp(-X_) : 0.0;
  // g_{X,k}(u) = exp(-u) * B_k((u - 3X/4)(2k/X) + k/2) * (2k/X)
  double scale = 2.0 * k_ / X_;
  double s = (u - 0.75 * X_) * scale + 0.5 * k_;
  if (!(s > 0) || !(s < k_)) return 0.0;
  return std::exp(-u) * irwin_hall_density(k_, s) * scale;
}

std::complex<double> laplace_G(double X, int k, std::complex<double> s) {
  if (k < 4 || !(X >= 2.0 * k)) throw ConfigError("laplace_G: need k>=4, X>=2k");
  std::complex<double> z = (s - 1.0) * (X / (4.0 * k));
  std::complex<double> f;
  if (std::abs(z) < 1e-4) {
    // sinh(z)/z = 1 + z^2/6 + z^4/120 + ...
    std::complex<double> z2 = z * z;
    std::complex<double> term = 1.0;
    f = 1.0;
    double denom = 1.0;
    for (int m = 1; m <= 8; ++m) {
      term *= z2;
      denom *= (2.0 * m) * (2.0 * m + 1.0);
      f += term / denom;
    }
  } else {
    f = std::sinh(z) / z;
  }
  std::complex<double> fk = 1.0;
  for (int i = 0; i < k; ++i) fk *= f;
  return std::exp(3.0 * (s - 1.0) * (X / 4.0)) * fk;
}

double laplace_G_real(double X, int k, double sigma) {
  return laplace_G(X, k, std::complex<double>(sigma, 0)).real();
}

PrimeRange PrimeRange::from_X(double X, double cap) {
  if (!(X > 0)) throw ConfigError("PrimeRange: X > 0 required");
  if (X > cap) throw ConfigError("PrimeRange: X exceeds the sieve cap");
  PrimeRange r;
  r.X = X;
  r.lo = static_cast<uint64_t>(std::ceil(std::exp(X / 2)));
  r.hi = static_cast<uint64_t>(std::floor(std::exp(X)));
  if (r.lo < 2) r.lo = 2;
  if (r.lo > r.hi) throw ConfigError("PrimeRange: empty range");
  return r;
}

std::vector<uint32_t> small_primes_upto(uint32_t n) {
  std::vector<uint32_t> primes;
  if (n < 2) return primes;
  std::vector<char> is(n + 1, 1);
  is[0] = is[1] = 0;
  for (uint64_t i = 2; i * i <= n; ++i)
    if (is[i])
      for (uint64_t j = i * i; j <= n; j += i) is[j] = 0;
  for (uint32_t i = 2; i <= n; ++i)
    if (is[i]) primes.push_back(i);
  return primes;
}

namespace {

// Sieve of one segment [s_lo, s_hi] (inclusive); returns ascending primes.
void sieve_segment(uint64_t s_lo, uint64_t s_hi,
                   const std::vector<uint32_t>& base,
                   std::vector<uint64_t>& out) {
  out.clear();
  if (s_lo <= 2 && 2 <= s_hi) out.push_back(2);
  uint64_t lo = s_lo | 1;  // first odd >= s_lo
  if (lo < 3) lo = 3;
  if (lo > s_hi) return;
  std::size_t n_odds = (s_hi - lo) / 2 + 1;
  std::vector<char> comp(n_odds, 0);
  for (uint32_t q : base) {
    if (q == 2) continue;
    uint64_t q2 = static_cast<uint64_t>(q) * q;
    if (q2 > s_hi) break;
    uint64_t start = q2;
    if (start < lo) {
      uint64_t m = (lo + q - 1) / q;
      if ((m & 1) == 0) ++m;  // odd multiples only
      start = m * q;
    }
    for (uint64_t v = start; v <= s_hi; v += 2ull * q)
      if (v >= lo) comp[(v - lo) / 2] = 1;
  }
  for (std::size_t i = 0; i < n_odds; ++i)
    if (!comp[i]) out.push_back(lo + 2 * i);
}

struct CacheHeader {
  char magic[4];
  uint32_t version;
  uint64_t lo, hi, span;
};

constexpr char kMagic[4] = {'P', 'S', 'C', '1'};

// Segment bitsets over odd values, preceded by a header.  Purely a cache:
// any mismatch falls back to sieving (and rewrites the file).
class SegmentCache {
 public:
  SegmentCache(const std::string& path, uint64_t lo, uint64_t hi, uint64_t span)
      : path_(path), lo_(lo), hi_(hi), span_(span) {
    if (path_.empty()) return;
    if (FILE* f = std::fopen(path_.c_str(), "rb")) {
      CacheHeader h{};
      bool ok = std::fread(&h, sizeof h, 1, f) == 1 &&
                std::memcmp(h.magic, kMagic, 4) == 0 && h.version == 1 &&
                h.lo == lo && h.hi == hi && h.span == span;
      if (ok) {
        readable_ = f;
        return;
      }
      std::fclose(f);
    }
    writable_ = std::fopen(path_.c_str(), "wb");
    if (writable_) {
      CacheHeader h{};
      std::memcpy(h.magic, kMagic, 4);
      h.version = 1;
      h.lo = lo;
      h.hi = hi;
      h.span = span;
      std::fwrite(&h, sizeof h, 1, writable_);
    }
  }
  ~SegmentCache() {
    if (readable_) std::fclose(readable_);
    if (writable_) std::fclose(writable_);
  }

  bool reading() const { return readable_ != nullptr; }
  bool writing() const { return writable_ != nullptr; }

  // Returns false on any read problem (caller falls back to sieving).
  bool read_segment(uint64_t s_lo, uint64_t s_hi, std::vector<uint64_t>& out) {
    uint64_t nbits = (s_hi - s_lo) / 2 + 1;
    std::size_t nwords = (nbits + 63) / 64;
    std::vector<uint64_t> words(nwords);
    if (std::fread(words.data(), sizeof(uint64_t), nwords, readable_) != nwords)
      return false;
    out.clear();
    if (s_lo <= 2 && 2 <= s_hi) out.push_back(2);
    uint64_t base = s_lo | 1;
    for (uint64_t i = 0; i < nbits; ++i)
      if (words[i / 64] >> (i % 64) & 1) out.push_back(base + 2 * i);
    return true;
  }

  void write_segment(uint64_t s_lo, uint64_t s_hi,
                     const std::vector<uint64_t>& primes) {
    uint64_t nbits = (s_hi - s_lo) / 2 + 1;
    std::size_t nwords = (nbits + 63) / 64;
    std::vector<uint64_t> words(nwords, 0);
    uint64_t base = s_lo | 1;
    for (uint64_t p : primes) {
      if (p == 2) continue;
      uint64_t i = (p - base) / 2;
      words[i / 64] |= 1ull << (i % 64);
    }
    std::fwrite(words.data(), sizeof(uint64_t), nwords, writable_);
  }

 private:
  std::string path_;
  uint64_t lo_, hi_, span_;
  FILE* readable_ = nullptr;
  FILE* writable_ = nullptr;
};

}  // namespace

std::size_t segment_count(uint64_t lo, uint64_t hi, uint64_t span) {
  if (lo > hi) return 0;
  return static_cast<std::size_t>((hi - lo) / span + 1);
}

void for_each_prime_segment(
    uint64_t lo, uint64_t hi, const SieveOptions& opts,
    const std::function<void(std::size_t, const std::vector<uint64_t>&)>& fn) {
  if (lo > hi) return;
  if (lo < 2) lo = 2;
  uint64_t span = opts.segment_span ? opts.segment_span : (1ull << 21);
  auto base = small_primes_upto(
      static_cast<uint32_t>(std::sqrt(static_cast<double>(hi)) + 2));
  std::size_t nseg = segment_count(lo, hi, span);

  // The cache file is sequential, so cached runs are single-threaded.
  if (!opts.cache_path.empty()) {
    SegmentCache cache(opts.cache_path, lo, hi, span);
    std::vector<uint64_t> primes;
    for (std::size_t i = 0; i < nseg; ++i) {
      uint64_t s_lo = lo + i * span;
      uint64_t s_hi = std::min(hi, s_lo + span - 1);
      bool have = cache.reading() && cache.read_segment(s_lo, s_hi, primes);
      if (!have) {
        sieve_segment(s_lo, s_hi, base, primes);
        if (cache.writing()) cache.write_segment(s_lo, s_hi, primes);
      }
      fn(i, primes);
    }
    return;
  }

  parallel_for(nseg, opts.threads, [&](std::size_t i) {
    uint64_t s_lo = lo + i * span;
    uint64_t s_hi = std::min(hi, s_lo + span - 1);
    std::vector<uint64_t> primes;
    sieve_segment(s_lo, s_hi, base, primes);
    fn(i, primes);
  });
}

void for_each_prime(uint64_t lo, uint64_t hi,
                    const std::function<void(uint64_t)>& fn) {
  SieveOptions opts;
  opts.threads = 1;
  for_each_prime_segment(lo, hi, opts,
                         [&](std::size_t, const std::vector<uint64_t>& ps) {
                           for (uint64_t p : ps) fn(p);
                         });
}

PrimeStream::PrimeStream(PrimeRange range, SieveOptions opts)
    : range_(range), opts_(opts), cursor_(range.lo) {}

void PrimeStream::refill() {
  buffer_.clear();
  pos_ = 0;
  uint64_t span = opts_.segment_span ? opts_.segment_span : (1ull << 21);
  auto base = small_primes_upto(
      static_cast<uint32_t>(std::sqrt(static_cast<double>(range_.hi)) + 2));
  while (buffer_.empty()) {
    if (cursor_ > range_.hi) {
      done_ = true;
      return;
    }
    uint64_t s_hi = std::min(range_.hi, cursor_ + span - 1);
    sieve_segment(cursor_, s_hi, base, buffer_);
    cursor_ = s_hi + 1;
  }
}

std::optional<uint64_t> PrimeStream::next() {
  while (!done_ && pos_ >= buffer_.size()) refill();
  if (done_ && pos_ >= buffer_.size()) return std::nullopt;
  return buffer_[pos_++];
}

double weighted_prime_sum(const WeightSpec& w,
                          const std::function<double(uint64_t)>& f,
                          const SumOptions& opts) {
  if (w.support_hi() > opts.sieve_cap)
    throw ConfigError("weighted_prime_sum: X exceeds the sieve cap");
  uint64_t lo =
      static_cast<uint64_t>(std::floor(std::exp(w.support_lo())));
  uint64_t hi = static_cast<uint64_t>(std::floor(std::exp(w.support_hi())));
  if (lo < 2) lo = 2;
  SieveOptions sopts;
  sopts.threads = opts.threads;
  sopts.cache_path = opts.cache_path;
  sopts.segment_span = opts.segment_span;
  std::size_t nseg = segment_count(lo, hi, sopts.segment_span);
  std::vector<KahanAcc> partials(nseg);
  for_each_prime_segment(
      lo, hi, sopts, [&](std::size_t i, const std::vector<uint64_t>& ps) {
        KahanAcc acc;
        for (uint64_t p : ps) {
          double u = std::log(static_cast<double>(p));
          double wu = w.eval(u);
          if (wu == 0.0) continue;
          acc.add(f(p) * u * wu);
        }
        partials[i] = acc;
      });
  KahanAcc total;
  for (const auto& a : partials) total.add(a.sum);
  return total.sum;
}

double weight_mass(const WeightSpec& w, const SumOptions& opts) {
  return weighted_prime_sum(w, [](uint64_t) { return 1.0; }, opts);
}

}  // namespace polystat

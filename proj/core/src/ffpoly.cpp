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

#include "polystat/ffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polystat {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t next_prime_u64(uint64_t n) {
  if (n < 2) return 2;
  uint64_t c = n + 1;
  if (c > 2 && (c & 1) == 0) ++c;
  while (!is_prime_u64(c)) c += (c == 2) ? 1 : 2;
  return c;
}

PrimeModulus PrimeModulus::create(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
  PrimeModulus m;
  m.p_ = p;
  m.certified_ = true;
  if ((p & 1) && p < (1ull << 63)) {
    // Newton iteration for p^{-1} mod 2^64.
    uint64_t x = p;
    for (int i = 0; i < 6; ++i) x *= 2 - p * x;
    m.ninv_ = -x;
    m.one_ = static_cast<uint64_t>(((unsigned __int128)1 << 64) % p);
    m.r2_ = mulmod_u64(m.one_, m.one_, p);
  }
  return m;
}

uint64_t PrimeModulus::mul(uint64_t a, uint64_t b) const {
  return mulmod_u64(a, b, p_);
}

uint64_t PrimeModulus::pow(uint64_t a, uint64_t e) const {
  return powmod_u64(a, e, p_);
}

uint64_t PrimeModulus::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of 0");
  return powmod_u64(a, p_ - 2, p_);
}

uint64_t PrimeModulus::to_mont(uint64_t a) const { return mont_mul(a, r2_); }

uint64_t PrimeModulus::from_mont(uint64_t a) const {
  uint64_t m = a * ninv_;
  unsigned __int128 t =
      ((unsigned __int128)a + (unsigned __int128)m * p_) >> 64;
  uint64_t r = static_cast<uint64_t>(t);
  return r >= p_ ? r - p_ : r;
}

uint64_t PrimeModulus::mont_mul(uint64_t a, uint64_t b) const {
  unsigned __int128 T = (unsigned __int128)a * b;
  uint64_t m = static_cast<uint64_t>(T) * ninv_;
  unsigned __int128 t = (T + (unsigned __int128)m * p_) >> 64;
  uint64_t r = static_cast<uint64_t>(t);
  return r >= p_ ? r - p_ : r;
}

FFPoly::FFPoly(std::vector<uint64_t> coeffs, PrimeModulus mod)
    : c_(std::move(coeffs)), mod_(mod) {
  for (auto& x : c_) x %= mod_.p();
  normalize();
}

void FFPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t FFPoly::eval(uint64_t x) const {
  uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = mod_.add(mod_.mul(acc, x), c_[i]);
  return acc;
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
  std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = mod_.add(r[i], o.c_[i]);
  return FFPoly(std::move(r), mod_);
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
  std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = mod_.sub(r[i], o.c_[i]);
  return FFPoly(std::move(r), mod_);
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
  if (is_zero() || o.is_zero()) return FFPoly({}, mod_);
  std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = mod_.add(r[i + j], mod_.mul(c_[i], o.c_[j]));
  }
  return FFPoly(std::move(r), mod_);
}

FFPoly FFPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  uint64_t inv = mod_.inv(leading());
  std::vector<uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_.mul(c_[i], inv);
  return FFPoly(std::move(r), mod_);
}

FFPoly FFPoly::derivative() const {
  if (c_.size() <= 1) return FFPoly({}, mod_);
  std::vector<uint64_t> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = mod_.mul(c_[i], i % mod_.p());
  return FFPoly(std::move(r), mod_);
}

FFPoly reduce_mod(const IntPoly& p, const PrimeModulus& mod) {
  std::vector<uint64_t> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), mod.p());
  return FFPoly(std::move(r), mod);
}

// ---------------------------------------------------------------------------
// Internal kernels.  Polynomials are coefficient vectors in a "domain": the
// Montgomery domain for odd p, plain residues for p = 2.  Kernels keep the
// vectors normalized (no leading zeros).
// ---------------------------------------------------------------------------

namespace {

using V = std::vector<uint64_t>;

struct MontDomain {
  const PrimeModulus& M;
  uint64_t p() const { return M.p(); }
  uint64_t one() const { return M.mont_one(); }
  uint64_t enc(uint64_t a) const { return M.to_mont(a); }
  uint64_t dec(uint64_t a) const { return M.from_mont(a); }
  uint64_t mul(uint64_t a, uint64_t b) const { return M.mont_mul(a, b); }
  uint64_t add(uint64_t a, uint64_t b) const { return M.add(a, b); }
  uint64_t sub(uint64_t a, uint64_t b) const { return M.sub(a, b); }
};

struct PlainDomain {
  const PrimeModulus& M;
  uint64_t p() const { return M.p(); }
  uint64_t one() const { return 1 % M.p(); }
  uint64_t enc(uint64_t a) const { return a; }
  uint64_t dec(uint64_t a) const { return a; }
  uint64_t mul(uint64_t a, uint64_t b) const { return M.mul(a, b); }
  uint64_t add(uint64_t a, uint64_t b) const { return M.add(a, b); }
  uint64_t sub(uint64_t a, uint64_t b) const { return M.sub(a, b); }
};

void norm(V& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const V& a) { return static_cast<long>(a.size()) - 1; }

template <class D>
V ff_mul(const D& d, const V& a, const V& b) {
  if (a.empty() || b.empty()) return {};
  V r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = d.add(r[i + j], d.mul(a[i], b[j]));
  }
  norm(r);
  return r;
}

template <class D>
uint64_t ff_scalar_pow(const D& d, uint64_t a, uint64_t e) {
  uint64_t r = d.one();
  while (e) {
    if (e & 1) r = d.mul(r, a);
    a = d.mul(a, a);
    e >>= 1;
  }
  return r;
}

template <class D>
uint64_t ff_scalar_inv(const D& d, uint64_t a) {
  return ff_scalar_pow(d, a, d.p() - 2);
}

// Remainder of a by monic m, in place.
template <class D>
void ff_rem_monic(const D& d, V& a, const V& m) {
  long dm = deg(m);
  while (deg(a) >= dm) {
    uint64_t top = a.back();
    std::size_t shift = a.size() - m.size();
    if (top) {
      for (std::size_t j = 0; j + 1 < m.size(); ++j)
        a[shift + j] = d.sub(a[shift + j], d.mul(top, m[j]));
    }
    a.pop_back();
    norm(a);
    if (a.empty()) return;
  }
}

// Quotient and remainder by monic m.
template <class D>
std::pair<V, V> ff_divrem_monic(const D& d, V a, const V& m) {
  long dm = deg(m);
  if (deg(a) < dm) return {V{}, std::move(a)};
  V q(a.size() - m.size() + 1, 0);
  while (deg(a) >= dm) {
    uint64_t top = a.back();
    std::size_t shift = a.size() - m.size();
    q[shift] = top;
    if (top) {
      for (std::size_t j = 0; j + 1 < m.size(); ++j)
        a[shift + j] = d.sub(a[shift + j], d.mul(top, m[j]));
    }
    a.pop_back();
    norm(a);
    if (a.empty()) break;
  }
  norm(q);
  return {std::move(q), std::move(a)};
}

template <class D>
V ff_make_monic(const D& d, V a) {
  if (a.empty() || a.back() == d.one()) return a;
  uint64_t inv = ff_scalar_inv(d, a.back());
  for (auto& x : a) x = d.mul(x, inv);
  a.back() = d.one();
  return a;
}

template <class D>
V ff_gcd(const D& d, V a, V b) {
  while (!b.empty()) {
    b = ff_make_monic(d, std::move(b));
    ff_rem_monic(d, a, b);
    std::swap(a, b);
  }
  return ff_make_monic(d, std::move(a));
}

template <class D, class Bits>
V ff_powmod_bits(const D& d, V base, const V& m, const Bits& bits,
                 std::size_t nbits) {
  V r{d.one()};
  ff_rem_monic(d, base, m);
  for (std::size_t i = nbits; i-- > 0;) {
    r = ff_mul(d, r, r);
    ff_rem_monic(d, r, m);
    if (bits(i)) {
      r = ff_mul(d, r, base);
      ff_rem_monic(d, r, m);
    }
  }
  return r;
}

template <class D>
V ff_powmod(const D& d, const V& base, uint64_t e, const V& m) {
  if (deg(m) <= 0) return {};
  if (e == 0) return V{d.one()};
  std::size_t n = 0;
  for (uint64_t t = e; t; t >>= 1) ++n;
  return ff_powmod_bits(
      d, base, m, [&](std::size_t i) { return (e >> i) & 1; }, n);
}

template <class D>
V ff_powmod(const D& d, const V& base, const mpz_class& e, const V& m) {
  if (deg(m) <= 0) return {};
  if (e == 0) return V{d.one()};
  std::size_t n = mpz_sizeinbase(e.get_mpz_t(), 2);
  return ff_powmod_bits(
      d, base, m,
      [&](std::size_t i) { return mpz_tstbit(e.get_mpz_t(), i) != 0; }, n);
}

// p-th root of f when f' = 0, i.e. f(x) = g(x^p); over the prime field the
// coefficients carry over unchanged.
template <class D>
V ff_pth_root(const D& d, const V& f) {
  uint64_t p = d.p();
  V g((f.size() - 1) / p + 1, 0);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = f[j * p];
  norm(g);
  return g;
}

template <class D>
V ff_derivative(const D& d, const V& f) {
  if (f.size() <= 1) return {};
  V r(f.size() - 1);
  uint64_t k = 0;
  uint64_t kenc = d.enc(0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    // incrementally maintain enc(i mod p)
    k = (k + 1 == d.p()) ? 0 : k + 1;
    kenc = (k == 0) ? d.enc(0) : d.add(kenc, d.one());
    r[i - 1] = d.mul(f[i], kenc);
  }
  norm(r);
  return r;
}

// Squarefree decomposition of monic f: (g, multiplicity) with g monic
// squarefree, pairwise coprime, prod g^mult = f.
template <class D>
void ff_squarefree(const D& d, const V& f,
                   std::vector<std::pair<V, unsigned>>& out,
                   unsigned mult_scale) {
  if (deg(f) <= 0) return;
  V df = ff_derivative(d, f);
  if (df.empty()) {
    ff_squarefree(d, ff_pth_root(d, f), out,
                  mult_scale * static_cast<unsigned>(d.p()));
    return;
  }
  V c = ff_gcd(d, f, df);
  V w = ff_divrem_monic(d, f, c).first;
  unsigned i = 1;
  while (deg(w) > 0) {
    V y = ff_gcd(d, w, c);
    V z = ff_divrem_monic(d, w, y).first;
    if (deg(z) > 0) out.emplace_back(z, i * mult_scale);
    w = std::move(y);
    c = ff_divrem_monic(d, c, w).first;
    ++i;
  }
  if (deg(c) > 0)
    ff_squarefree(d, ff_pth_root(d, c), out,
                  mult_scale * static_cast<unsigned>(d.p()));
}

// Distinct-degree factorization of monic squarefree g: (product, k) pairs,
// ascending in k.
template <class D>
std::vector<std::pair<V, long>> ff_ddf(const D& d, V g) {
  std::vector<std::pair<V, long>> out;
  if (deg(g) <= 0) return out;
  V x{0, d.one()};
  V h = x;
  long k = 0;
  while (deg(g) >= 2 * (k + 1)) {
    ++k;
    h = ff_powmod(d, h, d.p(), g);
    V hx = h;
    // h - x
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = d.sub(hx[1], d.one());
    norm(hx);
    V sub = ff_gcd(d, g, hx);
    if (deg(sub) > 0) {
      out.emplace_back(sub, k);
      g = ff_divrem_monic(d, g, sub).first;
      ff_rem_monic(d, h, g);
    }
  }
  if (deg(g) > 0) out.emplace_back(g, deg(g));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
// of irreducibles all of degree k.
template <class D>
void ff_edd(const D& d, V g, long k, RngStream& rng, std::vector<V>& out) {
  if (deg(g) == k) {
    out.push_back(std::move(g));
    return;
  }
  uint64_t p = d.p();
  for (;;) {
    // random polynomial of degree < deg g, not constant-only
    V a(deg(g), 0);
    for (auto& c : a) c = d.enc(rng.below(p));
    norm(a);
    if (a.empty()) continue;
    V b;
    if (p == 2) {
      // trace map: a + a^2 + a^4 + ... + a^(2^(k-1))
      V t = a;
      b = a;
      for (long i = 1; i < k; ++i) {
        t = ff_mul(d, t, t);
        ff_rem_monic(d, t, g);
        b.resize(std::max(b.size(), t.size()), 0);
        for (std::size_t j = 0; j < t.size(); ++j) b[j] = d.add(b[j], t[j]);
        norm(b);
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, k);
      e = (e - 1) / 2;
      b = ff_powmod(d, a, e, g);
      if (b.empty())
        b = V{d.sub(0, d.one())};
      else
        b[0] = d.sub(b[0], d.one());
      norm(b);
    }
    if (b.empty()) continue;
    V h = ff_gcd(d, g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      V rest = ff_divrem_monic(d, g, h).first;
      ff_edd(d, std::move(h), k, rng, out);
      ff_edd(d, std::move(rest), k, rng, out);
      return;
    }
  }
}

template <class D>
std::vector<std::pair<V, unsigned>> ff_factorize(const D& d, const V& monic,
                                                 RngStream& rng) {
  std::vector<std::pair<V, unsigned>> sqf;
  ff_squarefree(d, monic, sqf, 1);
  std::vector<std::pair<V, unsigned>> factors;
  for (auto& [g, mult] : sqf) {
    for (auto& [prod, k] : ff_ddf(d, g)) {
      std::vector<V> irr;
      ff_edd(d, prod, k, rng, irr);
      for (auto& f : irr) factors.emplace_back(std::move(f), mult);
    }
  }
  return factors;
}

// Roots of a monic product of distinct linear factors.
template <class D>
void ff_linear_roots(const D& d, V g, RngStream& rng,
                     std::vector<uint64_t>& out) {
  if (deg(g) <= 0) return;
  if (deg(g) == 1) {
    out.push_back(d.dec(d.sub(0, g[0])));
    return;
  }
  uint64_t p = d.p();
  if (p == 2) {
    for (uint64_t r = 0; r < 2; ++r) {
      uint64_t acc = 0;
      for (std::size_t i = g.size(); i-- > 0;)
        acc = (acc * r + d.dec(g[i])) & 1;
      if (acc == 0) out.push_back(r);
    }
    return;
  }
  for (;;) {
    uint64_t c = d.enc(rng.below(p));
    V shifted{c, d.one()};
    V b = ff_powmod(d, shifted, (p - 1) / 2, g);
    if (b.empty())
      b = V{d.sub(0, d.one())};
    else
      b[0] = d.sub(b[0], d.one());
    norm(b);
    if (b.empty()) continue;
    V h = ff_gcd(d, g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      V rest = ff_divrem_monic(d, g, h).first;
      ff_linear_roots(d, std::move(h), rng, out);
      ff_linear_roots(d, std::move(rest), rng, out);
      return;
    }
  }
}

template <class D>
V encode(const D& d, const FFPoly& f) {
  V v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = d.enc(f.coeffs()[i]);
  return v;
}

template <class D>
FFPoly decode(const D& d, const V& v, const PrimeModulus& m) {
  std::vector<uint64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = d.dec(v[i]);
  return FFPoly(std::move(out), m);
}

template <class D>
long count_roots_impl(const D& d, const FFPoly& f) {
  if (f.degree() <= 0) return 0;
  V m = ff_make_monic(d, encode(d, f));
  V h = ff_powmod(d, V{0, d.one()}, d.p(), m);
  if (h.size() < 2) h.resize(2, 0);
  h[1] = d.sub(h[1], d.one());
  norm(h);
  V g = ff_gcd(d, m, h);
  return deg(g);
}

template <class D>
std::vector<uint64_t> roots_impl(const D& d, const FFPoly& f, RngStream& rng) {
  std::vector<uint64_t> out;
  if (f.degree() <= 0) return out;
  V m = ff_make_monic(d, encode(d, f));
  V h = ff_powmod(d, V{0, d.one()}, d.p(), m);
  if (h.size() < 2) h.resize(2, 0);
  h[1] = d.sub(h[1], d.one());
  norm(h);
  V g = ff_gcd(d, m, h);
  ff_linear_roots(d, std::move(g), rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

template <class D>
std::vector<long> degseq_impl(const D& d, const FFPoly& f, RngStream& rng) {
  std::vector<long> out;
  if (f.degree() <= 0) return out;
  V m = ff_make_monic(d, encode(d, f));
  for (auto& [g, mult] : ff_factorize(d, m, rng))
    for (unsigned i = 0; i < mult; ++i) out.push_back(deg(g));
  std::sort(out.begin(), out.end());
  return out;
}

template <class D>
FFFactorization factorize_impl(const D& d, const FFPoly& f, RngStream& rng) {
  FFFactorization out;
  out.unit = f.leading();
  V m = ff_make_monic(d, encode(d, f));
  auto factors = ff_factorize(d, m, rng);
  for (auto& [g, mult] : factors)
    out.factors.emplace_back(decode(d, g, f.modulus()), mult);
  // canonical order: by degree, then lexicographic coefficients
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.coeffs() < b.first.coeffs();
            });
  return out;
}

}  // namespace

long count_distinct_roots(const FFPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("count_distinct_roots of zero polynomial");
  if (f.modulus().has_mont())
    return count_roots_impl(MontDomain{f.modulus()}, f);
  return count_roots_impl(PlainDomain{f.modulus()}, f);
}

std::vector<uint64_t> distinct_roots(const FFPoly& f, RngStream& rng) {
  if (f.is_zero())
    throw std::invalid_argument("distinct_roots of zero polynomial");
  if (f.modulus().has_mont()) return roots_impl(MontDomain{f.modulus()}, f, rng);
  return roots_impl(PlainDomain{f.modulus()}, f, rng);
}

std::vector<long> degree_sequence(const FFPoly& f, RngStream& rng) {
  if (f.is_zero())
    throw std::invalid_argument("degree_sequence of zero polynomial");
  if (f.modulus().has_mont())
    return degseq_impl(MontDomain{f.modulus()}, f, rng);
  return degseq_impl(PlainDomain{f.modulus()}, f, rng);
}

FFFactorization factorize(const FFPoly& f, RngStream& rng) {
  if (f.is_zero()) throw std::invalid_argument("factorize of zero polynomial");
  if (f.modulus().has_mont())
    return factorize_impl(MontDomain{f.modulus()}, f, rng);
  return factorize_impl(PlainDomain{f.modulus()}, f, rng);
}

std::pair<FFPoly, FFPoly> divrem(const FFPoly& a, const FFPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const PrimeModulus& M = a.modulus();
  if (M.has_mont()) {
    MontDomain d{M};
    V bm = encode(d, b);
    uint64_t lead = bm.back();
    V bmonic = ff_make_monic(d, bm);
    auto [q, r] = ff_divrem_monic(d, encode(d, a), bmonic);
    // a = q' * bmonic + r with q' = q; for the original b, q = q' / lc(b)
    uint64_t inv = ff_scalar_inv(d, lead);
    for (auto& c : q) c = d.mul(c, inv);
    return {decode(d, q, M), decode(d, r, M)};
  }
  PlainDomain d{M};
  V bm = encode(d, b);
  uint64_t lead = bm.back();
  V bmonic = ff_make_monic(d, bm);
  auto [q, r] = ff_divrem_monic(d, encode(d, a), bmonic);
  uint64_t inv = ff_scalar_inv(d, lead);
  for (auto& c : q) c = d.mul(c, inv);
  return {decode(d, q, M), decode(d, r, M)};
}

FFPoly gcd(const FFPoly& a, const FFPoly& b) {
  const PrimeModulus& M = a.modulus();
  if (M.has_mont()) {
    MontDomain d{M};
    return decode(d, ff_gcd(d, encode(d, a), encode(d, b)), M);
  }
  PlainDomain d{M};
  return decode(d, ff_gcd(d, encode(d, a), encode(d, b)), M);
}

}  // namespace polystat

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

#ifndef POLYSTAT_INTPOLY_HPP
#define POLYSTAT_INTPOLY_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polystat {

// Polynomial over Z with arbitrary-precision coefficients, stored
// least-degree-first.  The zero polynomial has an empty coefficient vector;
// otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({1}); }
  static IntPoly x() { return IntPoly({0, 1}); }
  // c * x^k
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  mpz_class coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : mpz_class(0);
  }
  const mpz_class& leading() const;
  // Number of trailing zero coefficients (multiplicity of the root 0).
  std::size_t valuation() const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const mpz_class& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly pow(unsigned long e) const;
  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  // P(x^k)
  IntPoly inflate(unsigned long k) const;

  mpz_class content() const;       // gcd of coefficients (0 for zero poly)
  IntPoly primitive_part() const;  // P / content, sign preserved

  // Exact division; throws std::domain_error when the division is not exact.
  IntPoly divide_exact(const IntPoly& divisor) const;
  // True iff divisor divides *this in Q[x] (equivalently in Z[x] after
  // making the divisor primitive).
  bool divisible_by(const IntPoly& divisor) const;

  std::string to_string() const;  // human-readable, e.g. "x^2 - x - 1"

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

// gcd over Z[x] (primitive, positive leading coefficient), by the
// subresultant PRS.
IntPoly gcd_z(const IntPoly& a, const IntPoly& b);

// Exact resultant of two nonzero polynomials (subresultant algorithm).
mpz_class resultant(const IntPoly& p, const IntPoly& q);

// Exact discriminant, deg p >= 1.
mpz_class discriminant(const IntPoly& p);

struct MahlerDiagnostics {
  int iterations = 0;
  double worst_residual = 0;
};

struct MahlerError : std::runtime_error {
  MahlerError(const std::string& msg, MahlerDiagnostics d)
      : std::runtime_error(msg), diagnostics(d) {}
  MahlerDiagnostics diagnostics;
};

// All complex roots by Aberth-Ehrlich simultaneous iteration.  Deterministic
// start on a circle of radius equal to the Cauchy bound.  Roots at zero are
// split off exactly.  Throws MahlerError on non-convergence.
std::vector<std::complex<double>> complex_roots(const IntPoly& p,
                                                double tol = 1e-10,
                                                int max_sweeps = 600);

// M(P) = |lc| * prod_{|z|>1} |z|.
double mahler_measure(const IntPoly& p, double tol = 1e-9);

// n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic_poly(unsigned long n);

// Splits P into (Phi, Tilde): Phi is the maximal divisor that is a product
// of x-powers and cyclotomic polynomials, Tilde = P / Phi.
struct CyclotomicSplit {
  IntPoly phi;
  IntPoly tilde;
  // (n, multiplicity) for each cyclotomic divisor; n = 0 encodes the factor x.
  std::vector<std::pair<unsigned long, unsigned>> parts;
};
CyclotomicSplit cyclotomic_part(const IntPoly& p);

struct AdmissibilityParams {
  double X = 20.0;
  double kappa = 0.005;
  // The asymptotic regime wants X > 10 and kappa < 1/100; small-X and
  // large-kappa values are accepted for desk experiments.
  bool paper_regime() const { return X > 10.0 && kappa < 0.01; }
};

// R (assumed irreducible) is exceptional iff M(R) <= exp(kappa) and
// deg R <= 10 X.  Admissible is the negation.
bool is_exceptional(const IntPoly& r, const AdmissibilityParams& params);

// Returns Q with Q^k = P if such an integer polynomial exists.
std::optional<IntPoly> kth_root_poly(const IntPoly& p, unsigned long k);

// Lower-bound expression 1 + c (log log d / log d)^3, d >= 3.  The constant
// c is a configuration knob; 1/4 is a heuristic default.
double dobrowolski_floor(unsigned long d, double c = 0.25);

// Exact m-th Bell number via the Bell triangle.
mpz_class bell_number(unsigned long m);

// Outcomes of the modular-degree irreducibility certificate.
struct CertifiedIrreducible {
  std::vector<uint64_t> witness_primes;
};
struct Factored {
  IntPoly factor;
  std::string how;  // "rational-root" | "cyclotomic" | "kth-power" | "content"
};
struct UnknownVerdict {
  std::vector<long> surviving_degrees;  // proper degrees that survived
  std::vector<uint64_t> primes_used;
};
using IrreducibilityVerdict =
    std::variant<CertifiedIrreducible, Factored, UnknownVerdict>;

struct NonSquarefreeError : std::invalid_argument {
  NonSquarefreeError(const std::string& msg, IntPoly rep)
      : std::invalid_argument(msg), repeated(std::move(rep)) {}
  IntPoly repeated;
};

// Sound-but-incomplete certificate: intersects achievable factor-degree sets
// across good primes; {0, d} certifies irreducibility.  Rejects
// non-squarefree input (NonSquarefreeError carries the repeated factor).
IrreducibilityVerdict irreducibility_certificate(const IntPoly& p,
                                                 unsigned prime_budget,
                                                 uint64_t seed);

// Euler phi by trial-division factorization (helper shared with the sieve
// and walks modules).
unsigned long euler_phi(unsigned long n);

}  // namespace polystat

#endif  // POLYSTAT_INTPOLY_HPP

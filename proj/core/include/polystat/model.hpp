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

#ifndef POLYSTAT_MODEL_HPP
#define POLYSTAT_MODEL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "polystat/intpoly.hpp"
#include "polystat/rng.hpp"

namespace polystat {

// Finite probability law on Z.  Probabilities are exact rationals summing to
// one, so downstream exact dynamic programs can convert a law to integer
// step-counts over a common denominator.
class CoefficientLaw {
 public:
  CoefficientLaw(std::vector<long> support, std::vector<mpq_class> probs);

  static CoefficientLaw point_mass(long v);
  static CoefficientLaw uniform(std::vector<long> support);
  static CoefficientLaw rademacher() { return uniform({-1, 1}); }
  static CoefficientLaw zero_one() { return uniform({0, 1}); }

  const std::vector<long>& support() const { return support_; }
  const std::vector<mpq_class>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }
  long min_value() const { return support_.front(); }
  long max_value() const { return support_.back(); }
  bool excludes_zero() const;

  // Common denominator D and integer weights w_i with sum w_i = D.
  mpz_class common_denominator() const;
  std::vector<mpz_class> integer_weights() const;

  // Exact draw using integer thresholds over the common denominator.  The
  // denominator must fit in 64 bits (all desk-scale laws qualify).
  long sample(RngStream& rng) const;

 private:
  std::vector<long> support_;
  std::vector<mpq_class> probs_;
  uint64_t den64_ = 0;               // common denominator when it fits u64
  std::vector<uint64_t> cum64_;      // cumulative integer weights
};

// sum mu(x)^2, exact.
mpq_class collision_norm(const CoefficientLaw& mu);

// max_x mu(x), exact.
mpq_class sup_norm(const CoefficientLaw& mu);

// sum mu(a) exp(2 pi i a t).
std::complex<double> law_fourier(const CoefficientLaw& mu, double t);

// Random polynomial model A_d x^d + ... + A_1 x + A_0 with i.i.d. middle
// coefficients.
struct PolynomialModel {
  unsigned degree;
  CoefficientLaw law_constant;
  CoefficientLaw law_middle;
  CoefficientLaw law_leading;
  std::string name;

  const CoefficientLaw& law_for_step(unsigned j) const {
    if (j == 0) return law_constant;
    if (j == degree) return law_leading;
    return law_middle;
  }
  long coefficient_bound() const;
};

// Presets addressable by name from the CLI.
PolynomialModel zero_one_monic(unsigned d);
PolynomialModel uniform_interval_model(unsigned d, long L);
PolynomialModel rademacher_model(unsigned d);
PolynomialModel custom_model(unsigned d, const CoefficientLaw& mu);

// Named lookup: "zero_one_monic", "uniform_interval(L)", "rademacher".
PolynomialModel model_by_name(const std::string& name, unsigned d);

IntPoly sample_polynomial(const PolynomialModel& model, RngStream& rng);

}  // namespace polystat

#endif  // POLYSTAT_MODEL_HPP

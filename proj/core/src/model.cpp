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

#include "polystat/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polystat {

CoefficientLaw::CoefficientLaw(std::vector<long> support,
                               std::vector<mpq_class> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.size() != probs_.size() || support_.empty())
    throw std::invalid_argument("law: support/probability size mismatch");
  // sort by support value, keep probabilities aligned
  std::vector<std::size_t> idx(support_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return support_[a] < support_[b]; });
  std::vector<long> s(support_.size());
  std::vector<mpq_class> p(probs_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    s[i] = support_[idx[i]];
    p[i] = probs_[idx[i]];
    p[i].canonicalize();
  }
  support_ = std::move(s);
  probs_ = std::move(p);
  for (std::size_t i = 1; i < support_.size(); ++i)
    if (support_[i] == support_[i - 1])
      throw std::invalid_argument("law: duplicate support entry");
  mpq_class total = 0;
  for (const auto& q : probs_) {
    if (q <= 0) throw std::invalid_argument("law: probabilities must be > 0");
    total += q;
  }
  if (total != 1) throw std::invalid_argument("law: probabilities must sum to 1");

  mpz_class den = common_denominator();
  if (mpz_sizeinbase(den.get_mpz_t(), 2) <= 63) {
    den64_ = den.get_ui();
    uint64_t acc = 0;
    for (const auto& w : integer_weights()) {
      acc += w.get_ui();
      cum64_.push_back(acc);
    }
  }
}

CoefficientLaw CoefficientLaw::point_mass(long v) {
  return CoefficientLaw({v}, {mpq_class(1)});
}

CoefficientLaw CoefficientLaw::uniform(std::vector<long> support) {
  std::size_t n = support.size();
  return CoefficientLaw(std::move(support),
                        std::vector<mpq_class>(n, mpq_class(1, n)));
}

bool CoefficientLaw::excludes_zero() const {
  return !std::binary_search(support_.begin(), support_.end(), 0L);
}

mpz_class CoefficientLaw::common_denominator() const {
  mpz_class den = 1;
  for (const auto& q : probs_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  return den;
}

std::vector<mpz_class> CoefficientLaw::integer_weights() const {
  mpz_class den = common_denominator();
  std::vector<mpz_class> w(probs_.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = probs_[i].get_num() * (den / probs_[i].get_den());
  return w;
}

long CoefficientLaw::sample(RngStream& rng) const {
  if (den64_ == 0)
    throw std::runtime_error("law denominator exceeds 64 bits; cannot sample");
  uint64_t u = rng.below(den64_);
  std::size_t i =
      std::upper_bound(cum64_.begin(), cum64_.end(), u) - cum64_.begin();
  return support_[i];
}

mpq_class collision_norm(const CoefficientLaw& mu) {
  mpq_class s = 0;
  for (const auto& q : mu.probs()) s += q * q;
  return s;
}

mpq_class sup_norm(const CoefficientLaw& mu) {
  mpq_class m = 0;
  for (const auto& q : mu.probs()) m = std::max(m, q);
  return m;
}

std::complex<double> law_fourier(const CoefficientLaw& mu, double t) {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double phase = 2.0 * M_PI * static_cast<double>(mu.support()[i]) * t;
    acc += mu.probs()[i].get_d() * std::complex<double>(std::cos(phase),
                                                        std::sin(phase));
  }
  return acc;
}

long PolynomialModel::coefficient_bound() const {
  long h = 0;
  for (const CoefficientLaw* law : {&law_constant, &law_middle, &law_leading})
    h = std::max({h, std::labs(law->min_value()), std::labs(law->max_value())});
  return h;
}

PolynomialModel zero_one_monic(unsigned d) {
  if (d < 2) throw std::invalid_argument("model degree must be >= 2");
  return {d, CoefficientLaw::point_mass(1), CoefficientLaw::zero_one(),
          CoefficientLaw::point_mass(1), "zero_one_monic"};
}

PolynomialModel uniform_interval_model(unsigned d, long L) {
  if (d < 2) throw std::invalid_argument("model degree must be >= 2");
  if (L < 1) throw std::invalid_argument("uniform_interval needs L >= 1");
  std::vector<long> sup(L);
  std::iota(sup.begin(), sup.end(), 1);
  CoefficientLaw mu = CoefficientLaw::uniform(sup);
  return {d, mu, mu, mu, "uniform_interval(" + std::to_string(L) + ")"};
}

PolynomialModel rademacher_model(unsigned d) {
  if (d < 2) throw std::invalid_argument("model degree must be >= 2");
  CoefficientLaw mu = CoefficientLaw::rademacher();
  return {d, mu, mu, mu, "rademacher"};
}

PolynomialModel custom_model(unsigned d, const CoefficientLaw& mu) {
  if (d < 2) throw std::invalid_argument("model degree must be >= 2");
  return {d, mu, mu, mu, "custom"};
}

PolynomialModel model_by_name(const std::string& name, unsigned d) {
  if (name == "zero_one_monic") return zero_one_monic(d);
  if (name == "rademacher") return rademacher_model(d);
  if (name.rfind("uniform_interval(", 0) == 0 && name.back() == ')') {
    long L = std::stol(name.substr(17, name.size() - 18));
    return uniform_interval_model(d, L);
  }
  throw std::invalid_argument("unknown model preset: " + name);
}

IntPoly sample_polynomial(const PolynomialModel& model, RngStream& rng) {
  std::vector<mpz_class> c(model.degree + 1);
  for (unsigned j = 0; j <= model.degree; ++j)
    c[j] = model.law_for_step(j).sample(rng);
  return IntPoly(std::move(c));
}

}  // namespace polystat

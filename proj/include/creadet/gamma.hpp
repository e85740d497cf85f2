// Copyright 2026 The creadet Authors
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

#pragma once

#include <cmath>
#include <limits>

#include "creadet/error.hpp"

namespace creadet::stats {

namespace detail {

inline constexpr int kGammaMaxIterations = 500;
inline constexpr double kGammaTolerance = 1e-12;

// exp(-x + a ln x - ln Gamma(a))
template <typename Scalar>
Scalar gamma_prefactor(Scalar a, Scalar x) {
  using std::exp;
  using std::lgamma;
  using std::log;
  return exp(-x + a * log(x) - lgamma(a));
}

// Lower regularized gamma P(a, x) by its power series; converges fast for x < a + 1.
template <typename Scalar>
Scalar gamma_p_series(Scalar a, Scalar x) {
  using std::abs;
  Scalar ap = a;
  Scalar term = Scalar(1) / a;
  Scalar sum = term;
  for (int n = 0; n < kGammaMaxIterations; ++n) {
    ap += Scalar(1);
    term *= x / ap;
    sum += term;
    if (abs(term) < abs(sum) * Scalar(kGammaTolerance)) {
      return sum * gamma_prefactor(a, x);
    }
  }
  throw ConvergenceError("incomplete gamma series did not converge");
}

// Upper regularized gamma Q(a, x) by continued fraction (modified Lentz).
template <typename Scalar>
Scalar gamma_q_continued_fraction(Scalar a, Scalar x) {
  using std::abs;
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  Scalar b = x + Scalar(1) - a;
  Scalar c = Scalar(1) / tiny;
  Scalar d = Scalar(1) / b;
  Scalar h = d;
  for (int i = 1; i <= kGammaMaxIterations; ++i) {
    const Scalar an = -Scalar(i) * (Scalar(i) - a);
    b += Scalar(2);
    d = an * d + b;
    if (abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    d = Scalar(1) / d;
    const Scalar delta = d * c;
    h *= delta;
    if (abs(delta - Scalar(1)) < Scalar(kGammaTolerance)) {
      return gamma_prefactor(a, x) * h;
    }
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

}  // namespace detail

/// Regularized upper incomplete gamma function Q(a, x) = Gamma(a, x) / Gamma(a).
template <typename Scalar>
Scalar regularized_gamma_q(Scalar a, Scalar x) {
  if (!(a > Scalar(0))) throw DomainError("regularized_gamma_q: a must be positive");
  if (!(x >= Scalar(0))) throw DomainError("regularized_gamma_q: x must be nonnegative");
  if (x == Scalar(0)) return Scalar(1);
  if (std::isinf(x)) return Scalar(0);
  Scalar q = x < a + Scalar(1) ? Scalar(1) - detail::gamma_p_series(a, x)
                               : detail::gamma_q_continued_fraction(a, x);
  if (q < Scalar(0)) q = Scalar(0);
  if (q > Scalar(1)) q = Scalar(1);
  return q;
}

/// Probability that a chi-squared variable with `df` degrees of freedom
/// exceeds `chi2`, i.e. Q(df/2, chi2/2).
template <typename Scalar>
Scalar chi2_survival(Scalar chi2, int df) {
  if (!(chi2 >= Scalar(0))) throw DomainError("chi2_survival: statistic must be nonnegative");
  if (df < 1) throw DomainError("chi2_survival: degrees of freedom must be >= 1");
  return regularized_gamma_q(Scalar(df) / Scalar(2), chi2 / Scalar(2));
}

}  // namespace creadet::stats

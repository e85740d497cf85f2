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

// Two-column contingency statistics on per-bin count vectors.
//
// Counts are real-valued so that smoothed (fractional) counts are admitted.
// All logarithms are natural, and 0 ln 0 is taken as 0 everywhere. Every
// function accepts any Eigen column-vector expression; the scalar type is
// taken from the expression.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "creadet/error.hpp"
#include "creadet/gamma.hpp"

namespace creadet::stats {

template <typename Scalar>
using CountVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class TestKind { chi2, g };

template <typename Scalar>
struct TestResult {
  Scalar statistic{};
  int df = 1;
  Scalar p_value{};
  bool reject_null = false;
  TestKind kind = TestKind::g;
};

namespace detail {

inline constexpr double kNormalizationTolerance = 1e-9;

template <typename Scalar>
Scalar xlogx(Scalar x) {
  using std::log;
  return x > Scalar(0) ? x * log(x) : Scalar(0);
}

template <typename Derived>
void check_counts(const Eigen::MatrixBase<Derived>& v, const char* who) {
  using std::isfinite;
  if (v.size() < 1) throw DomainError(std::string(who) + ": empty count vector");
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v(i) >= 0) || !isfinite(v(i))) {
      throw DomainError(std::string(who) + ": entry " + std::to_string(i) +
                        " is negative or not finite");
    }
  }
}

template <typename Derived>
void check_distribution(const Eigen::MatrixBase<Derived>& v, const char* who) {
  using std::abs;
  check_counts(v, who);
  if (abs(v.sum() - 1) > kNormalizationTolerance) {
    throw DomainError(std::string(who) + ": distribution does not sum to 1");
  }
}

template <typename DerivedR, typename DerivedS>
void check_table(const Eigen::MatrixBase<DerivedR>& r, const Eigen::MatrixBase<DerivedS>& s,
                 const char* who) {
  check_counts(r, who);
  check_counts(s, who);
  if (r.size() != s.size()) throw DomainError(std::string(who) + ": length mismatch");
  if (!(r.sum() > 0) || !(s.sum() > 0)) {
    throw DomainError(std::string(who) + ": each dataset needs at least one positive count");
  }
}

}  // namespace detail

/// Shannon entropy -sum x ln x of a normalized distribution, in nats.
template <typename Derived>
typename Derived::Scalar entropy(const Eigen::MatrixBase<Derived>& dist) {
  using Scalar = typename Derived::Scalar;
  detail::check_distribution(dist, "entropy");
  Scalar h(0);
  for (Eigen::Index i = 0; i < dist.size(); ++i) h -= detail::xlogx(Scalar(dist(i)));
  return std::max(h, Scalar(0));
}

/// KL(p || q) in nats. Throws InfiniteEvidenceError where q vanishes on the
/// support of p.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar kl_divergence(const Eigen::MatrixBase<DerivedP>& p,
                                        const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  using std::log;
  detail::check_distribution(p, "kl_divergence");
  detail::check_distribution(q, "kl_divergence");
  if (p.size() != q.size()) throw DomainError("kl_divergence: length mismatch");
  Scalar d(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) <= 0) continue;
    if (q(i) <= 0) {
      throw InfiniteEvidenceError("kl_divergence: q is zero on the support of p at bin " +
                                  std::to_string(i));
    }
    d += p(i) * log(p(i) / q(i));
  }
  return d;
}

/// Two-way log likelihood ratio L between two histograms: evidence that R
/// and S come from different multinomials rather than one pooled multinomial.
/// Bins occupied in only one dataset contribute their exact finite terms.
/// The result lies in [0, (R+S) ln 2].
template <typename DerivedR, typename DerivedS>
typename DerivedR::Scalar two_way_L(const Eigen::MatrixBase<DerivedR>& r,
                                    const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedR::Scalar;
  using std::log;
  detail::check_table(r, s, "two_way_L");
  const Scalar R = r.sum();
  const Scalar S = s.sum();
  const Scalar T = R + S;
  Scalar L(0);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const Scalar ri = r(i);
    const Scalar si = s(i);
    const Scalar pooled = ri + si;
    if (ri > 0) L += ri * log((ri * T) / (R * pooled));
    if (si > 0) L += si * log((si * T) / (S * pooled));
  }
  return std::max(L, Scalar(0));
}

/// L = -[R H(r) + S H(s) - (R+S) H(p)], with H the entropy of each
/// normalized histogram and p the pooled distribution.
template <typename DerivedR, typename DerivedS>
typename DerivedR::Scalar two_way_L_entropy_form(const Eigen::MatrixBase<DerivedR>& r,
                                                 const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedR::Scalar;
  detail::check_table(r, s, "two_way_L_entropy_form");
  const Scalar R = r.sum();
  const Scalar S = s.sum();
  const CountVector<Scalar> pooled = (r + s) / (R + S);
  const Scalar h_r = entropy(r / R);
  const Scalar h_s = entropy(s / S);
  const Scalar h_p = entropy(pooled);
  return -(R * h_r + S * h_s - (R + S) * h_p);
}

/// L = R KL(r || p) + S KL(s || p).
template <typename DerivedR, typename DerivedS>
typename DerivedR::Scalar two_way_L_kl_form(const Eigen::MatrixBase<DerivedR>& r,
                                            const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedR::Scalar;
  detail::check_table(r, s, "two_way_L_kl_form");
  const Scalar R = r.sum();
  const Scalar S = s.sum();
  const CountVector<Scalar> pooled = (r + s) / (R + S);
  return R * kl_divergence(r / R, pooled) + S * kl_divergence(s / S, pooled);
}

/// One-way log likelihood ratio sum_i F_i ln(r_i / s_i) of binned data under
/// two fixed hypotheses. Positive values favour `h_r`.
template <typename DerivedF, typename DerivedR, typename DerivedS>
typename DerivedF::Scalar one_way_L(const Eigen::MatrixBase<DerivedF>& data,
                                    const Eigen::MatrixBase<DerivedR>& h_r,
                                    const Eigen::MatrixBase<DerivedS>& h_s) {
  using Scalar = typename DerivedF::Scalar;
  using std::log;
  detail::check_counts(data, "one_way_L");
  detail::check_distribution(h_r, "one_way_L");
  detail::check_distribution(h_s, "one_way_L");
  if (data.size() != h_r.size() || data.size() != h_s.size()) {
    throw DomainError("one_way_L: length mismatch");
  }
  Scalar L(0);
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    if (data(i) <= 0) continue;
    if (h_r(i) <= 0 || h_s(i) <= 0) {
      throw InfiniteEvidenceError("one_way_L: hypothesis assigns zero probability to occupied bin " +
                                  std::to_string(i));
    }
    L += data(i) * log(h_r(i) / h_s(i));
  }
  return L;
}

/// Expected counts under the pooled (null) hypothesis:
/// E_R(i) = R (R_i + S_i) / (R + S), E_S(i) = S (R_i + S_i) / (R + S).
template <typename DerivedR, typename DerivedS>
std::pair<CountVector<typename DerivedR::Scalar>, CountVector<typename DerivedR::Scalar>>
expected_counts(const Eigen::MatrixBase<DerivedR>& r, const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedR::Scalar;
  detail::check_table(r, s, "expected_counts");
  const Scalar R = r.sum();
  const Scalar S = s.sum();
  const CountVector<Scalar> pooled = (r + s) / (R + S);
  return {R * pooled, S * pooled};
}

/// Pearson statistic sum (O - E)^2 / E. Bins with O = E = 0 are skipped.
template <typename DerivedO, typename DerivedE>
typename DerivedO::Scalar chi2_statistic(const Eigen::MatrixBase<DerivedO>& observed,
                                         const Eigen::MatrixBase<DerivedE>& expected) {
  using Scalar = typename DerivedO::Scalar;
  detail::check_counts(observed, "chi2_statistic");
  detail::check_counts(expected, "chi2_statistic");
  if (observed.size() != expected.size()) throw DomainError("chi2_statistic: length mismatch");
  Scalar chi2(0);
  for (Eigen::Index i = 0; i < observed.size(); ++i) {
    if (expected(i) <= 0) {
      if (observed(i) > 0) {
        throw InfiniteEvidenceError("chi2_statistic: zero expected count on occupied bin " +
                                    std::to_string(i));
      }
      continue;
    }
    const Scalar d = observed(i) - expected(i);
    chi2 += d * d / expected(i);
  }
  return chi2;
}

/// Two-column chi-squared in the compact form
/// sum_i (sqrt(S/R) R_i - sqrt(R/S) S_i)^2 / (R_i + S_i).
template <typename DerivedR, typename DerivedS>
typename DerivedR::Scalar chi2_two_way(const Eigen::MatrixBase<DerivedR>& r,
                                       const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedR::Scalar;
  using std::sqrt;
  detail::check_table(r, s, "chi2_two_way");
  const Scalar R = r.sum();
  const Scalar S = s.sum();
  const Scalar a = sqrt(S / R);
  const Scalar b = sqrt(R / S);
  Scalar chi2(0);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const Scalar pooled = r(i) + s(i);
    if (pooled <= 0) continue;
    const Scalar d = a * r(i) - b * s(i);
    chi2 += d * d / pooled;
  }
  return chi2;
}

/// One-way G statistic 2 sum O ln(O / E).
template <typename DerivedO, typename DerivedE>
typename DerivedO::Scalar g_statistic(const Eigen::MatrixBase<DerivedO>& observed,
                                      const Eigen::MatrixBase<DerivedE>& expected) {
  using Scalar = typename DerivedO::Scalar;
  using std::log;
  detail::check_counts(observed, "g_statistic");
  detail::check_counts(expected, "g_statistic");
  if (observed.size() != expected.size()) throw DomainError("g_statistic: length mismatch");
  Scalar g(0);
  for (Eigen::Index i = 0; i < observed.size(); ++i) {
    if (observed(i) <= 0) continue;
    if (expected(i) <= 0) {
      throw InfiniteEvidenceError("g_statistic: zero expected count on occupied bin " +
                                  std::to_string(i));
    }
    g += observed(i) * log(observed(i) / expected(i));
  }
  return Scalar(2) * g;
}

/// G over both columns with pooled expected counts; equals 2 two_way_L.
template <typename DerivedR, typename DerivedS>
typename DerivedR::Scalar g_two_way(const Eigen::MatrixBase<DerivedR>& r,
                                    const Eigen::MatrixBase<DerivedS>& s) {
  const auto [e_r, e_s] = expected_counts(r, s);
  return g_statistic(r, e_r) + g_statistic(s, e_s);
}

/// Number of bins in which at least one dataset has a count.
template <typename DerivedR, typename DerivedS>
int degrees_of_freedom(const Eigen::MatrixBase<DerivedR>& r, const Eigen::MatrixBase<DerivedS>& s) {
  detail::check_table(r, s, "degrees_of_freedom");
  int df = 0;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r(i) + s(i) > 0) ++df;
  }
  return df;
}

/// Fills the p-value from the chi-squared survival function and applies the
/// threshold rule: reject when chi2 > df, or when G > 2 df. A G statistic is
/// fed to the survival function unchanged.
template <typename Scalar>
TestResult<Scalar> decide(Scalar statistic, int df, TestKind kind) {
  using std::isfinite;
  if (!(statistic >= Scalar(0)) || !isfinite(statistic)) {
    throw DomainError("decide: statistic must be finite and nonnegative");
  }
  if (df < 1) throw DomainError("decide: degrees of freedom must be >= 1");
  TestResult<Scalar> result;
  result.statistic = statistic;
  result.df = df;
  result.kind = kind;
  result.p_value = chi2_survival(statistic, df);
  const Scalar threshold = kind == TestKind::g ? Scalar(2 * df) : Scalar(df);
  result.reject_null = statistic > threshold;
  return result;
}

}  // namespace creadet::stats

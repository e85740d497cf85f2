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

#include <doctest.h>

#include <cmath>

#include "creadet/gamma.hpp"

using namespace creadet;
using namespace creadet::stats;

TEST_CASE("chi2_survival examples") {
  CHECK(chi2_survival(0.0, 1) == 1.0);
  CHECK(chi2_survival(4.605170, 2) == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(chi2_survival(1e6, 1) < 1e-12);
  CHECK(chi2_survival(std::numeric_limits<double>::infinity(), 3) == 0.0);
}

TEST_CASE("chi2_survival matches known quantiles") {
  // textbook 5% critical values
  CHECK(chi2_survival(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi2_survival(11.070497693516351, 5) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi2_survival(18.307038053275146, 10) == doctest::Approx(0.05).epsilon(1e-9));
  // df = 1: Q(1/2, x/2) = erfc(sqrt(x/2)), checked on both sides of the series/fraction switch
  for (double x : {0.1, 0.5, 1.0, 2.9, 3.1, 10.0, 40.0}) {
    CHECK(chi2_survival(x, 1) == doctest::Approx(std::erfc(std::sqrt(x / 2))).epsilon(1e-10));
  }
}

TEST_CASE("property: closed form at two degrees of freedom and monotonicity") {
  for (int i = 0; i <= 500; ++i) {
    const double x = 50.0 * i / 500.0;
    REQUIRE(std::abs(chi2_survival(x, 2) - std::exp(-x / 2)) <= 1e-10);
  }
  for (int df = 1; df <= 10; ++df) {
    double prev = 1.0;
    for (int i = 0; i <= 400; ++i) {
      const double q = chi2_survival(0.25 * i, df);
      REQUIRE(q >= 0.0);
      REQUIRE(q <= prev);
      prev = q;
    }
  }
}

TEST_CASE("chi2_survival rejects invalid input") {
  CHECK_THROWS_AS(chi2_survival(-1.0, 2), DomainError);
  CHECK_THROWS_AS(chi2_survival(1.0, 0), DomainError);
  CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(chi2_survival(std::nan(""), 2), DomainError);
}

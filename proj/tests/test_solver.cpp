// Copyright 2026 The levyfft Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "levyfft/errors.hpp"
#include "levyfft/models.hpp"
#include "levyfft/oracle.hpp"
#include "levyfft/solver.hpp"

namespace levyfft {
namespace {

// ---- model closed forms (mpmath, 30 digits) ----

TEST(Models, ExactDensitiesMatchReference) {
  EXPECT_NEAR(exact_vg(3.0, 1.0), 0.024893534183931971489671207825, 1e-16);
  EXPECT_NEAR(exact_vg(1.5, 2.0), 0.139456350092768643083300294228, 1e-15);
  EXPECT_NEAR(exact_vg(0.7, 0.3), 0.156645828871212108734369560149, 1e-15);
  EXPECT_NEAR(exact_nig(0.0, 1.0), 0.520803829991670046415395693131, 1e-15);
  EXPECT_NEAR(exact_nig(2.0, 3.0), 0.104625400529611713880683701677, 1e-15);
  EXPECT_NEAR(exact_nig(0.0, 50.0) * std::sqrt(2 * kPi * 50.0), 1.00745392308854195097094721298,
              1e-13);
}

TEST(Models, VgAtTimeOneIsLaplace) {
  for (double x : {-4.0, -0.3, 0.0, 0.01, 2.0}) {
    EXPECT_NEAR(exact_vg(x, 1.0), 0.5 * std::exp(-std::fabs(x)), 1e-15) << x;
  }
}

TEST(Models, VgOriginLimit) {
  EXPECT_NEAR(exact_vg(0.0, 2.0), exact_vg(1e-7, 2.0), 1e-7);
  EXPECT_TRUE(std::isinf(exact_vg(0.0, 0.5)));
  EXPECT_TRUE(std::isinf(exact_vg(0.0, 0.3)));
  EXPECT_THROW(exact_vg(1.0, 0.0), std::domain_error);
  EXPECT_THROW(exact_nig(1.0, -1.0), std::domain_error);
}

TEST(Models, DensitiesAreEven) {
  for (double x : {0.2, 1.0, 4.5}) {
    EXPECT_EQ(exact_vg(x, 1.7), exact_vg(-x, 1.7));
    EXPECT_EQ(exact_nig(x, 1.7), exact_nig(-x, 1.7));
  }
}

TEST(Models, DensitiesIntegrateToOne) {
  for (double t : {1.0, 2.0}) {
    const auto vg = [t](double x) { return exact_vg(x, t); };
    const auto nig = [t](double x) { return exact_nig(x, t); };
    EXPECT_NEAR(2 * (oracle::integrate(vg, 1e-12, 1.0) + oracle::integrate(vg, 1.0, 60.0)), 1.0,
                1e-9);
    EXPECT_NEAR(2 * (oracle::integrate(nig, 0.0, 5.0) + oracle::integrate(nig, 5.0, 200.0)), 1.0,
                1e-9);
  }
}

TEST(Models, ClosedFormExponentsMatchQuadrature) {
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    for (double w : {0.1, 0.5, 1.0, 2.0, 5.0, 12.0}) {
      EXPECT_NEAR((*m.exact_exponent)(w), oracle::levy_exponent(m.mu, m.gamma, w), 1e-9)
          << m.name << " w = " << w;
    }
  }
}

TEST(Models, MuGuards) {
  EXPECT_EQ(nig_mu(0.0), 1.0 / kPi);
  EXPECT_NEAR(nig_mu(1e-8), 1.0 / kPi, 1e-12);
  EXPECT_EQ(nig_mu(800.0), 0.0);
  EXPECT_EQ(vg_mu(800.0), 0.0);
  EXPECT_EQ(vg_model().i_offset, 2);
  EXPECT_EQ(nig_model().i_offset, 3);
}

// ---- grid ----

TEST(GridSpec, Sizes) {
  const auto g = GridSpec::for_level(nig_model(), 11, 2.0, 5.0);
  EXPECT_EQ(g.n, 256);
  EXPECT_EQ(g.n_gamma, 1024);
  EXPECT_EQ(g.m, 2048);
  EXPECT_DOUBLE_EQ(g.h_hat, 5.0 / 256);
  const auto v = GridSpec::for_level(vg_model(), 11, 2.0, 5.0);
  EXPECT_EQ(v.n, 512);
  EXPECT_EQ(v.n_gamma, 1024);
  EXPECT_THROW(GridSpec::make(1, 48, 2.0, 5.0), LengthError);
  EXPECT_THROW(GridSpec::make(3, 64, 2.0, 5.0), std::invalid_argument);
  EXPECT_THROW(GridSpec::for_level(vg_model(), 2, 2.0, 5.0), std::invalid_argument);
}

// ---- invariants of the computed exponent and density ----

class PipelineInvariants : public ::testing::TestWithParam<int> {
 protected:
  static LevyModel model_for(int which) { return which == 0 ? vg_model() : nig_model(); }
};

TEST_P(PipelineInvariants, ExponentRealEvenNonpositive) {
  const LevyModel m = model_for(GetParam());
  for (int level : {8, 10, 12}) {
    const GridSpec g = GridSpec::for_level(m, level, 2.0, 5.0);
    const auto ex = characteristic_exponent(m, g);
    ASSERT_EQ(ex.g.size(), static_cast<std::size_t>(2 * g.n));
    const auto at = [&](std::int64_t l) { return ex.g[static_cast<std::size_t>(l + g.n - 1)]; };
    EXPECT_EQ(at(0), 0.0);
    for (std::int64_t l = -g.n + 1; l <= g.n; ++l) {
      EXPECT_TRUE(std::isfinite(at(l)));
      EXPECT_LE(at(l), 1e-6) << m.name << " l = " << l;
      if (l > -g.n + 1 && l < g.n) {
        EXPECT_EQ(at(l), at(-l));
      }
    }
  }
}

TEST_P(PipelineInvariants, SolutionSymmetricAndMassConsistent) {
  const LevyModel m = model_for(GetParam());
  for (int level : {10, 12}) {
    const GridSpec g = GridSpec::for_level(m, level, 2.0, 5.0);
    ExponentCache cache;
    for (double t : {1.0, 2.0, 3.0}) {
      const SolveResult r = solve(m, g, t, {}, &cache);
      const std::int64_t n = g.n;
      double pmax = 0;
      for (double v : r.p) pmax = std::max(pmax, std::fabs(v));
      for (std::int64_t k = 1; k < n; ++k) {
        const double a = r.p[static_cast<std::size_t>(k + n - 1)];
        const double b = r.p[static_cast<std::size_t>(-k + n - 1)];
        EXPECT_LE(std::fabs(a - b), 1e-9 * std::max(std::fabs(a), 1e-3 * pmax))
            << m.name << " t = " << t << " k = " << k;
      }
      if (g.n >= 256) {
        // Trapezoid over [-x_u, x_u]; x = -x_u is the mirror of the last node.
        double num = 0, ex = 0;
        for (std::int64_t k = -n; k <= n; ++k) {
          const auto i = static_cast<std::size_t>((k == -n ? n : k) + n - 1);
          const double wgt = (k == -n || k == n) ? 0.5 : 1.0;
          num += wgt * r.p[i];
          ex += wgt * (*r.p_exact)[i];
        }
        EXPECT_NEAR(num * g.h_hat, ex * g.h_hat, 1e-3) << m.name << " t = " << t;
      }
    }
    EXPECT_EQ(cache.size(), 1u);
  }
}

INSTANTIATE_TEST_SUITE_P(Models, PipelineInvariants, ::testing::Values(0, 1),
                         [](const auto& info) { return info.param == 0 ? "vg" : "nig"; });

TEST(Solver, VgErrorDoesNotGrowWithTime) {
  const LevyModel m = vg_model();
  for (int level : {9, 11}) {
    const GridSpec g = GridSpec::for_level(m, level, 2.0, 5.0);
    ExponentCache cache;
    const double e1 = solve(m, g, 1.0, {}, &cache).max_abs_err;
    const double e2 = solve(m, g, 2.0, {}, &cache).max_abs_err;
    const double e3 = solve(m, g, 3.0, {}, &cache).max_abs_err;
    // Window errors stay at the same order across t (at most a small factor apart).
    EXPECT_LT(e2, 10 * e1 + 1e-14) << level;
    EXPECT_LT(e3, 10 * e1 + 1e-14) << level;
  }
}

TEST(Solver, Deterministic) {
  const LevyModel m = nig_model();
  const GridSpec g = GridSpec::for_level(m, 10, 2.0, 5.0);
  const auto a = solve(m, g, 2.0);
  const auto b = solve(m, g, 2.0);
  ASSERT_EQ(a.p.size(), b.p.size());
  for (std::size_t i = 0; i < a.p.size(); ++i) EXPECT_EQ(a.p[i], b.p[i]);
}

TEST(Solver, CacheIsSharedAcrossThreads) {
  const LevyModel m = vg_model();
  const GridSpec g = GridSpec::for_level(m, 9, 2.0, 5.0);
  ExponentCache cache;
  const auto first = cache.get(m, g);
  std::vector<std::thread> pool;
  std::vector<const ExponentSamples*> seen(4);
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = cache.get(m, g).get(); });
  }
  for (auto& th : pool) th.join();
  for (const auto* p : seen) EXPECT_EQ(p, first.get());
  EXPECT_EQ(cache.size(), 1u);
}

TEST(Solver, ExactExponentBypassIsSharp) {
  for (const LevyModel& m : {vg_model(), nig_model()}) {
    const GridSpec g = GridSpec::for_level(m, 13, 2.0, 5.0);
    const auto r = density_from_exponent(m, g, exact_exponent_samples(m, g), 1.0);
    EXPECT_LT(r.max_abs_err, 1e-13) << m.name;
  }
}

TEST(Solver, ErrorsAreTaggedByStage) {
  LevyModel bad = vg_model();
  bad.name = "bad";
  bad.mu = [](double y) { return y > 2.0 ? std::numeric_limits<double>::infinity() : 1.0; };
  const GridSpec g = GridSpec::for_level(bad, 9, 2.0, 5.0);
  try {
    solve(bad, g, 1.0);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "step1/de_ft");
    EXPECT_NE(std::string(e.what()).find("y_j"), std::string::npos) << e.what();
  }
  EXPECT_THROW(solve(vg_model(), GridSpec::for_level(nig_model(), 9, 2.0, 5.0), 1.0),
               std::invalid_argument);
  EXPECT_THROW(solve(vg_model(), GridSpec::for_level(vg_model(), 9, 2.0, 5.0), 0.0),
               std::invalid_argument);
}

TEST(Solver, ResultCarriesGridAndParameters) {
  const LevyModel m = vg_model();
  const GridSpec g = GridSpec::for_level(m, 9, 2.0, 5.0);
  const auto r = solve(m, g, 1.0);
  ASSERT_EQ(r.x.size(), 256u);
  EXPECT_DOUBLE_EQ(r.x.front(), -127 * 5.0 / 128);
  EXPECT_DOUBLE_EQ(r.x.back(), 5.0);
  ASSERT_TRUE(r.p_exact && r.abs_err);
  bool has_h = false;
  for (const auto& [k, v] : r.params) has_h = has_h || (k == "h_tilde" && v == g.h_tilde());
  EXPECT_TRUE(has_h);
  EXPECT_GE(r.timings.total, r.timings.step3);
  EXPECT_LT(r.max_imag, 1e-12);
}

}  // namespace
}  // namespace levyfft

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

// Minimal use of the library: VG and NIG densities at a few times, printed
// next to their closed forms.

#include <cmath>
#include <cstdio>

#include "levyfft/models.hpp"
#include "levyfft/solver.hpp"

int main() {
  using namespace levyfft;
  for (const LevyModel& model : {vg_model(), nig_model()}) {
    // i = 11 in the N = 2^(i - i_gamma) convention.
    const GridSpec grid = GridSpec::for_level(model, 11, 2.0, 5.0);
    ExponentCache cache;  // G is computed once and shared by all t
    for (double t : {1.0, 2.0, 3.0}) {
      const SolveResult r = solve(model, grid, t, {}, &cache);
      std::printf("%s  t = %g  N = %lld  max |error| on 2 <= |x| <= 5: %.2e\n", model.name.c_str(),
                  t, static_cast<long long>(grid.n), r.max_abs_err);
      for (std::size_t i = 0; i < r.x.size(); i += r.x.size() / 8) {
        std::printf("    x = %8.4f  p = %.12f  exact = %.12f\n", r.x[i], r.p[i], (*r.p_exact)[i]);
      }
    }
  }
  return 0;
}

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

// levyfft: solve, converge, bench and selftest front end.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "levyfft/cli/commands.hpp"
#include "levyfft/cli/config.hpp"
#include "levyfft/errors.hpp"

namespace {

using levyfft::cli::Command;
using levyfft::cli::RunConfig;

struct Flags {
  std::string config, model, t, i_range, out;
  double xl = 0, xu = 0, d = 0, b = 0, eps = 0;
  int reps = 0;
};

void add_run_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key = value config file (schema = 1)");
  sub->add_option("--model", f.model, "vg | nig | custom:gamma=G,kind=exp|gauss|yk1,scale=S,weight=W");
  sub->add_option("--t", f.t, "comma-separated times, e.g. 1,2,3");
  sub->add_option("--i-range", f.i_range, "exponents i (N = 2^(i - i_gamma)): 11, 7..12 or 7,9,11");
  sub->add_option("--xl", f.xl, "inner edge of the error window");
  sub->add_option("--xu", f.xu, "outer edge of the x grid");
  sub->add_option("--d", f.d, "strip half-width for h~ (default: model value)");
  sub->add_option("--b", f.b, "NUFFT window half-width");
  sub->add_option("--eps", f.eps, "NUFFT tolerance");
  sub->add_option("--out", f.out, "output directory");
  sub->add_option("--reps", f.reps, "benchmark repetitions");
}

// File values first, then any flag given on the command line.
RunConfig resolve(CLI::App* sub, const Flags& f) {
  RunConfig c;
  if (!f.config.empty()) levyfft::cli::apply_config_file(f.config, c);
  const auto given = [&](const char* name) { return sub->count(name) > 0; };
  if (given("--model")) c.model = f.model;
  if (given("--t")) c.t_values = levyfft::cli::parse_t_list(f.t);
  if (given("--i-range")) c.exponents = levyfft::cli::parse_i_range(f.i_range);
  if (given("--xl")) c.x_l = f.xl;
  if (given("--xu")) c.x_u = f.xu;
  if (given("--d")) c.d = f.d;
  if (given("--b")) c.b = f.b;
  if (given("--eps")) c.epsilon = f.eps;
  if (given("--out")) c.output_dir = f.out;
  if (given("--reps")) c.reps = f.reps;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density of symmetric Levy processes by DE / NUFFT / sinc-Gauss / Euler FFT"};
  app.require_subcommand(1);

  Flags f;
  auto* solve = app.add_subcommand("solve", "write p(x, t) tables and a manifest");
  auto* converge = app.add_subcommand("converge", "error vs grid size, with a rate fit");
  auto* bench = app.add_subcommand("bench", "median wall time per step");
  auto* selftest = app.add_subcommand("selftest", "oracle checks at small sizes");
  for (auto* sub : {solve, converge, bench}) add_run_flags(sub, f);
  double perturb = 0.0;
  selftest->add_option("--perturb-kernel", perturb, "add this to the kernel table (sensitivity check)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) {
      levyfft::cli::SelftestOptions so;
      so.kernel_perturbation = perturb;
      return levyfft::cli::cmd_selftest(std::cout, so);
    }
    if (solve->parsed()) return levyfft::cli::cmd_solve(resolve(solve, f), std::cout);
    if (converge->parsed()) return levyfft::cli::cmd_converge(resolve(converge, f), std::cout);
    if (bench->parsed()) return levyfft::cli::cmd_bench(resolve(bench, f), std::cout);
  } catch (const levyfft::cli::ConfigError& e) {
    std::cerr << "levyfft: invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const levyfft::cli::OutputError& e) {
    std::cerr << "levyfft: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "levyfft: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// Copyright 2026 The risdas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "risdas/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "risdas/baselines.hpp"
#include "risdas/channel_io.hpp"
#include "risdas/csv.hpp"
#include "risdas/das.hpp"
#include "risdas/errors.hpp"
#include "risdas/harness.hpp"

namespace risdas::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string channel_path;
  std::string out_path;
  std::vector<long long> n_values;
  long long trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> methods;
  bool no_los = false;
  long long exhaustive_limit = static_cast<long long>(kDefaultExhaustiveLimit);
  double beta_g = 1.0;
  double beta_r = 1.0;
  double beta_d = 1.0;
  double noise_power = 1.0;
  bool verify_exhaustive = false;
};

ChannelParams channel_params(const Options& o) {
  if (o.beta_g < 0.0 || o.beta_r < 0.0 || o.beta_d < 0.0)
    throw InputError("channel variances must be non-negative");
  if (!(o.noise_power > 0.0)) throw InputError("--noise-power must be positive");
  ChannelParams p;
  p.beta_g = o.beta_g;
  p.beta_r = o.beta_r;
  p.beta_d = o.beta_d;
  p.los = !o.no_los;
  p.noise_power = o.noise_power;
  return p;
}

std::size_t exhaustive_limit(const Options& o) {
  if (o.exhaustive_limit < 0) throw InputError("--exhaustive-limit must be non-negative");
  return static_cast<std::size_t>(o.exhaustive_limit);
}

ExperimentPlan make_plan(const Options& o) {
  ExperimentPlan plan;
  for (auto n : o.n_values) {
    if (n < 1) throw InputError("--n values must be at least 1, got " + std::to_string(n));
    plan.n_values.push_back(static_cast<std::size_t>(n));
  }
  if (o.trials < 1) throw InputError("--trials must be at least 1");
  plan.trials = static_cast<std::size_t>(o.trials);
  plan.base_seed = o.seed;
  plan.methods.clear();
  for (const auto& m : o.methods) plan.methods.push_back(parse_method(m));
  plan.channel_params = channel_params(o);
  plan.exhaustive_limit = exhaustive_limit(o);
  plan.validate();
  return plan;
}


int cmd_solve(const Options& o, std::ostream& out) {
  const ChannelRealization ch = read_channel_file(o.channel_path);
  ch.validate();
  const DasSolution sol = das_solve(ch);

  out << "n: " << ch.size() << '\n';
  out << "w: " << sol.config.to_string() << '\n';
  std::string theta;
  for (double p : sol.config.phases()) {
    if (!theta.empty()) theta += ' ';
    theta += csv::format_double(p);
  }
  out << "theta_rad: " << theta << '\n';
  out << "power: " << csv::format_double(sol.power) << '\n';
  out << "snr_db: " << csv::format_double(snr_db(sol.power, ch.noise_power)) << '\n';

  if (o.verify_exhaustive) {
    const BaselineResult ex = exhaustive_search(ch, exhaustive_limit(o));
    const double tol = 1e-9 * std::max(ex.power, 1e-300);
    if (std::abs(ex.power - sol.power) <= tol) {
      out << "verified: optimal\n";
    } else {
      out << "verified: MISMATCH (exhaustive power " << csv::format_double(ex.power) << ")\n";
      return kFailure;
    }
  }
  return kOk;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw IoError("cannot create output directory '" + dir.string() + "'");
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& w) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  w(f);
  f.flush();
  if (!f) throw IoError("write failed for '" + path.string() + "'");
}

int cmd_bench(const Options& o, std::ostream& out) {
  const ExperimentPlan plan = make_plan(o);
  const fs::path dir = o.out_path.empty() ? fs::path(".") : fs::path(o.out_path);
  ensure_dir(dir);

  const auto records = run_plan(plan);
  const auto rows = aggregate(records);
  write_file(dir / "trials.csv", [&](std::ostream& f) { write_trials_csv(f, records); });
  write_file(dir / "aggregate.csv", [&](std::ostream& f) { write_aggregate_csv(f, rows); });
  out << "wrote " << records.size() << " trial records to " << (dir / "trials.csv").string() << '\n';
  out << "wrote " << rows.size() << " aggregate rows to " << (dir / "aggregate.csv").string() << '\n';
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const ExperimentPlan plan = make_plan(o);
  const auto rows = aggregate(run_plan(plan));

  if (!o.out_path.empty())
    write_file(o.out_path, [&](std::ostream& f) { write_aggregate_csv(f, rows); });

  std::map<std::size_t, double> das_snr;
  for (const auto& r : rows)
    if (r.method == Method::das) das_snr[r.n] = r.mean_snr_db;

  std::ostringstream table;
  table.imbue(std::locale::classic());
  table << std::left << std::setw(8) << "n" << std::setw(12) << "method" << std::right << std::setw(14)
        << "mean_snr_db" << std::setw(14) << "gap_to_das" << std::setw(14) << "total_time_s"
        << std::setw(12) << "optimal" << '\n';
  table << std::fixed;
  for (const auto& r : rows) {
    table << std::left << std::setw(8) << r.n << std::setw(12) << to_string(r.method) << std::right
          << std::setprecision(4) << std::setw(14) << r.mean_snr_db;
    if (auto it = das_snr.find(r.n); it != das_snr.end())
      table << std::setw(14) << (it->second - r.mean_snr_db);
    else
      table << std::setw(14) << "-";
    table << std::setprecision(6) << std::setw(14) << r.total_time;
    if (r.optimality_rate)
      table << std::setprecision(3) << std::setw(12) << *r.optimality_rate;
    else
      table << std::setw(12) << "-";
    table << '\n';
  }
  out << table.str();
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.n_values.size() != 1) throw InputError("gen takes a single --n value");
  if (o.n_values.front() < 1)
    throw InputError("--n must be at least 1, got " + std::to_string(o.n_values.front()));
  const auto ch = generate_channel(static_cast<std::size_t>(o.n_values.front()), o.seed, channel_params(o));
  if (o.out_path.empty())
    write_channel(out, ch);
  else
    write_channel_file(o.out_path, ch);
  return kOk;
}

void add_channel_flags(CLI::App* app, Options& o) {
  app->add_flag("--no-los", o.no_los, "Block the direct link (h_d = 0)");
  app->add_option("--beta-g", o.beta_g, "Variance of BS->RIS channel entries");
  app->add_option("--beta-r", o.beta_r, "Variance of RIS->user channel entries");
  app->add_option("--beta-d", o.beta_d, "Variance of the direct channel");
  app->add_option("--noise-power", o.noise_power, "Noise power (linear)");
}

void add_plan_flags(CLI::App* app, Options& o, std::vector<std::string> default_methods) {
  app->add_option("--n", o.n_values, "Comma-separated RIS sizes")->required()->delimiter(',');
  app->add_option("--trials", o.trials, "Channel realizations per size")->required();
  app->add_option("--seed", o.seed, "Base seed");
  o.methods = std::move(default_methods);
  app->add_option("--methods", o.methods, "Comma-separated subset of das,exhaustive,greedy,random")
      ->delimiter(',');
  app->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest N allowed for exhaustive search");
  add_channel_flags(app, o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"1-bit RIS phase optimization by divide-and-sort", "risdas"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Optimize the configuration for a channel file");
  solve->add_option("channel", o.channel_path, "Channel CSV file")->required();
  solve->add_flag("--verify-exhaustive", o.verify_exhaustive, "Cross-check against exhaustive search");
  solve->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest N allowed for exhaustive search");

  auto* bench = app.add_subcommand("bench", "Run a seeded sweep and write trials.csv and aggregate.csv");
  add_plan_flags(bench, o, {"das"});
  bench->add_option("--out", o.out_path, "Output directory (default: current directory)");

  auto* compare = app.add_subcommand("compare", "Run a seeded sweep and print a method comparison");
  add_plan_flags(compare, o, {"das", "greedy", "random"});
  compare->add_option("--out", o.out_path, "Also write the aggregate CSV to this file");

  auto* gen = app.add_subcommand("gen", "Write a seeded random channel file");
  gen->add_option("--n", o.n_values, "Number of RIS elements")->required();
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--out", o.out_path, "Output file (default: stdout)");
  add_channel_flags(gen, o);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*bench) return cmd_bench(o, out);
    if (*compare) return cmd_compare(o, out);
    if (*gen) return cmd_gen(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const PlanError& e) {
    err << "error: " << e.what() << '\n';
    return kPlanRejected;
  }
  return kFailure;
}

}  // namespace risdas::cli

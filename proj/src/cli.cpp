// Copyright 2026 The qeb Authors
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

#include "qeb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qeb/css_graph.hpp"
#include "qeb/percolation.hpp"
#include "qeb/rank_profile.hpp"
#include "qeb/series_bounds.hpp"
#include "qeb/stabilizer.hpp"
#include "qeb/verify.hpp"

namespace qeb::cli {

std::vector<double> parse_grid(const std::string& text) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw std::invalid_argument("grid must look like A:B:STEP, got '" + text + "'");
  }
  if (!(step > 0) || b < a) throw std::invalid_argument("grid needs A <= B and STEP > 0");
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = std::min(b, a + static_cast<double>(i) * step);
  return grid;
}

namespace {

struct CodeFile {
  bool is_css = false;
  CssCode css;
  StabilizerMatrix stab;
};

CodeFile load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  // The format tag is the first word outside `#` comment lines.
  std::string tag;
  std::istringstream lines(text);
  for (std::string line; tag.empty() && std::getline(lines, line);) {
    std::istringstream words(line);
    if (words >> tag && tag[0] == '#') tag.clear();
  }
  CodeFile file;
  if (tag == "css") {
    file.is_css = true;
    file.css = parse_css(text);
    file.stab = to_stabilizer(file.css);
  } else if (tag == "stab") {
    file.stab = parse_stabilizer(text);
  } else {
    throw std::runtime_error(path + ": expected a 'stab' or 'css' header");
  }
  return file;
}

CssCode load_css(const std::string& path) {
  CodeFile file = load_code(path);
  if (!file.is_css) throw std::runtime_error(path + ": percolation needs a css file");
  return file.css;
}

// The comment block at the top of every output: version, command, every
// option of the subcommand with its effective value, and the seed.
void write_header(std::ostream& out, const CLI::App& sub, const std::string& seed) {
  out << "# qeb " << kVersion << '\n';
  out << "# command: " << sub.get_name() << '\n';
  out << "# flags:";
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    } else {
      value = opt->get_default_str();
    }
    out << " --" << name << '=' << (value.empty() ? "-" : value);
  }
  out << '\n';
  out << "# seed: " << seed << '\n';
}

std::string fmt(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string fixed(double x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << x;
  return os.str();
}

BoundKind parse_kind(const std::string& s) {
  return s == "stab" ? BoundKind::kStabilizer : BoundKind::kCss2m;
}

double default_rate(unsigned m) { return 1.0 - 4.0 / static_cast<double>(m); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Erasure-channel bounds and checks for stabilizer and CSS codes", "qeb"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string("qeb ") + kVersion);

  const std::vector<std::string> kinds{"stab", "css2m"};

  // bound
  std::string b_kind = "css2m";
  unsigned b_m = 8;
  double b_p = 0.0, b_rate = -1.0;
  std::string b_grid;
  auto* bound = app.add_subcommand("bound", "Evaluate a rate upper bound at p or over a grid");
  bound->add_option("--kind", b_kind, "Bound family")->check(CLI::IsMember(kinds));
  bound->add_option("--m", b_m, "Check weight")->check(CLI::Range(2u, 100000u));
  auto* b_p_opt = bound->add_option("--p", b_p, "Erasure probability")->check(CLI::Range(0.0, 0.5));
  auto* b_grid_opt = bound->add_option("--grid", b_grid, "Grid A:B:STEP");
  bound->add_option("--rate", b_rate, "Rate column of the curve")->default_str("1-4/m");
  b_p_opt->excludes(b_grid_opt);

  // threshold
  std::string t_kind = "css2m";
  unsigned t_m = 8;
  double t_rate = -1.0;
  std::size_t t_points = ThresholdOptions{}.grid_points;
  auto* threshold = app.add_subcommand("threshold", "Erasure probability where a bound meets a rate");
  threshold->add_option("--kind", t_kind, "Bound family")->check(CLI::IsMember(kinds));
  threshold->add_option("--m", t_m, "Check weight")->check(CLI::Range(2u, 100000u));
  threshold->add_option("--rate", t_rate, "Target rate")->default_str("1-4/m");
  threshold->add_option("--grid-points", t_points, "Scan resolution before bisection")
      ->check(CLI::PositiveNumber);

  // perc-table
  std::vector<unsigned> pt_ms{5, 10, 20, 30, 40, 50};
  auto* perc_table = app.add_subcommand("perc-table", "Bounds on the percolation threshold");
  perc_table->add_option("--m-list", pt_ms, "Degrees m >= 5")
      ->delimiter(',')
      ->check(CLI::Range(5u, 100000u));

  // profile
  std::string pr_code, pr_mode = "exact", pr_grid = "0:0.5:0.05", pr_view = "symplectic";
  std::uint64_t pr_trials = 10000, pr_seed = 0;
  std::size_t pr_cap = kDefaultEnumerationCap;
  auto* profile = app.add_subcommand("profile", "Mean-rank profile of a code");
  profile->add_option("--code", pr_code, "Code file (stab or css format)")->required();
  profile->add_option("--mode", pr_mode, "Expectation mode")
      ->check(CLI::IsMember({"exact", "mc"}));
  profile->add_option("--trials", pr_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  profile->add_option("--seed", pr_seed, "Monte Carlo seed");
  profile->add_option("--grid", pr_grid, "Grid A:B:STEP");
  profile->add_option("--view", pr_view, "Matrix: symplectic, or hx / hz of a css file")
      ->check(CLI::IsMember({"symplectic", "hx", "hz"}));
  profile->add_option("--cap", pr_cap, "Largest position count for exact mode");

  // verify
  std::string v_suite = "all";
  std::uint64_t v_seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run self-check suites");
  verify_cmd->add_option("--suite", v_suite, "Suite")
      ->check(CLI::IsMember({"lemmas", "appendix", "series", "example", "all"}));
  verify_cmd->add_option("--seed", v_seed, "Seed for randomized checks");

  // percolate
  std::string pc_code, pc_grid;
  double pc_p = 0.1;
  std::size_t pc_r = 0, pc_edge = 0;
  std::uint64_t pc_trials = 10000, pc_seed = 0;
  auto* percolate = app.add_subcommand("percolate", "Cluster statistics of erased edges");
  percolate->add_option("--code", pc_code, "CSS file (H_X incidence, H_Z faces)")->required();
  auto* pc_p_opt = percolate->add_option("--p", pc_p, "Erasure probability")
                       ->check(CLI::Range(0.0, 1.0));
  auto* pc_grid_opt = percolate->add_option("--grid", pc_grid, "Grid A:B:STEP");
  pc_p_opt->excludes(pc_grid_opt);
  percolate->add_option("--r", pc_r, "Cluster size threshold")->required();
  percolate->add_option("--trials", pc_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  percolate->add_option("--seed", pc_seed, "Monte Carlo seed");
  percolate->add_option("--edge", pc_edge, "Reference edge");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (bound->parsed()) {
      if (b_grid.empty() && !b_p_opt->count()) throw std::invalid_argument("need --p or --grid");
      if (parse_kind(b_kind) == BoundKind::kCss2m && b_m < 5) {
        throw std::invalid_argument("css2m needs m >= 5");
      }
      const BoundSpec spec{parse_kind(b_kind), b_m, b_rate < 0 ? default_rate(b_m) : b_rate};
      std::ostringstream body;
      if (!b_grid.empty()) {
        write_bound_curve_csv(body, bound_curve(spec, parse_grid(b_grid)));
      } else {
        body << "kind,m,p,bound\n"
             << b_kind << ',' << b_m << ',' << fmt(b_p) << ',' << fmt(evaluate_bound(spec, b_p))
             << '\n';
      }
      write_header(out, *bound, "none");
      out << body.str();
    } else if (threshold->parsed()) {
      const BoundSpec spec{parse_kind(t_kind), t_m, t_rate < 0 ? default_rate(t_m) : t_rate};
      if (spec.kind == BoundKind::kCss2m && t_m < 5) throw std::invalid_argument("css2m needs m >= 5");
      ThresholdOptions options;
      options.grid_points = t_points;
      const double p = threshold_solve(spec, options);
      write_header(out, *threshold, "none");
      out << "m,kind,rate,threshold\n"
          << t_m << ',' << t_kind << ',' << fixed(spec.rate, 9) << ',' << fixed(p, 9) << '\n';
    } else if (perc_table->parsed()) {
      write_header(out, *perc_table, "none");
      out << "m,easy_lower,percolation_upper,capacity_2m\n";
      for (unsigned m : pt_ms) {
        const EasyBounds easy = easy_bounds(m);
        out << m << ',' << fmt(easy.lower) << ',' << fmt(percolation_upper(m)) << ','
            << fmt(easy.upper_capacity) << '\n';
      }
    } else if (profile->parsed()) {
      const CodeFile file = load_code(pr_code);
      std::optional<ErasureMatrix> view;
      if (pr_view == "symplectic") {
        view = ErasureMatrix::symplectic(file.stab);
      } else {
        if (!file.is_css) throw std::invalid_argument("--view hx/hz needs a css file");
        view = ErasureMatrix::binary(pr_view == "hx" ? file.css.hx : file.css.hz);
      }
      const std::vector<double> grid = parse_grid(pr_grid);
      ExpectationMode mode = ExactMode{pr_cap};
      if (pr_mode == "mc") mode = MonteCarloMode{pr_trials, pr_seed};
      const RankProfile result = rank_profile(*view, grid, mode);
      write_header(out, *profile, pr_mode == "mc" ? std::to_string(pr_seed) : "none");
      write_profile_csv(out, result);
    } else if (verify_cmd->parsed()) {
      std::vector<verify::Check> checks;
      auto add = [&](std::vector<verify::Check> more) {
        checks.insert(checks.end(), more.begin(), more.end());
      };
      const bool all = v_suite == "all";
      if (all || v_suite == "lemmas") add(verify::lemmas(v_seed));
      if (all || v_suite == "appendix") add(verify::appendix(v_seed));
      if (all || v_suite == "series") add(verify::series());
      if (all || v_suite == "example") add(verify::example());
      write_header(out, *verify_cmd, std::to_string(v_seed));
      verify::write_checks_csv(out, checks);
      if (!verify::all_ok(checks)) {
        err << "verification failed\n";
        return 1;
      }
    } else if (percolate->parsed()) {
      const CssCode code = load_css(pc_code);
      const PercolationInstance inst = PercolationInstance::from_code(code);
      if (pc_edge >= inst.edge_count()) throw std::invalid_argument("--edge out of range");
      const std::vector<double> grid = pc_grid.empty() ? std::vector<double>{pc_p}
                                                       : parse_grid(pc_grid);
      for (double p : grid) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
      }
      std::ostringstream body;
      body << "p,r,f_r,f_r_stderr,g_r,g_r_stderr,ep_fraction,ep_stderr,failure_rate,"
              "failure_stderr\n";
      for (double p : grid) {
        const ClusterEstimates est = estimate_fr_gr(inst, p, pc_r, pc_trials, pc_seed, pc_edge);
        const Estimate fail = erasure_failure_rate(code, p, pc_trials, pc_seed);
        body << fmt(p) << ',' << pc_r << ',' << fmt(est.f_r.value) << ','
             << fmt(est.f_r.std_error) << ',' << fmt(est.g_r.value) << ','
             << fmt(est.g_r.std_error) << ',' << fmt(est.ep_fraction.value) << ','
             << fmt(est.ep_fraction.std_error) << ',' << fmt(fail.value) << ','
             << fmt(fail.std_error) << '\n';
      }
      write_header(out, *percolate, std::to_string(pc_seed));
      out << body.str();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qeb::cli

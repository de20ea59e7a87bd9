// Copyright 2026 The vmvt Authors
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

// Command-line front end. Every subcommand prints one header line followed by
// records, either as CSV or as newline-delimited JSON.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vmvt/congruences.hpp"
#include "vmvt/error.hpp"
#include "vmvt/exp_sums.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/mean_values.hpp"
#include "vmvt/tarry.hpp"
#include "vmvt/waring.hpp"

namespace {

using namespace vmvt;

// Integers are kept as decimal text so that JSON never rounds them.
struct Integer {
  std::string digits;
};
using Cell = std::variant<Integer, double, bool, std::string>;

Cell integer(const ExactCount& v) { return Integer{to_decimal(v)}; }
Cell integer(std::int64_t v) { return Integer{std::to_string(v)}; }
Cell integer(std::uint64_t v) { return Integer{std::to_string(v)}; }
Cell integer(int v) { return Integer{std::to_string(v)}; }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, double>)
      out += format_double(values[i]);
    else
      out += std::to_string(values[i]);
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

class Emitter {
 public:
  Emitter(std::string command, bool json, std::vector<std::string> columns)
      : json_(json), columns_(std::move(columns)) {
    if (json_) {
      nlohmann::ordered_json head = {{"command", command}, {"columns", columns_}};
      out_ << head.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < columns_.size(); ++i)
        out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
    }
  }

  void row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_.size())
      fail(ErrorKind::invariant_violation, "record width does not match header");
    if (json_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, Integer>)
                obj[columns_[i]] = v.digits;
              else
                obj[columns_[i]] = v;
            },
            cells[i]);
      }
      out_ << obj.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Integer>)
              out_ << v.digits;
            else if constexpr (std::is_same_v<T, double>)
              out_ << format_double(v);
            else if constexpr (std::is_same_v<T, bool>)
              out_ << (v ? "true" : "false");
            else
              out_ << csv_field(v);
          },
          cells[i]);
    }
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  bool json_;
  std::vector<std::string> columns_;
  std::ostringstream out_;
};

struct Args {
  // Shared.
  unsigned threads = 0;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool quiet = false;

  int s = 0;
  int k = 0;
  int j = 0;
  int h = 2;
  std::int64_t xmax = 0;
  std::vector<std::int64_t> xs;
  std::string strategy = "meet_in_middle";
  std::string checkpoint;
  std::int64_t q = 1;
  std::int64_t xi = 0;
  std::vector<double> alpha;
  std::vector<std::int64_t> numerators;
  std::uint64_t denominator = 0;
  double beta = 0.0;
  std::uint64_t Q = 0;
  double eps = 0.0;
  std::int64_t N = 0;
  std::uint64_t p = 3;
  std::uint64_t eta = 0;
  std::vector<std::int64_t> y;
  int equations = 0;
  std::vector<std::int64_t> n;
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  int points = 0;
  std::int64_t a = 1;
  std::int64_t height = 0;
  std::string file;
  std::string output;
};

// Uniform doubles in [0, 1) on the 2^-53 grid.
std::vector<double> sample_alpha(std::uint64_t seed, int k) {
  std::mt19937_64 rng(seed);
  std::vector<double> alpha(static_cast<std::size_t>(k));
  for (auto& a : alpha) a = std::ldexp(static_cast<double>(rng() >> 11), -53);
  return alpha;
}

std::vector<double> alpha_or_sample(const Args& args) {
  if (!args.alpha.empty()) return args.alpha;
  require(args.k >= 1, "give --alpha or --k to sample coefficients from --seed");
  return sample_alpha(args.seed, args.k);
}

std::vector<std::int64_t> sample_points(const Args& args) {
  if (!args.n.empty()) return args.n;
  require(args.points >= 2 && args.n_from >= 1 && args.n_to > args.n_from,
          "give --n or --n-from, --n-to and --points >= 2");
  std::vector<std::int64_t> out;
  const double step = static_cast<double>(args.n_to - args.n_from) / (args.points - 1);
  for (int i = 0; i < args.points; ++i)
    out.push_back(args.n_from + std::llround(step * i));
  return out;
}

std::string run(const std::string& cmd, const Args& args, const ComputeOptions& opt) {
  const bool json = args.format == "json";

  if (cmd == "jmean") {
    Emitter e(cmd, json, {"s", "k", "X", "J"});
    const SystemParams params{args.s, args.k, args.xmax};
    const auto strategy = parse_strategy(args.strategy);
    ExactCount J;
    if (!args.checkpoint.empty()) {
      require(strategy == Strategy::meet_in_middle, "checkpoints need the meet_in_middle strategy");
      J = count_mean_value_checkpointed(params, args.checkpoint, opt);
    } else {
      J = count_mean_value(params, strategy, opt);
    }
    e.row({integer(args.s), integer(args.k), integer(args.xmax), integer(J)});
    return e.str();
  }
  if (cmd == "tdiag") {
    Emitter e(cmd, json, {"s", "X", "T"});
    e.row({integer(args.s), integer(args.xmax), integer(count_diagonal(args.s, args.xmax))});
    return e.str();
  }
  if (cmd == "lowbound") {
    Emitter e(cmd, json, {"s", "k", "X", "lower_bound", "J", "T"});
    const auto c = lower_bound_certificate({args.s, args.k, args.xmax}, opt);
    e.row({integer(args.s), integer(args.k), integer(args.xmax), integer(c.lower_bound),
           integer(c.mean_value), integer(c.diagonal)});
    return e.str();
  }
  if (cmd == "newton") {
    Emitter e(cmd, json, {"k", "X", "holds"});
    e.row({integer(args.k), integer(args.xmax), check_newton_identity(args.k, args.xmax, opt)});
    return e.str();
  }
  if (cmd == "progression") {
    Emitter e(cmd, json, {"s", "k", "X", "q", "xi", "restricted", "contracted", "z_min", "z_max"});
    const auto c = count_in_progression({args.s, args.k, args.xmax}, args.q, args.xi, opt);
    e.row({integer(args.s), integer(args.k), integer(args.xmax), integer(args.q),
           integer(args.xi), integer(c.restricted), integer(c.contracted), integer(c.z_min),
           integer(c.z_max)});
    return e.str();
  }
  if (cmd == "slope") {
    Emitter e(cmd, json, {"s", "k", "X", "J", "fitted_exponent"});
    require(args.xs.size() >= 3, "--xs needs at least three heights");
    std::vector<ExactCount> counts;
    std::vector<double> lx, ly;
    for (const auto X : args.xs) {
      counts.push_back(count_mean_value({args.s, args.k, X}, Strategy::meet_in_middle, opt));
      lx.push_back(std::log(static_cast<double>(X)));
      ly.push_back(std::log(to_double(counts.back())));
    }
    const double slope = least_squares_slope(lx, ly);
    for (std::size_t i = 0; i < args.xs.size(); ++i)
      e.row({integer(args.s), integer(args.k), integer(args.xs[i]), integer(counts[i]), slope});
    return e.str();
  }
  if (cmd == "expsum") {
    Emitter e(cmd, json, {"coefficients", "X", "re", "im", "abs"});
    ComplexValue f;
    std::string coefficients;
    if (!args.numerators.empty()) {
      require(args.denominator >= 1, "--numerators needs --denominator");
      f = eval_f(RationalPhase{args.numerators, args.denominator}, args.xmax, opt);
      coefficients = join(args.numerators, " ") + " / " + std::to_string(args.denominator);
    } else {
      const auto alpha = alpha_or_sample(args);
      f = eval_f(PhaseVector(alpha), args.xmax, opt);
      coefficients = join(alpha, " ");
    }
    e.row({coefficients, integer(args.xmax), f.real(), f.imag(), std::abs(f)});
    return e.str();
  }
  if (cmd == "approx") {
    Emitter e(cmd, json, {"alpha", "Q", "a", "q", "err"});
    const auto r = dirichlet_approx(args.beta, args.Q);
    e.row({args.beta, integer(args.Q), integer(r.a), integer(r.q), r.err});
    return e.str();
  }
  if (cmd == "minor") {
    Emitter e(cmd, json, {"beta", "k", "X", "minor"});
    e.row({args.beta, integer(args.k), integer(args.xmax), is_minor_arc(args.beta, args.k, args.xmax)});
    return e.str();
  }
  if (cmd == "envelope") {
    Emitter e(cmd, json, {"name", "q", "j", "k", "X", "epsilon", "value"});
    const auto q = static_cast<std::uint64_t>(args.q);
    const auto env = args.j == 0 ? weyl_envelope(q, args.k, args.xmax, args.eps)
                                 : vinogradov_envelope(q, args.j, args.k, args.xmax, args.eps);
    e.row({env.name, integer(args.q), integer(args.j), integer(args.k), integer(args.xmax),
           env.epsilon, env.value});
    return e.str();
  }
  if (cmd == "equi") {
    Emitter e(cmd, json, {"coefficients", "N", "n_star", "value"});
    const auto alpha = alpha_or_sample(args);
    const auto m = equidistribution_min(PhaseVector(alpha), args.N, opt);
    e.row({join(alpha, " "), integer(args.N), integer(m.n_star), m.value});
    return e.str();
  }
  if (cmd == "cong") {
    Emitter e(cmd, json, {"k", "p", "eta", "y", "equations", "count", "bound"});
    const CongruenceInstance inst{args.k, args.p, args.eta, args.y};
    const auto bound = hensel_bound(args.k, args.p);
    if (args.equations > 0 && args.equations < args.k) {
      const auto count = count_truncated_congruence_solutions(inst, args.equations, opt);
      e.row({integer(args.k), integer(args.p), integer(args.eta), join(args.y, " "),
             integer(args.equations), integer(count), integer(bound)});
    } else {
      const auto c = count_congruence_solutions(inst, opt);
      e.row({integer(args.k), integer(args.p), integer(args.eta), join(args.y, " "),
             integer(args.k), integer(c.count), integer(c.bound)});
    }
    return e.str();
  }
  if (cmd == "congdeep") {
    Emitter e(cmd, json, {"k", "p", "xi", "eta", "y", "count", "bound"});
    const auto c = count_deep_congruence_solutions(
        {args.k, args.p, static_cast<std::uint64_t>(args.xi), args.eta, args.y}, opt);
    e.row({integer(args.k), integer(args.p), integer(args.xi), integer(args.eta),
           join(args.y, " "), integer(c.count), integer(c.bound)});
    return e.str();
  }
  if (cmd == "waring") {
    Emitter e(cmd, json, {"s", "k", "n", "R"});
    const auto points = sample_points(args);
    const auto counts = count_representations(args.s, args.k, points, opt);
    for (std::size_t i = 0; i < points.size(); ++i)
      e.row({integer(args.s), integer(args.k), integer(points[i]), integer(counts[i])});
    return e.str();
  }
  if (cmd == "gauss") {
    Emitter e(cmd, json, {"q", "a", "k", "re", "im", "abs"});
    const auto g = gauss_sum(static_cast<std::uint64_t>(args.q), args.a, args.k);
    e.row({integer(args.q), integer(args.a), integer(args.k), g.real(), g.imag(), std::abs(g)});
    return e.str();
  }
  if (cmd == "sseries") {
    Emitter e(cmd, json, {"s", "k", "n", "Q", "value", "imag_residue", "tail_estimate"});
    const SingularSeries series(args.s, args.k, args.Q);
    for (const auto n : sample_points(args)) {
      const auto part = series.at(n);
      e.row({integer(args.s), integer(args.k), integer(n), integer(args.Q), part.value,
             part.imag_residue, part.tail_estimate});
    }
    return e.str();
  }
  if (cmd == "asym") {
    Emitter e(cmd, json, {"s", "k", "Q", "n", "R", "predicted", "ratio"});
    for (const auto& r : asymptotic_report(args.s, args.k, args.Q, sample_points(args), opt))
      e.row({integer(args.s), integer(args.k), integer(args.Q), integer(r.n), integer(r.R),
             r.predicted, r.ratio});
    return e.str();
  }
  if (cmd == "tarry-verify") {
    Emitter e(cmd, json, {"k", "h", "s", "valid"});
    std::ifstream in(args.file);
    require(static_cast<bool>(in), "cannot open witness file " + args.file);
    const auto w = read_witness(in);
    e.row({integer(w.k), integer(w.h), integer(w.s), verify_witness(w)});
    return e.str();
  }
  if (cmd == "tarry-search") {
    Emitter e(cmd, json, {"k", "h", "s", "height", "found", "blocks"});
    const auto w = search_witness(args.k, args.h, args.s, args.height, opt);
    std::string blocks;
    if (w) {
      for (std::size_t i = 0; i < w->blocks.size(); ++i)
        blocks += (i ? " | " : "") + join(w->blocks[i], " ");
      if (!args.output.empty()) {
        std::ofstream out(args.output);
        require(static_cast<bool>(out), "cannot write witness file " + args.output);
        write_witness(out, *w);
      }
    }
    e.row({integer(args.k), integer(args.h), integer(args.s), integer(args.height),
           w.has_value(), blocks});
    return e.str();
  }
  if (cmd == "ledger") {
    Emitter e(cmd, json, {"source", "k", "s", "kind", "value", "citation"});
    for (const auto& r : ledger(args.k)) {
      e.row({r.source, r.k ? integer(*r.k) : Cell{std::string()},
             r.s ? Cell{*r.s} : Cell{std::string()}, std::string(to_string(r.kind)), r.value,
             r.citation});
    }
    return e.str();
  }
  if (cmd == "j32") {
    Emitter e(cmd, json, {"X", "J", "predicted", "relative_error", "in_range"});
    for (const auto& r : compare_asymptotic_j32(args.xs, opt))
      e.row({integer(r.X), integer(r.exact), r.predicted, r.relative_error, r.in_range});
    return e.str();
  }
  fail(ErrorKind::invalid_argument, "unknown subcommand " + cmd);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::resource_exceeded: return 2;
    case ErrorKind::invariant_violation: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical tools for Vinogradov's mean value theorem"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  std::optional<unsigned> thread_flag;

  app.add_option("--threads", thread_flag, "Worker threads (overrides VMVT_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--memory-budget", args.memory_budget, "Memory budget, e.g. 4GiB")
      ->transform(CLI::AsSizeValue(false));
  app.add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", args.seed, "Seed for sampled coefficients");
  app.add_flag("--quiet", args.quiet, "Suppress progress messages");

  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto* jmean = add("jmean", "Exact J_{s,k}(X)");
  auto* tdiag = add("tdiag", "Diagonal count T_s(X)");
  auto* lowbound = add("lowbound", "Exact counting lower bound with its certificate");
  auto* newton = add("newton", "Check J_{s,k}(X) = T_s(X) for all s <= k");
  auto* progression = add("progression", "Count with variables restricted to xi mod q");
  auto* slope = add("slope", "Fitted growth exponent of J_{s,k}");
  auto* expsum = add("expsum", "Weyl sum f(alpha; X)");
  auto* approx = add("approx", "Dirichlet rational approximation");
  auto* minor = add("minor", "Minor-arc membership test");
  auto* envelope = add("envelope", "Weyl or mean-value bound envelope");
  auto* equi = add("equi", "min over n <= N of ||alpha_1 n + ... + alpha_k n^k||");
  auto* cong = add("cong", "Solutions of the power-sum congruence system modulo p^k");
  auto* congdeep = add("congdeep", "Solutions of the deep congruence system");
  auto* waring = add("waring", "Exact R_{s,k}(n)");
  auto* gauss = add("gauss", "Complete exponential sum S(q, a)");
  auto* sseries = add("sseries", "Truncated singular series");
  auto* asym = add("asym", "R_{s,k}(n) against the predicted main term");
  auto* tverify = add("tarry-verify", "Verify a Tarry witness file");
  auto* tsearch = add("tarry-search", "Exhaustive Tarry witness search");
  auto* ledger_cmd = add("ledger", "Exponent ledger for one k");
  auto* j32 = add("j32", "Exact J_{3,2}(X) against its asymptotic formula");

  for (auto* c : {jmean, tdiag, lowbound, progression, slope, waring, sseries, asym})
    c->add_option("--s", args.s)->required();
  for (auto* c : {jmean, lowbound, newton, progression, slope, minor, envelope, cong,
                  congdeep, waring, sseries, asym, tsearch, ledger_cmd})
    c->add_option("--k", args.k)->required();
  for (auto* c : {expsum, equi, gauss}) c->add_option("--k", args.k);
  for (auto* c : {jmean, tdiag, lowbound, newton, progression, expsum, minor, envelope})
    c->add_option("--xmax", args.xmax, "Height X")->required();
  jmean->add_option("--strategy", args.strategy);
  jmean->add_option("--checkpoint", args.checkpoint, "Half-table checkpoint file");
  progression->add_option("--q", args.q)->required();
  progression->add_option("--xi", args.xi)->required();
  slope->add_option("--xs", args.xs)->delimiter(',')->required();
  j32->add_option("--xs", args.xs)->delimiter(',')->default_str("64,128,256");
  for (auto* c : {expsum, equi}) c->add_option("--alpha", args.alpha)->delimiter(',');
  expsum->add_option("--numerators", args.numerators)->delimiter(',');
  expsum->add_option("--denominator", args.denominator);
  approx->add_option("--alpha", args.beta)->required();
  approx->add_option("--Q", args.Q)->required();
  minor->add_option("--beta", args.beta)->required();
  envelope->add_option("--q", args.q)->required();
  envelope->add_option("--j", args.j, "Use the mean-value envelope for coefficient j");
  envelope->add_option("--eps", args.eps);
  equi->add_option("--N", args.N)->required();
  for (auto* c : {cong, congdeep}) {
    c->add_option("--p", args.p)->required();
    c->add_option("--eta", args.eta)->required();
    c->add_option("--y", args.y)->delimiter(',')->required();
  }
  cong->add_option("--equations", args.equations, "Keep only the first m congruences");
  congdeep->add_option("--xi", args.xi)->required();
  for (auto* c : {waring, sseries, asym}) {
    c->add_option("--n", args.n)->delimiter(',');
    c->add_option("--n-from", args.n_from);
    c->add_option("--n-to", args.n_to);
    c->add_option("--points", args.points);
  }
  for (auto* c : {sseries, asym}) c->add_option("--Q", args.Q)->required();
  gauss->add_option("--q", args.q)->required();
  gauss->add_option("--a", args.a)->required();
  tverify->add_option("--file", args.file)->required();
  tsearch->add_option("--blocks", args.h, "Number of blocks h");
  tsearch->add_option("--s", args.s)->required();
  tsearch->add_option("--height", args.height)->required();
  tsearch->add_option("--output", args.output, "Write the witness to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (j32->parsed() && args.xs.empty()) args.xs = {64, 128, 256};
  if (gauss->parsed() && args.k == 0) args.k = 2;

  ComputeOptions opt;
  if (thread_flag) {
    opt.threads = *thread_flag;
  } else if (const char* env = std::getenv("VMVT_THREADS"); env && *env) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value == 0) {
      std::cerr << "error: VMVT_THREADS must be a positive integer\n";
      return 1;
    }
    opt.threads = value;
  }
  opt.memory_budget_bytes = args.memory_budget;
  if (!args.quiet) opt.progress = [](const std::string& msg) { std::cerr << msg << '\n'; };

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    std::cout << run(cmd, args, opt) << std::flush;
    return 0;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error (resource_exceeded): out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error (invariant_violation): " << e.what() << '\n';
    return 3;
  }
}

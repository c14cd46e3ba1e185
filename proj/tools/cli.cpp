#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "agmon/constants.hpp"
#include "agmon/extremal.hpp"
#include "agmon/io.hpp"
#include "agmon/proof_trace.hpp"
#include "agmon/verify.hpp"

namespace agmon::cli {
namespace {

constexpr const char* kTableNote = "# human-readable table; layout is not stable, use --format json";
constexpr int kMaxAllP = 16;
constexpr int kMaxTermTable = 14;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "json";
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;

  [[nodiscard]] bool table() const { return format == "table"; }
};

struct ConstantsOptions {
  int d = 0;
  std::optional<std::int64_t> p;
  bool all_p = false;
};

struct VerifyOptions {
  std::optional<std::string> input;
  bool random = false;
  std::optional<int> d;
  std::int64_t p = 1;
  std::size_t count = 1000;
  std::string inequality = "main";
  std::string distribution = "gaussian";
  std::vector<Coord> box;
};

struct TraceOptions {
  int d = 0;
  std::optional<std::int64_t> p;
  std::size_t plans = 0;
};

struct SearchOptions {
  int d = 0;
  std::int64_t p = 1;
  std::vector<Coord> box{21};
  int restarts = 8;
  int iters = 5000;
  double step = 0.25;
  std::optional<std::string> out;
};

Json exact_integer(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

Json constant_json(const ConstantValue& value, int d) {
  Json out;
  out["pow2_exponent"] = to_string(value.pow2_exponent);
  out["d_log_coeff"] = to_string(value.d_log_coeff);
  out["exact"] = value.exact_form(d);
  out["approx"] = value.approx;
  return out;
}

Json omega_json(int d, Branch branch) {
  Json orders = Json::array();
  Json counts = Json::array();
  for (int i = min_order(branch); i <= max_order(d, branch); ++i) {
    orders.push_back(i);
    counts.push_back(exact_integer(omega_count(d, i, branch)));
  }
  Json out;
  out["orders"] = std::move(orders);
  out["counts"] = std::move(counts);
  return out;
}

std::vector<Coord> broadcast_box(const std::vector<Coord>& box, int d) {
  if (box.size() == 1) return std::vector<Coord>(static_cast<std::size_t>(d), box[0]);
  if (box.size() != static_cast<std::size_t>(d)) {
    throw UsageError("--box needs 1 or d = " + std::to_string(d) + " extents, got " +
                     std::to_string(box.size()));
  }
  return box;
}

std::vector<Coord> default_suite_box(int d) {
  static constexpr Coord kByDim[] = {16, 8, 5};
  const Coord extent = d <= 3 ? kByDim[d - 1] : 3;
  return std::vector<Coord>(static_cast<std::size_t>(d), extent);
}

void emit(const GlobalOptions& g, const Json& doc, const std::string& table, std::ostream& out) {
  if (g.table()) {
    out << kTableNote << '\n' << table;
  } else {
    out << dump_canonical(doc) << '\n';
  }
}

// ---------------------------------------------------------------- constants

int cmd_constants(const GlobalOptions& g, const ConstantsOptions& o, std::ostream& out) {
  if (!o.p && !o.all_p) throw UsageError("constants needs --p or --all-p");
  if (o.d < 1) throw UsageError("--d must be >= 1");
  std::vector<std::int64_t> ps;
  if (o.all_p) {
    if (o.d > kMaxAllP) {
      throw UsageError("--all-p is limited to d <= " + std::to_string(kMaxAllP));
    }
    for (std::int64_t p = 1; p <= (std::int64_t{1} << (o.d - 1)); ++p) ps.push_back(p);
  } else {
    validate(ConstantSpec{o.d, *o.p});
    ps.push_back(*o.p);
  }

  std::ostringstream table;
  Json doc;
  doc["d"] = o.d;
  Json entries = Json::array();
  table << "d = " << o.d << '\n' << "p\tkappa\tmu (exact)\tmu (approx)\n";
  for (std::int64_t p : ps) {
    const ConstantSpec spec{o.d, p};
    const BigInt k = kappa_log2(spec);
    const ConstantValue kappa = make_constant(Rational(k), Rational(0), o.d);
    const ConstantValue m = mu(spec);
    Json entry;
    entry["p"] = p;
    entry["kappa_log2"] = exact_integer(k);
    entry["kappa"] = constant_json(kappa, o.d);
    entry["mu"] = constant_json(m, o.d);
    entries.push_back(std::move(entry));
    table << p << "\t2^" << k.str() << '\t' << m.exact_form(o.d) << '\t'
          << format_double(m.approx) << '\n';
  }
  doc["entries"] = std::move(entries);
  doc["rho1"] = constant_json(rho1(o.d), o.d);
  doc["rho2"] = constant_json(rho2(o.d), o.d);
  doc["kappa_min"] = constant_json(kappa_min(o.d), o.d);
  Json omega;
  omega["differenced"] = omega_json(o.d, Branch::Differenced);
  omega["plain"] = omega_json(o.d, Branch::Plain);
  doc["omega"] = std::move(omega);

  table << "rho1 = " << rho1(o.d).exact_form(o.d) << ", rho2 = " << rho2(o.d).exact_form(o.d)
        << ", kappa_min = " << kappa_min(o.d).exact_form(o.d) << '\n';
  for (Branch b : {Branch::Differenced, Branch::Plain}) {
    table << "omega " << to_string(b) << ':';
    for (int i = min_order(b); i <= max_order(o.d, b); ++i) {
      table << ' ' << i << "->" << omega_count(o.d, i, b).str();
    }
    table << '\n';
  }
  emit(g, doc, table.str(), out);
  return kOk;
}

// ------------------------------------------------------------------- verify

Json report_json(const CheckReport& r) {
  Json out;
  out["lhs"] = r.lhs;
  out["rhs"] = r.rhs;
  out["ratio"] = r.ratio;
  out["satisfied"] = r.satisfied;
  out["tolerance"] = r.tolerance;
  return out;
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& o, std::ostream& out) {
  if (o.input.has_value() == o.random) throw UsageError("verify needs exactly one of --input, --random");
  const Inequality which = parse_inequality(o.inequality);

  if (o.input) {
    LatticeSeq seq = read_sequence_file(*o.input);
    const int d = static_cast<int>(seq.dim());
    if (o.d && *o.d != d) {
      throw UsageError("--d " + std::to_string(*o.d) + " does not match the file's d = " +
                       std::to_string(d));
    }
    if (d < 1) throw UsageError("sequence file has d = 0; nothing to verify");
    if (which == Inequality::Main) validate(ConstantSpec{d, o.p});
    if (requires_one_dimension(which) && d != 1) {
      throw UsageError(std::string(to_string(which)) + " needs a 1-D sequence");
    }
    const CheckReport r = check(which, seq, o.p, g.tolerance);
    Json doc;
    doc["inequality"] = to_string(which);
    doc["d"] = d;
    doc["p"] = o.p;
    doc["trials"] = 1;
    doc["failures"] = r.satisfied ? 0 : 1;
    doc["worst_ratio"] = r.ratio;
    doc["worst_trial_seed"] = nullptr;
    doc["input"] = *o.input;
    doc["report"] = report_json(r);
    std::ostringstream table;
    table << "inequality\t" << to_string(which) << "\nlhs\t" << format_double(r.lhs) << "\nrhs\t"
          << format_double(r.rhs) << "\nratio\t" << format_double(r.ratio) << "\nsatisfied\t"
          << (r.satisfied ? "yes" : "NO") << '\n';
    emit(g, doc, table.str(), out);
    return r.satisfied ? kOk : kCheckFailed;
  }

  if (!o.d) throw UsageError("verify --random needs --d");
  SuiteConfig cfg;
  cfg.d = *o.d;
  cfg.p = o.p;
  cfg.count = o.count;
  cfg.seed = g.seed;
  cfg.tolerance = g.tolerance;
  cfg.distribution = parse_distribution(o.distribution);
  if (cfg.d < 1) throw UsageError("--d must be >= 1");
  cfg.box_shape = o.box.empty() ? default_suite_box(cfg.d) : broadcast_box(o.box, cfg.d);
  validate(cfg);
  if (requires_one_dimension(which) && cfg.d != 1) {
    throw UsageError(std::string(to_string(which)) + " needs --d 1");
  }

  const SuiteSummary s = run_suite(cfg, which);
  Json doc;
  doc["inequality"] = to_string(which);
  doc["d"] = s.d;
  doc["p"] = s.p;
  doc["trials"] = s.trials;
  doc["failures"] = s.failures;
  doc["worst_ratio"] = s.worst_ratio;
  doc["worst_trial_seed"] = s.worst_trial_seed;
  doc["worst_trial"] = s.worst_trial;
  doc["seed"] = cfg.seed;
  doc["distribution"] = to_string(cfg.distribution);
  doc["box"] = cfg.box_shape;
  doc["tolerance"] = cfg.tolerance;
  doc["failed_trials"] = s.failed_trials;
  std::ostringstream table;
  table << "inequality\t" << to_string(which) << "\nd\t" << s.d << "\np\t" << s.p << "\ntrials\t"
        << s.trials << "\nfailures\t" << s.failures << "\nworst_ratio\t"
        << format_double(s.worst_ratio) << "\nworst_trial_seed\t" << s.worst_trial_seed << '\n';
  emit(g, doc, table.str(), out);
  return s.failures == 0 ? kOk : kCheckFailed;
}

// -------------------------------------------------------------------- trace

int cmd_trace(const GlobalOptions& g, const TraceOptions& o, std::ostream& out) {
  if (o.d < 1 || o.d > kMaxTraceDimension) {
    throw UsageError("--d must be in 1.." + std::to_string(kMaxTraceDimension));
  }
  const std::int64_t p = o.p.value_or(std::int64_t{1} << (o.d - 1));
  const BigInt closed = kappa_log2(ConstantSpec{o.d, p});
  const auto terms = expand_chain(o.d);
  const ReductionPlan plan = canonical_plan(o.d, p);
  const std::int64_t total = total_kappa(terms, plan);

  std::vector<std::int64_t> sampled;
  for (std::size_t i = 0; i < o.plans; ++i) {
    Rng rng(derive_seed(g.seed, i));
    sampled.push_back(total_kappa(terms, random_plan(o.d, p, rng)));
  }
  const bool plans_agree =
      std::all_of(sampled.begin(), sampled.end(), [total](std::int64_t t) { return t == total; });
  const bool match = BigInt(total) == closed && plans_agree;

  std::ostringstream table;
  Json doc;
  doc["d"] = o.d;
  doc["p"] = p;
  const std::size_t half = terms.size() / 2;
  if (o.d <= kMaxTermTable) {
    Json rows = Json::array();
    table << "branch\toperator\torder\ttarget\tcost\n";
    std::vector<char> keep(half, 0);
    for (std::size_t index : plan.chosen) keep[index] = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto target = i < half && keep[i] ? ReductionTarget::FirstDifference
                                              : ReductionTarget::Identity;
      const int cost = reduction_cost(terms[i], target);
      const char* target_name = target == ReductionTarget::FirstDifference ? "D1" : "identity";
      Json row;
      row["branch"] = to_string(terms[i].branch);
      row["operator"] = terms[i].axes.operator_string();
      row["axes"] = terms[i].axes.axes();
      row["order"] = terms[i].order();
      row["target"] = target_name;
      row["cost"] = cost;
      rows.push_back(std::move(row));
      table << to_string(terms[i].branch) << '\t' << terms[i].axes.operator_string() << '\t'
            << terms[i].order() << '\t' << target_name << '\t' << cost << '\n';
    }
    doc["terms"] = std::move(rows);
  }
  Json histograms;
  for (Branch b : {Branch::Differenced, Branch::Plain}) {
    const auto hist = order_histogram(terms, b);
    Json orders = Json::array();
    Json counts = Json::array();
    table << "histogram " << to_string(b) << ':';
    for (const auto& [order, count] : hist) {
      orders.push_back(order);
      counts.push_back(count);
      table << ' ' << order << "->" << count;
    }
    table << '\n';
    Json h;
    h["orders"] = std::move(orders);
    h["counts"] = std::move(counts);
    histograms[to_string(b)] = std::move(h);
  }
  doc["histogram"] = std::move(histograms);
  doc["branch_size"] = half;
  doc["total_exponent"] = total;
  doc["closed_form_exponent"] = exact_integer(closed);
  Json plans;
  plans["sampled"] = o.plans;
  plans["seed"] = g.seed;
  plans["exponents"] = sampled;
  plans["all_equal"] = plans_agree;
  doc["plans"] = std::move(plans);
  doc["sum_identity"] = verify_sum_identity(o.d);
  doc["verdict"] = match ? "MATCH" : "MISMATCH";

  table << "total exponent " << total << ", closed form " << closed.str();
  if (o.plans > 0) table << ", " << o.plans << " sampled plans " << (plans_agree ? "agree" : "DISAGREE");
  table << '\n' << (match ? "MATCH" : "MISMATCH") << '\n';
  emit(g, doc, table.str(), out);
  return match ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------- search

int cmd_search(const GlobalOptions& g, const SearchOptions& o, std::ostream& out,
               std::ostream& err) {
  SearchConfig cfg;
  cfg.d = o.d;
  cfg.p = o.p;
  if (cfg.d < 1) throw UsageError("--d must be >= 1");
  cfg.box_shape = broadcast_box(o.box, cfg.d);
  cfg.restarts = o.restarts;
  cfg.iters = o.iters;
  cfg.step_init = o.step;
  cfg.seed = g.seed;
  cfg.tolerance = g.tolerance;
  validate(cfg);

  const SearchResult r = search(cfg);
  for (std::size_t i = 0; i < r.history.size(); ++i) {
    err << "restart " << i << ": best ratio " << format_double(r.history[i]) << " ("
        << r.accepted[i] << " accepted)\n";
  }
  const bool bound_ok = r.max_evaluated_ratio <= 1.0 + cfg.tolerance;
  if (o.out) write_sequence_file(*o.out, r.best_seq);

  Json doc;
  doc["label"] = "empirical lower bound on best constant";
  doc["d"] = cfg.d;
  doc["p"] = cfg.p;
  doc["box"] = cfg.box_shape;
  doc["restarts"] = cfg.restarts;
  doc["iters"] = cfg.iters;
  doc["step_init"] = cfg.step_init;
  doc["seed"] = cfg.seed;
  doc["mu"] = mu(ConstantSpec{cfg.d, cfg.p}).approx;
  doc["best_ratio"] = r.best_ratio;
  doc["gap"] = 1.0 - r.best_ratio;
  doc["best_restart"] = r.best_restart;
  doc["history"] = r.history;
  doc["accepted"] = r.accepted;
  doc["max_evaluated_ratio"] = r.max_evaluated_ratio;
  doc["bound_respected"] = bound_ok;
  doc["sequence"] = to_json(r.best_seq);

  std::ostringstream table;
  table << "empirical lower bound on best constant\nbest_ratio\t" << format_double(r.best_ratio)
        << "\ngap\t" << format_double(1.0 - r.best_ratio) << "\nbest_restart\t" << r.best_restart
        << "\nbound_respected\t" << (bound_ok ? "yes" : "NO") << '\n';
  emit(g, doc, table.str(), out);
  if (!bound_ok) {
    err << "error: an evaluated ratio exceeded 1 + tolerance; this indicates a bug\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Agmon-Kolmogorov inequalities on Z^d", "agmon"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "Relative slack for inequality checks")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();

  ConstantsOptions co;
  auto* constants = app.add_subcommand("constants", "Exact constants kappa, mu, rho and Omega counts");
  constants->add_option("--d", co.d, "Dimension")->required();
  auto* p_opt = constants->add_option("--p", co.p, "Exponent parameter, 1..2^(d-1)");
  constants->add_flag("--all-p", co.all_p, "Emit every admissible p")->excludes(p_opt);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check inequalities on a file or random sequences");
  auto* input_opt = verify->add_option("--input", vo.input, "Sequence file");
  verify->add_flag("--random", vo.random, "Run a randomized suite")->excludes(input_opt);
  verify->add_option("--d", vo.d, "Dimension");
  verify->add_option("--p", vo.p, "Exponent parameter for the main inequality")->capture_default_str();
  verify->add_option("--count", vo.count, "Number of random trials")->capture_default_str();
  verify->add_option("--inequality", vo.inequality,
                     "main | agmon-cauchy | diff-bound | agmon1d | copson | copson-half")
      ->capture_default_str();
  verify->add_option("--distribution", vo.distribution, "uniform-signed | gaussian | sparse")
      ->capture_default_str();
  verify->add_option("--box", vo.box, "Box extents (one value or one per axis)");

  TraceOptions to;
  auto* trace = app.add_subcommand("trace", "Replay the kappa bookkeeping term by term");
  trace->add_option("--d", to.d, "Dimension")->required();
  trace->add_option("--p", to.p, "Exponent parameter (default 2^(d-1))");
  trace->add_option("--plans", to.plans, "Number of random reduction plans to compare")
      ->capture_default_str();

  SearchOptions so;
  auto* search_cmd = app.add_subcommand("search", "Search for near-extremal sequences");
  search_cmd->add_option("--d", so.d, "Dimension")->required();
  search_cmd->add_option("--p", so.p, "Exponent parameter")->capture_default_str();
  search_cmd->add_option("--box", so.box, "Box extents (one value or one per axis)")
      ->capture_default_str();
  search_cmd->add_option("--restarts", so.restarts, "Restarts")->capture_default_str();
  search_cmd->add_option("--iters", so.iters, "Iterations per restart")->capture_default_str();
  search_cmd->add_option("--step", so.step, "Initial step size")->capture_default_str();
  search_cmd->add_option("--out", so.out, "Write the best sequence to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (constants->parsed()) return cmd_constants(g, co, out);
    if (verify->parsed()) return cmd_verify(g, vo, out);
    if (trace->parsed()) return cmd_trace(g, to, out);
    if (search_cmd->parsed()) return cmd_search(g, so, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace agmon::cli

// hecke-trace: command-line front end.
//
//   hecke-trace trace   --n 3 --lambda 2,1 --method all
//   hecke-trace kostant --n 3 --lambda 2,1 --list
//   hecke-trace tesler  --hooks 1,1 --list --sum
//   hecke-trace chamber --n 4 --lambda 3,1,2
//   hecke-trace wset    --n 4 --m 2 [--direct]
//   hecke-trace verify  --n-max 3 --cap 4 --degree 6 --jobs 4
//
// Exit codes: 0 success, 2 usage, 3 precondition or resource limit,
// 4 internal identity violation (non-exact division, methods disagree).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hecke/chambers.hpp"
#include "hecke/driver.hpp"
#include "hecke/kostant.hpp"
#include "hecke/serialize.hpp"
#include "hecke/tesler.hpp"

namespace {

using hecke::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightArgs {
  std::optional<int> n;
  std::vector<int> lambda;
  std::vector<int> hooks;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "rank parameter of A_{n-1}");
    auto* l = cmd->add_option("--lambda", lambda, "simple-root coordinates a1,a2,...")
                  ->delimiter(',');
    auto* h = cmd->add_option("--hooks", hooks, "hook sums b1,b2,...")->delimiter(',');
    l->excludes(h);
    h->excludes(l);
  }

  std::pair<int, hecke::WeightVector> resolve() const {
    hecke::WeightVector w;
    if (!lambda.empty()) {
      w = hecke::WeightVector(lambda);
    } else if (!hooks.empty()) {
      w = hecke::lambda_from_hooks(hooks);
    } else {
      throw UsageError("one of --lambda or --hooks is required");
    }
    const int inferred = static_cast<int>(w.rank()) + 1;
    if (n && *n != inferred) {
      throw UsageError("--n " + std::to_string(*n) + " does not match a weight with " +
                       std::to_string(w.rank()) + " coordinates");
    }
    if (inferred < 2) throw UsageError("n must be at least 2");
    return {inferred, std::move(w)};
  }
};

bool json_format(const std::string& format) { return format == "json"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_trace(const WeightArgs& wa, const std::string& method, int degree, bool verbose,
              const std::string& format) {
  auto [n, lambda] = wa.resolve();
  hecke::TraceRequest req;
  req.n = n;
  req.lambda = lambda;
  req.degree = degree;
  req.verbose = verbose;
  if (method == "all") {
    req.methods = {hecke::Method::Kostant, hecke::Method::Residue, hecke::Method::Product,
                   hecke::Method::Series};
  } else if (auto m = hecke::parse_method(method)) {
    req.methods = {*m};
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  const auto rep = hecke::run_trace(req, hecke::ResourceLimits::from_env());
  if (json_format(format)) {
    print_json(hecke::to_json(rep));
  } else {
    std::cout << hecke::to_text(rep);
  }
  return rep.exit_code;
}

int cmd_kostant(const WeightArgs& wa, bool list, const std::string& format) {
  auto [n, lambda] = wa.resolve();
  const hecke::RootSystemA sys(n);
  const auto parts = hecke::enumerate_kostant(sys, lambda);
  const auto trace = hecke::trace_kostant(sys, lambda);
  if (json_format(format)) {
    Json j{{"schema", hecke::kSchema},
           {"command", "kostant"},
           {"n", n},
           {"lambda", hecke::weight_to_json(lambda)},
           {"count", parts.size()}};
    if (list) {
      Json arr = Json::array();
      for (const auto& p : parts) arr.push_back(p.multiplicities);
      j["partitions"] = std::move(arr);
    }
    j["trace"] = hecke::laurent_to_json(trace);
    print_json(j);
    return hecke::kExitOk;
  }
  if (list) {
    for (const auto& p : parts) {
      for (std::size_t k = 0; k < p.multiplicities.size(); ++k) {
        std::cout << (k ? "," : "") << p.multiplicities[k];
      }
      std::cout << "\n";
    }
  }
  std::cout << "count: " << parts.size() << "\n";
  std::cout << "trace: " << trace << "\n";
  return hecke::kExitOk;
}

int cmd_tesler(const std::vector<int>& hooks, bool list, bool sum, const std::string& format) {
  if (hooks.empty()) throw UsageError("--hooks is required");
  const auto mats = hecke::enumerate_tesler(hooks);
  const bool want_sum = sum || !list;
  std::optional<hecke::TeslerSum> totals;
  if (want_sum) totals = hecke::tesler_weighted_sum(hooks);

  if (json_format(format)) {
    Json j{{"schema", hecke::kSchema},
           {"command", "tesler"},
           {"hooks", hooks},
           {"lambda", hecke::weight_to_json(hecke::lambda_from_hooks(hooks))},
           {"count", mats.size()}};
    if (list) {
      Json arr = Json::array();
      for (const auto& m : mats) arr.push_back(m.entries);
      j["matrices"] = std::move(arr);
    }
    if (totals) {
      j["raw_sum"] = hecke::laurent_to_json(totals->raw);
      j["divisible"] = totals->divisible();
      j["normalized"] = totals->normalized ? hecke::laurent_to_json(*totals->normalized) : Json();
    }
    print_json(j);
    return hecke::kExitOk;
  }
  if (list) {
    for (const auto& m : mats) {
      std::cout << "[";
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::cout << (i ? "," : "") << "[";
        for (std::size_t k = 0; k < m.size(); ++k) std::cout << (k ? "," : "") << m(i, k);
        std::cout << "]";
      }
      std::cout << "]\n";
    }
  }
  std::cout << "count: " << mats.size() << "\n";
  if (totals) {
    std::cout << "raw_sum: " << totals->raw << "\n";
    if (totals->normalized) {
      std::cout << "normalized: " << *totals->normalized << "\n";
    } else {
      std::cout << "normalized: NonDivisible\n";
    }
  }
  return hecke::kExitOk;
}

int cmd_chamber(const WeightArgs& wa, const std::string& format) {
  auto [n, lambda] = wa.resolve();
  const auto c = hecke::classify_chamber(lambda);
  if (json_format(format)) {
    print_json(Json{{"schema", hecke::kSchema},
                    {"command", "chamber"},
                    {"n", n},
                    {"lambda", hecke::weight_to_json(lambda)},
                    {"classification", c.to_string()}});
  } else {
    std::cout << c.to_string() << "\n";
  }
  return hecke::kExitOk;
}

int cmd_wset(int n, int m, bool direct, const std::string& format) {
  const auto ws = direct ? hecke::wset_direct(n, m) : hecke::wset(n, m);
  if (json_format(format)) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(w.one_line());
    print_json(Json{{"schema", hecke::kSchema},
                    {"command", "wset"},
                    {"n", n},
                    {"m", m},
                    {"direct", direct},
                    {"permutations", std::move(arr)}});
  } else {
    for (const auto& w : ws) std::cout << w.to_string() << "\n";
  }
  return hecke::kExitOk;
}

int cmd_verify(const hecke::VerifyConfig& cfg, const std::string& format) {
  const auto rep = hecke::run_verify(cfg, hecke::ResourceLimits::from_env());
  if (json_format(format)) {
    print_json(hecke::to_json(rep));
  } else {
    std::cout << hecke::to_text(rep);
  }
  return rep.pass ? hecke::kExitOk : hecke::kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trace values on the extended affine Hecke algebra of type A"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* trace = app.add_subcommand("trace", "evaluate tau(theta_{-lambda})");
  WeightArgs trace_args;
  trace_args.attach(trace);
  std::string method = "kostant";
  int degree = -1;
  bool verbose = false;
  trace->add_option("--method", method, "kostant|residue|product|series|all")
      ->check(CLI::IsMember({"kostant", "residue", "product", "series", "all"}))
      ->capture_default_str();
  trace->add_option("--degree", degree, "series truncation degree (default: sum of a_i)");
  trace->add_flag("--verbose", verbose, "print residue terms");
  trace->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* kostant = app.add_subcommand("kostant", "Kostant partitions of lambda");
  WeightArgs kostant_args;
  kostant_args.attach(kostant);
  bool kostant_list = false;
  kostant->add_flag("--list", kostant_list, "print every partition");
  kostant->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tesler = app.add_subcommand("tesler", "Tesler matrices with given hook sums");
  std::vector<int> tesler_hooks;
  bool tesler_list = false;
  bool tesler_sum = false;
  tesler->add_option("--hooks", tesler_hooks, "hook sums b1,b2,...")->delimiter(',')->required();
  tesler->add_flag("--list", tesler_list, "print every matrix");
  tesler->add_flag("--sum", tesler_sum, "print the weighted sums");
  tesler->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* chamber = app.add_subcommand("chamber", "classify lambda against the a^m chambers");
  WeightArgs chamber_args;
  chamber_args.attach(chamber);
  chamber->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* wset = app.add_subcommand("wset", "permutations W^m_{n-1}");
  int wset_n = 0;
  int wset_m = 0;
  bool wset_direct = false;
  wset->add_option("--n", wset_n)->required();
  wset->add_option("--m", wset_m)->required();
  wset->add_flag("--direct", wset_direct, "filter all of S_n by cone containment");
  wset->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "cross-check all methods on a grid of weights");
  hecke::VerifyConfig cfg;
  verify->add_option("--n-max", cfg.n_max)->capture_default_str();
  verify->add_option("--cap", cfg.coord_cap, "coordinate cap")->capture_default_str();
  verify->add_option("--degree", cfg.series_degree, "series truncation degree")
      ->capture_default_str();
  verify->add_option("--jobs", cfg.jobs)->capture_default_str();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hecke::kExitUsage;
  }

  try {
    if (*trace) return cmd_trace(trace_args, method, degree, verbose, format);
    if (*kostant) return cmd_kostant(kostant_args, kostant_list, format);
    if (*tesler) return cmd_tesler(tesler_hooks, tesler_list, tesler_sum, format);
    if (*chamber) return cmd_chamber(chamber_args, format);
    if (*wset) return cmd_wset(wset_n, wset_m, wset_direct, format);
    if (*verify) return cmd_verify(cfg, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return hecke::kExitUsage;
  } catch (const hecke::DimensionMismatch& e) {
    std::cerr << "usage error: " << e.reason() << ": " << e.what() << "\n";
    return hecke::kExitUsage;
  } catch (const hecke::RankTooSmall& e) {
    std::cerr << "usage error: " << e.reason() << ": " << e.what() << "\n";
    return hecke::kExitUsage;
  } catch (const hecke::OutOfRange& e) {
    std::cerr << "usage error: " << e.reason() << ": " << e.what() << "\n";
    return hecke::kExitUsage;
  } catch (const hecke::ResourceLimit& e) {
    std::cerr << "refused: " << e.reason() << ": " << e.what() << "\n";
    return hecke::kExitPrecondition;
  } catch (const hecke::NonDivisible& e) {
    std::cerr << "internal: " << e.reason() << ": " << e.what() << "\n";
    return hecke::kExitInternal;
  } catch (const hecke::Error& e) {
    std::cerr << "error: " << e.reason() << ": " << e.what() << "\n";
    return hecke::kExitPrecondition;
  }
  return hecke::kExitUsage;
}

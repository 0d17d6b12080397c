#pragma once

// Cross-method evaluation and the verification grid behind the CLI.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "hecke/chambers.hpp"
#include "hecke/serialize.hpp"
#include "hecke/kostant.hpp"
#include "hecke/product.hpp"
#include "hecke/residue.hpp"
#include "hecke/series.hpp"
#include "hecke/tesler.hpp"

namespace hecke {

inline constexpr const char* kSchema = "hecke-trace/1";

enum class Method { Kostant, Residue, Product, Series };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Kostant: return "kostant";
    case Method::Residue: return "residue";
    case Method::Product: return "product";
    case Method::Series: return "series";
  }
  return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
  if (s == "kostant") return Method::Kostant;
  if (s == "residue") return Method::Residue;
  if (s == "product") return Method::Product;
  if (s == "series") return Method::Series;
  return std::nullopt;
}

enum class Outcome { Ok, Skipped, Failed };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Ok: return "OK";
    case Outcome::Skipped: return "SKIPPED";
    case Outcome::Failed: return "FAILED";
  }
  return "?";
}

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

struct MethodResult {
  Method method = Method::Kostant;
  Outcome outcome = Outcome::Ok;
  std::string reason;  // error name when not Ok
  std::string detail;
  LaurentPoly value;
  std::vector<ResidueTerm> residue_terms;  // residue method, verbose only
};

/// Resource caps read from the environment; all mathematical inputs come
/// from flags.
struct ResourceLimits {
  int max_n = 7;
  int max_coord = 12;
  int max_degree = 24;
  std::size_t max_series_terms = kDefaultMaxSeriesTerms;
  std::size_t max_cases = 250'000;

  static ResourceLimits from_env() {
    ResourceLimits lim;
    auto read = [](const char* name, auto& field) {
      if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
        field = static_cast<std::remove_reference_t<decltype(field)>>(std::stoll(v));
      }
    };
    read("HECKE_TRACE_MAX_N", lim.max_n);
    read("HECKE_TRACE_MAX_COORD", lim.max_coord);
    read("HECKE_TRACE_MAX_DEGREE", lim.max_degree);
    read("HECKE_TRACE_MAX_SERIES_TERMS", lim.max_series_terms);
    read("HECKE_TRACE_MAX_CASES", lim.max_cases);
    return lim;
  }
};

/// Evaluates one method, mapping library errors to outcomes instead of
/// propagating them. Preconditions (chamber, truncation) give Skipped;
/// anything else gives Failed.
inline MethodResult evaluate_method(Method method, int n, const WeightVector& lambda,
                                    KostantEvaluator* kostant, const TruncatedSeries* series,
                                    bool keep_terms = false) {
  MethodResult r;
  r.method = method;
  try {
    switch (method) {
      case Method::Kostant:
        r.value = kostant != nullptr ? kostant->trace(lambda)
                                     : trace_kostant(RootSystemA(n), lambda);
        break;
      case Method::Residue: {
        auto ev = evaluate_residue(n, lambda);
        r.value = std::move(ev.trace);
        if (keep_terms) r.residue_terms = std::move(ev.terms);
        break;
      }
      case Method::Product:
        r.value = trace_product(n, lambda);
        break;
      case Method::Series:
        if (series == nullptr) throw OutOfTruncation("no series available");
        r.value = series_coefficient(*series, lambda);
        break;
    }
  } catch (const NotInChamberInterior& e) {
    r.outcome = Outcome::Skipped;
    r.reason = e.reason();
    r.detail = e.what();
  } catch (const OutOfTruncation& e) {
    r.outcome = Outcome::Skipped;
    r.reason = e.reason();
    r.detail = e.what();
  } catch (const Error& e) {
    r.outcome = Outcome::Failed;
    r.reason = e.reason();
    r.detail = e.what();
  }
  return r;
}

// ---------------------------------------------------------------------------
// trace

struct TraceRequest {
  int n = 0;
  WeightVector lambda;
  std::vector<Method> methods;
  int degree = -1;  // series truncation; defaults to the total degree of lambda
  bool verbose = false;
};

struct TraceReport {
  int n = 0;
  WeightVector lambda;
  ChamberClassification chamber;
  std::vector<MethodResult> results;
  bool compare = false;  // more than one method requested
  bool agree = true;
  int exit_code = kExitOk;
};

inline TraceReport run_trace(const TraceRequest& req,
                             const ResourceLimits& limits = ResourceLimits{}) {
  require_rank(req.lambda, req.n);
  TraceReport rep;
  rep.n = req.n;
  rep.lambda = req.lambda;
  rep.chamber = classify_chamber(req.lambda);
  rep.compare = req.methods.size() > 1;

  std::optional<TruncatedSeries> series;
  for (Method m : req.methods) {
    if (m != Method::Series) continue;
    const int degree = req.degree >= 0 ? req.degree : std::max(0, req.lambda.total());
    if (degree > limits.max_degree) {
      throw ResourceLimit("series degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(limits.max_degree));
    }
    series = eta_series(req.n, degree, limits.max_series_terms);
  }

  KostantEvaluator kostant(req.n);
  for (Method m : req.methods) {
    rep.results.push_back(evaluate_method(m, req.n, req.lambda, &kostant,
                                          series ? &*series : nullptr, req.verbose));
  }

  const LaurentPoly* first = nullptr;
  bool precondition = false;
  bool internal = false;
  for (const auto& r : rep.results) {
    if (r.outcome == Outcome::Skipped) precondition = true;
    if (r.outcome == Outcome::Failed) internal = true;
    if (r.outcome != Outcome::Ok) continue;
    if (first == nullptr) {
      first = &r.value;
    } else if (!(*first == r.value)) {
      rep.agree = false;
    }
  }
  if (internal || !rep.agree) {
    rep.exit_code = kExitInternal;
  } else if (precondition) {
    rep.exit_code = kExitPrecondition;
  }
  return rep;
}

inline Json to_json(const TraceReport& rep) {
  Json results = Json::array();
  for (const auto& r : rep.results) {
    Json j{{"method", method_name(r.method)}, {"status", outcome_name(r.outcome)}};
    if (r.outcome == Outcome::Ok) {
      j["value"] = laurent_to_json(r.value);
      j["text"] = r.value.to_string();
    } else {
      j["reason"] = r.reason;
      j["detail"] = r.detail;
    }
    if (!r.residue_terms.empty()) {
      Json terms = Json::array();
      for (const auto& t : r.residue_terms) {
        terms.push_back(Json{{"w", t.w.one_line()}, {"sign", t.sign}, {"exponent", t.exponent}});
      }
      j["residue_terms"] = std::move(terms);
    }
    results.push_back(std::move(j));
  }
  Json out{{"schema", kSchema},
           {"command", "trace"},
           {"n", rep.n},
           {"lambda", weight_to_json(rep.lambda)},
           {"chamber", rep.chamber.to_string()},
           {"results", std::move(results)}};
  if (rep.compare) out["verdict"] = rep.agree ? "AGREE" : "DISAGREE";
  out["exit_code"] = rep.exit_code;
  return out;
}

inline std::string to_text(const TraceReport& rep) {
  std::string s = "n=" + std::to_string(rep.n) + " lambda=(" + to_string(rep.lambda) +
                  ") chamber=" + rep.chamber.to_string() + "\n";
  for (const auto& r : rep.results) {
    s += std::string(method_name(r.method)) + ": ";
    if (r.outcome == Outcome::Ok) {
      s += r.value.to_string();
    } else {
      s += std::string(outcome_name(r.outcome)) + " " + r.reason + ": " + r.detail;
    }
    s += "\n";
    for (const auto& t : r.residue_terms) {
      s += "  w=" + t.w.to_string() + " sign=" + (t.sign > 0 ? "+1" : "-1") +
           " exponent=" + std::to_string(t.exponent) + "\n";
    }
  }
  if (rep.compare) s += std::string("verdict: ") + (rep.agree ? "AGREE" : "DISAGREE") + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
  int n_max = 3;
  int coord_cap = 4;
  int series_degree = 6;
  int jobs = 1;
};

struct VerifyCase {
  int n = 0;
  WeightVector lambda;
  ChamberClassification chamber;
  LaurentPoly oracle;
  std::vector<MethodResult> results;  // residue, product, series
  Outcome tesler = Outcome::Ok;       // raw Tesler sum against the oracle
  bool agree = true;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<VerifyCase> cases;
  bool empty = true;
  bool pass = true;
};

/// Weights of A_{n-1} with 0 <= a_i <= cap, lexicographic.
inline std::vector<WeightVector> weight_box(int n, int cap) {
  std::vector<WeightVector> out;
  if (cap < 0) return out;
  WeightVector cur(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
  while (true) {
    out.push_back(cur);
    std::size_t k = cur.rank();
    while (k > 0 && cur[k - 1] == cap) cur[--k] = 0;
    if (k == 0) return out;
    ++cur[k - 1];
  }
}

/// Compares every method against the Kostant oracle over the grid
/// 2 <= n <= n_max, 0 <= a_i <= coord_cap. Output order is independent of
/// the worker count.
inline VerifyReport run_verify(const VerifyConfig& cfg,
                               const ResourceLimits& limits = ResourceLimits{}) {
  if (cfg.n_max > limits.max_n) {
    throw ResourceLimit("n_max=" + std::to_string(cfg.n_max) + " exceeds cap " +
                        std::to_string(limits.max_n));
  }
  if (cfg.coord_cap > limits.max_coord) {
    throw ResourceLimit("coordinate cap " + std::to_string(cfg.coord_cap) + " exceeds cap " +
                        std::to_string(limits.max_coord));
  }
  if (cfg.series_degree > limits.max_degree) {
    throw ResourceLimit("series degree " + std::to_string(cfg.series_degree) +
                        " exceeds cap " + std::to_string(limits.max_degree));
  }

  VerifyReport rep;
  rep.config = cfg;
  if (cfg.coord_cap < 0) return rep;

  std::map<int, TruncatedSeries> series;
  for (int n = 2; n <= cfg.n_max; ++n) {
    for (auto& lambda : weight_box(n, cfg.coord_cap)) {
      if (rep.cases.size() >= limits.max_cases) {
        throw ResourceLimit("grid exceeds " + std::to_string(limits.max_cases) + " cases");
      }
      rep.cases.push_back(VerifyCase{n, std::move(lambda), {}, {}, {}, Outcome::Ok, true});
    }
    if (cfg.series_degree >= 0) {
      series.emplace(n, eta_series(n, cfg.series_degree, limits.max_series_terms));
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::map<int, std::unique_ptr<KostantEvaluator>> evaluators;
    for (std::size_t idx = next++; idx < rep.cases.size(); idx = next++) {
      auto& c = rep.cases[idx];
      auto& ev = evaluators[c.n];
      if (!ev) ev = std::make_unique<KostantEvaluator>(c.n);
      const auto it = series.find(c.n);
      const TruncatedSeries* s = it == series.end() ? nullptr : &it->second;

      c.chamber = classify_chamber(c.lambda);
      c.oracle = ev->trace(c.lambda);
      for (Method m : {Method::Residue, Method::Product, Method::Series}) {
        c.results.push_back(evaluate_method(m, c.n, c.lambda, ev.get(), s));
        const auto& r = c.results.back();
        if (r.outcome == Outcome::Failed || (r.outcome == Outcome::Ok && !(r.value == c.oracle))) {
          c.agree = false;
        }
      }
      const auto hooks = hooks_from_lambda(c.lambda);
      if (!(tesler_weighted_sum(hooks).raw == c.oracle)) {
        c.tesler = Outcome::Failed;
        c.agree = false;
      }
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  rep.empty = rep.cases.empty();
  for (const auto& c : rep.cases) rep.pass = rep.pass && c.agree;
  return rep;
}

inline Json to_json(const VerifyReport& rep) {
  Json cases = Json::array();
  std::size_t agree = 0;
  for (const auto& c : rep.cases) {
    Json methods = Json::object();
    methods["kostant"] = "ORACLE";
    for (const auto& r : c.results) {
      std::string status = outcome_name(r.outcome);
      if (r.outcome == Outcome::Ok) status = r.value == c.oracle ? "AGREE" : "DISAGREE";
      methods[method_name(r.method)] = status;
    }
    methods["tesler"] = c.tesler == Outcome::Ok ? "AGREE" : "DISAGREE";
    cases.push_back(Json{{"n", c.n},
                         {"lambda", weight_to_json(c.lambda)},
                         {"chamber", c.chamber.to_string()},
                         {"trace", c.oracle.to_string()},
                         {"methods", std::move(methods)},
                         {"verdict", c.agree ? "AGREE" : "DISAGREE"}});
    if (c.agree) ++agree;
  }
  return Json{{"schema", kSchema},
              {"command", "verify"},
              {"config",
               {{"n_max", rep.config.n_max},
                {"coord_cap", rep.config.coord_cap},
                {"series_degree", rep.config.series_degree}}},
              {"empty", rep.empty},
              {"pass", rep.pass},
              {"summary",
               {{"cases", rep.cases.size()},
                {"agree", agree},
                {"disagree", rep.cases.size() - agree}}},
              {"cases", std::move(cases)}};
}

inline std::string to_text(const VerifyReport& rep) {
  std::string s;
  std::size_t agree = 0;
  for (const auto& c : rep.cases) {
    s += "n=" + std::to_string(c.n) + " lambda=(" + to_string(c.lambda) + ") " +
         c.chamber.to_string();
    for (const auto& r : c.results) {
      s += std::string(" ") + method_name(r.method) + "=";
      if (r.outcome == Outcome::Ok) {
        s += r.value == c.oracle ? "AGREE" : "DISAGREE";
      } else {
        s += outcome_name(r.outcome);
      }
    }
    s += std::string(" tesler=") + (c.tesler == Outcome::Ok ? "AGREE" : "DISAGREE");
    s += c.agree ? "  ok\n" : "  MISMATCH\n";
    if (c.agree) ++agree;
  }
  s += "cases=" + std::to_string(rep.cases.size()) + " agree=" + std::to_string(agree) +
       (rep.empty ? " (empty grid)" : "") + " result=" + (rep.pass ? "PASS" : "FAIL") + "\n";
  return s;
}

}  // namespace hecke

#include "toricbound/harness/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "toricbound/error.hpp"
#include "toricbound/poset/poset.hpp"
#include "toricbound/rng.hpp"
#include "toricbound/solver/solver.hpp"

namespace toricbound::harness {

using nlohmann::json;
using wronski::Rational;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw Error(ErrorCode::kInvalidInput, "weights must be integers or strings like \"3/2\"");
  const std::string text = j.get<std::string>();
  const auto slash = text.find('/');
  try {
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator in " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kInvalidInput, "not a rational: " + text);
  }
}

}  // namespace

std::uint64_t trial_stream(long trial, int attempt) {
  return (static_cast<std::uint64_t>(trial) << 8) | static_cast<std::uint64_t>(attempt);
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::kInvalidInput, "trials must be at least 1");
  if (coeff_range.lo > coeff_range.hi) throw Error(ErrorCode::kInvalidInput, "empty coefficient range");
  if (parallelism < 1) throw Error(ErrorCode::kInvalidInput, "parallelism must be at least 1");
}

ExperimentConfig config_from_json(const std::string& text) {
  ExperimentConfig c;
  try {
    const json j = json::parse(text);
    if (j.contains("polytope")) c.polytope = j.at("polytope").get<std::string>();
    if (j.contains("weights")) c.weights_file = j.at("weights").get<std::string>();
    if (j.contains("coeff_range")) {
      const auto& r = j.at("coeff_range");
      c.coeff_range = r.is_string() ? wronski::CoeffRange::parse(r.get<std::string>())
                                    : wronski::CoeffRange{r.at(0).get<long>(), r.at(1).get<long>()};
    }
    if (j.contains("s")) c.s_policy = wronski::SPolicy::parse(j.at("s").get<std::string>());
    if (j.contains("trials")) c.trials = j.at("trials").get<long>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("parallelism")) c.parallelism = j.at("parallelism").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json j = {{"polytope", c.polytope},
            {"coeff_range", std::to_string(c.coeff_range.lo) + ".." + std::to_string(c.coeff_range.hi)},
            {"s", c.s_policy.to_string()},
            {"trials", c.trials},
            {"seed", c.seed},
            {"parallelism", c.parallelism}};
  if (!c.weights_file.empty()) j["weights"] = c.weights_file;
  return j.dump();
}

long ExperimentReport::trials() const {
  long n = 0;
  for (const auto& [k, v] : histogram) n += v;
  return n;
}

wronski::WronskiFamily load_family(const ExperimentConfig& config) {
  const std::string& name = config.polytope;
  wronski::WronskiFamily fam;
  const auto names = polytope::builtin_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    fam = wronski::builtin_family(name);
  } else if (name.rfind("order:", 0) == 0 || name.rfind("chain:", 0) == 0) {
    const auto kind = name[0] == 'o' ? polytope::PosetPolytopeKind::kOrder : polytope::PosetPolytopeKind::kChain;
    const auto p = poset::parse_poset(read_file(name.substr(6)));
    if (p.size() > 3) throw Error(ErrorCode::kUnsupportedDimension, "the solver handles posets of at most 3 elements");
    fam = wronski::poset_family(p, kind);
  } else {
    json j;
    try {
      j = json::parse(read_file(name));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kInvalidInput, std::string("bad polytope file: ") + e.what());
    }
    if (!j.contains("polytope") || !j.contains("triangulation"))
      throw Error(ErrorCode::kInvalidInput, "polytope file needs \"polytope\" and \"triangulation\"");
    const auto poly = polytope::polytope_from_json(j["polytope"].dump());
    const auto tri = polytope::triangulation_from_json(j["triangulation"].dump());
    fam = wronski::make_family(poly, tri, std::vector<Rational>(poly.lattice_points.size(), Rational(1)));
    if (j.contains("deformation")) {
      fam.omega = j["deformation"].get<std::vector<long>>();
      if (fam.omega.size() != poly.lattice_points.size())
        throw Error(ErrorCode::kDimensionMismatch, "deformation needs one exponent per lattice point");
    }
  }
  if (fam.polytope.dim > 3) throw Error(ErrorCode::kUnsupportedDimension, "the solver handles at most 3 variables");

  if (!config.weights_file.empty()) {
    json w;
    try {
      w = json::parse(read_file(config.weights_file));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kInvalidInput, std::string("bad weights file: ") + e.what());
    }
    if (!w.is_array()) throw Error(ErrorCode::kInvalidInput, "weights file must hold an array");
    std::vector<Rational> alpha;
    for (const auto& x : w) alpha.push_back(parse_rational(x));
    fam = wronski::with_weights(std::move(fam), std::move(alpha));
  }
  return fam;
}

TrialResult run_trial(const wronski::WronskiFamily& fam, const ExperimentConfig& config, long trial) {
  TrialResult out;
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    const std::uint64_t stream = trial_stream(trial, attempt);
    const auto sys = wronski::sample_system(fam, config.seed, config.coeff_range, config.s_policy, stream);
    try {
      const auto rep = solver::count_solutions(sys, mix64(config.seed ^ mix64(stream)));
      if (rep.generic) {
        out.n_real = rep.n_real;
        out.n_complex = rep.n_complex;
        return out;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNonGenericSystem) throw;
    }
    ++out.resamples;
  }
  throw Error(ErrorCode::kNonGenericSystem,
              "trial " + std::to_string(trial) + " stayed degenerate after " + std::to_string(kMaxResamples) + " redraws");
}

ExperimentReport run_experiment(const wronski::WronskiFamily& fam, const ExperimentConfig& config) {
  config.validate();
  if (fam.polytope.dim > 3) throw Error(ErrorCode::kUnsupportedDimension, "the solver handles at most 3 variables");
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialResult> results(static_cast<size_t>(config.trials));
  const int workers = static_cast<int>(std::min<long>(config.parallelism, config.trials));
  std::vector<std::exception_ptr> failures(static_cast<size_t>(workers));
  auto work = [&](int w) {
    try {
      for (long t = w; t < config.trials; t += workers) results[static_cast<size_t>(t)] = run_trial(fam, config, t);
    } catch (...) {
      failures[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  ExperimentReport r;
  r.lower_bound_used = fam.signature;
  for (const auto& t : results) {
    ++r.histogram[t.n_real];
    r.n_nongeneric_resampled += t.resamples;
    if (t.n_real < r.lower_bound_used) ++r.violations;
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(load_family(config), config);
}

ReportFormat parse_format(const std::string& text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  if (text == "table") return ReportFormat::kTable;
  throw Error(ErrorCode::kInvalidInput, "unknown format " + text + " (csv, json or table)");
}

std::string emit_report(const ExperimentReport& r, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kCsv:
      out << "real_count,occurrences\n";
      for (const auto& [k, v] : r.histogram) out << k << ',' << v << '\n';
      break;
    case ReportFormat::kJson: {
      json hist = json::object();
      for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
      json j = {{"histogram", hist},
                {"n_nongeneric_resampled", r.n_nongeneric_resampled},
                {"lower_bound_used", r.lower_bound_used},
                {"violations", r.violations},
                {"wall_time", r.wall_time}};
      out << j.dump() << '\n';
      break;
    }
    case ReportFormat::kTable: {
      std::vector<std::string> heads{"real solutions"}, counts{"occurrences"}, shares{"share"};
      const long n = r.trials();
      for (const auto& [k, v] : r.histogram) {
        heads.push_back(std::to_string(k));
        counts.push_back(std::to_string(v));
        std::ostringstream pct;
        pct << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(v) / static_cast<double>(n) << '%';
        shares.push_back(pct.str());
      }
      std::vector<size_t> width(heads.size());
      for (size_t i = 0; i < heads.size(); ++i)
        width[i] = std::max({heads[i].size(), counts[i].size(), shares[i].size()});
      for (const auto* row : {&heads, &counts, &shares}) {
        for (size_t i = 0; i < row->size(); ++i) {
          if (i == 0)
            out << std::left << std::setw(static_cast<int>(width[i])) << (*row)[i];
          else
            out << "  " << std::right << std::setw(static_cast<int>(width[i])) << (*row)[i];
        }
        out << '\n';
      }
      out << "trials " << n << ", resampled " << r.n_nongeneric_resampled << ", lower bound "
          << r.lower_bound_used << ", violations " << r.violations << ", " << std::setprecision(2) << std::fixed
          << r.wall_time << " s\n";
      break;
    }
  }
  return out.str();
}

ExperimentReport report_from_json(const std::string& text) {
  ExperimentReport r;
  try {
    const json j = json::parse(text);
    for (const auto& [k, v] : j.at("histogram").items()) r.histogram[std::stol(k)] = v.get<long>();
    r.n_nongeneric_resampled = j.at("n_nongeneric_resampled").get<long>();
    r.lower_bound_used = j.at("lower_bound_used").get<long>();
    r.violations = j.at("violations").get<long>();
    r.wall_time = j.at("wall_time").get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad report: ") + e.what());
  }
  return r;
}

}  // namespace toricbound::harness

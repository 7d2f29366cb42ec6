#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "toricbound/error.hpp"
#include "toricbound/factor/factor.hpp"
#include "toricbound/harness/harness.hpp"
#include "toricbound/polytope/polytope.hpp"
#include "toricbound/poset/poset.hpp"
#include "toricbound/solver/solver.hpp"
#include "toricbound/wronski/wronski.hpp"

using namespace toricbound;
using nlohmann::json;
using wronski::Rational;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational(const std::string& text) {
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

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) {
    try {
      out.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput, "not an integer: " + s);
    }
  }
  return out;
}

/// "4,-11,4;-13,-1,24" -> rows.
std::vector<std::vector<Rational>> parse_rows(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : split(text, ';')) {
    std::vector<Rational> row;
    for (const auto& x : split(r, ',')) row.push_back(parse_rational(x));
    rows.push_back(row);
  }
  return rows;
}

std::string rational_string(const Rational& q) { return q.get_str(10); }

struct Source {
  polytope::LatticePolytope poly;
  polytope::Triangulation tri;
  std::vector<long> deformation;
  std::optional<poset::Poset> poset;
  polytope::PosetPolytopeKind kind = polytope::PosetPolytopeKind::kOrder;
};

/// A built-in name, order:FILE or chain:FILE for a poset, or a JSON file with
/// "polytope" and optionally "triangulation" (placing otherwise).
Source load_source(const std::string& spec) {
  Source s;
  const auto names = polytope::builtin_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) {
    auto b = polytope::builtin(spec);
    s.poly = b.polytope;
    s.tri = b.triangulation;
    s.deformation = b.deformation;
    return s;
  }
  if (spec.rfind("order:", 0) == 0 || spec.rfind("chain:", 0) == 0) {
    s.kind = spec[0] == 'o' ? polytope::PosetPolytopeKind::kOrder : polytope::PosetPolytopeKind::kChain;
    s.poset = poset::parse_poset(read_file(spec.substr(6)));
    auto pp = s.kind == polytope::PosetPolytopeKind::kOrder ? polytope::order_polytope(*s.poset)
                                                             : polytope::chain_polytope(*s.poset);
    s.tri = polytope::canonical_triangulation(*s.poset, pp, s.kind);
    s.poly = pp.polytope;
    s.deformation = s.tri.lifting;
    return s;
  }
  json j;
  try {
    j = json::parse(read_file(spec));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad polytope file: ") + e.what());
  }
  s.poly = polytope::polytope_from_json(j.contains("polytope") ? j["polytope"].dump() : j.dump());
  s.tri = j.contains("triangulation") ? polytope::triangulation_from_json(j["triangulation"].dump())
                                      : polytope::placing_triangulation(s.poly);
  s.deformation = j.contains("deformation") ? j["deformation"].get<std::vector<long>>() : s.tri.lifting;
  return s;
}

wronski::WronskiFamily family_of(const std::string& spec) {
  harness::ExperimentConfig c;
  c.polytope = spec;
  return harness::load_family(c);
}

poset::Poset load_poset(const std::string& path) { return poset::parse_poset(read_file(path)); }

void print_table(const std::vector<factor::TableRow>& rows, harness::ReportFormat format) {
  switch (format) {
    case harness::ReportFormat::kCsv:
      std::cout << "r,c,count\n";
      for (const auto& r : rows) std::cout << r.r << ',' << r.c << ',' << r.count.get_str() << '\n';
      break;
    case harness::ReportFormat::kJson: {
      json j = json::array();
      for (const auto& r : rows) j.push_back({{"r", r.r}, {"c", r.c}, {"count", r.count.get_str()}});
      std::cout << j.dump() << '\n';
      break;
    }
    case harness::ReportFormat::kTable: {
      std::ostringstream a, b;
      a << "r    ";
      b << "n    ";
      for (const auto& r : rows) {
        const std::string n = r.count.get_str();
        const size_t w = std::max(n.size(), std::to_string(r.r).size()) + 2;
        a << std::string(w - std::to_string(r.r).size(), ' ') << r.r;
        b << std::string(w - n.size(), ' ') << n;
      }
      std::cout << a.str() << '\n' << b.str() << '\n';
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wronski systems, real solution bounds and experiments"};
  app.require_subcommand(1);

  std::string format = "table";
  std::uint64_t seed = 1;
  long trials = 10000;
  std::string coeff_range = "-60..60";
  std::string s_text = "fixed:1";
  std::string config_file;
  int parallelism = 1;
  int exit_code = 0;

  // poset
  auto* poset_cmd = app.add_subcommand("poset", "Poset statistics")->require_subcommand(1);
  std::string poset_file;
  auto* poset_info = poset_cmd->add_subcommand("info", "Sizes, extensions and sign-imbalance");
  poset_info->add_option("file", poset_file, "Poset file (text or JSON)")->required();
  poset_info->callback([&] {
    const auto p = load_poset(poset_file);
    const auto rank = poset::is_ranked_mod2(p);
    json j = {{"elements", p.size()},
              {"covers", p.covers().size()},
              {"order_ideals", poset::order_ideals(p).size()},
              {"linear_extensions", poset::count_linear_extensions(p).get_str()},
              {"sign_imbalance", poset::sign_imbalance(p).get_str()},
              {"ranked_mod2", rank.ranked},
              {"chain_parity", rank.parity}};
    std::cout << j.dump(2) << '\n';
  });
  auto* poset_imb = poset_cmd->add_subcommand("imbalance", "Sign-imbalance of a poset or a closed formula");
  std::string chains, white;
  poset_imb->add_option("file", poset_file, "Poset file");
  poset_imb->add_option("--chains", chains, "Disjoint union of chains, e.g. 4,4,5");
  poset_imb->add_option("--white", white, "Rectangle m,p");
  poset_imb->callback([&] {
    if (!chains.empty()) {
      std::cout << poset::chain_union_imbalance(parse_ints(chains)).get_str() << '\n';
    } else if (!white.empty()) {
      const auto mp = parse_ints(white);
      if (mp.size() != 2) throw CLI::ValidationError("--white", "expects m,p");
      std::cout << poset::white_imbalance(mp[0], mp[1]).get_str() << '\n';
    } else if (!poset_file.empty()) {
      std::cout << poset::sign_imbalance(load_poset(poset_file)).get_str() << '\n';
    } else {
      throw CLI::RequiredError("a poset file, --chains or --white");
    }
  });

  // polytope
  auto* poly_cmd = app.add_subcommand("polytope", "Lattice polytopes and triangulations")->require_subcommand(1);
  std::string source;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("source", source, "Built-in name, order:FILE, chain:FILE or a polytope JSON file")->required();
  };
  auto* poly_build = poly_cmd->add_subcommand("build", "Polytope and triangulation as JSON");
  add_source(poly_build);
  poly_build->callback([&] {
    const auto s = load_source(source);
    json j = {{"polytope", json::parse(polytope::polytope_to_json(s.poly))},
              {"triangulation", json::parse(polytope::triangulation_to_json(s.tri))},
              {"deformation", s.deformation}};
    std::cout << j.dump() << '\n';
  });
  auto* poly_vol = poly_cmd->add_subcommand("volume", "Normalized volume");
  add_source(poly_vol);
  poly_vol->callback([&] {
    const auto s = load_source(source);
    std::cout << polytope::normalized_volume(s.poly, &s.tri).get_str() << '\n';
  });
  auto* poly_sig = poly_cmd->add_subcommand("signature", "Folding, simplex signs and signature");
  add_source(poly_sig);
  poly_sig->callback([&] {
    const auto s = load_source(source);
    const auto f = polytope::fold_and_sign(s.poly, s.tri);
    json j = {{"signature", f.signature}, {"folding", f.folding}, {"signs", f.signs}};
    std::cout << j.dump() << '\n';
  });
  auto* poly_orient = poly_cmd->add_subcommand("orient", "Orientability checks");
  add_source(poly_orient);
  poly_orient->callback([&] {
    const auto r = polytope::orientability_check(load_source(source).poly);
    json j = {{"affine_span_odd_index", r.affine_span_odd_index},
              {"column_lattice_saturated_odd", r.column_lattice_saturated_odd},
              {"odd_vector_in_AB_span_mod2", r.odd_vector_in_AB_span_mod2},
              {"odd_vector_in_A_span_mod2", r.odd_vector_in_A_span_mod2},
              {"cox_oriented", r.cox_oriented}};
    std::cout << j.dump() << '\n';
  });
  auto* poly_reg = poly_cmd->add_subcommand("verify-regular", "Certify the triangulation as regular");
  add_source(poly_reg);
  poly_reg->callback([&] {
    const auto s = load_source(source);
    const auto r = polytope::verify_regular(s.poly, s.tri);
    json certs = json::array();
    for (const auto& c : r.certificates) {
      json cj = json::array();
      for (const auto& x : c.c) cj.push_back(rational_string(x));
      certs.push_back({{"c", cj}, {"d", rational_string(c.d)}});
    }
    json j = {{"regular", r.regular}, {"hull_side", r.hull_side}, {"closed", r.closed}, {"certificates", certs}};
    if (!r.failure.empty()) j["failure"] = r.failure;
    std::cout << j.dump() << '\n';
    if (!r.regular) exit_code = kExitViolation;
  });

  // wronski
  auto* wr_cmd = app.add_subcommand("wronski", "Wronski polynomial systems")->require_subcommand(1);
  std::string rows_text;
  auto* wr_build = wr_cmd->add_subcommand("build", "System from explicit coefficient rows");
  add_source(wr_build);
  wr_build->add_option("--rows", rows_text, "Rows c_{i,0..n} as a,b,c;d,e,f")->required();
  wr_build->add_option("--s", s_text, "Deformation parameter, fixed:Q");
  wr_build->callback([&] {
    const auto policy = wronski::SPolicy::parse(s_text);
    if (policy.kind != wronski::SPolicy::Kind::kFixed) throw CLI::ValidationError("--s", "build needs fixed:Q");
    const auto sys = wronski::build_system(family_of(source), parse_rows(rows_text), policy.value);
    std::cout << wronski::system_to_json(sys) << '\n';
  });
  auto* wr_sample = wr_cmd->add_subcommand("sample", "Random system");
  add_source(wr_sample);
  long stream = 0;
  wr_sample->add_option("--seed", seed, "Seed");
  wr_sample->add_option("--stream", stream, "Stream (trial index)");
  wr_sample->add_option("--coeff-range", coeff_range, "LO..HI");
  wr_sample->add_option("--s", s_text, "fixed:Q or grid");
  wr_sample->callback([&] {
    const auto sys = wronski::sample_system(family_of(source), seed, wronski::CoeffRange::parse(coeff_range),
                                            wronski::SPolicy::parse(s_text), static_cast<std::uint64_t>(stream));
    std::cout << wronski::system_to_json(sys) << '\n';
  });
  auto* wr_center = wr_cmd->add_subcommand("center-check", "Does the family meet the centre of projection");
  add_source(wr_center);
  wr_center->callback([&] {
    const auto r = wronski::center_avoidance(family_of(source));
    json meetings = json::array();
    for (const auto& m : r.meetings) {
      json pts = json::array();
      for (const auto& p : m.points) {
        json pj = json::array();
        for (const auto& x : p) pj.push_back(rational_string(x));
        pts.push_back(pj);
      }
      meetings.push_back({{"s", rational_string(m.s)}, {"points", pts}});
    }
    json j = {{"verdict", wronski::verdict_name(r.verdict)}, {"meetings", meetings}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    std::cout << j.dump() << '\n';
  });

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Count real and complex torus solutions of a system");
  std::string system_file;
  solve_cmd->add_option("system", system_file, "System JSON as written by wronski build/sample")->required();
  solve_cmd->add_option("--seed", seed, "Seed for the separating form");
  solve_cmd->callback([&] {
    const auto sys = wronski::system_from_json(read_file(system_file));
    std::cout << solver::report_to_json(solver::count_solutions(sys, seed)) << '\n';
  });

  // factor
  auto* fac_cmd = app.add_subcommand("factor", "Real factorizations of a univariate polynomial")->require_subcommand(1);
  std::string degrees, target;
  auto* fac_table = fac_cmd->add_subcommand("table", "Counts for every number of real roots");
  fac_table->add_option("degrees", degrees, "Factor degrees, e.g. 4,4,5")->required();
  fac_table->add_option("--format", format, "csv, json or table");
  fac_table->callback([&] {
    print_table(factor::factorization_table(parse_ints(degrees)), harness::parse_format(format));
  });
  auto* fac_bounds = fac_cmd->add_subcommand("bounds", "Lower and upper bounds");
  fac_bounds->add_option("degrees", degrees, "Factor degrees")->required();
  fac_bounds->callback([&] {
    const auto b = factor::factorization_bounds(parse_ints(degrees));
    json j = {{"lower", b.lower.get_str()}, {"upper", b.upper.get_str()}, {"max_distinct", b.max_distinct}};
    std::cout << j.dump() << '\n';
  });
  auto* fac_count = fac_cmd->add_subcommand("count", "Count for a target polynomial");
  fac_count->add_option("degrees", degrees, "Factor degrees")->required();
  fac_count->add_option("--target", target, "Coefficients lowest first, e.g. 1,3,2")->required();
  fac_count->callback([&] {
    std::vector<Rational> f;
    for (const auto& x : split(target, ',')) f.push_back(parse_rational(x));
    std::cout << factor::count_for_target(parse_ints(degrees), f).get_str() << '\n';
  });

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiments")->require_subcommand(1);
  auto* exp_run = exp_cmd->add_subcommand("run", "Histogram of real solution counts");
  std::string polytope_name = "hexagon";
  std::string weights;
  exp_run->add_option("source", polytope_name, "Built-in name, order:FILE, chain:FILE or a polytope JSON file");
  auto* opt_config = exp_run->add_option("--config", config_file, "JSON config; flags given explicitly override it");
  auto* opt_seed = exp_run->add_option("--seed", seed, "Seed");
  auto* opt_trials = exp_run->add_option("--trials", trials, "Number of trials");
  auto* opt_range = exp_run->add_option("--coeff-range", coeff_range, "LO..HI");
  auto* opt_s = exp_run->add_option("--s", s_text, "fixed:Q or grid");
  auto* opt_par = exp_run->add_option("--parallelism", parallelism, "Worker threads");
  auto* opt_weights = exp_run->add_option("--weights", weights, "JSON array of per-point weights");
  exp_run->add_option("--format", format, "csv, json or table");
  exp_run->callback([&] {
    harness::ExperimentConfig c;
    if (*opt_config) c = harness::config_from_json(read_file(config_file));
    if (exp_run->count("source") || !*opt_config) c.polytope = polytope_name;
    if (*opt_seed) c.seed = seed;
    if (*opt_trials) c.trials = trials;
    if (*opt_range) c.coeff_range = wronski::CoeffRange::parse(coeff_range);
    if (*opt_s) c.s_policy = wronski::SPolicy::parse(s_text);
    if (*opt_par) c.parallelism = parallelism;
    if (*opt_weights) c.weights_file = weights;
    const auto fmt = harness::parse_format(format);
    const auto r = harness::run_experiment(c);
    std::cout << harness::emit_report(r, fmt);
    if (r.violations > 0) {
      std::cerr << "violations: " << r.violations << " trials below the lower bound " << r.lower_bound_used << '\n';
      exit_code = kExitViolation;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}

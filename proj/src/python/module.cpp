#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricbound/error.hpp"
#include "toricbound/factor/factor.hpp"
#include "toricbound/harness/harness.hpp"
#include "toricbound/polytope/polytope.hpp"
#include "toricbound/poset/poset.hpp"
#include "toricbound/solver/solver.hpp"
#include "toricbound/wronski/wronski.hpp"

namespace py = pybind11;
using namespace toricbound;
using wronski::Rational;

namespace {

py::object to_py(const exactalg::Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str(10)); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str(10));
}

Rational from_py(const py::handle& h) {
  Rational q(py::str(h).cast<std::string>(), 10);
  q.canonicalize();
  return q;
}

std::vector<std::vector<Rational>> rows_from_py(const std::vector<std::vector<py::object>>& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const auto& x : r) row.push_back(from_py(x));
    out.push_back(row);
  }
  return out;
}

py::dict report_dict(const solver::SolveReport& r) {
  py::dict d;
  d["n_real"] = r.n_real;
  d["n_complex"] = r.n_complex;
  d["eliminant_degree"] = r.eliminant_degree;
  d["generic"] = r.generic;
  d["retries"] = r.retries;
  d["separating_form"] = r.separating_form;
  return d;
}

py::dict experiment_dict(const harness::ExperimentReport& r) {
  py::dict d;
  d["histogram"] = r.histogram;
  d["n_nongeneric_resampled"] = r.n_nongeneric_resampled;
  d["lower_bound_used"] = r.lower_bound_used;
  d["violations"] = r.violations;
  d["wall_time"] = r.wall_time;
  return d;
}

harness::ExperimentReport experiment_from_dict(const py::dict& d) {
  harness::ExperimentReport r;
  r.histogram = d["histogram"].cast<std::map<long, long>>();
  r.n_nongeneric_resampled = d["n_nongeneric_resampled"].cast<long>();
  r.lower_bound_used = d["lower_bound_used"].cast<long>();
  r.violations = d["violations"].cast<long>();
  r.wall_time = d["wall_time"].cast<double>();
  return r;
}

harness::ExperimentConfig make_config(const std::string& polytope, long trials, std::uint64_t seed,
                                      const std::string& coeff_range, const std::string& s, int parallelism) {
  harness::ExperimentConfig c;
  c.polytope = polytope;
  c.trials = trials;
  c.seed = seed;
  c.coeff_range = wronski::CoeffRange::parse(coeff_range);
  c.s_policy = wronski::SPolicy::parse(s);
  c.parallelism = parallelism;
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wronski systems, real solution bounds and factorization counts";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  // posets
  m.def(
      "sign_imbalance", [](const std::string& text) { return to_py(poset::sign_imbalance(poset::parse_poset(text))); },
      py::arg("poset"), "Sign-imbalance of a poset given in text or JSON form.");
  m.def(
      "linear_extension_count",
      [](const std::string& text) { return to_py(poset::count_linear_extensions(poset::parse_poset(text))); },
      py::arg("poset"));
  m.def(
      "chain_union_imbalance", [](const std::vector<int>& a) { return to_py(poset::chain_union_imbalance(a)); },
      py::arg("a"));
  m.def(
      "white_imbalance", [](int mm, int p) { return to_py(poset::white_imbalance(mm, p)); }, py::arg("m"),
      py::arg("p"));

  // polytopes
  m.def("builtin_names", &polytope::builtin_names);
  m.def(
      "polytope_info",
      [](const std::string& name) {
        const auto b = polytope::builtin(name);
        const auto orient = polytope::orientability_check(b.polytope);
        const auto reg = polytope::verify_regular(b.polytope, b.triangulation);
        py::dict d;
        d["dim"] = b.polytope.dim;
        d["lattice_points"] = b.polytope.lattice_points;
        d["simplices"] = b.triangulation.simplices;
        d["folding"] = *b.triangulation.folding;
        d["volume"] = to_py(polytope::normalized_volume(b.polytope, &b.triangulation));
        d["signature"] = polytope::fold_and_sign(b.polytope, b.triangulation).signature;
        d["cox_oriented"] = orient.cox_oriented;
        d["regular"] = reg.regular;
        return d;
      },
      py::arg("name"), "Volume, signature, orientability and regularity of a built-in polytope.");
  m.def(
      "poset_polytope_signature",
      [](const std::string& text, const std::string& kind) {
        const auto p = poset::parse_poset(text);
        const auto k = kind == "chain" ? polytope::PosetPolytopeKind::kChain : polytope::PosetPolytopeKind::kOrder;
        const auto pp = k == polytope::PosetPolytopeKind::kOrder ? polytope::order_polytope(p)
                                                                 : polytope::chain_polytope(p);
        return polytope::fold_and_sign(pp.polytope, polytope::canonical_triangulation(p, pp, k)).signature;
      },
      py::arg("poset"), py::arg("kind") = "order");

  // systems and solving
  m.def(
      "solve_builtin",
      [](const std::string& name, const std::vector<std::vector<py::object>>& rows, const py::object& s,
         std::uint64_t seed) {
        const auto fam = wronski::builtin_family(name);
        return report_dict(solver::count_solutions(wronski::build_system(fam, rows_from_py(rows), from_py(s)), seed));
      },
      py::arg("name"), py::arg("rows"), py::arg("s") = 1, py::arg("seed") = 0,
      "Real and complex solution counts of the built-in family with the given coefficient rows.");
  m.def(
      "sample_system",
      [](const std::string& name, std::uint64_t seed, const std::string& coeff_range, const std::string& s,
         std::uint64_t stream) {
        const auto sys = wronski::sample_system(wronski::builtin_family(name), seed,
                                                wronski::CoeffRange::parse(coeff_range), wronski::SPolicy::parse(s),
                                                stream);
        py::list rows;
        for (const auto& r : sys.coeffs) {
          py::list row;
          for (const auto& x : r) row.append(to_py(x));
          rows.append(row);
        }
        py::dict d;
        d["rows"] = rows;
        d["s"] = to_py(sys.s);
        d["json"] = wronski::system_to_json(sys);
        return d;
      },
      py::arg("name"), py::arg("seed"), py::arg("coeff_range") = "-60..60", py::arg("s") = "fixed:1",
      py::arg("stream") = 0);
  m.def(
      "solve_json",
      [](const std::string& text, std::uint64_t seed) {
        return report_dict(solver::count_solutions(wronski::system_from_json(text), seed));
      },
      py::arg("system"), py::arg("seed") = 0);
  m.def(
      "center_check",
      [](const std::string& name) {
        const auto r = wronski::center_avoidance(wronski::builtin_family(name));
        py::list meetings;
        for (const auto& mt : r.meetings) {
          py::list pts;
          for (const auto& p : mt.points) {
            py::list pt;
            for (const auto& x : p) pt.append(to_py(x));
            pts.append(pt);
          }
          meetings.append(py::make_tuple(to_py(mt.s), pts));
        }
        py::dict d;
        d["verdict"] = wronski::verdict_name(r.verdict);
        d["meetings"] = meetings;
        return d;
      },
      py::arg("name"));

  // factorizations
  m.def(
      "factorization_table",
      [](const std::vector<int>& a) {
        py::list out;
        for (const auto& r : factor::factorization_table(a)) out.append(py::make_tuple(r.r, r.c, to_py(r.count)));
        return out;
      },
      py::arg("a"), "Rows (r, c, count) for every admissible number r of real roots.");
  m.def(
      "count_real_factorizations",
      [](const std::vector<int>& a, long r, long c, bool brute_force) {
        return to_py(brute_force ? factor::count_real_factorizations_bruteforce(a, r, c)
                                 : factor::count_real_factorizations_gf(a, r, c));
      },
      py::arg("a"), py::arg("r"), py::arg("c"), py::arg("brute_force") = false);
  m.def(
      "factorization_bounds",
      [](const std::vector<int>& a) {
        const auto b = factor::factorization_bounds(a);
        return py::make_tuple(to_py(b.lower), to_py(b.upper), b.max_distinct);
      },
      py::arg("a"));
  m.def(
      "count_for_target",
      [](const std::vector<int>& a, const std::vector<py::object>& f) {
        std::vector<Rational> coeffs;
        for (const auto& x : f) coeffs.push_back(from_py(x));
        return to_py(factor::count_for_target(a, coeffs));
      },
      py::arg("a"), py::arg("f"), "f lowest degree first.");

  // experiments
  m.def(
      "run_experiment",
      [](const std::string& polytope, long trials, std::uint64_t seed, const std::string& coeff_range,
         const std::string& s, int parallelism) {
        const auto c = make_config(polytope, trials, seed, coeff_range, s, parallelism);
        harness::ExperimentReport r;
        {
          py::gil_scoped_release release;
          r = harness::run_experiment(c);
        }
        return experiment_dict(r);
      },
      py::arg("polytope") = "hexagon", py::arg("trials") = 1000, py::arg("seed") = 1,
      py::arg("coeff_range") = "-60..60", py::arg("s") = "fixed:1", py::arg("parallelism") = 1);
  m.def(
      "emit_report",
      [](const py::dict& report, const std::string& format) {
        return harness::emit_report(experiment_from_dict(report), harness::parse_format(format));
      },
      py::arg("report"), py::arg("format") = "csv");
  m.def(
      "report_from_json", [](const std::string& text) { return experiment_dict(harness::report_from_json(text)); },
      py::arg("text"));
}

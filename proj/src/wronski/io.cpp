#include "json.hpp"
#include "toricbound/error.hpp"
#include "toricbound/wronski/wronski.hpp"

namespace toricbound::wronski {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

Rational rational_from(const json& s) {
  Rational q(s.get<std::string>(), 10);
  if (q.get_den() == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  q.canonicalize();
  return q;
}

std::vector<Rational> rationals_from(const json& a) {
  std::vector<Rational> v;
  for (const auto& s : a) v.push_back(rational_from(s));
  return v;
}

const char* kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::kOrderPolytope:
      return "order";
    case FamilyKind::kChainPolytope:
      return "chain";
    default:
      return "generic";
  }
}

FamilyKind kind_from(const std::string& s) {
  if (s == "order") return FamilyKind::kOrderPolytope;
  if (s == "chain") return FamilyKind::kChainPolytope;
  if (s == "generic") return FamilyKind::kGeneric;
  throw Error(ErrorCode::kInvalidInput, "unknown family kind '" + s + "'");
}

}  // namespace

std::string system_to_json(const WronskiSystem& sys) {
  const auto& f = sys.family;
  json fam = {{"polytope", json::parse(polytope::polytope_to_json(f.polytope))},
              {"folding", f.folding},
              {"omega", f.omega},
              {"alpha", rationals(f.alpha)},
              {"volume", f.volume.get_str()},
              {"signature", f.signature},
              {"kind", kind_name(f.kind)}};
  json coeffs = json::array();
  for (const auto& row : sys.coeffs) coeffs.push_back(rationals(row));
  json polys = json::array();
  for (const auto& p : sys.polys) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
      std::vector<int> mono(e.begin(), e.begin() + f.polytope.dim);
      terms.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
    }
    polys.push_back(terms);
  }
  json j = {{"family", fam}, {"coeffs", coeffs}, {"s", sys.s.get_str()}, {"polys", polys}};
  return j.dump();
}

WronskiSystem system_from_json(const std::string& text) {
  WronskiSystem sys;
  try {
    const json j = json::parse(text);
    const json& fam = j.at("family");
    auto& f = sys.family;
    f.polytope = polytope::polytope_from_json(fam.at("polytope").dump());
    f.folding = fam.at("folding").get<std::vector<int>>();
    f.omega = fam.at("omega").get<std::vector<long>>();
    f.alpha = rationals_from(fam.at("alpha"));
    f.volume = Integer(fam.at("volume").get<std::string>(), 10);
    f.signature = fam.at("signature").get<long>();
    f.kind = kind_from(fam.value("kind", "generic"));
    for (const auto& row : j.at("coeffs")) sys.coeffs.push_back(rationals_from(row));
    sys.s = rational_from(j.at("s"));
    for (const auto& terms : j.at("polys")) {
      MultiPoly p;
      for (const auto& t : terms) {
        const auto mono = t.at("monomial").get<std::vector<int>>();
        if (mono.size() > static_cast<size_t>(exactalg::kMaxVars))
          throw Error(ErrorCode::kUnsupportedDimension, "too many variables");
        exactalg::Exponent e{};
        std::copy(mono.begin(), mono.end(), e.begin());
        p.add_term(e, rational_from(t.at("coeff")));
      }
      sys.polys.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad system JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad number in system JSON: ") + e.what());
  }
  if (sys.family.folding.size() != sys.family.polytope.lattice_points.size() ||
      sys.family.omega.size() != sys.family.folding.size() || sys.family.alpha.size() != sys.family.folding.size())
    throw Error(ErrorCode::kDimensionMismatch, "family data does not match the lattice points");
  return sys;
}

}  // namespace toricbound::wronski

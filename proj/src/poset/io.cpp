#include <sstream>

#include "json.hpp"
#include "toricbound/error.hpp"
#include "toricbound/poset/poset.hpp"

namespace toricbound::poset {

using nlohmann::json;

Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  bool have_elements = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "elements:") {
      std::string e;
      while (ls >> e) elements.push_back(e);
      have_elements = true;
    } else if (key == "cover:") {
      std::string lo, op, hi, extra;
      if (!(ls >> lo >> op >> hi) || (op != "<" && op != ">") || (ls >> extra))
        throw Error(ErrorCode::kInvalidInput, "line " + std::to_string(lineno) + ": expected 'cover: x < y'");
      if (op == ">") std::swap(lo, hi);
      covers.emplace_back(lo, hi);
    } else {
      throw Error(ErrorCode::kInvalidInput, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_elements) throw Error(ErrorCode::kInvalidInput, "missing 'elements:' line");
  return Poset::build(std::move(elements), covers);
}

Poset parse_poset_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::kInvalidInput, "each cover must be a pair");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    }
    return Poset::build(std::move(elements), covers);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("poset JSON: ") + e.what());
  }
}

std::string poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.labels();
  j["covers"] = json::array();
  for (const auto& [a, b] : p.covers()) j["covers"].push_back({p.label(a), p.label(b)});
  return j.dump();
}

Poset parse_poset(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_poset_json(text);
  return parse_poset_text(text);
}

}  // namespace toricbound::poset

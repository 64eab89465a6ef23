#include "cgv/diagram.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "cgv/graph.hpp"

namespace cgv {

std::vector<CrossingInfo> LinkDiagram::crossings() const {
  std::vector<CrossingInfo> out(signs.size());
  for (std::size_t x = 0; x < signs.size(); ++x) out[x].sign = signs[x];
  for (int c = 0; c < component_count(); ++c) {
    const auto& comp = components[static_cast<std::size_t>(c)];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      auto& info = out.at(static_cast<std::size_t>(comp[static_cast<std::size_t>(i)].crossing));
      if (comp[static_cast<std::size_t>(i)].over) {
        info.over_component = c;
        info.over_position = i;
      } else {
        info.under_component = c;
        info.under_position = i;
      }
    }
  }
  return out;
}

void LinkDiagram::validate() const {
  std::vector<int> overs(signs.size()), unders(signs.size());
  for (const auto& comp : components)
    for (const auto& p : comp) {
      if (p.crossing < 0 || p.crossing >= crossing_count())
        throw InputError("crossing id " + std::to_string(p.crossing) + " out of range");
      ++(p.over ? overs : unders)[static_cast<std::size_t>(p.crossing)];
    }
  for (std::size_t x = 0; x < signs.size(); ++x) {
    if (overs[x] != 1 || unders[x] != 1)
      throw InputError("crossing " + std::to_string(x + 1) + " must appear once over and once under");
    if (signs[x] != 1 && signs[x] != -1) throw InputError("crossing sign must be +1 or -1");
  }
}

LinkDiagram LinkDiagram::parse(std::string_view text) {
  static const std::regex token(R"(([OUou])(\d+)([+-]))");
  LinkDiagram d;
  std::map<long, int> ids;
  std::map<int, int> sign_of;
  std::vector<std::string> parts{""};
  for (char c : text) {
    if (c == '|') parts.emplace_back();
    else parts.back().push_back(c);
  }
  for (const auto& comp_text : parts) {
    auto& comp = d.components.emplace_back();
    std::stringstream ts(comp_text);
    std::string tok;
    while (ts >> tok) {
      std::smatch m;
      if (!std::regex_match(tok, m, token)) throw InputError("bad Gauss code token '" + tok + "'");
      long label = std::stol(m[2].str());
      auto [it, fresh] = ids.emplace(label, static_cast<int>(ids.size()));
      int s = m[3] == "+" ? 1 : -1;
      if (!fresh && sign_of[it->second] != s) throw InputError("inconsistent sign for crossing " + m[2].str());
      sign_of[it->second] = s;
      comp.push_back({it->second, m[1] == "O" || m[1] == "o"});
    }
  }
  d.signs.resize(ids.size());
  for (auto [x, s] : sign_of) d.signs[static_cast<std::size_t>(x)] = s;
  d.validate();
  return d;
}

std::string LinkDiagram::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) out += " |";
    for (std::size_t i = 0; i < components[c].size(); ++i) {
      const auto& p = components[c][i];
      if (c || i) out += ' ';
      out += p.over ? 'O' : 'U';
      out += std::to_string(p.crossing + 1);
      out += signs[static_cast<std::size_t>(p.crossing)] > 0 ? '+' : '-';
    }
  }
  return out;
}

}  // namespace cgv

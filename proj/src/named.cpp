#include "cgv/named.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "cgv/cycles.hpp"
#include "cgv/exchange.hpp"

namespace cgv {

namespace {

using LabelEdge = std::pair<std::string, std::string>;

bool is_black(int v) { return v == 1 || v == 3 || v == 5; }
bool is_white(int v) { return v == 2 || v == 4 || v == 6; }

std::vector<int> color_class(int v) { return is_black(v) ? std::vector<int>{1, 3, 5} : std::vector<int>{2, 4, 6}; }

std::string lbl(int v) { return std::to_string(v); }

std::vector<LabelEdge> k33_edges() {
  std::vector<LabelEdge> es;
  for (int b : {1, 3, 5})
    for (int w : {2, 4, 6}) es.emplace_back(lbl(b), lbl(w));
  return es;
}

std::vector<LabelEdge> star(const std::string& center, const std::vector<int>& leaves) {
  std::vector<LabelEdge> es;
  for (int v : leaves) es.emplace_back(center, lbl(v));
  return es;
}

std::vector<LabelEdge> g_v_edges(const std::string& v) {
  auto es = k33_edges();
  auto s = star(v, {1, 2, 3, 4, 5, 6});
  es.insert(es.end(), s.begin(), s.end());
  return es;
}

bool same_edge(const LabelEdge& a, const LabelEdge& b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

void remove_edge(std::vector<LabelEdge>& es, const LabelEdge& e) {
  auto it = std::find_if(es.begin(), es.end(), [&](const LabelEdge& f) { return same_edge(e, f); });
  if (it == es.end()) throw InputError("internal: edge " + e.first + "-" + e.second + " not present");
  es.erase(it);
}

Graph k3311_subgraph(const std::vector<LabelEdge>& edges) {
  const Graph& k = standard_k3311();
  std::vector<int> ids;
  for (const auto& [a, b] : edges) {
    int e = k.edge_index(k.index_of(a), k.index_of(b));
    if (e < 0) throw InputError("internal: " + a + "-" + b + " is not an edge of K3311");
    ids.push_back(e);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return k.edge_subgraph(ids);
}

int parse_digit(const std::string& s) {
  if (s.size() != 1 || s[0] < '1' || s[0] > '6') throw InputError("vertex index must be 1..6, got '" + s + "'");
  return s[0] - '0';
}

}  // namespace

const Graph& standard_k3311() {
  static const Graph g = complete_multipartite({3, 3, 1, 1});
  return g;
}

SubgraphName SubgraphName::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '_' && c != '^' && c != '{' && c != '}') s.push_back(c);
  using K = Kind;
  SubgraphName n;
  std::smatch m;
  static const std::regex fij(R"(F([xy])\((\d),(\d)\))");
  static const std::regex fk(R"(F([xy])\((\d)\))");
  static const std::regex q8(R"(Q8\((\d)\)|Q8(\d))");
  static const std::regex p8(R"(P8\((\d);([xy]);(\d),(\d)\))");
  if (s == "Gx") n.kind = K::Gx;
  else if (s == "Gy") n.kind = K::Gy;
  else if (s == "K33" || s == "K3,3") n.kind = K::K33;
  else if (s == "H1") n.kind = K::H1;
  else if (s == "H2") n.kind = K::H2;
  else if (std::regex_match(s, m, q8)) {
    std::string d = m[1].matched ? m[1].str() : m[2].str();
    if (d == "1") n.kind = K::Q8_1;
    else if (d == "2") n.kind = K::Q8_2;
    else throw InputError("Q8 index must be 1 or 2");
  } else if (std::regex_match(s, m, fij)) {
    n.kind = m[1] == "x" ? K::Fx_ij : K::Fy_ij;
    n.i = parse_digit(m[2]);
    n.j = parse_digit(m[3]);
    if (!is_black(n.i) || !is_white(n.j)) throw InputError("F(i,j) needs a black i in {1,3,5} and white j in {2,4,6}");
  } else if (std::regex_match(s, m, fk)) {
    n.kind = m[1] == "x" ? K::Fx_k : K::Fy_k;
    n.k = parse_digit(m[2]);
  } else if (std::regex_match(s, m, p8)) {
    n.kind = K::P8;
    n.k = parse_digit(m[1]);
    n.v = m[2].str()[0];
    n.i = parse_digit(m[3]);
    n.j = parse_digit(m[4]);
    if (n.i == n.j) throw InputError("P8 needs distinct i, j");
    if (is_black(n.k) == is_black(n.i) || is_black(n.k) == is_black(n.j))
      throw InputError("P8(k;v;i,j) needs i, j in the color class opposite to k");
    if (n.i > n.j) std::swap(n.i, n.j);
  } else {
    throw InputError("unknown subgraph name '" + std::string(text) + "'");
  }
  return n;
}

std::string SubgraphName::to_string() const {
  using K = Kind;
  const std::string ij = "(" + lbl(i) + "," + lbl(j) + ")";
  switch (kind) {
    case K::Gx: return "Gx";
    case K::Gy: return "Gy";
    case K::K33: return "K33";
    case K::Fx_ij: return "Fx" + ij;
    case K::Fy_ij: return "Fy" + ij;
    case K::Q8_1: return "Q8(1)";
    case K::Q8_2: return "Q8(2)";
    case K::Fx_k: return "Fx(" + lbl(k) + ")";
    case K::Fy_k: return "Fy(" + lbl(k) + ")";
    case K::H1: return "H1";
    case K::H2: return "H2";
    case K::P8: return "P8(" + lbl(k) + ";" + std::string(1, v) + ";" + lbl(i) + "," + lbl(j) + ")";
  }
  return {};
}

Graph named_subgraph(const SubgraphName& n) {
  using K = SubgraphName::Kind;
  std::vector<LabelEdge> es;
  auto q8 = [](bool first) {
    auto e = k33_edges();
    auto a = star("x", first ? std::vector<int>{1, 3, 5} : std::vector<int>{2, 4, 6});
    auto b = star("y", first ? std::vector<int>{2, 4, 6} : std::vector<int>{1, 3, 5});
    e.insert(e.end(), a.begin(), a.end());
    e.insert(e.end(), b.begin(), b.end());
    return e;
  };
  switch (n.kind) {
    case K::Gx: es = g_v_edges("x"); break;
    case K::Gy: es = g_v_edges("y"); break;
    case K::K33: es = k33_edges(); break;
    case K::Fx_ij:
    case K::Fy_ij: {
      const std::string v = n.kind == K::Fx_ij ? "x" : "y";
      const std::string other = v == "x" ? "y" : "x";
      es = g_v_edges(v);
      remove_edge(es, {lbl(n.i), lbl(n.j)});
      es.emplace_back(lbl(n.i), other);
      es.emplace_back(lbl(n.j), other);
      break;
    }
    case K::Q8_1: es = q8(true); break;
    case K::Q8_2: es = q8(false); break;
    case K::Fx_k:
    case K::Fy_k: {
      if (n.k < 1 || n.k > 6) throw InputError("F(k) needs k in 1..6");
      const std::string v = n.kind == K::Fx_k ? "x" : "y";
      const std::string other = v == "x" ? "y" : "x";
      es = g_v_edges(v);
      remove_edge(es, {v, lbl(n.k)});
      es.emplace_back("x", "y");
      es.emplace_back(lbl(n.k), other);
      break;
    }
    case K::H1:
      es = q8(true);
      es.emplace_back("x", "y");
      break;
    case K::H2:
      es = q8(false);
      es.emplace_back("x", "y");
      break;
    case K::P8: {
      if (n.v != 'x' && n.v != 'y') throw InputError("P8 vertex must be x or y");
      const std::string v(1, n.v);
      const std::string w = n.v == 'x' ? "y" : "x";
      const auto cls = color_class(n.i);
      int l = 0;
      for (int c : cls)
        if (c != n.i && c != n.j) l = c;
      es = k33_edges();
      remove_edge(es, {lbl(n.k), lbl(n.i)});
      remove_edge(es, {lbl(n.k), lbl(n.j)});
      for (int a : {n.k, n.i, n.j}) es.emplace_back(v, lbl(a));
      for (int a = 1; a <= 6; ++a)
        if (a != l) es.emplace_back(w, lbl(a));
      break;
    }
  }
  return k3311_subgraph(es);
}

Graph named_subgraph(std::string_view name) { return named_subgraph(SubgraphName::parse(name)); }

std::vector<SubgraphName> all_p8_names() {
  std::vector<SubgraphName> out;
  for (char v : {'x', 'y'})
    for (int k = 1; k <= 6; ++k) {
      auto cls = is_black(k) ? std::vector<int>{2, 4, 6} : std::vector<int>{1, 3, 5};
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) {
          SubgraphName n;
          n.kind = SubgraphName::Kind::P8;
          n.k = k;
          n.v = v;
          n.i = cls[a];
          n.j = cls[b];
          out.push_back(n);
        }
    }
  return out;
}

std::vector<SubgraphName> all_f_ij_names() {
  std::vector<SubgraphName> out;
  for (auto kind : {SubgraphName::Kind::Fx_ij, SubgraphName::Kind::Fy_ij})
    for (int i : {1, 3, 5})
      for (int j : {2, 4, 6}) {
        SubgraphName n;
        n.kind = kind;
        n.i = i;
        n.j = j;
        out.push_back(n);
      }
  return out;
}

std::vector<SubgraphName> all_f_k_names() {
  std::vector<SubgraphName> out;
  for (auto kind : {SubgraphName::Kind::Fx_k, SubgraphName::Kind::Fy_k})
    for (int k = 1; k <= 6; ++k) {
      SubgraphName n;
      n.kind = kind;
      n.k = k;
      out.push_back(n);
    }
  return out;
}

Graph named_graph(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "k6") return complete_graph(6);
  if (s == "k7") return complete_graph(7);
  if (s == "k33") return complete_multipartite({3, 3});
  if (s == "k3311") return standard_k3311();
  if (s == "p7" || s == "k331") return complete_multipartite({3, 3, 1});
  if (s == "q7") {
    auto k6 = complete_graph(6);
    return delta_y(k6, Cycle::from_labels(k6, {"1", "2", "3"}), "7");
  }
  if (s == "q8") {
    auto q7 = named_graph("q7");
    return delta_y(q7, Cycle::from_labels(q7, {"4", "5", "6"}), "8");
  }
  if (s == "p8") {
    auto p7 = named_graph("p7");
    return delta_y(p7, Cycle::from_labels(p7, {"1", "4", "7"}), "8");
  }
  if (s == "p9") {
    auto p8 = named_graph("p8");
    return delta_y(p8, triangles(p8).front(), "9");
  }
  if (s == "p10" || s == "petersen") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
      es.emplace_back(i, (i + 1) % 5);
      es.emplace_back(5 + i, 5 + (i + 2) % 5);
      es.emplace_back(i, 5 + i);
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
    return Graph::from_indices(std::move(labels), std::move(es));
  }
  throw InputError("unknown graph name '" + std::string(name) + "'");
}

}  // namespace cgv

#include "cgv/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cgv/graph.hpp"

namespace cgv {

std::string ConwayPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const auto c = coefficients[k];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b) {
  const std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.coefficient(static_cast<int>(k)) != b.coefficient(static_cast<int>(k))) return false;
  return true;
}

int linking_number(const LinkDiagram& d) {
  if (d.component_count() != 2) throw InputError("linking number needs a 2-component diagram");
  int sum = 0;
  for (const auto& c : d.crossings())
    if (c.over_component != c.under_component) sum += c.sign;
  if (sum % 2 != 0) throw InputError("odd signed count of inter-component crossings");
  return sum / 2;
}

namespace {

// Drops the passages of crossings flagged in `dead` and renumbers the rest.
LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<char>& dead) {
  std::vector<int> renumber(d.signs.size(), -1);
  LinkDiagram out;
  for (std::size_t x = 0; x < d.signs.size(); ++x)
    if (!dead[x]) {
      renumber[x] = static_cast<int>(out.signs.size());
      out.signs.push_back(d.signs[x]);
    }
  for (const auto& comp : d.components) {
    auto& nc = out.components.emplace_back();
    for (const auto& p : comp)
      if (!dead[static_cast<std::size_t>(p.crossing)]) nc.push_back({renumber[static_cast<std::size_t>(p.crossing)], p.over});
  }
  return out;
}

bool simplify_once(LinkDiagram& d) {
  std::vector<char> dead(d.signs.size(), 0);
  const auto info = d.crossings();
  auto next = [&](int c, int i) {
    const int n = static_cast<int>(d.components[static_cast<std::size_t>(c)].size());
    return (i + 1) % n;
  };
  auto at = [&](int c, int i) -> const Passage& {
    return d.components[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
  };
  // R1: the two passages of a crossing are cyclically adjacent.
  for (int c = 0; c < d.component_count(); ++c) {
    const int n = static_cast<int>(d.components[static_cast<std::size_t>(c)].size());
    for (int i = 0; i < n; ++i)
      if (n >= 2 && at(c, i).crossing == at(c, next(c, i)).crossing) {
        dead[static_cast<std::size_t>(at(c, i).crossing)] = 1;
        d = remove_crossings(d, dead);
        return true;
      }
  }
  // R2: two consecutive over passages whose under passages are also
  // consecutive, with opposite signs.
  for (int c = 0; c < d.component_count(); ++c) {
    const int n = static_cast<int>(d.components[static_cast<std::size_t>(c)].size());
    if (n < 2) continue;
    for (int i = 0; i < n; ++i) {
      const Passage& p = at(c, i);
      const Passage& q = at(c, next(c, i));
      if (!p.over || !q.over || p.crossing == q.crossing) continue;
      if (d.signs[static_cast<std::size_t>(p.crossing)] != -d.signs[static_cast<std::size_t>(q.crossing)]) continue;
      const auto& a = info[static_cast<std::size_t>(p.crossing)];
      const auto& b = info[static_cast<std::size_t>(q.crossing)];
      if (a.under_component != b.under_component) continue;
      if (next(a.under_component, a.under_position) != b.under_position &&
          next(b.under_component, b.under_position) != a.under_position)
        continue;
      dead[static_cast<std::size_t>(p.crossing)] = dead[static_cast<std::size_t>(q.crossing)] = 1;
      d = remove_crossings(d, dead);
      return true;
    }
  }
  return false;
}

using Poly = std::vector<std::int64_t>;

class Skein {
 public:
  Poly eval(const LinkDiagram& input, int deg) {
    if (++nodes_ > kSkeinBudget) throw std::runtime_error("skein resolution budget exceeded");
    if (deg < 0) return {};
    LinkDiagram d = simplify(input);
    const int c = d.component_count();
    if (c - 1 > deg) return Poly(static_cast<std::size_t>(deg + 1), 0);
    Poly zero(static_cast<std::size_t>(deg + 1), 0);
    if (d.crossing_count() == 0) {
      if (c == 1) zero[0] = 1;
      return zero;
    }
    if (c > 1 && split(d)) return zero;

    const std::string key = encode(d, deg);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int x = first_bad_crossing(d);
    Poly result = zero;
    if (x < 0) {
      if (c == 1) result[0] = 1;  // descending: trivial knot, or a split unlink
    } else {
      LinkDiagram switched = d;
      for (auto& comp : switched.components)
        for (auto& p : comp)
          if (p.crossing == x) p.over = !p.over;
      switched.signs[static_cast<std::size_t>(x)] = -switched.signs[static_cast<std::size_t>(x)];
      const int s = d.signs[static_cast<std::size_t>(x)];
      result = eval(switched, deg);
      const Poly sm = eval(smooth(d, x), deg - 1);
      for (std::size_t k = 0; k < sm.size(); ++k) result[k + 1] += s * sm[k];
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  static bool split(const LinkDiagram& d) {
    const int c = d.component_count();
    std::vector<int> parent(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    int groups = c;
    for (const auto& x : d.crossings()) {
      int a = find(x.over_component), b = find(x.under_component);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --groups;
      }
    }
    return groups > 1;
  }

  static int first_bad_crossing(const LinkDiagram& d) {
    std::vector<char> seen_over(d.signs.size(), 0);
    for (const auto& comp : d.components)
      for (const auto& p : comp) {
        if (p.over) seen_over[static_cast<std::size_t>(p.crossing)] = 1;
        else if (!seen_over[static_cast<std::size_t>(p.crossing)]) return p.crossing;
      }
    return -1;
  }

  static LinkDiagram smooth(const LinkDiagram& d, int x) {
    const auto info = d.crossings()[static_cast<std::size_t>(x)];
    LinkDiagram out;
    out.signs = d.signs;
    auto slice = [](const std::vector<Passage>& s, int from, int to, std::vector<Passage>& dst) {
      for (int i = from; i < to; ++i) dst.push_back(s[static_cast<std::size_t>(i)]);
    };
    const int ca = info.over_component, cb = info.under_component;
    for (int c = 0; c < d.component_count(); ++c)
      if (c != ca && c != cb) out.components.push_back(d.components[static_cast<std::size_t>(c)]);
    if (ca == cb) {
      const auto& s = d.components[static_cast<std::size_t>(ca)];
      const int n = static_cast<int>(s.size());
      const int i = std::min(info.over_position, info.under_position);
      const int j = std::max(info.over_position, info.under_position);
      auto& inner = out.components.emplace_back();
      slice(s, i + 1, j, inner);
      auto& outer = out.components.emplace_back();
      slice(s, j + 1, n, outer);
      slice(s, 0, i, outer);
    } else {
      const auto& a = d.components[static_cast<std::size_t>(ca)];
      const auto& b = d.components[static_cast<std::size_t>(cb)];
      const int i = info.over_position, j = info.under_position;
      auto& merged = out.components.emplace_back();
      slice(a, 0, i, merged);
      slice(b, j + 1, static_cast<int>(b.size()), merged);
      slice(b, 0, j, merged);
      slice(a, i + 1, static_cast<int>(a.size()), merged);
    }
    std::vector<char> dead(d.signs.size(), 0);
    dead[static_cast<std::size_t>(x)] = 1;
    return remove_crossings(out, dead);
  }

  static std::string encode(const LinkDiagram& d, int deg) {
    std::vector<int> relabel(d.signs.size(), -1);
    int next = 0;
    std::string key(1, static_cast<char>(deg));
    for (const auto& comp : d.components) {
      key.push_back('|');
      for (const auto& p : comp) {
        int& r = relabel[static_cast<std::size_t>(p.crossing)];
        if (r < 0) r = next++;
        key.push_back(static_cast<char>(r & 0x7f));
        key.push_back(static_cast<char>((r >> 7) | (p.over ? 0x40 : 0) | (d.signs[static_cast<std::size_t>(p.crossing)] > 0 ? 0x20 : 0)));
      }
    }
    return key;
  }

  std::int64_t nodes_ = 0;
  std::unordered_map<std::string, Poly> memo_;
};

}  // namespace

LinkDiagram simplify(const LinkDiagram& d) {
  LinkDiagram out = d;
  while (simplify_once(out)) {
  }
  return out;
}

ConwayPolynomial conway_polynomial(const LinkDiagram& d, int max_degree) {
  d.validate();
  const int deg = max_degree >= 0 ? max_degree : d.crossing_count() + d.component_count();
  Skein skein;
  ConwayPolynomial p{skein.eval(d, deg)};
  while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

std::int64_t a2(const LinkDiagram& d) {
  if (d.component_count() != 1) throw InputError("a2 needs a knot diagram");
  return conway_polynomial(d, 2).coefficient(2);
}

std::int64_t a2_gauss(const LinkDiagram& d) {
  if (d.component_count() != 1) throw InputError("a2 needs a knot diagram");
  d.validate();
  const auto info = d.crossings();
  std::int64_t sum = 0;
  for (const auto& a : info) {
    if (a.under_position > a.over_position) continue;
    for (const auto& b : info)
      if (a.under_position < b.over_position && b.over_position < a.over_position && a.over_position < b.under_position)
        sum += a.sign * b.sign;
  }
  return sum;
}

}  // namespace cgv

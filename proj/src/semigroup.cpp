#include "diagcell/semigroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace diagcell {

namespace {

std::string triple(std::size_t x, std::size_t y, std::size_t z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

std::string pair(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Strongly connected components of the graph on 0..n-1 where vertex v has
// `degree` out-edges, the i-th being `next(v, i)`. Components are numbered in
// completion order, so every edge leads to a component numbered no higher.
template <typename Next>
std::vector<std::size_t> tarjan(std::size_t n, std::size_t degree, Next next,
                                std::size_t& count) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(n, false);
  std::size_t next_index = 0;
  count = 0;

  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  auto push = [&](std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    call.emplace_back(v, 0);
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    push(root);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < degree) {
        std::size_t w = next(v, pos++);
        if (index[w] == kUnset) {
          push(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

// Renumbers a labelling so classes are indexed by order of least element.
std::vector<std::size_t> renumber(const std::vector<std::size_t>& label,
                                  std::vector<std::vector<Element>>& classes) {
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> out(label.size());
  classes.clear();
  for (std::size_t x = 0; x < label.size(); ++x) {
    auto [it, inserted] = seen.emplace(label[x], classes.size());
    if (inserted) classes.emplace_back();
    out[x] = it->second;
    classes[it->second].push_back(static_cast<Element>(x));
  }
  return out;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::size_t size, std::vector<Element> table,
                                 std::optional<Element> identity, bool validate)
    : size_(size), table_(std::move(table)), identity_(identity) {
  if (table_.size() != size_ * size_) {
    throw Error(ErrorCode::InvalidSemigroup, "table has " + std::to_string(table_.size()) +
                                                 " entries, expected " +
                                                 std::to_string(size_ * size_));
  }
  for (Element e : table_) {
    if (e >= size_) throw Error(ErrorCode::InvalidSemigroup, "table entry out of range");
  }
  if (identity_) {
    if (*identity_ >= size_) throw Error(ErrorCode::InvalidSemigroup, "identity out of range");
    for (Element x = 0; x < size_; ++x) {
      if (mul(*identity_, x) != x || mul(x, *identity_) != x) {
        throw Error(ErrorCode::InvalidSemigroup,
                    "declared identity " + std::to_string(*identity_) + " fails at " +
                        std::to_string(x));
      }
    }
  }
  if (validate) {
    auto report = check_associativity(*this);
    if (!report) throw Error(ErrorCode::InvalidSemigroup, "not associative at " + report.witness);
  }
}

std::optional<Element> FiniteSemigroup::find_identity() const {
  for (Element e = 0; e < size_; ++e) {
    bool ok = true;
    for (Element x = 0; x < size_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

CheckReport check_associativity(const FiniteSemigroup& s, std::size_t exhaustive_limit) {
  const std::size_t n = s.size();
  auto bad = [&](Element x, Element y, Element z) {
    return s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z));
  };
  if (n <= exhaustive_limit) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element xy = s.mul(x, y);
        for (Element z = 0; z < n; ++z) {
          if (s.mul(xy, z) != s.mul(x, s.mul(y, z))) {
            return CheckReport::fail("associativity", triple(x, y, z));
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 200000; ++i) {
      Element x = pick(rng), y = pick(rng), z = pick(rng);
      if (bad(x, y, z)) return CheckReport::fail("associativity", triple(x, y, z));
    }
  }
  return CheckReport::pass("associativity");
}

GreenData compute_green(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  GreenData g;
  std::size_t count = 0;

  // x -> xs spans the principal right ideal xS^1; SCCs are R-classes.
  auto el = [](std::size_t v) { return static_cast<Element>(v); };
  auto r_label = tarjan(
      n, n, [&](std::size_t x, std::size_t i) -> std::size_t { return s.mul(el(x), el(i)); },
      count);
  auto l_label = tarjan(
      n, n, [&](std::size_t x, std::size_t i) -> std::size_t { return s.mul(el(i), el(x)); },
      count);
  auto j_raw = tarjan(
      n, 2 * n,
      [&](std::size_t x, std::size_t i) -> std::size_t {
        return i < n ? s.mul(el(x), el(i)) : s.mul(el(i - n), el(x));
      },
      count);
  const std::size_t j_count = count;

  g.r_of = renumber(r_label, g.r_classes);
  g.l_of = renumber(l_label, g.l_classes);
  g.j_of = renumber(j_raw, g.j_classes);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_key;
  std::vector<std::size_t> h_label(n);
  for (std::size_t x = 0; x < n; ++x) {
    h_label[x] = h_key.emplace(std::make_pair(g.r_of[x], g.l_of[x]), h_key.size()).first->second;
  }
  g.h_of = renumber(h_label, g.h_classes);

  // D is the join of R and L.
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& cls : g.r_classes) {
    for (Element x : cls) unite(cls.front(), x);
  }
  for (const auto& cls : g.l_classes) {
    for (Element x : cls) unite(cls.front(), x);
  }
  std::vector<std::size_t> d_label(n);
  for (std::size_t x = 0; x < n; ++x) d_label[x] = find(x);
  g.d_of = renumber(d_label, g.d_classes);

  // J-order on raw SCC numbers: completion order puts successors first.
  std::vector<std::vector<bool>> j_leq(j_count, std::vector<bool>(j_count, false));
  {
    std::vector<std::vector<std::size_t>> members(j_count);
    for (std::size_t x = 0; x < n; ++x) members[j_raw[x]].push_back(x);
    for (std::size_t c = 0; c < j_count; ++c) {
      j_leq[c][c] = true;
      for (std::size_t x : members[c]) {
        for (Element y : s.row(static_cast<Element>(x))) {
          std::size_t cy = j_raw[y];
          if (cy != c && !j_leq[c][cy]) {
            for (std::size_t k = 0; k < j_count; ++k) {
              if (j_leq[cy][k]) j_leq[c][k] = true;
            }
          }
        }
        for (Element y = 0; y < n; ++y) {
          std::size_t cy = j_raw[s.mul(y, static_cast<Element>(x))];
          if (cy != c && !j_leq[c][cy]) {
            for (std::size_t k = 0; k < j_count; ++k) {
              if (j_leq[cy][k]) j_leq[c][k] = true;
            }
          }
        }
      }
    }
  }
  // j_leq[c][k]: class k lies in the ideal generated by c, i.e. k <=_J c.
  const std::size_t dn = g.d_classes.size();
  g.d_leq.assign(dn, std::vector<bool>(dn, false));
  for (std::size_t a = 0; a < dn; ++a) {
    for (std::size_t b = 0; b < dn; ++b) {
      g.d_leq[a][b] = j_leq[j_raw[g.d_classes[b].front()]][j_raw[g.d_classes[a].front()]];
    }
  }
  g.d_covers.assign(dn, {});
  for (std::size_t b = 0; b < dn; ++b) {
    for (std::size_t a = 0; a < dn; ++a) {
      if (!g.d_less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < dn && cover; ++c) {
        if (g.d_less(a, c) && g.d_less(c, b)) cover = false;
      }
      if (cover) g.d_covers[b].push_back(a);
    }
  }

  g.d_lclasses.assign(dn, {});
  g.d_rclasses.assign(dn, {});
  for (std::size_t i = 0; i < g.l_classes.size(); ++i) {
    g.d_lclasses[g.d_of[g.l_classes[i].front()]].push_back(i);
  }
  for (std::size_t i = 0; i < g.r_classes.size(); ++i) {
    g.d_rclasses[g.d_of[g.r_classes[i].front()]].push_back(i);
  }
  return g;
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x) {
    if (s.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

bool is_regular(const FiniteSemigroup& s, const GreenData& g) {
  std::vector<bool> has(g.d_classes.size(), false);
  for (Element e : idempotents(s)) has[g.d_of[e]] = true;
  return std::all_of(has.begin(), has.end(), [](bool b) { return b; });
}

std::optional<std::size_t> GroupTable::position(Element x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

GroupTable maximal_subgroup(const FiniteSemigroup& s, const GreenData& g, Element e) {
  if (s.mul(e, e) != e) {
    throw Error(ErrorCode::NotIdempotent, "element " + std::to_string(e));
  }
  GroupTable grp;
  grp.elements = g.h_classes[g.h_of[e]];
  std::sort(grp.elements.begin(), grp.elements.end());
  grp.identity = e;
  grp.identity_pos = *grp.position(e);
  const std::size_t m = grp.order();
  grp.product.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto p = grp.position(s.mul(grp.elements[i], grp.elements[j]));
      if (!p) throw Error(ErrorCode::InvalidSemigroup, "H-class of an idempotent not closed");
      grp.product[i][j] = *p;
    }
  }
  grp.inverse.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m && !found; ++j) {
      if (grp.product[i][j] == grp.identity_pos && grp.product[j][i] == grp.identity_pos) {
        grp.inverse[i] = j;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidSemigroup, "H-class element without inverse");
  }
  return grp;
}

CheckReport anti_involution_report(const FiniteSemigroup& s, const Permutation& star) {
  const std::size_t n = s.size();
  if (star.size() != n) return CheckReport::fail("anti-involution", "length mismatch");
  for (std::size_t x = 0; x < n; ++x) {
    if (star[x] >= n) return CheckReport::fail("anti-involution", "out of range at " + std::to_string(x));
    if (star[star[x]] != x) {
      return CheckReport::fail("anti-involution", "not an involution at " + std::to_string(x));
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (star[s.mul(x, y)] != s.mul(static_cast<Element>(star[y]), static_cast<Element>(star[x]))) {
        return CheckReport::fail("anti-involution", "(xy)* != y*x* at " + pair(x, y));
      }
    }
  }
  return CheckReport::pass("anti-involution");
}

bool check_anti_involution(const FiniteSemigroup& s, const Permutation& star) {
  return anti_involution_report(s, star).ok;
}

CheckReport group_bound_checks(const FiniteSemigroup& s, const GreenData& g) {
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool same_d = g.d_of[x] == g.d_of[y];
      bool same_j = g.j_of[x] == g.j_of[y];
      if (same_d != same_j) return CheckReport::fail("J = D", pair(x, y));
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = s.mul(x, y);
      if (g.d_of[x] == g.d_of[xy] && g.r_of[x] != g.r_of[xy]) {
        return CheckReport::fail("x D xy => x R xy", pair(x, y));
      }
      if (g.d_of[y] == g.d_of[xy] && g.l_of[y] != g.l_of[xy]) {
        return CheckReport::fail("y D xy => y L xy", pair(x, y));
      }
    }
  }
  return CheckReport::pass("group-bound");
}

CheckReport green_lemma_check(const FiniteSemigroup& s, const GreenData& g) {
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element a = 0; a < n; ++a) {
      Element xa = s.mul(x, a);
      if (g.r_of[xa] != g.r_of[x]) continue;
      const auto& src = g.l_classes[g.l_of[x]];
      const auto& dst = g.l_classes[g.l_of[xa]];
      if (src.size() != dst.size()) return CheckReport::fail("Green's Lemma", pair(x, a));
      std::vector<bool> hit(n, false);
      for (Element y : src) {
        Element ya = s.mul(y, a);
        if (g.l_of[ya] != g.l_of[xa] || g.r_of[ya] != g.r_of[y] || hit[ya]) {
          return CheckReport::fail("Green's Lemma", pair(x, a));
        }
        hit[ya] = true;
      }
    }
  }
  return CheckReport::pass("Green's Lemma");
}

CheckReport h_is_r_meet_l(const GreenData& g) {
  const std::size_t n = g.h_of.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool h = g.h_of[x] == g.h_of[y];
      bool rl = g.r_of[x] == g.r_of[y] && g.l_of[x] == g.l_of[y];
      if (h != rl) return CheckReport::fail("H = R meet L", pair(x, y));
    }
  }
  return CheckReport::pass("H = R meet L");
}

}  // namespace diagcell

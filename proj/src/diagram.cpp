#include "diagcell/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "diagcell/error.hpp"

namespace diagcell {

namespace {

constexpr std::size_t kMaxRank = 8;

// Relabels so blocks are numbered by first occurrence.
std::size_t canonicalize(std::uint8_t* labels, std::size_t len) {
  std::array<int, 64> remap;
  remap.fill(-1);
  std::size_t next = 0;
  for (std::size_t p = 0; p < len; ++p) {
    int& r = remap[labels[p]];
    if (r < 0) r = static_cast<int>(next++);
    labels[p] = static_cast<std::uint8_t>(r);
  }
  return next;
}

std::uint64_t pack(const std::uint8_t* labels, std::size_t len) {
  std::uint64_t key = 0;
  for (std::size_t p = 0; p < len; ++p) key = (key << 4U) | labels[p];
  return key;
}

// Product core on canonical labellings: writes the canonical product labelling
// to `out` and returns m(x, y).
std::size_t mul_core(std::size_t n, const std::uint8_t* x, const std::uint8_t* y,
                     std::uint8_t* out) {
  std::array<std::uint8_t, 3 * kMaxRank> parent;
  const std::size_t total = 3 * n;
  for (std::size_t i = 0; i < total; ++i) parent[i] = static_cast<std::uint8_t>(i);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
  };
  std::array<int, 2 * kMaxRank> first;
  first.fill(-1);
  for (std::size_t p = 0; p < 2 * n; ++p) {
    int& f = first[x[p]];
    if (f < 0) f = static_cast<int>(p);
    else unite(static_cast<std::size_t>(f), p);
  }
  first.fill(-1);
  for (std::size_t p = 0; p < 2 * n; ++p) {
    int& f = first[y[p]];
    if (f < 0) f = static_cast<int>(p + n);
    else unite(static_cast<std::size_t>(f), p + n);
  }
  std::array<bool, 3 * kMaxRank> outer{};
  for (std::size_t p = 0; p < n; ++p) outer[find(p)] = true;
  for (std::size_t p = 2 * n; p < total; ++p) outer[find(p)] = true;
  std::array<bool, 3 * kMaxRank> counted{};
  std::size_t m = 0;
  for (std::size_t p = n; p < 2 * n; ++p) {
    std::size_t r = find(p);
    if (!outer[r] && !counted[r]) {
      counted[r] = true;
      ++m;
    }
  }
  for (std::size_t p = 0; p < n; ++p) out[p] = static_cast<std::uint8_t>(find(p));
  for (std::size_t p = 0; p < n; ++p) out[n + p] = static_cast<std::uint8_t>(find(2 * n + p));
  canonicalize(out, 2 * n);
  return m;
}

void check_rank(std::size_t n) {
  if (n == 0 || n > kMaxRank) {
    throw Error(ErrorCode::BadParameter, "rank must lie in 1.." + std::to_string(kMaxRank));
  }
}

std::vector<int> sorted_block(std::vector<int> b) {
  std::sort(b.begin(), b.end(), [](int a, int c) {
    return std::make_pair(a < 0, std::abs(a)) < std::make_pair(c < 0, std::abs(c));
  });
  return b;
}

}  // namespace

std::string_view to_string(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::Partition: return "partition";
    case MonoidKind::Brauer: return "brauer";
    case MonoidKind::TemperleyLieb: return "tl";
  }
  return "?";
}

MonoidKind parse_kind(std::string_view text) {
  if (text == "partition") return MonoidKind::Partition;
  if (text == "brauer") return MonoidKind::Brauer;
  if (text == "tl") return MonoidKind::TemperleyLieb;
  throw Error(ErrorCode::BadParameter, "unknown monoid kind \"" + std::string(text) + "\"");
}

int point_label(std::size_t n, std::size_t point) {
  return point < n ? static_cast<int>(point + 1) : -static_cast<int>(point - n + 1);
}

std::size_t label_point(std::size_t n, int label) {
  return label > 0 ? static_cast<std::size_t>(label - 1)
                   : n + static_cast<std::size_t>(-label - 1);
}

SetPartition::SetPartition(std::size_t n, const std::vector<std::vector<int>>& blocks) : n_(n) {
  check_rank(n);
  std::vector<int> seen(2 * n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::BadParameter, "empty block");
    for (int label : blocks[b]) {
      if (label == 0 || std::abs(label) > static_cast<int>(n)) {
        throw Error(ErrorCode::BadParameter, "label " + std::to_string(label) + " out of range");
      }
      std::size_t p = label_point(n, label);
      if (seen[p] >= 0) {
        throw Error(ErrorCode::BadParameter, "label " + std::to_string(label) + " repeated");
      }
      seen[p] = static_cast<int>(b);
    }
  }
  block_of_.resize(2 * n);
  for (std::size_t p = 0; p < 2 * n; ++p) {
    if (seen[p] < 0) {
      throw Error(ErrorCode::BadParameter,
                  "label " + std::to_string(point_label(n, p)) + " missing");
    }
    block_of_[p] = static_cast<std::uint8_t>(seen[p]);
  }
  blocks_ = canonicalize(block_of_.data(), block_of_.size());
}

SetPartition SetPartition::from_block_labels(std::size_t n,
                                             const std::vector<std::uint8_t>& block_of) {
  check_rank(n);
  if (block_of.size() != 2 * n) throw Error(ErrorCode::BadParameter, "labelling length");
  SetPartition x;
  x.n_ = n;
  x.block_of_ = block_of;
  for (auto b : x.block_of_) {
    if (b >= 64) throw Error(ErrorCode::BadParameter, "block label too large");
  }
  x.blocks_ = canonicalize(x.block_of_.data(), x.block_of_.size());
  return x;
}

SetPartition SetPartition::identity(std::size_t n) {
  std::vector<std::uint8_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = labels[n + i] = static_cast<std::uint8_t>(i);
  return from_block_labels(n, labels);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (std::size_t p = 0; p < block_of_.size(); ++p) {
    out[block_of_[p]].push_back(point_label(n_, p));
  }
  return out;
}

bool SetPartition::is_matching() const {
  std::array<int, 2 * kMaxRank> count{};
  for (auto b : block_of_) ++count[b];
  for (std::size_t b = 0; b < blocks_; ++b) {
    if (count[b] != 2) return false;
  }
  return true;
}

std::uint64_t SetPartition::key() const { return pack(block_of_.data(), block_of_.size()); }

std::string SetPartition::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first_block = true;
  for (const auto& b : blocks()) {
    out << (first_block ? "" : ",") << "{";
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out << ",";
      if (b[i] > 0) out << b[i];
      else out << -b[i] << "'";
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

Product partition_mul(const SetPartition& x, const SetPartition& y) {
  if (x.n() != y.n()) {
    throw Error(ErrorCode::RankMismatch,
                std::to_string(x.n()) + " vs " + std::to_string(y.n()));
  }
  std::vector<std::uint8_t> out(2 * x.n());
  std::size_t m = mul_core(x.n(), x.block_of().data(), y.block_of().data(), out.data());
  return {SetPartition::from_block_labels(x.n(), out), m};
}

SetPartition star(const SetPartition& x) {
  const std::size_t n = x.n();
  std::vector<std::uint8_t> labels(2 * n);
  for (std::size_t p = 0; p < n; ++p) {
    labels[p] = x.block_of()[n + p];
    labels[n + p] = x.block_of()[p];
  }
  return SetPartition::from_block_labels(n, labels);
}

bool is_planar(const SetPartition& x) {
  if (!x.is_matching()) return false;
  const std::size_t n = x.n();
  // Boundary word 1..n, n'..1'; walking it, every arc must close the most
  // recently opened one.
  std::vector<std::size_t> word;
  for (std::size_t p = 0; p < n; ++p) word.push_back(p);
  for (std::size_t p = 2 * n; p-- > n;) word.push_back(p);
  std::vector<std::uint8_t> open;
  std::array<bool, 2 * kMaxRank> is_open{};
  for (std::size_t p : word) {
    std::uint8_t b = x.block_of()[p];
    if (!is_open[b]) {
      is_open[b] = true;
      open.push_back(b);
    } else {
      if (open.empty() || open.back() != b) return false;
      open.pop_back();
    }
  }
  return true;
}

GreenInvariants green_invariants(MonoidKind kind, const SetPartition& x) {
  GreenInvariants inv;
  const std::size_t n = x.n();
  for (auto block : x.blocks()) {
    std::vector<int> top, bottom;
    for (int label : block) (label > 0 ? top : bottom).push_back(label);
    top = sorted_block(top);
    bottom = sorted_block(bottom);
    if (!top.empty() && !bottom.empty()) {
      ++inv.d;
      if (kind == MonoidKind::Partition) {
        inv.r.traces.push_back(top);
        inv.l.traces.push_back(bottom);
      }
    } else if (!top.empty()) {
      inv.r.closed.push_back(top);
    } else {
      inv.l.closed.push_back(bottom);
    }
  }
  for (auto* side : {&inv.r, &inv.l}) {
    std::sort(side->closed.begin(), side->closed.end());
    std::sort(side->traces.begin(), side->traces.end());
  }
  (void)n;
  return inv;
}

std::size_t group_degree(MonoidKind kind, std::size_t n, std::size_t k) {
  return kind == MonoidKind::Partition ? n - k : n - 2 * k;
}

std::size_t strand_offset(MonoidKind kind, std::size_t k) {
  return kind == MonoidKind::Partition ? k : 2 * k;
}

namespace {

void check_k(MonoidKind kind, std::size_t n, std::size_t k) {
  check_rank(n);
  bool ok = kind == MonoidKind::Partition ? k <= n : 2 * k <= n;
  if (!ok) {
    throw Error(ErrorCode::BadParameter,
                "k = " + std::to_string(k) + " out of range for n = " + std::to_string(n));
  }
}

// Labelling of 1_D's fixed part; permuted strands are left as 0xff.
std::vector<std::uint8_t> fixed_part(MonoidKind kind, std::size_t n, std::size_t k) {
  std::vector<std::uint8_t> labels(2 * n, 0xff);
  std::uint8_t next = 0;
  if (kind == MonoidKind::Partition) {
    if (k > 0) {
      for (std::size_t i = 0; i < k; ++i) labels[i] = next;
      ++next;
      for (std::size_t i = 0; i < k; ++i) labels[n + i] = next;
      ++next;
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      labels[2 * i] = labels[2 * i + 1] = next++;
      labels[n + 2 * i] = labels[n + 2 * i + 1] = next++;
    }
  }
  return labels;
}

}  // namespace

SetPartition canonical_idempotent(MonoidKind kind, std::size_t n, std::size_t k) {
  check_k(kind, n, k);
  return theta(kind, n, k, identity_permutation(group_degree(kind, n, k)));
}

SetPartition theta(MonoidKind kind, std::size_t n, std::size_t k, const Permutation& sigma) {
  check_k(kind, n, k);
  const std::size_t m = group_degree(kind, n, k);
  if (sigma.size() != m) {
    throw Error(ErrorCode::DegreeMismatch,
                "expected degree " + std::to_string(m) + ", got " + std::to_string(sigma.size()));
  }
  const std::size_t o = strand_offset(kind, k);
  auto labels = fixed_part(kind, n, k);
  std::uint8_t next = static_cast<std::uint8_t>(2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    labels[o + sigma[i]] = next;
    labels[n + o + i] = next;
    ++next;
  }
  return SetPartition::from_block_labels(n, labels);
}

std::optional<Permutation> theta_inv(MonoidKind kind, std::size_t n, std::size_t k,
                                     const SetPartition& x) {
  check_k(kind, n, k);
  if (x.n() != n) return std::nullopt;
  const std::size_t m = group_degree(kind, n, k);
  const std::size_t o = strand_offset(kind, k);
  Permutation sigma(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint8_t b = x.block_of()[n + o + i];
    std::size_t found = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (x.block_of()[o + j] == b) {
        if (found != m) return std::nullopt;
        found = j;
      }
    }
    if (found == m) return std::nullopt;
    sigma[i] = found;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (sigma[i] == sigma[j]) return std::nullopt;
    }
  }
  if (theta(kind, n, k, sigma) != x) return std::nullopt;
  return sigma;
}

SetPartition brauer_uL(std::size_t n, std::size_t k, const SetPartition& bottom) {
  check_k(MonoidKind::Brauer, n, k);
  if (bottom.n() != n) throw Error(ErrorCode::RankMismatch, "u_L source rank");
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 1; i <= k; ++i) {
    blocks.push_back({static_cast<int>(2 * i - 1), static_cast<int>(2 * i)});
  }
  auto inv = green_invariants(MonoidKind::Brauer, bottom);
  if (inv.l.closed.size() != k) {
    throw Error(ErrorCode::NoSuchRepresentative, "bottom pattern has the wrong number of pairs");
  }
  std::vector<bool> used(n + 1, false);
  for (const auto& pair : inv.l.closed) {
    blocks.push_back(pair);
    for (int label : pair) used[static_cast<std::size_t>(-label)] = true;
  }
  std::size_t top = 2 * k + 1;
  for (std::size_t j = 1; j <= n; ++j) {
    if (used[j]) continue;
    blocks.push_back({static_cast<int>(top++), -static_cast<int>(j)});
  }
  return SetPartition(n, blocks);
}

bool belongs_to(MonoidKind kind, const SetPartition& x) {
  switch (kind) {
    case MonoidKind::Partition: return true;
    case MonoidKind::Brauer: return x.is_matching();
    case MonoidKind::TemperleyLieb: return is_planar(x);
  }
  return false;
}

Element DiagramMonoid::index_of(const SetPartition& x) const {
  auto idx = find(x);
  if (!idx) throw Error(ErrorCode::BadParameter, x.to_string() + " is not an element");
  return *idx;
}

std::optional<Element> DiagramMonoid::find(const SetPartition& x) const {
  if (x.n() != n) return std::nullopt;
  auto it = std::lower_bound(keys.begin(), keys.end(), x.key());
  if (it == keys.end() || *it != x.key()) return std::nullopt;
  return static_cast<Element>(it - keys.begin());
}

namespace {

void all_rgs(std::size_t len, std::vector<std::uint8_t>& cur, std::uint8_t max_plus_one,
             std::vector<std::vector<std::uint8_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::uint8_t b = 0; b <= max_plus_one; ++b) {
    cur.push_back(b);
    all_rgs(len, cur, b == max_plus_one ? max_plus_one + 1 : max_plus_one, out);
    cur.pop_back();
  }
}

void all_matchings(std::vector<std::uint8_t>& labels, std::uint8_t next,
                   std::vector<std::vector<std::uint8_t>>& out) {
  auto first = std::find(labels.begin(), labels.end(), 0xff);
  if (first == labels.end()) {
    out.push_back(labels);
    return;
  }
  *first = next;
  for (auto it = first + 1; it != labels.end(); ++it) {
    if (*it != 0xff) continue;
    *it = next;
    all_matchings(labels, static_cast<std::uint8_t>(next + 1), out);
    *it = 0xff;
  }
  *first = 0xff;
}

}  // namespace

std::vector<SetPartition> enumerate_elements(MonoidKind kind, std::size_t n, SizeGuard guard) {
  check_rank(n);
  std::size_t limit = kind == MonoidKind::Partition ? guard.partition
                      : kind == MonoidKind::Brauer  ? guard.brauer
                                                    : guard.tl;
  if (n > limit) {
    throw Error(ErrorCode::RankTooLarge, std::string(to_string(kind)) + " rank " +
                                             std::to_string(n) + " exceeds guard " +
                                             std::to_string(limit));
  }
  std::vector<std::vector<std::uint8_t>> raw;
  if (kind == MonoidKind::Partition) {
    std::vector<std::uint8_t> cur;
    all_rgs(2 * n, cur, 0, raw);
  } else {
    std::vector<std::uint8_t> labels(2 * n, 0xff);
    all_matchings(labels, 0, raw);
  }
  std::vector<SetPartition> out;
  out.reserve(raw.size());
  for (const auto& labels : raw) {
    SetPartition x = SetPartition::from_block_labels(n, labels);
    if (kind == MonoidKind::TemperleyLieb && !is_planar(x)) continue;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramMonoid enumerate(MonoidKind kind, std::size_t n, SizeGuard guard) {
  DiagramMonoid mon;
  mon.kind = kind;
  mon.n = n;
  mon.elements = enumerate_elements(kind, n, guard);
  const std::size_t size = mon.elements.size();
  mon.keys.reserve(size);
  for (const auto& x : mon.elements) mon.keys.push_back(x.key());

  std::vector<Element> table(size * size);
  mon.middle.assign(size * size, 0);
  std::array<std::uint8_t, 2 * kMaxRank> out{};
  for (std::size_t i = 0; i < size; ++i) {
    const std::uint8_t* x = mon.elements[i].block_of().data();
    for (std::size_t j = 0; j < size; ++j) {
      std::size_t m = mul_core(n, x, mon.elements[j].block_of().data(), out.data());
      std::uint64_t key = pack(out.data(), 2 * n);
      auto it = std::lower_bound(mon.keys.begin(), mon.keys.end(), key);
      if (it == mon.keys.end() || *it != key) {
        throw Error(ErrorCode::InvalidSemigroup, "diagram set not closed under product");
      }
      table[i * size + j] = static_cast<Element>(it - mon.keys.begin());
      mon.middle[i * size + j] = static_cast<std::uint8_t>(m);
    }
  }
  Element id = mon.index_of(SetPartition::identity(n));
  mon.semigroup = FiniteSemigroup(size, std::move(table), id, /*validate=*/size <= 300);
  mon.star.resize(size);
  for (std::size_t i = 0; i < size; ++i) mon.star[i] = mon.index_of(star(mon.elements[i]));
  return mon;
}

}  // namespace diagcell

namespace diagcell {

namespace {

// Both labelings must induce the same partition of 0..n-1.
template <class Key>
std::optional<std::size_t> partition_mismatch(const std::vector<Key>& keys,
                                              const std::vector<std::size_t>& classes) {
  std::map<Key, std::size_t> key_to_class;
  std::map<std::size_t, Key> class_to_key;
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto [a, fresh_a] = key_to_class.emplace(keys[x], classes[x]);
    auto [b, fresh_b] = class_to_key.emplace(classes[x], keys[x]);
    if (a->second != classes[x] || !(b->second == keys[x])) return x;
  }
  return std::nullopt;
}

}  // namespace

CheckReport green_cross_check(const DiagramMonoid& monoid, const GreenData& green) {
  std::vector<std::size_t> d;
  std::vector<SideInvariant> r, l;
  for (const auto& x : monoid.elements) {
    auto inv = green_invariants(monoid.kind, x);
    d.push_back(inv.d);
    r.push_back(std::move(inv.r));
    l.push_back(std::move(inv.l));
  }
  if (auto x = partition_mismatch(r, green.r_of)) {
    return CheckReport::fail("green R", monoid.elements[*x].to_string());
  }
  if (auto x = partition_mismatch(l, green.l_of)) {
    return CheckReport::fail("green L", monoid.elements[*x].to_string());
  }
  if (auto x = partition_mismatch(d, green.d_of)) {
    return CheckReport::fail("green D", monoid.elements[*x].to_string());
  }
  return CheckReport::pass("green");
}

}  // namespace diagcell

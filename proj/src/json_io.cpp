#include "diagcell/json_io.hpp"

#include <string>

namespace diagcell {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail("rational must be a string \"p/q\" or an integer");
}

Json to_json(const DeltaPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  if (coeffs.empty()) coeffs.push_back("0");
  return Json{{"coeffs", coeffs}};
}

DeltaPoly delta_poly_from_json(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) parse_fail("coeffs must be an array");
  std::vector<Rational> v;
  for (const auto& x : c) v.push_back(rational_from_json(x));
  return DeltaPoly(std::move(v));
}

Json to_json(const FiniteSemigroup& s) {
  Json table = Json::array();
  for (Element x = 0; x < s.size(); ++x) {
    auto row = s.row(x);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  Json out;
  out["size"] = s.size();
  out["table"] = std::move(table);
  out["identity"] = s.identity() ? Json(*s.identity()) : Json(nullptr);
  return out;
}

FiniteSemigroup semigroup_from_json(const Json& j) {
  const auto size = get_as<std::size_t>(field(j, "size"), "size");
  const auto rows = get_as<std::vector<std::vector<long long>>>(field(j, "table"), "table");
  if (rows.size() != size) parse_fail("table must have size rows");
  std::vector<Element> table;
  table.reserve(size * size);
  for (const auto& row : rows) {
    if (row.size() != size) parse_fail("table rows must have size entries");
    for (long long v : row) {
      if (v < 0 || std::size_t(v) >= size) {
        throw Error(ErrorCode::InvalidSemigroup, "table entry " + std::to_string(v) + " out of range");
      }
      table.push_back(static_cast<Element>(v));
    }
  }
  std::optional<Element> id;
  if (j.contains("identity") && !j.at("identity").is_null()) {
    id = get_as<Element>(j.at("identity"), "identity");
  }
  return FiniteSemigroup(size, std::move(table), id);
}

Json to_json(const SetPartition& x) {
  Json out;
  out["n"] = x.n();
  out["blocks"] = x.blocks();
  return out;
}

SetPartition set_partition_from_json(const Json& j) {
  const auto n = get_as<std::size_t>(field(j, "n"), "n");
  const auto blocks = get_as<std::vector<std::vector<int>>>(field(j, "blocks"), "blocks");
  return SetPartition(n, blocks);
}

Json to_json(const AlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [x, c] : a.terms()) {
    Json t;
    t["elem"] = x;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return Json{{"terms", terms}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  AlgebraElement a;
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) parse_fail("terms must be an array");
  for (const auto& t : terms) {
    a.add(get_as<Element>(field(t, "elem"), "elem"), delta_poly_from_json(field(t, "coeff")));
  }
  return a;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(rows);
  return out;
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  const auto rows = get_as<std::size_t>(field(j, "rows"), "rows");
  const auto cols = get_as<std::size_t>(field(j, "cols"), "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) parse_fail("entries must have rows rows");
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) parse_fail("entries rows must have cols entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = delta_poly_from_json(e[i][k]);
  }
  return m;
}

Json to_json(const CheckReport& r) {
  Json out;
  out["check"] = r.check;
  out["ok"] = r.ok;
  if (!r.ok) out["witness"] = r.witness;
  return out;
}

Json to_json(const DiagramMonoid& m) {
  Json out;
  out["kind"] = std::string(to_string(m.kind));
  out["n"] = m.n;
  out["size"] = m.size();
  Json elems = Json::array();
  for (const auto& x : m.elements) elems.push_back(x.blocks());
  out["elements"] = std::move(elems);
  out["semigroup"] = to_json(m.semigroup);
  out["star"] = m.star;
  Json middle = Json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::vector<unsigned> row(m.size());
    for (std::size_t y = 0; y < m.size(); ++y) {
      row[y] = m.m(static_cast<Element>(x), static_cast<Element>(y));
    }
    middle.push_back(std::move(row));
  }
  out["middle"] = std::move(middle);
  return out;
}

DiagramMonoid diagram_monoid_from_json(const Json& j) {
  const MonoidKind kind = parse_kind(get_as<std::string>(field(j, "kind"), "kind"));
  const auto n = get_as<std::size_t>(field(j, "n"), "n");
  SizeGuard guard{8, 8, 8};
  DiagramMonoid rebuilt = enumerate(kind, n, guard);
  DiagramMonoid parsed;
  parsed.kind = kind;
  parsed.n = n;
  for (const auto& b : field(j, "elements")) {
    parsed.elements.push_back(SetPartition(n, get_as<std::vector<std::vector<int>>>(b, "blocks")));
  }
  parsed.keys.reserve(parsed.elements.size());
  for (const auto& x : parsed.elements) parsed.keys.push_back(x.key());
  parsed.semigroup = semigroup_from_json(field(j, "semigroup"));
  parsed.star = get_as<Permutation>(field(j, "star"), "star");
  const auto middle = get_as<std::vector<std::vector<unsigned>>>(field(j, "middle"), "middle");
  for (const auto& row : middle) {
    for (unsigned v : row) parsed.middle.push_back(static_cast<std::uint8_t>(v));
  }
  if (!same_monoid(parsed, rebuilt)) {
    throw Error(ErrorCode::ValidationFailed, "stored monoid tables disagree with recomputation");
  }
  return parsed;
}

bool same_monoid(const DiagramMonoid& a, const DiagramMonoid& b) {
  return a.kind == b.kind && a.n == b.n && a.elements == b.elements &&
         a.semigroup.table() == b.semigroup.table() &&
         a.semigroup.identity() == b.semigroup.identity() && a.middle == b.middle &&
         a.star == b.star;
}

SemigroupContext generic_context_from_json(const Json& j) {
  FiniteSemigroup s = semigroup_from_json(j);
  const std::size_t n = s.size();
  Permutation star = get_as<Permutation>(field(j, "star"), "star");
  TwistingMap alpha = TwistingMap::trivial(n);
  if (j.contains("alpha")) {
    const Json& a = j.at("alpha");
    if (!a.is_array() || a.size() != n) parse_fail("alpha must be a size x size matrix");
    std::vector<DeltaPoly> values;
    for (const auto& row : a) {
      if (!row.is_array() || row.size() != n) parse_fail("alpha must be a size x size matrix");
      for (const auto& v : row) values.push_back(delta_poly_from_json(v));
    }
    alpha = TwistingMap::explicit_table(n, std::move(values));
  }
  return generic_context(std::move(s), std::move(star), std::move(alpha));
}

Json to_json(const CellDatum& d) {
  Json out;
  Json lambdas = Json::array();
  for (const auto& l : d.lambdas()) {
    Json lj;
    lj["label"] = l.label;
    lj["index_size"] = l.index_size;
    lj["index_labels"] = l.index_labels;
    lambdas.push_back(std::move(lj));
  }
  out["lambdas"] = std::move(lambdas);
  out["order"] = d.strict_order();
  Json basis = Json::array();
  for (std::size_t l = 0; l < d.lambda_count(); ++l) {
    Json cell = Json::array();
    for (std::size_t s = 0; s < d.index_size(l); ++s) {
      Json row = Json::array();
      for (std::size_t t = 0; t < d.index_size(l); ++t) row.push_back(to_json(d.C(l, s, t)));
      cell.push_back(std::move(row));
    }
    basis.push_back(std::move(cell));
  }
  out["basis"] = std::move(basis);
  Json meta = Json::object();
  for (const auto& [k, v] : d.metadata()) meta[k] = v;
  out["metadata"] = std::move(meta);
  return out;
}

CellDatum cell_datum_from_json(const Json& j, std::shared_ptr<const TwistedAlgebra> algebra) {
  std::vector<LambdaInfo> lambdas;
  for (const auto& lj : field(j, "lambdas")) {
    LambdaInfo l;
    l.label = get_as<std::string>(field(lj, "label"), "label");
    l.index_size = get_as<std::size_t>(field(lj, "index_size"), "index_size");
    if (lj.contains("index_labels")) {
      l.index_labels = get_as<std::vector<std::string>>(lj.at("index_labels"), "index_labels");
    }
    lambdas.push_back(std::move(l));
  }
  auto order =
      get_as<std::vector<std::pair<std::size_t, std::size_t>>>(field(j, "order"), "order");
  CellDatum::Basis basis;
  for (const auto& cell : field(j, "basis")) {
    std::vector<std::vector<AlgebraElement>> rows;
    for (const auto& row : cell) {
      std::vector<AlgebraElement> r;
      for (const auto& e : row) r.push_back(algebra_element_from_json(e));
      rows.push_back(std::move(r));
    }
    basis.push_back(std::move(rows));
  }
  CellDatum d(std::move(algebra), std::move(lambdas), std::move(order), std::move(basis));
  if (j.contains("metadata")) {
    for (const auto& [k, v] : j.at("metadata").items()) {
      d.metadata()[k] = get_as<std::string>(v, "metadata");
    }
  }
  return d;
}

bool same_datum(const CellDatum& a, const CellDatum& b) {
  if (a.lambda_count() != b.lambda_count() || a.strict_order() != b.strict_order() ||
      a.basis() != b.basis() || a.metadata() != b.metadata()) {
    return false;
  }
  for (std::size_t l = 0; l < a.lambda_count(); ++l) {
    const auto& x = a.lambda(l);
    const auto& y = b.lambda(l);
    if (x.label != y.label || x.index_size != y.index_size || x.index_labels != y.index_labels) {
      return false;
    }
  }
  return true;
}

Json to_json(const GreenData& g) {
  Json out;
  out["r_classes"] = g.r_classes;
  out["l_classes"] = g.l_classes;
  out["h_classes"] = g.h_classes;
  out["d_classes"] = g.d_classes;
  out["d_lclasses"] = g.d_lclasses;
  out["d_rclasses"] = g.d_rclasses;
  out["d_covers"] = g.d_covers;
  return out;
}

}  // namespace diagcell

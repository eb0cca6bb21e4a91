#include "diagcell/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "diagcell/json_io.hpp"

namespace diagcell {

namespace {

struct Options {
  std::string kind = "tl";
  std::size_t n = 2;
  std::string delta = "symbolic";
  std::string in;
  std::string out;
  std::string x;
  std::string y;
  std::string mode = "const-beta";
  bool force = false;
};

// Input problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

std::optional<Rational> parse_delta(const std::string& text) {
  if (text == "symbolic" || text == "d" || text.empty()) return std::nullopt;
  return parse_rational(text);
}

bool is_generic(const Options& o) { return o.kind == "generic"; }

SizeGuard guard_for(const Options& o, bool heavy) {
  if (o.force) return SizeGuard{8, 8, 8};
  return heavy ? SizeGuard{3, 4, 5} : SizeGuard{};
}

struct Loaded {
  SemigroupContext ctx;
  std::optional<DiagramMonoid> monoid;
};

Loaded load(const Options& o, bool heavy) {
  Loaded l;
  if (is_generic(o)) {
    if (o.in.empty()) throw UsageError("--kind generic needs --in");
    l.ctx = generic_context_from_json(read_json_file(o.in));
  } else {
    l.monoid = enumerate(parse_kind(o.kind), o.n, guard_for(o, heavy));
    l.ctx = diagram_context(*l.monoid);
  }
  return l;
}

Json frame_json(const SemigroupContext& ctx, const DClassFrame& f) {
  Json j;
  j["d_class"] = f.d_class;
  if (f.through) j["through"] = *f.through;
  j["idempotent"] = f.idempotent;
  if (ctx.kind) j["idempotent_diagram"] = ctx.elements[f.idempotent].blocks();
  j["group_degree"] = f.degree;
  j["theta"] = f.theta;
  j["u"] = f.u;
  return j;
}

Json sandwich_json(const SandwichMatrix& p) {
  Json rows = Json::array();
  for (const auto& row : p.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json cmd_enum(const Options& o) {
  if (is_generic(o)) {
    if (o.in.empty()) throw UsageError("--kind generic needs --in");
    return to_json(semigroup_from_json(read_json_file(o.in)));
  }
  return to_json(enumerate(parse_kind(o.kind), o.n, guard_for(o, false)));
}

Json cmd_green(const Options& o, bool& ok) {
  Loaded l = load(o, false);
  Json j;
  j["semigroup"] = l.ctx.describe();
  j["size"] = l.ctx.size();
  j["regular"] = is_regular(*l.ctx.semigroup, l.ctx.green);
  j["d_class_count"] = l.ctx.green.d_classes.size();
  j["classes"] = to_json(l.ctx.green);
  Json checks = Json::array();
  std::vector<CheckReport> reports{group_bound_checks(*l.ctx.semigroup, l.ctx.green),
                                   h_is_r_meet_l(l.ctx.green)};
  if (l.monoid) reports.push_back(green_cross_check(*l.monoid, l.ctx.green));
  for (const auto& r : reports) {
    ok = ok && r.ok;
    checks.push_back(to_json(r));
  }
  j["checks"] = std::move(checks);
  if (l.monoid) {
    Json inv = Json::array();
    for (const auto& x : l.monoid->elements) inv.push_back(green_invariants(l.monoid->kind, x).d);
    j["through_counts"] = std::move(inv);
  }
  return j;
}

SemigroupContext with_delta(const SemigroupContext& ctx, const Options& o) {
  auto d = parse_delta(o.delta);
  return d ? specialize(ctx, *d) : ctx;
}

Json cmd_cell_datum(const Options& o) {
  Loaded l = load(o, true);
  SemigroupContext ctx = with_delta(l.ctx, o);
  AssemblyOptions opts;
  opts.mode = parse_mode(o.mode);
  if (opts.mode == AssemblyMode::GeneralBeta) {
    throw UsageError("general-beta mode is available through the library only");
  }
  AssembledDatum a = assemble_datum(ctx, build_frames(ctx), opts);
  Json j;
  j["semigroup"] = ctx.describe();
  j["mode"] = std::string(to_string(a.mode));
  j["delta"] = o.delta;
  Json frames = Json::array();
  for (std::size_t fi = 0; fi < a.frames.size(); ++fi) {
    Json fj = frame_json(ctx, a.frames[fi]);
    fj["sandwich"] = sandwich_json(sandwich_matrix(ctx, a.frames[fi], fi));
    frames.push_back(std::move(fj));
  }
  j["frames"] = std::move(frames);
  j["datum"] = to_json(*a.datum);
  Json checks = Json::array();
  for (const auto& r : a.checks) checks.push_back(to_json(r));
  j["validation"] = std::move(checks);
  return j;
}

Json cmd_gram(const Options& o, bool& ok) {
  Loaded l = load(o, true);
  SemigroupContext ctx = with_delta(l.ctx, o);
  AssemblyOptions opts;
  opts.mode = parse_mode(o.mode);
  AssembledDatum a = assemble_datum(ctx, build_frames(ctx), opts);
  Json cells = Json::array();
  for (std::size_t i = 0; i < a.origin.size(); ++i) {
    auto [fi, lam] = a.origin[i];
    GramFactorization g = gram_factorization(ctx, a, fi, lam);
    Json c;
    c["lambda"] = a.datum->lambda(i).label;
    c["gram"] = to_json(g.assembled);
    c["det"] = to_json(g.det_assembled);
    c["group_gram"] = to_json(g.group_gram);
    c["rho_sandwich"] = to_json(g.rho_p);
    c["det_factorized"] = to_json(g.det_product);
    c["factorization_holds"] = g.matrices_equal;
    c["det_identity_holds"] = g.determinants_equal;
    ok = ok && g.matrices_equal && g.determinants_equal;
    cells.push_back(std::move(c));
  }
  Json j;
  j["semigroup"] = ctx.describe();
  j["mode"] = std::string(to_string(a.mode));
  j["delta"] = o.delta;
  j["cells"] = std::move(cells);
  return j;
}

Json oracle_json(const OracleVerdict& v) {
  Json j;
  j["verdict"] = v.semisimple ? "semisimple" : "not semisimple";
  j["rank"] = v.rank;
  j["dimension"] = v.dimension;
  return j;
}

Json report_json(const SemisimplicityReport& r, const Rational& delta) {
  Json j;
  j["delta"] = to_json(delta);
  j["applicable"] = r.applicable;
  if (!r.applicable) {
    j["status"] = std::string(to_string(ErrorCode::AlphaNotUnit));
    j["reason"] = r.inapplicable_reason;
  } else {
    j["verdict"] = r.semisimple ? "semisimple" : "not semisimple";
    Json frames = Json::array();
    for (const auto& f : r.frames) {
      Json fj;
      fj["frame"] = f.frame;
      Json g = Json::array(), p = Json::array();
      for (const auto& v : f.group_gram_dets) g.push_back(to_json(v));
      for (const auto& v : f.sandwich_dets) p.push_back(to_json(v));
      fj["group_gram_dets"] = std::move(g);
      fj["sandwich_dets"] = std::move(p);
      fj["group_semisimple"] = f.group_semisimple;
      fj["sandwich_invertible"] = f.sandwich_invertible;
      frames.push_back(std::move(fj));
    }
    j["frames"] = std::move(frames);
  }
  j["oracle"] = oracle_json(r.oracle);
  j["agrees"] = r.agrees;
  return j;
}

Json cmd_semisimple(const Options& o, bool& ok) {
  auto delta = parse_delta(o.delta);
  if (!delta) throw UsageError("semisimple needs a rational --delta");
  Loaded l = load(o, true);
  SemisimplicityReport r = semisimplicity_report(l.ctx, *delta);
  ok = r.agrees;
  Json j = report_json(r, *delta);
  j["semigroup"] = l.ctx.describe();
  return j;
}

Json cmd_verify(const Options& o, bool& ok) {
  Loaded l = load(o, true);
  const SemigroupContext& ctx = l.ctx;
  const FiniteSemigroup& s = *ctx.semigroup;
  std::vector<CheckReport> reports;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      reports.push_back(CheckReport::fail(name, e.what()));
    }
  };
  reports.push_back(check_associativity(s));
  reports.push_back(anti_involution_report(s, ctx.star));
  reports.push_back(validate_twisting(s, ctx.alpha));
  reports.push_back(validate_star_twist(s, ctx.alpha, ctx.star));
  reports.push_back(validate_r_constant(s, ctx.green, ctx.alpha));
  reports.push_back(group_bound_checks(s, ctx.green));
  reports.push_back(green_lemma_check(s, ctx.green));
  reports.push_back(h_is_r_meet_l(ctx.green));
  if (l.monoid) reports.push_back(green_cross_check(*l.monoid, ctx.green));

  guarded("assembly", [&] {
    AssembledDatum a = assemble_datum(ctx, build_frames(ctx));
    for (const auto& r : a.checks) reports.push_back(r);
    bool gram_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < a.origin.size() && gram_ok; ++i) {
      auto g = gram_factorization(ctx, a, a.origin[i].first, a.origin[i].second);
      gram_ok = g.matrices_equal && g.determinants_equal;
      if (!gram_ok) witness = a.datum->lambda(i).label;
    }
    reports.push_back(gram_ok ? CheckReport::pass("gram factorization")
                              : CheckReport::fail("gram factorization", witness));
    for (std::size_t fi = 0; fi < a.frames.size(); ++fi) {
      const auto& gd = a.group_data[fi];
      for (std::size_t lam = 0; lam < gd.lambda_count(); ++lam) {
        induce_module(ctx, a.frames[fi], cell_module(gd, lam), a.betas[fi]);
      }
    }
    reports.push_back(CheckReport::pass("induced modules"));
  });
  if (auto delta = parse_delta(o.delta)) {
    guarded("semisimplicity", [&] {
      auto r = semisimplicity_report(ctx, *delta);
      reports.push_back(r.agrees ? CheckReport::pass("semisimplicity vs oracle")
                                 : CheckReport::fail("semisimplicity vs oracle",
                                                     "delta = " + to_string(*delta)));
    });
    if (*delta != 0) {
      guarded("unit-alpha assembly", [&] {
        AssemblyOptions opts;
        opts.mode = AssemblyMode::UnitAlpha;
        SemigroupContext sctx = specialize(ctx, *delta);
        AssembledDatum a = assemble_datum(sctx, build_frames(sctx), opts);
        for (auto r : a.checks) {
          r.check = "unit-alpha " + r.check;
          reports.push_back(r);
        }
      });
    }
  }
  Json checks = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok;
    checks.push_back(to_json(r));
  }
  Json j;
  j["semigroup"] = ctx.describe();
  j["delta"] = o.delta;
  j["checks"] = std::move(checks);
  j["ok"] = ok;
  return j;
}

Json cmd_mul(const Options& o) {
  if (is_generic(o)) throw UsageError("mul needs a diagram kind");
  if (o.x.empty() || o.y.empty()) throw UsageError("mul needs --x and --y");
  const MonoidKind kind = parse_kind(o.kind);
  SetPartition x = set_partition_from_json(read_json_file(o.x));
  SetPartition y = set_partition_from_json(read_json_file(o.y));
  if (x.n() != o.n || y.n() != o.n) {
    throw Error(ErrorCode::RankMismatch, "operands must have rank " + std::to_string(o.n));
  }
  for (const auto* p : {&x, &y}) {
    if (!belongs_to(kind, *p)) {
      throw Error(ErrorCode::BadParameter, p->to_string() + " is not in " + std::string(to_string(kind)));
    }
  }
  Product p = partition_mul(x, y);
  DeltaPoly coeff = pow(DeltaPoly::delta(), p.middle_count);
  if (auto d = parse_delta(o.delta)) coeff = DeltaPoly(coeff.eval(*d));
  Json j;
  j["x"] = to_json(x);
  j["y"] = to_json(y);
  j["product"] = to_json(p.value);
  j["middle_count"] = p.middle_count;
  j["coefficient"] = to_json(coeff);
  return j;
}

bool usage_code(ErrorCode c) {
  return c == ErrorCode::Parse || c == ErrorCode::BadParameter || c == ErrorCode::RankTooLarge;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cell data for twisted semigroup algebras of diagram monoids"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "partition, brauer, tl or generic")
        ->check(CLI::IsMember({"partition", "brauer", "tl", "generic"}));
    sub->add_option("--n", o.n, "rank")->check(CLI::Range(1, 16));
    sub->add_option("--in", o.in, "semigroup JSON for --kind generic");
    sub->add_option("--out", o.out, "write JSON here instead of standard output");
    sub->add_flag("--force", o.force, "lift the default size guards");
  };
  auto* s_enum = app.add_subcommand("enum", "materialize a monoid");
  auto* s_green = app.add_subcommand("green", "Green's classes with invariant cross-check");
  auto* s_cell = app.add_subcommand("cell-datum", "assembled cell datum with validation");
  auto* s_gram = app.add_subcommand("gram", "Gram matrices and their factorization");
  auto* s_semi = app.add_subcommand("semisimple", "semisimplicity report and oracle");
  auto* s_verify = app.add_subcommand("verify", "run the invariant suite");
  auto* s_mul = app.add_subcommand("mul", "twisted product of two diagrams");
  for (auto* sub : {s_enum, s_green, s_cell, s_gram, s_semi, s_verify, s_mul}) add_source(sub);
  for (auto* sub : {s_cell, s_gram, s_semi, s_verify, s_mul}) {
    sub->add_option("--delta", o.delta, "rational value such as 3/2, or symbolic");
  }
  for (auto* sub : {s_cell, s_gram}) {
    sub->add_option("--mode", o.mode, "const-beta or unit-alpha")
        ->check(CLI::IsMember({"const-beta", "unit-alpha"}));
  }
  s_mul->add_option("--x", o.x, "diagram JSON")->required();
  s_mul->add_option("--y", o.y, "diagram JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  bool ok = true;
  Json result;
  try {
    if (*s_enum) result = cmd_enum(o);
    else if (*s_green) result = cmd_green(o, ok);
    else if (*s_cell) result = cmd_cell_datum(o);
    else if (*s_gram) result = cmd_gram(o, ok);
    else if (*s_semi) result = cmd_semisimple(o, ok);
    else if (*s_verify) result = cmd_verify(o, ok);
    else result = cmd_mul(o);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (usage_code(e.code())) {
      err << e.what() << "\n";
      return 2;
    }
    result = Json{{"ok", false}, {"error", std::string(to_string(e.code()))}, {"witness", e.what()}};
    ok = false;
  }

  const std::string text = result.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return ok ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"diagcell"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace diagcell

#include "cyc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "cyc/json_io.hpp"

namespace cyc {

namespace {

struct Ctx {
  std::string ring_tag = "Z";
  long level = 1;
  long bound = 1;
  long from = 1;
  long to = 1;
  long p = 2;
  long max_product = 24;
  std::string primes_csv = "2,3";
  std::string ambient = "inf";
  std::string op = "sum";
  std::string base = "witt";
  std::string out_format = "json";
  std::string in_path;
  std::string stdin_data;

  std::ostringstream out;
  int status = 0;

  Json payload() const {
    std::string text;
    if (!in_path.empty()) {
      std::ifstream f(in_path);
      if (!f) throw InputError("cannot open input file '" + in_path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else {
      text = stdin_data;
    }
    if (text.empty()) throw InputError("expected a JSON payload on stdin or via --in");
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("payload: ") + e.what());
    }
  }

  std::vector<long> primes() const {
    std::vector<long> ps;
    std::string cur;
    for (char c : primes_csv + ",") {
      if (c == ',') {
        if (!cur.empty()) ps.push_back(std::stol(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    for (long q : ps)
      if (!is_prime(q)) throw InputError("--primes: " + std::to_string(q) + " is not prime");
    return ps;
  }

  void emit(const Json& j) { out << j.dump(2) << "\n"; }
  void emit_csv(const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
  }
};

template <typename R>
Json witt_binary_op(Ctx& ctx, const R& ring, bool multiply) {
  Json in = ctx.payload();
  if (!in.is_array() || in.size() != 2)
    throw InputError("expected a payload array of two witt vectors");
  auto x = witt_from_json(ring, in[0]);
  auto y = witt_from_json(ring, in[1]);
  return witt_to_json(multiply ? witt_mul(x, y) : witt_add(x, y));
}

template <typename R>
Json witt_reindex_op(Ctx& ctx, const R& ring, const std::string& which) {
  auto w = witt_from_json(ring, ctx.payload());
  if (which == "frob") return witt_to_json(frobenius(w, ctx.to));
  if (which == "versch") return witt_to_json(verschiebung(w, ctx.to));
  return witt_to_json(restriction(w, ctx.to));
}

template <typename R>
Json witt_ghost_op(Ctx& ctx, const R& ring) {
  auto w = witt_from_json(ring, ctx.payload());
  auto z = ghost(w);
  auto ds = divisors(w.level);
  Json comps = Json::object();
  for (size_t i = 0; i < ds.size(); ++i)
    comps[std::to_string(ds[i])] = elem_to_json(ring, z[i]);
  return Json{{"level", w.level}, {"ghost", comps}};
}

void register_supernat(CLI::App& app, Ctx& ctx) {
  auto* sup = app.add_subcommand("supernat", "supernatural number lattice");
  auto* gcd = sup->add_subcommand("gcd", "meet of the payload list");
  auto* lcm = sup->add_subcommand("lcm", "join of the payload list");
  for (auto* cmd : {gcd, lcm}) {
    bool is_gcd = cmd == gcd;
    cmd->callback([&ctx, is_gcd]() {
      Json in = ctx.payload();
      if (!in.is_array() || in.empty())
        throw InputError("expected a payload array of supernatural strings");
      Supernatural acc = Supernatural::parse(in[0].get<std::string>());
      for (size_t i = 1; i < in.size(); ++i) {
        Supernatural s = Supernatural::parse(in[i].get<std::string>());
        acc = is_gcd ? acc.meet(s) : acc.join(s);
      }
      ctx.emit(Json(acc.str()));
    });
  }
  auto* nest = sup->add_subcommand("nest", "finite divisors up to --bound");
  nest->add_option("--N", ctx.ambient, "supernatural number");
  nest->add_option("--bound", ctx.bound, "truncation bound")->required();
  nest->callback([&ctx]() {
    Json out = Json::array();
    for (long d : Supernatural::parse(ctx.ambient).nest(ctx.bound)) out.push_back(d);
    ctx.emit(out);
  });
}

void register_orbit(CLI::App& app, Ctx& ctx) {
  auto* orb = app.add_subcommand("orbit", "cyclonic orbit maps");
  auto* comp = orb->add_subcommand("compose", "compose the payload map list, left to right");
  comp->add_option("--N", ctx.ambient, "ambient degree");
  comp->callback([&ctx]() {
    Json in = ctx.payload();
    Supernatural amb = Supernatural::parse(in.contains("N") ? in.at("N").get<std::string>()
                                                            : ctx.ambient);
    if (!in.contains("maps") || !in.at("maps").is_array() || in.at("maps").empty())
      throw InputError("expected {\"maps\": [...]} in the payload");
    OrbitMap acc = json_to_orbit_map(in.at("maps")[0], amb);
    for (size_t i = 1; i < in.at("maps").size(); ++i)
      acc = compose_orbit_maps(acc, json_to_orbit_map(in.at("maps")[i], amb));
    Json out = orbit_map_to_json(acc);
    out["N"] = amb.str();
    ctx.emit(out);
  });
  auto* pull = orb->add_subcommand("pullback", "orbit decomposition of a pullback");
  pull->add_option("--N", ctx.ambient, "ambient degree");
  pull->callback([&ctx]() {
    Json in = ctx.payload();
    Supernatural amb = Supernatural::parse(in.contains("N") ? in.at("N").get<std::string>()
                                                            : ctx.ambient);
    auto f = json_to_orbit_map(in.at("f"), amb);
    auto g = json_to_orbit_map(in.at("g"), amb);
    Json comps = Json::array();
    for (const auto& c : pullback_cospan(f, g))
      comps.push_back(Json{{"level", c.orbit.level()},
                           {"pr1", rat_to_json(c.pr1.offset())},
                           {"pr2", rat_to_json(c.pr2.offset())}});
    ctx.emit(Json{{"components", comps}});
  });
  auto* simp = orb->add_subcommand("simplex-check", "filler coherence for a 3-simplex");
  simp->add_option("--N", ctx.ambient, "ambient degree");
  simp->callback([&ctx]() {
    Json in = ctx.payload();
    Supernatural amb = Supernatural::parse(in.contains("N") ? in.at("N").get<std::string>()
                                                            : ctx.ambient);
    Simplex3 s;
    std::vector<long> levels;
    for (const auto& l : in.at("levels")) levels.push_back(l.get<long>());
    if (levels.size() != 4) throw InputError("expected four levels");
    for (long l : levels) s.objects.emplace_back(l, amb);
    s.phi.assign(4, {});
    const Json& maps = in.at("maps");
    for (int i = 0; i < 4; ++i) {
      s.phi[i].clear();
      for (int j = 0; j < 4; ++j)
        s.phi[i].push_back(OrbitMap::identity(s.objects[0]));  // placeholder below diagonal
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::string key = std::to_string(i) + std::to_string(j);
        if (!maps.contains(key)) throw InputError("missing map " + key);
        s.phi[i][j] = make_orbit_map(levels[i], levels[j], json_to_rat(maps.at(key)), amb);
      }
    const Json& fills = in.at("fillers");
    s.alpha012 = json_to_rat(fills.at("012"));
    s.alpha013 = json_to_rat(fills.at("013"));
    s.alpha023 = json_to_rat(fills.at("023"));
    s.alpha123 = json_to_rat(fills.at("123"));
    Simplex3Report rep = check_simplex3(s);
    Json out{{"pass", rep.ok}};
    if (!rep.ok) {
      out["failing_face"] = rep.failing_face;
      out["detail"] = rep.detail;
      ctx.status = 1;
    }
    ctx.emit(out);
  });
}

void register_burnside(CLI::App& app, Ctx& ctx) {
  auto* bur = app.add_subcommand("burnside", "span algebra on the divisor poset");
  auto* comp = bur->add_subcommand("compose", "compose two h-morphisms");
  comp->callback([&ctx]() {
    Json in = ctx.payload();
    if (!in.is_array() || in.size() != 2)
      throw InputError("expected a payload array of two h-morphisms");
    ctx.emit(hmorphism_to_json(compose_h(json_to_hmorphism(in[0]), json_to_hmorphism(in[1]))));
  });
  auto* mul = bur->add_subcommand("mul", "multiply two Burnside ring elements");
  mul->add_option("--level", ctx.level, "ring level");
  mul->callback([&ctx]() {
    Json in = ctx.payload();
    if (!in.is_array() || in.size() != 2)
      throw InputError("expected a payload array of two Burnside elements");
    ctx.emit(burnside_to_json(burnside_mul(json_to_burnside(in[0]), json_to_burnside(in[1]))));
  });
  auto* table = bur->add_subcommand("table", "multiplication table at --level");
  table->add_option("--level", ctx.level, "ring level")->required();
  table->callback([&ctx]() {
    auto ds = divisors(ctx.level);
    if (ctx.out_format == "csv") {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"k", "l"};
      for (long d : ds) header.push_back("[" + std::to_string(d) + "]");
      rows.push_back(header);
      for (long k : ds)
        for (long l : ds) {
          BurnsideElement prod =
              burnside_mul(BurnsideElement::basis(k, ctx.level), BurnsideElement::basis(l, ctx.level));
          std::vector<std::string> row{std::to_string(k), std::to_string(l)};
          for (long d : ds) row.push_back(prod.coeff(d).str());
          rows.push_back(row);
        }
      ctx.emit_csv(rows);
    } else {
      Json out = Json::object();
      for (long k : ds)
        for (long l : ds)
          out["[" + std::to_string(k) + "]*[" + std::to_string(l) + "]"] = burnside_to_json(
              burnside_mul(BurnsideElement::basis(k, ctx.level), BurnsideElement::basis(l, ctx.level)));
      ctx.emit(out);
    }
  });
}

void register_mackey(CLI::App& app, Ctx& ctx) {
  auto* mk = app.add_subcommand("mackey", "divisor-poset Mackey structures");
  auto* validate = mk->add_subcommand("validate", "check the axioms on payload data");
  validate->callback([&ctx]() {
    MackeyData d = json_to_mackey(ctx.payload());
    MackeyReport rep = validate_mackey(d);
    ctx.emit(mackey_report_to_json(rep));
    if (!rep.valid()) ctx.status = 1;
  });
  auto* bur = mk->add_subcommand("burnside", "the Burnside structure at --bound");
  bur->add_option("--bound", ctx.bound, "level bound")->required();
  bur->callback([&ctx]() { ctx.emit(mackey_to_json(burnside_mackey(ctx.bound))); });
  auto* wt = mk->add_subcommand("witt", "the Witt structure at --bound");
  wt->add_option("--bound", ctx.bound, "level bound")->required();
  wt->add_option("--ring", ctx.ring_tag, "Z or Zmod:<n>");
  wt->callback([&ctx]() {
    ctx.emit(mackey_to_json(witt_mackey(RingSpec::parse(ctx.ring_tag), ctx.bound)));
  });
  auto* ev = mk->add_subcommand("eval", "evaluate an h-morphism on payload data");
  ev->callback([&ctx]() {
    Json in = ctx.payload();
    MackeyData d = json_to_mackey(in.at("data"));
    GroupMorphism f = eval_h(d, json_to_hmorphism(in.at("h")));
    ctx.emit(Json{{"matrix", matrix_to_json(f.matrix())}});
  });
}

void register_witt(CLI::App& app, Ctx& ctx) {
  auto* wt = app.add_subcommand("witt", "big Witt vector arithmetic");
  auto add_ring = [&ctx](CLI::App* cmd) { cmd->add_option("--ring", ctx.ring_tag, "ring tag"); };
  auto* add = wt->add_subcommand("add", "sum of two payload vectors");
  auto* mul = wt->add_subcommand("mul", "product of two payload vectors");
  for (auto* cmd : {add, mul}) {
    add_ring(cmd);
    cmd->add_option("--level", ctx.level, "truncation level (informational)");
    bool is_mul = cmd == mul;
    cmd->callback([&ctx, is_mul]() {
      ctx.emit(with_ring(RingSpec::parse(ctx.ring_tag),
                         [&](auto ring) { return witt_binary_op(ctx, ring, is_mul); }));
    });
  }
  for (const char* name : {"frob", "versch", "restrict"}) {
    auto* cmd = wt->add_subcommand(name, std::string(name) + " to --to");
    add_ring(cmd);
    cmd->add_option("--to", ctx.to, "target level")->required();
    std::string which = name;
    cmd->callback([&ctx, which]() {
      ctx.emit(with_ring(RingSpec::parse(ctx.ring_tag),
                         [&](auto ring) { return witt_reindex_op(ctx, ring, which); }));
    });
  }
  auto* gh = wt->add_subcommand("ghost", "ghost components of the payload vector");
  add_ring(gh);
  gh->callback([&ctx]() {
    ctx.emit(with_ring(RingSpec::parse(ctx.ring_tag),
                       [&](auto ring) { return witt_ghost_op(ctx, ring); }));
  });
  auto* polys = wt->add_subcommand("polys", "universal polynomials at --level");
  polys->add_option("--level", ctx.level, "truncation level")->required();
  polys->add_option("--op", ctx.op, "sum | product | negation");
  polys->callback([&ctx]() {
    WittOp op = ctx.op == "sum"       ? WittOp::sum
                : ctx.op == "product" ? WittOp::product
                : ctx.op == "negation"
                    ? WittOp::negation
                    : throw InputError("--op must be sum, product or negation");
    const auto& ps = universal_polys(ctx.level, op);
    PolyZ ring = witt_poly_ring(ctx.level, op);
    auto ds = divisors(ctx.level);
    Json out = Json::object();
    for (size_t i = 0; i < ds.size(); ++i)
      out[std::to_string(ds[i])] = elem_to_json(ring, ps[i]);
    Json vars = Json::array();
    for (const auto& v : ring.vars) vars.push_back(v);
    ctx.emit(Json{{"vars", vars}, {"polys", out}});
  });
}

MackeyData base_data(const Ctx& ctx) {
  if (ctx.base == "witt") return witt_mackey(RingSpec::parse(ctx.ring_tag), ctx.bound);
  if (ctx.base == "burnside") return burnside_mackey(ctx.bound);
  throw InputError("--base must be witt or burnside");
}

void register_cyclotomic(CLI::App& app, Ctx& ctx) {
  auto* cy = app.add_subcommand("cyclotomic", "fixed points and restriction structure");
  auto* gfp = cy->add_subcommand("gfp", "geometric fixed points at one level");
  gfp->add_option("--p", ctx.p, "prime")->required();
  gfp->add_option("--level", ctx.level, "level")->required();
  gfp->add_option("--base", ctx.base, "witt | burnside");
  gfp->add_option("--ring", ctx.ring_tag, "ring for the witt base");
  gfp->callback([&ctx]() {
    if (!is_prime(ctx.p)) throw InputError("--p must be prime");
    MackeyRule base = ctx.base == "burnside" ? burnside_rule()
                                             : witt_rule(RingSpec::parse(ctx.ring_tag));
    MackeyRule phi = geometric_fixed_points(base, ctx.p);
    FGAbelianGroup g = phi.group(ctx.level);
    ctx.emit(Json{{"level", ctx.level},
                  {"p", ctx.p},
                  {"group", group_to_json(g)},
                  {"presented", group_to_presented_json(g)}});
  });
  auto* vw = cy->add_subcommand("verify-witt", "verify the Witt cyclotomic structure");
  vw->add_option("--ring", ctx.ring_tag, "Z or Zmod:<n>");
  vw->add_option("--primes", ctx.primes_csv, "comma-separated primes");
  vw->add_option("--bound", ctx.bound, "level bound")->required();
  vw->callback([&ctx]() {
    CheckReport rep =
        verify_witt_cyclotomic(RingSpec::parse(ctx.ring_tag), ctx.primes(), ctx.bound);
    ctx.emit(check_report_to_json(rep));
    if (!rep.pass()) ctx.status = 1;
  });
  auto* rec = cy->add_subcommand("recollement", "right-exactness report at --p");
  rec->add_option("--p", ctx.p, "prime")->required();
  rec->add_option("--bound", ctx.bound, "level bound")->required();
  rec->add_option("--base", ctx.base, "witt | burnside | payload");
  rec->add_option("--ring", ctx.ring_tag, "ring for the witt base");
  rec->callback([&ctx]() {
    if (!is_prime(ctx.p)) throw InputError("--p must be prime");
    MackeyData d = ctx.base == "payload" ? json_to_mackey(ctx.payload()) : base_data(ctx);
    CheckReport rep = recollement_check(d, ctx.p);
    ctx.emit(check_report_to_json(rep));
    if (!rep.pass()) ctx.status = 1;
  });
  auto* rest = cy->add_subcommand("restrictions", "derived restriction matrix");
  rest->add_option("--ring", ctx.ring_tag, "Z or Zmod:<n>");
  rest->add_option("--from", ctx.from, "source level n")->required();
  rest->add_option("--to", ctx.to, "target level m")->required();
  rest->add_option("--primes", ctx.primes_csv, "comma-separated primes");
  rest->callback([&ctx]() {
    CyclotomicData c = witt_cyclotomic(RingSpec::parse(ctx.ring_tag), ctx.primes());
    GroupMorphism rho = derived_restriction(c, ctx.to, ctx.from);
    ctx.emit(Json{{"from", ctx.from}, {"to", ctx.to}, {"matrix", matrix_to_json(rho.matrix())}});
  });
  auto* tw = cy->add_subcommand("twisted-assoc", "2-cell composition associativity audit");
  tw->add_option("--max", ctx.max_product, "maximum scale product");
  tw->callback([&ctx]() {
    TwistedAuditReport rep = twisted_associativity_audit(ctx.max_product);
    Json out{{"first_scale_formula", "r/m + s"},
             {"first_scale_associative", rep.first_scale_associative},
             {"second_scale_formula", "r/n + s"},
             {"second_scale_associative", rep.second_scale_associative},
             {"adopted", rep.adopted},
             {"witness", rep.witness}};
    ctx.emit(out);
    if (!rep.conclusive()) ctx.status = 1;
  });
}

void register_dga(CLI::App& app, Ctx& ctx) {
  auto* dg = app.add_subcommand("dga", "endomorphism algebra structure constants");
  auto* mul = dg->add_subcommand("mul", "multiply two payload elements");
  mul->add_option("--bound", ctx.bound, "ambient divisor bound")->required();
  mul->callback([&ctx]() {
    Json in = ctx.payload();
    if (!in.is_array() || in.size() != 2)
      throw InputError("expected a payload array of two dga elements");
    ctx.emit(dga_to_json(dga_mul(json_to_dga(in[0], ctx.bound), json_to_dga(in[1], ctx.bound))));
  });
  auto* table = dg->add_subcommand("table", "structure constants at --bound");
  table->add_option("--bound", ctx.bound, "ambient divisor bound")->required();
  table->callback([&ctx]() {
    std::vector<DgaBasisSymbol> syms;
    for (long a : divisors(ctx.bound))
      for (long b : divisors(ctx.bound))
        for (long k : divisors(lgcd(a, b))) {
          syms.push_back(make_alpha(b, k, a));
          syms.push_back(make_epsilon(b, k, a));
        }
    std::sort(syms.begin(), syms.end());
    if (ctx.out_format == "csv") {
      std::vector<std::vector<std::string>> rows{{"x", "y", "coeff", "result"}};
      for (const auto& x : syms)
        for (const auto& y : syms) {
          DgaScaledSymbol prod = mul_basis(x, y);
          if (prod.coeff == 0) continue;
          rows.push_back({x.str(), y.str(), prod.coeff.str(), prod.symbol.str()});
        }
      ctx.emit_csv(rows);
    } else {
      Json out = Json::object();
      for (const auto& x : syms)
        for (const auto& y : syms) {
          DgaScaledSymbol prod = mul_basis(x, y);
          if (prod.coeff == 0) continue;
          out[x.str() + " * " + y.str()] =
              Json{{"coeff", int_to_json(prod.coeff)}, {"result", prod.symbol.str()}};
        }
      ctx.emit(out);
    }
  });
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_data) {
  Ctx ctx;
  ctx.stdin_data = stdin_data;
  CLI::App app{"exact engine for orbit combinatorics, Burnside spans, Mackey structures, "
               "big Witt vectors and cyclotomic verification"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--in", ctx.in_path, "read the JSON payload from a file");
  app.add_option("--out", ctx.out_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  register_supernat(app, ctx);
  register_orbit(app, ctx);
  register_burnside(app, ctx);
  register_mackey(app, ctx);
  register_witt(app, ctx);
  register_cyclotomic(app, ctx);
  register_dga(app, ctx);

  std::vector<std::string> argv_owned = args;
  std::vector<const char*> argv{"cyc"};
  for (const auto& a : argv_owned) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return {2, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {2, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
  if (app.get_subcommands().empty()) return {0, app.help(), ""};
  return {ctx.status, ctx.out.str(), ""};
}

}  // namespace cyc

#include "cyc/json_io.hpp"

#include <limits>

namespace cyc {

Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<int64_t>::min();
  static const Int hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<int64_t>();
  return v.str();
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("integer: cannot parse '" + j.get<std::string>() + "'");
    }
  }
  throw InputError("integer: expected a number or decimal string, got " + j.dump());
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<int64_t>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError("rational: expected \"p/q\" or an integer, got " + j.dump());
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix json_to_matrix(const Json& j) {
  if (!j.is_array()) throw InputError("matrix: expected an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix: expected an array of rows");
    std::vector<Int> r;
    for (const auto& e : row) r.push_back(json_to_int(e));
    rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows);
}

Json group_to_json(const FGAbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(int_to_json(d));
  return Json{{"rank", g.rank()}, {"torsion", torsion}};
}

Json group_to_presented_json(const FGAbelianGroup& g) {
  return Json{{"generators", g.generators()}, {"relations", matrix_to_json(g.relations())}};
}

FGAbelianGroup json_to_group(const Json& j) {
  if (j.contains("generators"))
    return {j.at("generators").get<long>(), json_to_matrix(j.at("relations"))};
  if (j.contains("rank")) {
    long rank = j.at("rank").get<long>();
    std::vector<Int> torsion;
    if (j.contains("torsion"))
      for (const auto& d : j.at("torsion")) torsion.push_back(json_to_int(d));
    long g = rank + static_cast<long>(torsion.size());
    IntegerMatrix rels(torsion.size(), g);
    for (size_t i = 0; i < torsion.size(); ++i) rels.at(i, i) = torsion[i];
    return {g, rels};
  }
  throw InputError("group: expected {rank, torsion} or {generators, relations}");
}

Json orbit_map_to_json(const OrbitMap& f) {
  return Json{{"src", f.source().level()}, {"tgt", f.target().level()},
              {"offset", rat_to_json(f.offset())}};
}

OrbitMap json_to_orbit_map(const Json& j, const Supernatural& ambient) {
  if (!j.contains("src") || !j.contains("tgt"))
    throw InputError("orbit map: expected {\"src\", \"tgt\", \"offset\"}");
  Rat off = j.contains("offset") ? json_to_rat(j.at("offset")) : Rat(0);
  return make_orbit_map(j.at("src").get<long>(), j.at("tgt").get<long>(), off, ambient);
}

namespace {

Json coeffs_to_json(const std::map<long, Int>& coeffs) {
  Json c = Json::object();
  for (const auto& [l, v] : coeffs) c[std::to_string(l)] = int_to_json(v);
  return c;
}

std::map<long, Int> json_to_coeffs(const Json& j) {
  std::map<long, Int> out;
  if (!j.is_object()) throw InputError("coefficients: expected an object keyed by divisor");
  for (auto it = j.begin(); it != j.end(); ++it) out[std::stol(it.key())] = json_to_int(it.value());
  return out;
}

}  // namespace

Json hmorphism_to_json(const HMorphism& h) {
  return Json{{"src", h.source_level()}, {"tgt", h.target_level()},
              {"coeffs", coeffs_to_json(h.coeffs())}};
}

HMorphism json_to_hmorphism(const Json& j) {
  if (!j.contains("src") || !j.contains("tgt"))
    throw InputError("h-morphism: expected {\"src\", \"tgt\", \"coeffs\"}");
  return {j.at("src").get<long>(), j.at("tgt").get<long>(),
          j.contains("coeffs") ? json_to_coeffs(j.at("coeffs")) : std::map<long, Int>{}};
}

Json burnside_to_json(const BurnsideElement& x) {
  return Json{{"level", x.level()}, {"coeffs", coeffs_to_json(x.coeffs())}};
}

BurnsideElement json_to_burnside(const Json& j) {
  if (!j.contains("level")) throw InputError("burnside element: expected {\"level\", \"coeffs\"}");
  return {j.at("level").get<long>(),
          j.contains("coeffs") ? json_to_coeffs(j.at("coeffs")) : std::map<long, Int>{}};
}

Json mackey_to_json(const MackeyData& d) {
  Json groups = Json::object(), push = Json::object(), pull = Json::object();
  for (const auto& [m, g] : d.groups) groups[std::to_string(m)] = group_to_presented_json(g);
  for (const auto& [mn, f] : d.push)
    push[std::to_string(mn.first) + "|" + std::to_string(mn.second)] = matrix_to_json(f.matrix());
  for (const auto& [mn, f] : d.pull)
    pull[std::to_string(mn.first) + "|" + std::to_string(mn.second)] = matrix_to_json(f.matrix());
  Json j{{"bound", d.bound}, {"groups", groups}, {"push", push}, {"pull", pull}};
  if (d.levels != divisors(d.bound)) j["levels"] = d.levels;
  return j;
}

MackeyData json_to_mackey(const Json& j) {
  MackeyData d;
  if (!j.contains("bound") || !j.contains("groups"))
    throw InputError("mackey data: expected {\"bound\", \"groups\", \"push\", \"pull\"}");
  d.bound = j.at("bound").get<long>();
  if (j.contains("levels")) {
    for (const auto& l : j.at("levels")) d.levels.push_back(l.get<long>());
    std::sort(d.levels.begin(), d.levels.end());
  } else {
    d.levels = divisors(d.bound);
  }
  const Json& groups = j.at("groups");
  for (long m : d.levels) {
    std::string key = std::to_string(m);
    if (!groups.contains(key)) throw InputError("mackey data: missing group at level " + key);
    d.groups.emplace(m, json_to_group(groups.at(key)));
  }
  auto parse_pair = [](const std::string& key) {
    size_t bar = key.find('|');
    if (bar == std::string::npos) throw InputError("mackey data: bad pair key '" + key + "'");
    return std::make_pair(std::stol(key.substr(0, bar)), std::stol(key.substr(bar + 1)));
  };
  for (auto [m, n] : covering_pairs(d.levels)) {
    std::string key = std::to_string(m) + "|" + std::to_string(n);
    if (!j.contains("push") || !j.at("push").contains(key))
      throw InputError("mackey data: missing push at " + key);
    if (!j.contains("pull") || !j.at("pull").contains(key))
      throw InputError("mackey data: missing pull at " + key);
    d.push.emplace(std::make_pair(m, n), GroupMorphism(d.groups.at(m), d.groups.at(n),
                                                       json_to_matrix(j.at("push").at(key))));
    d.pull.emplace(std::make_pair(m, n), GroupMorphism(d.groups.at(n), d.groups.at(m),
                                                       json_to_matrix(j.at("pull").at(key))));
  }
  // Reject stray keys pointing outside the level set.
  for (const char* field : {"push", "pull"})
    if (j.contains(field))
      for (auto it = j.at(field).begin(); it != j.at(field).end(); ++it) {
        auto [m, n] = parse_pair(it.key());
        if (!d.has_level(m) || !d.has_level(n))
          throw InputError("mackey data: map at " + it.key() + " is outside the level set");
      }
  return d;
}

Json dga_to_json(const DgaElement& x) {
  Json j = Json::object();
  for (const auto& [s, c] : x.terms()) j[s.str()] = int_to_json(c);
  return j;
}

DgaElement json_to_dga(const Json& j, long bound) {
  if (!j.is_object()) throw InputError("dga element: expected an object keyed by basis symbols");
  std::map<DgaBasisSymbol, Int> terms;
  for (auto it = j.begin(); it != j.end(); ++it)
    terms[DgaBasisSymbol::parse(it.key())] = json_to_int(it.value());
  return {bound, std::move(terms)};
}

Json check_report_to_json(const CheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je{{"level", e.level}, {"check", e.check}, {"pass", e.pass}};
    if (!e.pass) je["witness"] = e.witness;
    entries.push_back(std::move(je));
  }
  return Json{{"pass", r.pass()}, {"checks", entries}};
}

Json mackey_report_to_json(const MackeyReport& r) {
  Json entries = Json::array();
  for (const auto& v : r.violations)
    entries.push_back(Json{{"identity", v.identity},
                           {"k", v.k},
                           {"l", v.l},
                           {"m", v.m},
                           {"detail", v.detail}});
  return Json{{"pass", r.valid()}, {"violations", entries}};
}

std::string monomial_key(const std::vector<std::string>& vars, const Poly<Int>::Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (auto [v, e] : m) {
    if (!s.empty()) s += "*";
    s += vars.at(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Poly<Int>::Monomial parse_monomial_key(const std::vector<std::string>& vars,
                                       const std::string& key) {
  Poly<Int>::Monomial m;
  if (key == "1") return m;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw InputError("monomial: empty factor in '" + key + "'");
    size_t caret = cur.find('^');
    std::string name = cur.substr(0, caret);
    int exp = caret == std::string::npos ? 1 : std::stoi(cur.substr(caret + 1));
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InputError("monomial: unknown variable '" + name + "'");
    m.emplace_back(static_cast<int>(it - vars.begin()), exp);
    cur.clear();
  };
  for (char c : key) {
    if (c == '*')
      flush();
    else
      cur += c;
  }
  flush();
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace cyc

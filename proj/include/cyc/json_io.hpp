#pragma once

#include <json.hpp>

#include "cyc/abgrp.hpp"
#include "cyc/burnside.hpp"
#include "cyc/cyclonic.hpp"
#include "cyc/cyclotomic.hpp"
#include "cyc/dga.hpp"
#include "cyc/mackey.hpp"
#include "cyc/rings.hpp"
#include "cyc/witt.hpp"

namespace cyc {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both forms are accepted on input.
Json int_to_json(const Int& v);
Int json_to_int(const Json& j);

Json rat_to_json(const Rat& r);
Rat json_to_rat(const Json& j);

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix json_to_matrix(const Json& j);

Json group_to_json(const FGAbelianGroup& g);           // canonical form
Json group_to_presented_json(const FGAbelianGroup& g); // generators/relations
FGAbelianGroup json_to_group(const Json& j);           // accepts either form

Json orbit_map_to_json(const OrbitMap& f);
OrbitMap json_to_orbit_map(const Json& j, const Supernatural& ambient);

Json hmorphism_to_json(const HMorphism& h);
HMorphism json_to_hmorphism(const Json& j);

Json burnside_to_json(const BurnsideElement& x);
BurnsideElement json_to_burnside(const Json& j);

Json mackey_to_json(const MackeyData& d);
MackeyData json_to_mackey(const Json& j);

Json dga_to_json(const DgaElement& x);
DgaElement json_to_dga(const Json& j, long bound);

Json check_report_to_json(const CheckReport& r);
Json mackey_report_to_json(const MackeyReport& r);

// --- ring elements ----------------------------------------------------------

inline Json elem_to_json(const IntRing&, const Int& v) { return int_to_json(v); }
inline Json elem_to_json(const ModRing& r, const Int& v) { return int_to_json(r.reduce(v)); }
inline Json elem_to_json(const RatRing&, const Rat& v) { return rat_to_json(v); }

std::string monomial_key(const std::vector<std::string>& vars,
                         const Poly<Int>::Monomial& m);
Poly<Int>::Monomial parse_monomial_key(const std::vector<std::string>& vars,
                                       const std::string& key);

template <typename B>
Json elem_to_json(const PolyRing<B>& r, const typename PolyRing<B>::Elem& p) {
  Json j = Json::object();
  for (const auto& [m, c] : p.terms()) j[monomial_key(r.vars, m)] = elem_to_json(r.base, c);
  return j;
}

inline Int elem_from_json(const IntRing&, const Json& j) { return json_to_int(j); }
inline Int elem_from_json(const ModRing& r, const Json& j) { return r.reduce(json_to_int(j)); }
inline Rat elem_from_json(const RatRing&, const Json& j) { return json_to_rat(j); }

template <typename B>
typename PolyRing<B>::Elem elem_from_json(const PolyRing<B>& r, const Json& j) {
  typename PolyRing<B>::Elem p;
  if (!j.is_object()) throw InputError("polynomial: expected an object of monomial terms");
  for (auto it = j.begin(); it != j.end(); ++it)
    p.insert_term(parse_monomial_key(r.vars, it.key()), elem_from_json(r.base, it.value()));
  return p;
}

template <typename R>
Json witt_to_json(const WittVector<R>& w) {
  Json comps = Json::object();
  auto ds = divisors(w.level);
  for (size_t i = 0; i < ds.size(); ++i)
    comps[std::to_string(ds[i])] = elem_to_json(w.ring, w.comp[i]);
  return Json{{"level", w.level}, {"components", comps}};
}

template <typename R>
WittVector<R> witt_from_json(const R& ring, const Json& j) {
  if (!j.contains("level") || !j.contains("components"))
    throw InputError("witt vector: expected {\"level\", \"components\"}");
  long level = j.at("level").get<long>();
  WittVector<R> w = witt_zero(ring, level);
  auto ds = divisors(level);
  const Json& comps = j.at("components");
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    long k = std::stol(it.key());
    auto pos = std::lower_bound(ds.begin(), ds.end(), k);
    if (pos == ds.end() || *pos != k)
      throw InputError("witt vector: component index " + it.key() + " does not divide the level");
    w.comp[pos - ds.begin()] = elem_from_json(ring, it.value());
  }
  return w;
}

}  // namespace cyc

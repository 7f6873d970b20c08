#include "cyc/rings.hpp"

namespace cyc {

RingSpec RingSpec::parse(const std::string& tag) {
  RingSpec s;
  if (tag == "Z") {
    s.kind = Kind::z;
    return s;
  }
  if (tag == "Q") {
    s.kind = Kind::q;
    return s;
  }
  auto split_vars = [](const std::string& t) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : t) {
      if (c == ',') {
        if (!cur.empty()) vars.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) vars.push_back(cur);
    return vars;
  };
  if (tag.rfind("Zmod:", 0) == 0) {
    s.kind = Kind::zmod;
    try {
      s.modulus = Int(tag.substr(5));
    } catch (const std::exception&) {
      throw InputError("ring: bad modulus in '" + tag + "'");
    }
    if (s.modulus < 1) throw InputError("ring: modulus must be >= 1 in '" + tag + "'");
    return s;
  }
  if (tag.rfind("PolyZ:", 0) == 0) {
    s.kind = Kind::poly_z;
    s.vars = split_vars(tag.substr(6));
    return s;
  }
  if (tag.rfind("PolyQ:", 0) == 0) {
    s.kind = Kind::poly_q;
    s.vars = split_vars(tag.substr(6));
    return s;
  }
  throw InputError("ring: unknown tag '" + tag + "'");
}

std::string RingSpec::str() const {
  switch (kind) {
    case Kind::z:
      return "Z";
    case Kind::q:
      return "Q";
    case Kind::zmod:
      return "Zmod:" + modulus.str();
    case Kind::poly_z:
    case Kind::poly_q: {
      std::string s = kind == Kind::poly_z ? "PolyZ:" : "PolyQ:";
      for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
      return s;
    }
  }
  return "?";
}

}  // namespace cyc

#include "pfree/json_io.hpp"

#include <limits>

namespace pfree::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::Parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::Parse, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) throw Error(Errc::Parse, "expected an integer, got " + j.dump());
    return r.num();
  }
  throw Error(Errc::Parse, "expected an integer, got " + j.dump());
}

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

std::vector<Integer> parse_integer_array(const Json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "expected an array of integers");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_integer(e));
  return out;
}

Json to_json(const std::vector<Integer>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

LocalData parse_local_data(const Json& j, bool* canonicalized) {
  LocalData L;
  Integer n = parse_integer(field(j, "n"));
  if (n < 1 || !n.fits_uint_p()) throw ValidationError({{std::nullopt, ViolationKind::BadDimension, "n must be a positive integer"}});
  L.n = n.get_ui();
  const Json& orbits = field(j, "orbits");
  if (!orbits.is_array()) throw Error(Errc::Parse, "'orbits' must be an array");
  for (const auto& o : orbits) {
    ExceptionalOrbit orb;
    orb.p = parse_integer(field(o, "p"));
    orb.q = parse_integer_array(field(o, "q"));
    if (auto it = o.find("label"); it != o.end()) {
      if (!it->is_string()) throw Error(Errc::Parse, "'label' must be a string");
      orb.label = it->get<std::string>();
    }
    L.orbits.push_back(std::move(orb));
  }
  if (auto v = validate(L); !v.empty()) throw ValidationError(std::move(v));
  if (canonicalized) *canonicalized = !L.is_canonical();
  return canonicalize(std::move(L));
}

Json to_json(const LocalData& L) {
  Json orbits = Json::array();
  for (const auto& o : L.orbits) {
    Json jo = {{"p", to_json(o.p)}, {"q", to_json(o.q)}};
    if (o.label) jo["label"] = *o.label;
    orbits.push_back(std::move(jo));
  }
  return Json{{"n", L.n}, {"orbits", std::move(orbits)}};
}

FixedPointData parse_fixed_points(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw Error(Errc::Parse, "'points' must be an array");
  FixedPointData f;
  for (const auto& p : pts) f.points.push_back(parse_integer_array(p));
  f.require_well_formed();
  return f;
}

Json to_json(const FixedPointData& f) {
  Json pts = Json::array();
  for (const auto& p : f.points) pts.push_back(to_json(p));
  return Json{{"points", std::move(pts)}};
}

std::vector<SymplecticStratum> parse_strata(const Json& j) {
  const Json& arr = field(j, "strata");
  if (!arr.is_array()) throw Error(Errc::Parse, "'strata' must be an array");
  std::vector<SymplecticStratum> out;
  for (const auto& s : arr)
    out.push_back({parse_integer(field(s, "area")), parse_integer(field(s, "p")),
                   parse_integer_array(field(s, "q"))});
  return out;
}

Json to_json(const CheckReport& r) {
  return Json{{"check", r.check_name},
              {"passed", r.passed},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"witnesses", r.witnesses}};
}

}  // namespace pfree::io

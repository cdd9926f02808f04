#include "symcoh/json_io.hpp"

namespace symcoh {

namespace {

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(integer_to_json(v(i)));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

IntMatrix matrix_from_json(const Json& j, Index size) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size) {
    throw ParseError("JSON: expected a " + std::to_string(size) + " x " + std::to_string(size) + " matrix");
  }
  IntMatrix m(size, size);
  for (Index r = 0; r < size; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != size) throw ParseError("JSON: ragged matrix row");
    for (Index c = 0; c < size; ++c) m(r, c) = integer_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_int64()) return Json(x.to_int64());
  return Json(x.to_string());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    if (auto v = Integer::parse(j.get<std::string>())) return *v;
  }
  throw ParseError("JSON: expected an integer, got " + j.dump());
}

Json to_json(const AbGroup& a) {
  Json out = Json::array();
  for (const Integer& d : a.factors()) out.push_back(integer_to_json(d));
  return out;
}

AbGroup abgroup_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("JSON: an abelian group is a list of invariant factors");
  std::vector<Integer> factors;
  for (const Json& x : j) factors.push_back(integer_from_json(x));
  try {
    return AbGroup(std::move(factors));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

Json to_json(const FinGroup& g) { return {{"order", g.order()}, {"table", g.table()}, {"label", g.label()}}; }

FinGroup fingroup_from_json(const Json& j) {
  const Json& table = field(j, "table");
  const int order = field(j, "order").get<int>();
  if (!table.is_array() || static_cast<int>(table.size()) != order) throw ParseError("JSON: table does not match order");
  std::vector<std::vector<int>> rows;
  for (const Json& row : table) rows.push_back(row.get<std::vector<int>>());
  return FinGroup(std::move(rows), j.value("label", std::string("G")));
}

Json to_json(const GModule& m) {
  Json mats = Json::array();
  for (int g = 0; g < m.group().order(); ++g) {
    const IntMatrix d = m.action(g).dense();
    Json rows = Json::array();
    for (Index r = 0; r < d.rows(); ++r) rows.push_back(vector_to_json(d.row(r).transpose()));
    mats.push_back(rows);
  }
  return {{"base", to_json(m.base())}, {"matrices", mats}};
}

GModule module_from_json(const FinGroup& g, const Json& j) {
  const Json& base = field(j, "base");
  if (!base.is_array()) throw ParseError("JSON: 'base' must be a list of moduli");
  std::vector<Integer> moduli;
  for (const Json& x : base) {
    moduli.push_back(integer_from_json(x));
    if (moduli.back().sign() < 0) throw ParseError("JSON: negative modulus");
  }
  const AbGroup a = AbGroup::diagonal(std::move(moduli));
  const Json& mats = field(j, "matrices");
  if (!mats.is_array()) throw ParseError("JSON: 'matrices' must be a list");
  std::vector<IntMatrix> action;
  for (const Json& m : mats) action.push_back(matrix_from_json(m, a.num_coords()));
  return module_from_matrices(g, a, action);
}

Json to_json(const CohomologyResult& r, bool with_representatives) {
  Json out{{"degree", r.degree},
           {"symmetric", r.symmetric},
           {"group", r.group_value.to_string()},
           {"invariant_factors", to_json(r.group_value)}};
  if (with_representatives) {
    Json reps = Json::array();
    for (const Cochain& c : r.representatives) reps.push_back(vector_to_json(c.values()));
    out["representatives"] = reps;
  }
  return out;
}

Json to_json(const ComparisonResult& c) {
  Json rows = Json::array();
  const IntMatrix d = c.map.dense();
  for (Index r = 0; r < d.rows(); ++r) rows.push_back(vector_to_json(d.row(r).transpose()));
  return {{"matrix", rows},
          {"kernel", to_json(c.kernel)},
          {"image", to_json(c.image)},
          {"injective", c.kernel.is_trivial()},
          {"surjective", c.image == c.map.target()}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const IdentityCheck& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"degree", c.degree}, {"indices", c.indices}, {"holds", c.holds}, {"required", c.required}});
  }
  return {{"all_hold", r.all_hold()}, {"checks", checks}};
}

Json to_json(const ExtensionReport& r) {
  Json classes = Json::array();
  for (const ExtensionClass& c : r.classes) {
    Json entry{{"coordinates", vector_to_json(c.coordinates)},
               {"representative", vector_to_json(c.representative.values())},
               {"symmetric_cocycle", c.symmetric_cocycle},
               {"in_symmetric_image", c.in_symmetric_image},
               {"symmetric_section", c.witness.has_value()}};
    entry["witness"] = c.witness ? Json(c.witness->t()) : Json(nullptr);
    classes.push_back(entry);
  }
  return {{"h2", to_json(r.h2)}, {"group", r.h2.to_string()}, {"classes", classes}};
}

}  // namespace symcoh

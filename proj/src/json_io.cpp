#include "cycperm/json_io.hpp"

#include <fstream>
#include <limits>

#include "cycperm/error.hpp"

namespace cycperm {

namespace {

template <typename T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("code spec is missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("code spec has a malformed \"") + key + "\"");
  }
}

Json perms_json(const std::vector<Permutation>& perms) {
  Json out = Json::array();
  for (const Permutation& p : perms) out.push_back(to_json(p));
  return out;
}

Json blocks_json(const std::vector<BlockSystem>& systems) {
  Json out = Json::array();
  for (const BlockSystem& b : systems) out.push_back(to_json(b));
  return out;
}

}  // namespace

CodeInput parse_code_spec(const Json& j) {
  if (!j.is_object()) throw Error("code spec must be a JSON object");
  const Json q = require<Json>(j, "q");
  FieldSpec spec;
  spec.characteristic = require<std::uint32_t>(q, "characteristic");
  spec.degree = require<std::uint32_t>(q, "degree");
  CodeInput in;
  if (q.contains("modulus")) {
    spec.modulus = require<std::vector<std::uint32_t>>(q, "modulus");
    in.field = make_field(spec);
  } else {
    in.field = make_field(spec.characteristic, spec.degree);
  }
  in.n = require<std::uint32_t>(j, "n");
  if (in.n == 0) throw Error("code spec has n = 0");
  const bool has_d = j.contains("defining_set");
  const bool has_g = j.contains("generator_matrix");
  if (has_d == has_g) throw Error("code spec needs exactly one of \"defining_set\" and \"generator_matrix\"");
  if (has_d) {
    in.defining_set = require<std::vector<std::uint32_t>>(j, "defining_set");
  } else {
    auto rows = require<std::vector<std::vector<std::uint32_t>>>(j, "generator_matrix");
    std::vector<Vector> g;
    for (const auto& row : rows) {
      if (row.size() != in.n) throw Error("generator_matrix row length differs from n");
      for (auto v : row) {
        if (v >= in.field->order()) throw Error("generator_matrix entry outside the field");
      }
      g.emplace_back(row.begin(), row.end());
    }
    in.generator_matrix = std::move(g);
  }
  return in;
}

CodeInput load_code_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
  return parse_code_spec(j);
}

CyclicCode as_cyclic(const CodeInput& input) {
  if (!input.defining_set) throw Error("spec has no defining set");
  return cyclic_code(input.field, input.n, *input.defining_set);
}

LinearCode as_linear(const CodeInput& input) {
  if (input.defining_set) return as_cyclic(input).code;
  return LinearCode::from_rows(input.field, input.n, *input.generator_matrix);
}

Json to_json(u128 value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(value);
  return to_string(value);
}

Json to_json(const FieldSpec& spec) {
  return Json{{"characteristic", spec.characteristic}, {"degree", spec.degree}, {"modulus", spec.modulus}};
}

Json to_json(const Permutation& p) {
  Json out = Json::array();
  for (auto v : p.images()) out.push_back(v);
  return out;
}

Json to_json(const BlockSystem& b) {
  Json out = Json::array();
  for (const auto& block : b.blocks) out.push_back(block);
  return out;
}

Json to_json(const DistanceResult& d) {
  Json out{{"exact", d.exact}, {"method", to_string(d.method)}, {"lower", d.lower}, {"upper", d.upper}};
  if (d.exact) out["d"] = d.lower;
  return out;
}

Json to_json(const CyclicCodeSpec& spec) {
  return Json{{"q", to_json(spec.field->spec())},
              {"n", spec.n},
              {"defining_set", spec.defining_set},
              {"generator_polynomial", spec.generator_poly.coefficients()}};
}

Json code_summary(const CyclicCode& code, const DistanceResult& d) {
  Json out = to_json(code.spec);
  out["k"] = code.code.dimension();
  out["distance"] = to_json(d);
  out["parameters"] = Json::array({code.code.length(), code.code.dimension()});
  if (d.exact) out["parameters"].push_back(d.lower);
  out["elementary"] = is_elementary(code.code);
  return out;
}

Json to_json(const GroupClass& c) {
  Json out{{"label", to_string(c.label)}, {"theory_backed", c.theory_backed}, {"evidence", c.evidence}};
  switch (c.label) {
    case GroupLabel::AffineSubgroup:
      out["p"] = c.p;
      out["m"] = c.m;
      break;
    case GroupLabel::PGammaL:
      out["d"] = c.d;
      out["t"] = c.t;
      break;
    case GroupLabel::Imprimitive:
      out["blocks"] = blocks_json(c.blocks);
      break;
    default:
      break;
  }
  return out;
}

Json to_json(const AutoReport& r) {
  Json out{{"n", r.n},
           {"k", r.k},
           {"distance", to_json(r.distance)},
           {"multiplier_set", r.multiplier_set},
           {"m", r.m},
           {"discovered_generators", perms_json(r.discovered_generators)},
           {"known_subgroup_order", r.known_subgroup_order ? to_json(*r.known_subgroup_order) : Json()},
           {"full_group_order", r.full_group_order ? to_json(*r.full_group_order) : Json()},
           {"full_generators", perms_json(r.full_generators)},
           {"block_systems", blocks_json(r.block_systems)},
           {"full_group_primitive", r.full_group_primitive}};
  Json gk = Json::array();
  for (const auto& [k, order] : r.gk_orders) gk.push_back(Json{{"k", k}, {"order", order}});
  out["gk_orders"] = gk;
  out["z"] = r.z ? Json(*r.z) : Json();
  out["sylow_bounds_hold"] = r.sylow_bounds_hold ? Json(*r.sylow_bounds_hold) : Json();
  out["backtrack_budget_exhausted"] = r.backtrack_budget_exhausted;
  out["backtrack_nodes"] = r.backtrack_nodes;
  out["elementary"] = r.is_elementary;
  if (r.projective) {
    out["projective_witness"] = Json{{"d", r.projective->d},
                                     {"order", to_json(r.projective->order)},
                                     {"order_enumerated", r.projective->order_enumerated},
                                     {"fixes_code", r.projective->fixes_code},
                                     {"generators", perms_json(r.projective->generators)}};
  }
  out["classification"] = to_json(r.classification);
  return out;
}

Json to_json(const HPDescriptor& d) {
  Json out{{"kind", to_string(d.kind)}, {"n", d.n},           {"p", d.p},
           {"r", d.r},                  {"sylow_exponent", d.sylow_exponent}, {"complete", d.complete}};
  if (d.kind == HPKind::QSet) out["q_degree"] = d.q_degree;
  if (d.kind == HPKind::GrFormula) {
    out["q"] = d.q;
    out["t1"] = d.t1;
  }
  out["p_generators"] = perms_json(d.p_group.generators());
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"status", to_string(v.status)},
           {"witness", v.witness ? to_json(*v.witness) : Json()},
           {"strategy", to_string(v.strategy)},
           {"complete", v.complete},
           {"evidence", v.evidence},
           {"candidates", v.candidates}};
  if (v.descriptor) out["descriptor"] = to_json(*v.descriptor);
  return out;
}

Json to_json(const HPrimeReport& r) {
  Json out{{"n", r.n},
           {"l", r.l},
           {"m", r.m},
           {"minimal_index", r.minimal_index},
           {"p", r.p},
           {"r", r.r},
           {"p_order", r.p_order},
           {"p_generators", perms_json(r.p_generators)},
           {"p_certified", r.p_certified},
           {"p_source", r.p_source},
           {"elements_found", r.elements_found},
           {"exhaustive", r.exhaustive},
           {"families", r.families},
           {"closure_generators", perms_json(r.closure_generators)},
           {"closure_order", r.closure_order ? Json(*r.closure_order) : Json()},
           {"closure_lower_bound", r.closure_lower_bound},
           {"closure_defect", r.closure_defect ? Json(*r.closure_defect) : Json()},
           {"primitive", r.primitive},
           {"block_systems", blocks_json(r.block_systems)},
           {"residue_moduli", r.residue_moduli}};
  Json membership = Json::array();
  for (bool b : r.sigma_membership) membership.push_back(b);
  out["sigma_membership"] = membership;
  out["williamson"] = Json{{"cycle_length", r.williamson_cycle}, {"holds", r.williamson_holds}};
  out["shift_is_odd"] = r.shift_is_odd;
  out["conclusion"] = r.conclusion;
  return out;
}

Json to_json(const VerificationRow& row) {
  return Json{{"id", row.id},
              {"criterion", row.criterion},
              {"claim", row.claim},
              {"expected", row.expected},
              {"computed", row.computed},
              {"status", to_string(row.status)},
              {"seconds", row.seconds}};
}

}  // namespace cycperm

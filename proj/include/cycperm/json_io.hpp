#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycperm/autgroups.hpp"
#include "cycperm/cyclic_code.hpp"
#include "cycperm/equivalence.hpp"
#include "cycperm/quasicyclic.hpp"
#include "cycperm/verification.hpp"

namespace cycperm {

using Json = nlohmann::ordered_json;

/// A parsed code-spec file: a cyclic code by defining set, or any linear code
/// by generator matrix.
struct CodeInput {
  FieldPtr field;
  std::uint32_t n = 0;
  std::optional<std::vector<std::uint32_t>> defining_set;
  std::optional<std::vector<Vector>> generator_matrix;
};

/// {"q": {"characteristic", "degree", "modulus"?}, "n", "defining_set" | "generator_matrix"}.
/// Throws Error with the offending key on malformed input.
CodeInput parse_code_spec(const Json& j);
CodeInput load_code_spec(const std::string& path);

/// Throws Error("spec has no defining set") for matrix input.
CyclicCode as_cyclic(const CodeInput& input);
LinearCode as_linear(const CodeInput& input);

Json to_json(u128 value);
Json to_json(const FieldSpec& spec);
Json to_json(const Permutation& p);
Json to_json(const BlockSystem& b);
Json to_json(const DistanceResult& d);
Json to_json(const CyclicCodeSpec& spec);
Json to_json(const GroupClass& c);
Json to_json(const AutoReport& r);
Json to_json(const HPDescriptor& d);
Json to_json(const Verdict& v);
Json to_json(const HPrimeReport& r);
Json to_json(const VerificationRow& row);

/// Spec echo plus [n, k, d].
Json code_summary(const CyclicCode& code, const DistanceResult& d);

}  // namespace cycperm

#include <doctest.h>

#include "cycperm/error.hpp"
#include "cycperm/json_io.hpp"

using namespace cycperm;

TEST_CASE("code spec parsing") {
  auto in = parse_code_spec(Json::parse(R"({"q":{"characteristic":2,"degree":1},"n":7,"defining_set":[1,2,4]})"));
  CHECK(in.n == 7);
  CHECK(as_cyclic(in).code.dimension() == 4);
  auto m = parse_code_spec(Json::parse(R"({"q":{"characteristic":3,"degree":1},"n":3,"generator_matrix":[[1,1,1]]})"));
  CHECK(as_linear(m).dimension() == 1);
  CHECK_THROWS_WITH_AS(as_cyclic(m), "spec has no defining set", Error);
  CHECK_THROWS_AS(parse_code_spec(Json::parse(R"({"q":{"characteristic":2,"degree":1},"n":7})")), Error);
  CHECK_THROWS_AS(parse_code_spec(Json::parse(R"({"q":{"characteristic":2},"n":7,"defining_set":[]})")), Error);
  CHECK_THROWS_AS(
      parse_code_spec(Json::parse(R"({"q":{"characteristic":2,"degree":1},"n":3,"generator_matrix":[[1,2,0]]})")),
      Error);
}

TEST_CASE("reports serialize") {
  auto code = cyclic_code(make_field_of_order(2), 7, {1, 2, 4});
  auto j = to_json(analyze(code));
  CHECK(j["k"] == 4);
  CHECK(j["m"] == 3);
  CHECK(j["distance"]["d"] == 3);
  CHECK(j["classification"]["label"].is_string());
  CHECK(to_json(u128(1) << 70).is_string());
  CHECK(to_json(shift(3)) == Json::array({1, 2, 0}));
}

// Copyright 2026 The zxnf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zx/errors.hpp"
#include "zx/json_io.hpp"

using namespace zx;
using namespace zx::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ZxError& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("diagram literals") {
  const Term d = parse_diagram(R"({"compose": [{"Z": {"in": 1, "out": 2, "phase": "1/4"}}, {"tensor": ["H", "Id"]}]})");
  CHECK(d.inputs() == 1);
  CHECK(d.outputs() == 2);
  const Term expected = compose(Term::z(1, 2, Angle::pi(1, 4)), tensor(Term::h(), Term::id()));
  CHECK(mat_equal(interp(d), interp(expected)));

  const Term r = parse_diagram(R"({"X": {"in": 0, "out": 1, "phase": {"rad": 0.5}}})");
  CHECK_FALSE(r.phase().is_exact());
  CHECK(r.phase().value() == doctest::Approx(0.5));
  
  CHECK(interp(parse_diagram(R"("Empty")")).rows() == 1);
}

TEST_CASE("diagram round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const Term d = random_term(rng, t % 3, 8, 4);
    const Term back = parse_diagram(term_to_json(d).dump());
    CHECK(term_to_json(back) == term_to_json(d));
    CHECK(mat_equal(interp(back), interp(d)));
  }
}

TEST_CASE("scalar and matrix round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = interp(random_term(rng, 1 + t % 3, 6, 3));
    const Matrix back = parse_matrix(matrix_to_json(m).dump());
    CHECK(back.is_exact());
    CHECK(mat_equal(back, m));
  }
  const Matrix f = interp(random_term(rng, 0, 6, 3));
  const Matrix fb = parse_matrix(matrix_to_json(f).dump());
  CHECK_FALSE(fb.is_exact());
  CHECK(mat_equal(fb, f, 1e-15));

  BigInt huge = 1;
  for (int i = 0; i < 100; ++i) huge *= 3;
  const DyadicCyclotomic x = canonicalize(8, 0, IntPolynomial({huge, BigInt(1)}));
  const Json j = scalar_to_json(x);
  CHECK(j["poly"][0].is_string());
  const Matrix col = parse_matrix(Json{{"rows", 1}, {"cols", 1}, {"entries", {j}}}.dump());
  CHECK(col.exact()(0, 0) == x);
}

TEST_CASE("normal form round trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Term d = random_term(rng, 1, 6, 3);
    const NormalForm nf = normalize(d);
    const NormalForm back = parse_normal_form(normal_form_to_json(nf).dump());
    CHECK(back == nf);
  }
}

TEST_CASE("equation round trip") {
  const Equation e(Term::z(1, 1, Angle::pi(1, 2)), compose(Term::z(1, 1, Angle::pi(1, 4)), Term::z(1, 1, Angle::pi(1, 4))),
                   "fuse", {{"a", Angle::pi(1, 4)}});
  const Equation back = parse_equation(equation_to_json(e).dump());
  CHECK(back.label == "fuse");
  REQUIRE(back.params.size() == 1);
  CHECK(back.params[0].first == "a");
  CHECK(verify_equation(back));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_diagram("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_diagram(R"("Q")"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_diagram(R"({"Z": {"in": 1}})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_diagram(R"({"Z": {"in": 1, "out": 1, "phase": "x/4"}})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_diagram(R"({"compose": ["Cup", "Id"]})"); }) == ErrorCode::Composition);
  CHECK(code_of([] { parse_matrix(R"({"rows": 3, "cols": 1, "entries": []})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_matrix(R"({"rows": 1, "cols": 1, "backend": "quantum", "entries": [1]})"); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { parse_matrix(R"({"rows": 1, "cols": 1, "entries": [{"order": 12, "p": 0, "poly": [1]}]})"); }) ==
        ErrorCode::Parse);
  try {
    parse_diagram(R"({"tensor": ["H", {"Z": {"in": 1, "out": "two"}}]})");
  } catch (const ZxError& e) {
    CHECK(std::string(e.what()).find("$.tensor[1].Z.out") != std::string::npos);
  }
}

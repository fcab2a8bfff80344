#include "eag/io.hpp"
#include "eag/tables.hpp"

#include <doctest.h>

using namespace eag;
using io::Json;

namespace {

// Serialize, print, reparse, deserialize.
template <class T, class F>
T through_text(const T& value, F from) {
  return from(Json::parse(io::to_json(value).dump()));
}

}  // namespace

TEST_CASE("documents carry schema and kind") {
  const Json doc = io::document("unique", Json{{"x", 1}});
  CHECK(doc["schema"] == "eag/1");
  CHECK(doc["kind"] == "unique");
  CHECK(io::payload(doc, "unique")["x"] == 1);
  CHECK_THROWS_AS(io::payload(doc, "count"), UsageError);
  Json other = doc;
  other["schema"] = "eag/2";
  CHECK_THROWS_AS(io::payload(other, "unique"), UsageError);
}

TEST_CASE("value round trips") {
  const Prime p(3);
  const FpVector x(p, {1, 2}), y(p, {0, 1});
  CHECK(io::fp_vector_from_json(Json::parse(io::to_json(x).dump()), p) == x);
  const GeneratingVector v(p, 2, {{x, y}}, {x, y, -(x + y)});
  CHECK(through_text(v, io::generating_vector_from_json) == v);
  const Signature s(2, {3, 3, 3});
  CHECK(through_text(s, io::signature_from_json) == s);
  const EAActionSpec spec{5, 2, 1, 4};
  CHECK(through_text(spec, io::spec_from_json) == spec);
  const Rational q(-7, 12);
  CHECK(through_text(q, io::rational_from_json) == q);
  for (const auto& z : {ProjPoint<Complex>::finite(Complex(0.25, -3)), ProjPoint<Complex>::infinity()})
    CHECK(through_text(z, io::point_from_json) == z);
  Mat<Complex> m(2, 3);
  m << 1, Complex(0, 1), 2, 0.5, -1, Complex(3, 4);
  CHECK(io::complex_matrix_from_json(Json::parse(io::matrix_to_json(m).dump())) == m);
}

TEST_CASE("report round trips") {
  const auto u = uniqueness_report({2, 2, 1, 5});
  CHECK(through_text(u, io::uniqueness_from_json) == u);
  const auto c = count_classes({5, 1, 0, 3});
  CHECK(through_text(c, io::class_count_from_json) == c);
  const auto mixed = count_classes({5, 1, 1, 3});
  CHECK(through_text(mixed, io::class_count_from_json) == mixed);
  const auto maximal = is_maximal({2, 3, 0, 5});
  CHECK(through_text(maximal, io::verdict_from_json) == maximal);
  const auto not_maximal = is_maximal({2, 2, 1, 5});
  CHECK(through_text(not_maximal, io::verdict_from_json) == not_maximal);
  if (not_maximal.witness) CHECK(through_text(*not_maximal.witness, io::witness_from_json) == *not_maximal.witness);
  const auto o = count_orbits(groups::cyclic(10), Signature::parse("(0; 2,5,10)"));
  CHECK(through_text(o, io::orbit_count_from_json) == o);
  const auto f = fermat_vandermonde(3, {0, 1, 2, 3}, 5, 1);
  CHECK(through_text(f, io::fermat_from_json) == f);
}

TEST_CASE("table round trip") {
  const auto t = classification_table(1);
  CHECK(io::table_from_json(Json::parse(io::to_json(t).dump())) == t);
}

TEST_CASE("malformed input is a usage error") {
  CHECK_THROWS_AS(io::signature_from_json(Json{{"orbit_genus", "x"}}), UsageError);
  CHECK_THROWS_AS(io::spec_from_json(Json::array()), UsageError);
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), UsageError);
  CHECK_THROWS_AS(io::rational_from_json(Json("abc")), UsageError);
  CHECK_THROWS_AS(io::complex_matrix_from_json(Json{Json{1, 2}, Json{1}}), UsageError);
  CHECK_THROWS_AS(io::fp_vector_from_json(Json{1, "a"}, Prime(2)), UsageError);
  CHECK_THROWS_AS(io::generating_vector_from_json(Json{{"p", 4}}), UsageError);
}

TEST_CASE("CSV quoting") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(io::to_csv({{"a", "b"}, {"1", "x,y"}}) == "a,b\n1,\"x,y\"\n");
}

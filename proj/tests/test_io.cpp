#include <doctest.h>

#include <json.hpp>

#include "supersquare/names.hpp"

using namespace supersquare;

namespace {

const PrimeField f3(3);

}  // namespace

TEST_CASE("tensor-text round trip of sl2") {
  const CatalogObject o = build_object("g(S1,S1)", f3);
  const TensorFile t = tensor_of(o);
  CHECK(t.dim() == 3);
  const std::string text = write_text(t);
  const TensorFile back = read_text(text);
  CHECK(back == t);
  CHECK(write_text(back) == text);
  CHECK(lie_from_tensor(back) == *o.lie);
}

TEST_CASE("json round trip") {
  for (const auto name : {"S42", "H3(S12)", "TJOS(S12)", "g(S12,S12)"}) {
    const TensorFile t = tensor_of(build_object(name, f3));
    const TensorFile back = read_json(write_json(t));
    CHECK_MESSAGE(back == t, name);
    CHECK(read_text(write_text(back)) == t);
  }
  const std::string js = write_json(tensor_of(build_object("TJS(S1)", f3)));
  const auto j = nlohmann::json::parse(js);
  CHECK(j.at("labels").size() == 14);
  CHECK(j.at("kind") == "symplectic");
}

TEST_CASE("triples survive the round trip") {
  const TripleSystem t = build_tjo(build_h3(catalog("S42", f3))).system();
  const TripleSystem back = triple_from_tensor(read_text(write_text(to_tensor(t))));
  CHECK(back.table() == t.table());
  CHECK(back.form() == t.form());
  CHECK(verify_triple(back).pass());
}

TEST_CASE("malformed files are rejected") {
  const std::string good = write_text(tensor_of(build_object("g(S1,S1)", f3)));
  CHECK_THROWS(read_text(""));
  CHECK_THROWS(read_text("widget x 3 1 0\n"));
  CHECK_THROWS(read_text(good.substr(0, good.size() - 4)));
  std::string bad = good;
  const auto pos = bad.find("\n0 1 ");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos + 1, 3, "0 9");  // index past the dimension
  CHECK_THROWS(read_text(bad));
  CHECK_THROWS(read_json("{\"kind\": \"algebra\"}"));
  CHECK_THROWS(read_json("not json"));
}

TEST_CASE("exports are deterministic") {
  const std::string a = write_text(tensor_of(build_object("g(S1,S8)", f3)));
  const std::string b = write_text(tensor_of(build_object("g(S1,S8)", f3)));
  CHECK(a == b);
  CHECK(sha256_hex(a) == sha256_hex(b));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("name grammar") {
  CHECK(parse_name(" g( S4 , S42 ) ").str() == "g(S4,S42)");
  CHECK(build_object("H3(S8)", f3).superdim() == "27|0");
  CHECK(build_object("TJO(S2)", f3).superdim() == "7|0");
  CHECK(build_object("TJS(S4)", f3).superdim() == "32|0");
  CHECK(build_object("TJOS(S42)", f3).superdim() == "13|6");
  CHECK(build_object("tri(S42)", f3).superdim() == "9|8");
  CHECK(build_object("der(H3(S2))", f3).superdim() == "8|0");
  CHECK(build_object("inder(H3(S2))", f3).superdim() == "7|0");
  CHECK(build_object("gJ(S12)", f3).superdim() == "21|16");
  CHECK(build_object("Gt(TJS(S1))", f3).superdim() == "21|14");
  CHECK(build_object("G(TJO(S2),derJ)", f3).superdim() == "11|14");
  CHECK(build_object("S12_2", f3).superdim() == "1|2");
}

TEST_CASE("bad names") {
  CHECK_THROWS_AS(build_object("g(S9,S1)", f3), NameError);
  try {
    build_object("gg(S1,S1)", f3);
    FAIL("expected a NameError");
  } catch (const NameError& e) {
    CHECK(e.suggestion() == "g");
  }
  try {
    build_object("TJO(S42)", f3);
    FAIL("expected a NameError");
  } catch (const NameError& e) {
    CHECK(e.suggestion() == "TJOS");
  }
  CHECK_THROWS_AS(parse_name("g(S1,S1"), NameError);
  CHECK_THROWS_AS(parse_name("g(S1)x"), NameError);
  CHECK_THROWS_AS(build_object("g(S1)", f3), NameError);
  CHECK(edit_distance("kitten", "sitting") == 3);
}

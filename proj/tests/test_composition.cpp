#include <doctest.h>

#include "supersquare/composition.hpp"

using namespace supersquare;

namespace {

std::size_t at(const CompositionSuperalgebra& s, const std::string& label) {
  return s.space().find(label).value();
}

Vector e(const CompositionSuperalgebra& s, const std::string& label) { return unit_vector(s.dim(), at(s, label)); }

}  // namespace

TEST_CASE("split Hurwitz algebras") {
  const PrimeField f(3);
  const auto k = build_hurwitz(HurwitzKind::unit, f);
  CHECK(k.dim() == 1);
  CHECK(k.form().q0(Vector{1}) == 1);
  const auto m = build_hurwitz(HurwitzKind::quaternion, f);
  CHECK(m.form().q0(e(m, "E11")) == 0);
  CHECK(m.b(at(m, "E11"), at(m, "E22")) == 1);
  CHECK(m.form().q0(Vector{1, 0, 0, 1}) == 1);  // det of the identity
  const auto c = build_hurwitz(HurwitzKind::octonion, f);
  CHECK(c.dim() == 8);
  CHECK(verify_composition(c).pass());
}

TEST_CASE("B(1,2) and B(4,2) products") {
  const PrimeField f(3);
  const auto b = build_b12(f);
  CHECK(b.space().superdim() == "1|2");
  CHECK(b.multiply(e(b, "v"), e(b, "w")) == Vector{1, 0, 0});
  CHECK(b.multiply(e(b, "w"), e(b, "v")) == Vector{2, 0, 0});
  const auto b42 = build_b42(f);
  CHECK(b42.space().superdim() == "4|2");
  // v.w = <.|v> w as an endomorphism: only the E-entry mapping w to w survives, with coefficient -1
  const Vector vw = b42.multiply(e(b42, "v"), e(b42, "w"));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 4; ++i) nonzero += vw[i] != 0;
  CHECK(nonzero == 1);
  CHECK(vw[at(b42, "v")] == 0);
  CHECK(vw[at(b42, "w")] == 0);
  CHECK(verify_composition(b).pass());
  CHECK(verify_composition(b42).pass());
}

TEST_CASE("B(1,2) is Hurwitz only in characteristic 3") {
  const PrimeField f5(5);
  CHECK_THROWS_AS(build_b12(f5), CharacteristicError);
  CHECK_THROWS_AS(build_b42(f5), CharacteristicError);
  CHECK_FALSE(verify_composition(build_b12_unchecked(f5)).pass());
  CHECK_FALSE(verify_composition(build_b42_unchecked(f5)).pass());
  CHECK(verify_composition(build_b12_unchecked(PrimeField(3))).pass());
}

TEST_CASE("standard involution") {
  const PrimeField f(3);
  const auto b = build_b12(f);
  const Matrix bar = standard_involution(b);
  CHECK(bar.apply(e(b, "1")) == e(b, "1"));
  CHECK(bar.apply(e(b, "v")) == Vector{0, 2, 0});
  const auto m = build_hurwitz(HurwitzKind::quaternion, f);
  CHECK(standard_involution(m).apply(e(m, "E11")) == e(m, "E22"));
  for (const auto& c : {b, m, build_b42(f), build_hurwitz(HurwitzKind::octonion, f)}) {
    const Matrix s = standard_involution(c);
    CHECK(s * s == Matrix::identity(f, c.dim()));
  }
}

TEST_CASE("para-Hurwitz and Petersson twists") {
  const PrimeField f(3);
  const auto s1 = catalog("S1", f);
  CHECK(s1.multiply(Vector{1}, Vector{1}) == Vector{1});
  const auto s2 = catalog("S2", f);
  CHECK(s2.multiply(Vector{1, 0}, Vector{1, 0}) == Vector{0, 1});
  for (Residue lambda = 0; lambda < 3; ++lambda) {
    const auto s = build_s12_lambda(f, lambda);
    CHECK(s.symmetric());
    CHECK(verify_composition(s).pass());
  }
  const auto b = build_b12(f);
  Matrix not_order3 = Matrix::identity(f, 3);
  not_order3.at(1, 1) = 2;
  not_order3.at(2, 2) = 2;  // -1 on the odd part: order 2
  CHECK_THROWS(petersson(b, not_order3, "bad"));
}

TEST_CASE("catalog") {
  const PrimeField f(3);
  CHECK(catalog("S1", f).b(0, 0) == 2);
  CHECK(catalog("S42", f).space().superdim() == "4|2");
  CHECK(catalog("S12", f).space().superdim() == "1|2");
  for (const auto& name : catalog_names()) {
    const auto s = catalog(name, f);
    CHECK_MESSAGE(verify_composition(s).pass(), name);
    CHECK(s.symmetric());
    const auto* assoc = verify_composition(s).find("form_associative");
    REQUIRE(assoc);
    CHECK(assoc->pass);
  }
  CHECK_THROWS(catalog("S8~", f));
  CHECK_THROWS(catalog("S5", f));
}

TEST_CASE("scaled norm is a negative control") {
  const PrimeField f(3);
  const auto bad = with_scaled_form(catalog("S42", f), 2);
  const AxiomReport r = verify_composition(bad);
  CHECK_FALSE(r.pass());
  const auto* polar = r.find("norm_polarized");
  REQUIRE(polar);
  CHECK_FALSE(polar->pass);
  CHECK_FALSE(polar->witness.empty());
}

TEST_CASE("octonions at p = 5") {
  const PrimeField f(5);
  CHECK(verify_composition(catalog("S8", f)).pass());
  CHECK(verify_composition(build_hurwitz(HurwitzKind::octonion, f)).pass());
}

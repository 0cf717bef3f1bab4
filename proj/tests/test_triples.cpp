#include <doctest.h>

#include "supersquare/triple_lie.hpp"

using namespace supersquare;

namespace {

const PrimeField f3(3);

JordanSuperalgebra h3(const std::string& s) { return build_h3(catalog(s, f3)); }

bool passes(const AxiomReport& r, const std::string& id) {
  const auto* a = r.find(id);
  return a && a->pass;
}

TripleSystem with_form(const TripleSystem& t, const Matrix& form, std::vector<SparseVector> product) {
  return TripleSystem(t.kind(), t.name() + "'", t.field(), t.space(), t.degrees(), form, std::move(product));
}

}  // namespace

TEST_CASE("orthogonal Jordan triples") {
  const std::vector<std::pair<std::string, std::size_t>> want{{"S1", 4}, {"S2", 7}, {"S4", 13}, {"S8", 25}};
  for (const auto& [name, dim] : want) {
    const JordanTriple t = build_tjo(h3(name));
    CHECK(t.system().kind() == TripleKind::orthogonal);
    CHECK(t.system().dim() == dim);
    CHECK_MESSAGE(verify_triple(t.system()).pass(), name);
  }
}

TEST_CASE("orthosymplectic Jordan triples") {
  const JordanTriple a = build_tjo(h3("S12"));
  CHECK(a.system().kind() == TripleKind::orthosymplectic);
  CHECK(a.system().space().superdim() == "4|6");
  CHECK(verify_triple(a.system()).pass());
  const JordanTriple b = build_tjo(h3("S42"));
  CHECK(b.system().space().superdim() == "13|6");
  CHECK(verify_triple(b.system()).pass());
}

TEST_CASE("negative controls for the axiom checker") {
  const TripleSystem t = build_tjo(h3("S4")).system();
  const TripleSystem zero = with_form(t, t.form(), std::vector<SparseVector>(t.table().size()));
  const AxiomReport rz = verify_triple(zero);
  CHECK(passes(rz, "form"));
  CHECK_FALSE(passes(rz, "b"));
  const TripleSystem s = build_tjs(h3("S1")).system;
  CHECK(verify_triple(s).pass());
  const AxiomReport rn = verify_triple(with_form(s, s.form().scaled(2), s.table()));
  CHECK(passes(rn, "form"));
  CHECK_FALSE(passes(rn, "b"));
}

TEST_CASE("symplectic Jordan triples") {
  const std::vector<std::pair<std::string, std::size_t>> want{{"S1", 14}, {"S2", 20}, {"S4", 32}, {"S8", 56}};
  for (const auto& [name, dim] : want) {
    const SymplecticJordanTriple t = build_tjs(h3(name));
    CHECK(t.system.kind() == TripleKind::symplectic);
    CHECK(t.system.dim() == dim);
    CHECK_MESSAGE(verify_triple(t.system).pass(), name);
  }
  CHECK_THROWS(build_tjs(h3("S42")));
}

TEST_CASE("cross product") {
  for (const auto name : {"S1", "S8"}) {
    const JordanSuperalgebra j = h3(name);
    const Vector one = j.unit();
    Vector two = one;
    for (auto& x : two) x = f3.mul(2, x);
    CHECK(cross_product(j, one, one) == two);
  }
}

TEST_CASE("derivations of the orthogonal triples") {
  // der T_J^o against der J: the induced copy of der J is always faithful
  const std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t>> want{
      {"S2", 7, 14, 8}, {"S4", 21, 21, 21}, {"S8", 52, 52, 52}};
  for (const auto& [name, inner, full, from_j] : want) {
    const JordanSuperalgebra j = h3(name);
    const JordanTriple t(j);
    const TripleDerivations in = inner_derivations(t.system());
    const TripleDerivations der = derivations(t.system(), in);
    CHECK_MESSAGE(in.algebra.dim() == inner, name);
    CHECK_MESSAGE(der.algebra.dim() == full, name);
    CHECK(induced_derivations(t, compute_der(j).algebra).dim() == from_j);
    CHECK(check_super_jacobi(der.algebra.lie()).pass());
  }
}

TEST_CASE("inner derivations form an ideal") {
  for (const auto name : {"S2", "S12"}) {
    const TripleSystem t = build_tjo(h3(name)).system();
    const TripleDerivations in = inner_derivations(t);
    const TripleDerivations der = derivations(t, in);
    for (std::size_t a = 0; a < der.algebra.dim(); ++a) {
      CHECK(is_triple_derivation(t, der.algebra.element(a), der.algebra.parity(a)));
      for (std::size_t b = 0; b < in.algebra.dim(); ++b) {
        const Matrix c = supercommutator(der.algebra.element(a), der.algebra.parity(a), in.algebra.element(b),
                                         in.algebra.parity(b));
        CHECK(in.algebra.coordinates(c).has_value());
      }
    }
  }
  const TripleSystem s = build_tjs(h3("S2")).system;
  const TripleDerivations in = inner_derivations(s);
  const TripleDerivations der = derivations(s, in);
  CHECK(in.algebra.dim() == 34);
  CHECK(der.algebra.dim() == 35);
  for (std::size_t a = 0; a < der.algebra.dim(); ++a)
    for (std::size_t b = 0; b < in.algebra.dim(); ++b)
      CHECK(in.algebra.coordinates(supercommutator(der.algebra.element(a), 0, in.algebra.element(b), 0)).has_value());
}

#include <doctest.h>

#include "supersquare/triple_lie.hpp"

using namespace supersquare;

namespace {

const PrimeField f3(3);

JordanSuperalgebra h3(const std::string& s) { return build_h3(catalog(s, f3)); }

TripleLie orthogonal(const std::string& name, bool full) {
  const TripleSystem t = build_tjo(h3(name)).system();
  TripleDerivations in = inner_derivations(t);
  return lie_from_orthogonal(t, full ? derivations(t, in).algebra : in.algebra);
}

}  // namespace

TEST_CASE("sp(V) basis") {
  for (unsigned k = 0; k < 3; ++k) {
    const Vector c = sp_coordinates(f3, sp_basis_matrix(f3, k));
    CHECK(c == unit_vector(3, k));
  }
}

TEST_CASE("Lie algebras of orthogonal triples") {
  const TripleLie g8 = orthogonal("S8", false);
  CHECK(g8.lie.space().superdim() == "55|50");
  CHECK(check_super_jacobi(g8.lie).pass());
  CHECK(orthogonal("S4", false).lie.dim() == 50);
  CHECK(orthogonal("S2", false).lie.dim() == 24);
  CHECK(orthogonal("S2", true).lie.dim() == 31);  // der T_J^o is 14 here, not 8
  // g(J) uses the derivations coming from der J
  const JordanSuperalgebra j = h3("S2");
  const JordanTriple t(j);
  const TripleLie gj = lie_from_orthogonal(t.system(), induced_derivations(t, compute_der(j).algebra));
  CHECK(gj.lie.dim() == 25);
  CHECK(derived_subalgebra(gj.lie).dim() == 24);
  CHECK(check_super_jacobi(gj.lie).pass());
}

TEST_CASE("Lie algebras of symplectic triples") {
  for (const auto& [name, dim] : {std::pair{"S1", 52}, std::pair{"S8", 248}}) {
    const TripleSystem t = build_tjs(h3(name)).system;
    const TripleLie g = lie_from_symplectic(t, inner_derivations(t).algebra);
    CHECK_MESSAGE(g.lie.dim() == std::size_t(dim), name);
    CHECK(check_super_jacobi(g.lie).pass());
  }
  const TripleSystem t = build_tjs(h3("S1")).system;
  const MatrixLieSuperalgebra empty(f3, t.space(), {}, {}, "zero");
  CHECK_THROWS(lie_from_symplectic(t, empty));
}

TEST_CASE("superalgebras of symplectic triples") {
  for (const auto& [name, dims] : {std::pair{"S1", "21|14"}, std::pair{"S2", "34|20"}, std::pair{"S4", "66|32"},
                                   std::pair{"S8", "133|56"}}) {
    const TripleSystem t = build_tjs(h3(name)).system;
    const TripleLie g = superalgebra_from_symplectic(t, inner_derivations(t).algebra);
    CHECK_MESSAGE(g.lie.space().superdim() == dims, name);
    CHECK(check_super_jacobi(g.lie).pass());
  }
  const TripleSystem t = build_tjs(build_h3(catalog("S1", PrimeField(5)))).system;
  CHECK_THROWS(superalgebra_from_symplectic(t, inner_derivations(t).algebra));
}

TEST_CASE("Lie superalgebras of orthosymplectic triples") {
  for (const auto& [name, dims] : {std::pair{"S12", "21|16"}, std::pair{"S42", "36|40"}}) {
    const JordanSuperalgebra j = h3(name);
    const JordanTriple t(j);
    const TripleLie g = lie_from_orthosymplectic(t.system(), induced_derivations(t, compute_der(j).algebra));
    CHECK_MESSAGE(g.lie.space().superdim() == dims, name);
    CHECK(check_super_jacobi(g.lie).pass());
  }
}

TEST_CASE("orthosymplectic functor on an even system") {
  const TripleSystem t = build_tjo(h3("S4")).system();
  const TripleSystem as_os(TripleKind::orthosymplectic, "os", t.field(), t.space(), t.degrees(), t.form(), t.table());
  const TripleDerivations in = inner_derivations(t);
  const TripleDerivations in_os = inner_derivations(as_os);
  CHECK(lie_from_orthogonal(t, in.algebra).lie == lie_from_orthosymplectic(as_os, in_os.algebra).lie);
}

TEST_CASE("extracting the triple back") {
  for (const auto name : {"S2", "S8", "S42"}) {
    const TripleSystem t = build_tjo(h3(name)).system();
    const TripleDerivations in = inner_derivations(t);
    const TripleLie g = t.kind() == TripleKind::orthogonal ? lie_from_orthogonal(t, in.algebra)
                                                            : lie_from_orthosymplectic(t, in.algebra);
    CHECK_MESSAGE(extract_triple(g, t) == t, name);
  }
  const TripleSystem s = build_tjs(h3("S4")).system;
  CHECK(extract_triple(lie_from_symplectic(s, inner_derivations(s).algebra), s) == s);
}

TEST_CASE("psi") {
  const PsiCheck p8 = check_psi(catalog("S8", f3));
  CHECK(p8.source_dims == "55|50");
  CHECK(p8.target_dims == "55|50");
  CHECK(p8.report.pass);
  for (const auto name : {"S1", "S2", "S12"}) CHECK_MESSAGE(check_psi(catalog(name, f3)).report.pass, name);
  // the variant with an extra parity sign on the s-slot is not a homomorphism
  const auto s = catalog("S42", f3);
  const MagicSquare g = magic_square(catalog("S12", f3), s);
  const JordanSuperalgebra j = build_h3(s);
  const JordanDerivations der = compute_der(j);
  const JordanTriple tj(j);
  const TripleLie target = lie_from_orthosymplectic(tj.system(), induced_derivations(tj, der.algebra));
  CHECK(check_isomorphism(psi_isomorphism(g, tj, der.algebra, target, 0), g.lie, target.lie).pass);
  CHECK_FALSE(check_isomorphism(psi_isomorphism(g, tj, der.algebra, target, 1), g.lie, target.lie).pass);
}

TEST_CASE("deletion") {
  CHECK(magic_square(catalog("S1", f3), catalog("S42", f3)).lie.dim() == 35);
  CHECK(magic_square(catalog("S8", f3), catalog("S42", f3)).lie.dim() == 189);
  const LieSuperalgebra g2 = magic_square(catalog("S2", f3), catalog("S42", f3)).lie;
  CHECK(g2.dim() == 55);
  CHECK(derived_subalgebra(g2).dim() == 54);
  for (unsigned r : {1u, 2u, 4u, 8u}) {
    const DeletionReport d = deletion_consistency(r, f3);
    for (const auto& x : d.results) CHECK_MESSAGE(x.pass, r, " ", x.id, " ", x.witness);
    CHECK(d.pass());
  }
}

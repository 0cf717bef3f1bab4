#include <doctest.h>

#include "supersquare/jordan.hpp"

using namespace supersquare;

namespace {

const PrimeField f3(3);

Vector iota(const JordanSuperalgebra& j, unsigned i, std::span<const Residue> a) {
  Vector x(j.dim(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) x[j.iota(i, k)] = a[k];
  return x;
}

Vector e(const JordanSuperalgebra& j, unsigned i) { return unit_vector(j.dim(), j.e(i)); }

Residue t(const JordanSuperalgebra& j, std::span<const Residue> x) {
  Residue s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s = f3.fma(j.trace()[k], x[k], s);
  return s;
}

}  // namespace

TEST_CASE("H3 of the ground field") {
  const JordanSuperalgebra j = build_h3(catalog("S1", f3));
  CHECK(j.dim() == 6);
  const Vector i1 = iota(j, 0, Vector{1});
  CHECK(is_zero(j.multiply(e(j, 0), i1)));
  const Vector half = iota(j, 0, Vector{f3.half()});
  CHECK(j.multiply(e(j, 1), i1) == half);
  CHECK(j.multiply(e(j, 2), i1) == half);
  CHECK(j.multiply(j.unit(), i1) == i1);
  CHECK(is_supercommutative(j));
}

TEST_CASE("products of iota blocks") {
  for (const auto name : {"S4", "S42", "S8"}) {
    const JordanSuperalgebra j = build_h3(catalog(name, f3));
    const auto& s = j.s();
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = 0; b < s.dim(); ++b)
        for (unsigned i = 0; i < 3; ++i) {
          const Vector lhs = j.multiply(iota(j, i, unit_vector(s.dim(), a)), iota(j, i + 1, unit_vector(s.dim(), b)));
          CHECK(lhs == iota(j, i + 2, s.product(a, b)));
        }
    CHECK(is_supercommutative(j));
    const Vector u = j.unit();
    for (std::size_t k = 0; k < j.dim(); ++k) CHECK(j.multiply(u, unit_vector(j.dim(), k)) == unit_vector(j.dim(), k));
  }
  CHECK(build_h3(catalog("S42", f3)).space().superdim() == "15|6");
}

TEST_CASE("trace form") {
  for (const auto name : {"S1", "S2", "S12", "S42"}) {
    const JordanSuperalgebra j = build_h3(catalog(name, f3));
    const Matrix tf = trace_form(j);
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b) CHECK(tf.at(j.e(a), j.e(b)) == (a == b ? 1u : 0u));
    const auto& s = j.s();
    for (std::size_t a = 0; a < s.dim(); ++a) {
      for (std::size_t b = 0; b < s.dim(); ++b) CHECK(tf.at(j.iota(0, a), j.iota(0, b)) == s.b(a, b));
      for (unsigned i = 0; i < 3; ++i)
        for (unsigned k = 0; k < 3; ++k) CHECK(tf.at(j.e(i), j.iota(k, a)) == 0);
    }
    CHECK(t(j, j.unit()) == 0);  // t(1) = 3
  }
}

TEST_CASE("derivation dimensions") {
  const JordanDerivations oct = compute_der(build_h3(catalog("S8", f3)));
  CHECK(oct.algebra.dim() == 52);
  const JordanSuperalgebra kk = build_h3(catalog("S2", f3));
  const JordanDerivations dkk = compute_der(kk);
  CHECK(dkk.algebra.dim() == 8);
  CHECK(inner_der(kk, dkk.algebra).dim() == 7);
  CHECK(compute_der(build_h3(catalog("S42", f3))).algebra.lie().space().superdim() == "21|14");
  CHECK(compute_der(build_h3(catalog("S12", f3))).algebra.lie().space().superdim() == "6|8");
  const JordanSuperalgebra j8 = build_h3(catalog("S8", f3));
  CHECK(inner_der(j8, oct.algebra).dim() == 52);
  for (const auto name : {"S1", "S4", "S12"}) {
    const JordanSuperalgebra j = build_h3(catalog(name, f3));
    const JordanDerivations d = compute_der(j);
    CHECK(check_super_jacobi(d.algebra.lie()).pass());
    for (std::size_t k = 0; k < d.algebra.dim(); ++k) {
      CHECK(is_derivation(j, d.algebra.element(k), d.algebra.parity(k)));
      CHECK(is_zero(d.algebra.element(k).apply(j.unit())));
    }
  }
}

TEST_CASE("inner derivations D_i(a)") {
  for (const auto name : {"S4", "S42"}) {
    const JordanSuperalgebra j = build_h3(catalog(name, f3));
    const auto& s = j.s();
    const std::size_t n = s.dim();
    for (unsigned i = 0; i < 3; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        const Matrix d = d_inner(j, i, a);
        CHECK(is_derivation(j, d, s.parity(a)));
        CHECK(is_zero(d.apply(e(j, i))));
        const Vector ha = iota(j, i, unit_vector(n, a));
        Vector half = ha;
        for (auto& x : half) x = f3.mul(x, f3.half());
        CHECK(d.apply(e(j, i + 1)) == half);
        for (std::size_t b = 0; b < n; ++b) {
          Vector want = iota(j, i + 2, s.product(a, b));
          for (auto& x : want) x = f3.neg(x);
          CHECK(d.apply(iota(j, i + 1, unit_vector(n, b))) == want);
        }
        const Matrix la = j.left(ha), le = j.left(e(j, i));
        CHECK(supercommutator(la, s.parity(a), le, 0).is_zero());
      }
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b) CHECK(supercommutator(j.left(e(j, a)), 0, j.left(e(j, b)), 0).is_zero());
  }
}

TEST_CASE("brackets of D maps") {
  const JordanSuperalgebra j = build_h3(catalog("S4", f3));
  const auto& s = j.s();
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      const Matrix d01 = supercommutator(d_inner(j, 0, a), 0, d_inner(j, 1, b), 0);
      Matrix want(f3, j.dim(), j.dim());
      for (std::size_t c = 0; c < s.dim(); ++c)
        if (const Residue k = s.product(a, b)[c]) want = want + d_inner(j, 2, c).scaled(k);
      CHECK(d01 == want);
      const Matrix d00 = supercommutator(d_inner(j, 0, a), 0, d_inner(j, 0, b), 0);
      CHECK(d00 == d_triality(j, t_element(s, a, b)).scaled(2));
    }
}

TEST_CASE("phi is an isomorphism") {
  for (const auto name : {"S1", "S4", "S12"}) {
    const auto s = catalog(name, f3);
    const MagicSquare g = magic_square(catalog("S1", f3), s);
    const JordanSuperalgebra j = build_h3(s);
    const JordanDerivations d = compute_der(j);
    const Matrix phi = phi_isomorphism(g, j, d.algebra);
    CHECK_MESSAGE(check_isomorphism(phi, g.lie, d.algebra.lie()).pass, name);
  }
}

#include <doctest.h>

#include "supersquare/magic_square.hpp"

using namespace supersquare;

namespace {

const PrimeField f3(3);

LieSuperalgebra g(const std::string& a, const std::string& b) {
  return magic_square(catalog(a, f3), catalog(b, f3)).lie;
}

LieSuperalgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return LieSuperalgebra(f3, SuperSpace(n, 0, labels), std::vector<SparseVector>(n * n), "abelian");
}

}  // namespace

TEST_CASE("small magic square cells") {
  CHECK(g("S1", "S1").space().superdim() == "3|0");
  CHECK(g("S1", "S8").dim() == 52);
  CHECK(g("S1", "S12").space().superdim() == "6|8");
  CHECK(g("S12", "S42").space().superdim() == "36|40");
  CHECK(g("S4", "S12").space().superdim() == "24|26");
  CHECK(g("S8", "S12").space().superdim() == "55|50");
  CHECK(g("S12", "S12").space().superdim() == "21|16");
  CHECK(g("S42", "S42").space().superdim() == "78|64");
}

TEST_CASE("e8") {
  const MagicSquare m = magic_square(catalog("S8", f3), catalog("S8", f3));
  CHECK(m.lie.dim() == 248);
  CHECK(m.decomposition.tri_dim == 28);
  CHECK(check_super_jacobi(m.lie).pass());
}

TEST_CASE("dimension formula over the whole table") {
  const auto& table = supersquare_table();
  CHECK(table.size() == 21);
  for (const auto& e : table) {
    const auto s = catalog(e.row, f3), s2 = catalog(e.col, f3);
    const MagicSquare m = magic_square(s, s2);
    const auto& ts = m.tri->lie().space();
    const auto& ts2 = m.tri2->lie().space();
    const std::size_t odd_prod = s.space().even_dim() * s2.space().odd_dim() + s.space().odd_dim() * s2.space().even_dim();
    const std::size_t even_prod = s.dim() * s2.dim() - odd_prod;
    CHECK(m.lie.space().even_dim() == ts.even_dim() + ts2.even_dim() + 3 * even_prod);
    CHECK(m.lie.space().odd_dim() == ts.odd_dim() + ts2.odd_dim() + 3 * odd_prod);
    CHECK_MESSAGE(m.lie.space().even_dim() == e.even, (e.row + "," + e.col));
    CHECK_MESSAGE(m.lie.space().odd_dim() == e.odd, (e.row + "," + e.col));
  }
}

TEST_CASE("jacobi checker") {
  CHECK(check_super_jacobi(abelian(4)).pass());
  const LieSuperalgebra l = g("S1", "S4");
  CHECK(check_super_jacobi(l).pass());
  // corrupt one coefficient of a nonzero bracket, keeping antisymmetry
  auto table = l.table();
  const std::size_t n = l.dim();
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k < n * n; ++k)
    if (!table[k].empty() && k / n != k % n) {
      i = k / n;
      j = k % n;
      break;
    }
  REQUIRE(!table[i * n + j].empty());
  auto& entry = table[i * n + j][0];
  entry.value = f3.add(entry.value, 1);
  if (entry.value == 0) table[i * n + j].erase(table[i * n + j].begin());
  table[j * n + i] = table[i * n + j];
  for (auto& e : table[j * n + i]) e.value = f3.neg(e.value);
  const LieSuperalgebra bad(f3, l.space(), table, "corrupt");
  const JacobiReport r = check_super_jacobi(bad);
  CHECK(r.jacobi_failures >= 1);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("derived algebra and center") {
  const LieSuperalgebra e6t = g("S2", "S8");
  CHECK(e6t.dim() == 78);
  const LieSubspace d = derived_subalgebra(e6t);
  CHECK(d.dim() == 77);
  CHECK(is_ideal(e6t, d));
  const LieSuperalgebra a = g("S2", "S12");
  CHECK(derived_subalgebra(a).dim() + 1 == a.dim());
  CHECK(center(g("S1", "S1")).dim() == 0);
  CHECK(center(abelian(3)).dim() == 3);
  CHECK(derived_subalgebra(abelian(3)).dim() == 0);
}

TEST_CASE("ideal closure") {
  const LieSuperalgebra f4 = g("S1", "S8");
  CHECK(ideal_closure(f4, unit_vector(52, 0)).dim() == 52);
  CHECK(ideal_closure(f4, unit_vector(52, 51)).dim() == 52);
  const LieSuperalgebra e6t = g("S2", "S8");
  const LieSubspace d = derived_subalgebra(e6t);
  CHECK(ideal_closure(e6t, d.basis.at(0)).dim() == 77);
  CHECK(ideal_closure(abelian(3), Vector{1, 1, 1}).dim() == 1);
  CHECK_THROWS(ideal_closure(f4, Vector(52, 0)));
}

TEST_CASE("simplicity probe") {
  CHECK(probe_simplicity(g("S1", "S4")).probably_simple);
  const SimplicityVerdict v = probe_simplicity(g("S2", "S8"));
  CHECK_FALSE(v.probably_simple);
  CHECK(v.witness_dim == 77);
  const LieSuperalgebra sl2 = g("S1", "S1");
  CHECK(probe_simplicity(sl2).probably_simple);
  const SimplicityVerdict ds = probe_simplicity(direct_sum(sl2, sl2));
  CHECK_FALSE(ds.probably_simple);
  CHECK(ds.witness_dim == 3);
}

TEST_CASE("isomorphism checker") {
  const LieSuperalgebra sp6 = g("S1", "S4");
  CHECK(check_isomorphism(Matrix::identity(f3, 21), sp6, sp6).pass);
  Matrix z = Matrix::identity(f3, 21);
  z.at(4, 4) = 0;
  CHECK_FALSE(check_isomorphism(z, sp6, sp6).pass);
  Matrix scale = Matrix::identity(f3, 21).scaled(2);
  CHECK_FALSE(check_isomorphism(scale, sp6, sp6).pass);  // 2[x,y] != [2x,2y] = 4[x,y]
  CHECK_THROWS(check_isomorphism(Matrix::identity(f3, 3), sp6, g("S1", "S1")));
}

TEST_CASE("flip isomorphisms") {
  for (const auto& [a, b] : {std::pair{"S1", "S42"}, std::pair{"S2", "S12"}, std::pair{"S4", "S8"}}) {
    const MagicSquare m1 = magic_square(catalog(a, f3), catalog(b, f3));
    const MagicSquare m2 = magic_square(catalog(b, f3), catalog(a, f3));
    CHECK_MESSAGE(check_isomorphism(flip_isomorphism(m1, m2), m1.lie, m2.lie).pass, (std::string(a) + " " + b));
  }
}

TEST_CASE("bracket builder enforces super antisymmetry") {
  BracketBuilder b(f3, {"h", "x"}, {0, 1});
  b.set_pair(0, 1, SparseVector{{1, 1}});
  b.set_pair(1, 1, SparseVector{{0, 1}});
  const LieSuperalgebra l = b.finish("tiny");
  CHECK(l.bracket(1, 0) == SparseVector{{1, 2}});
  CHECK(l.bracket(1, 1) == SparseVector{{0, 1}});
}

#include <doctest.h>

#include "supersquare/composition.hpp"
#include "supersquare/superlinalg.hpp"

using namespace supersquare;

namespace {

Matrix from_rows(const PrimeField& f, std::vector<std::vector<Residue>> rows) {
  Matrix m(f, rows.size(), rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

Matrix odd_block(const Matrix& m) {
  Matrix out(m.field(), 2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out.at(r, c) = m.at(1 + r, 1 + c);
  return out;
}

}  // namespace

TEST_CASE("kernel") {
  const PrimeField f(3);
  CHECK(kernel(Matrix(f, 2, 2)).size() == 2);
  CHECK(kernel(Matrix::identity(f, 2)).empty());
  const auto k = kernel(from_rows(f, {{1, 2}, {2, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{1, 1});
}

TEST_CASE("rank nullity on a random matrix") {
  const PrimeField f(7);
  Matrix a(f, 5, 9);
  std::uint32_t s = 12345;
  for (auto& x : a.data()) {
    s = s * 1103515245u + 12345u;
    x = (s >> 16) % 7;
  }
  const auto k = kernel(a);
  CHECK(k.size() + rank(a) == 9);
  for (const auto& v : k) CHECK(is_zero(a.apply(v)));
}

TEST_CASE("row reducer membership and sparse input") {
  const PrimeField f(3);
  RowReducer r(f, 3);
  CHECK(r.add(Vector{1, 1, 0}));
  CHECK(r.add_sparse(SparseVector{{2, 1}, {0, 2}}));
  CHECK_FALSE(r.add(Vector{1, 2, 1}));  // 2*(1,1,0) + (2,0,1)
  CHECK(r.rank() == 2);
  CHECK(r.contains(Vector{0, 1, 1}));
  CHECK_FALSE(r.contains(Vector{0, 1, 2}));
  CHECK(r.kernel_basis().size() == 1);
}

TEST_CASE("subspace coordinates") {
  const PrimeField f(5);
  const Subspace s(f, 3, {Vector{1, 2, 0}, Vector{0, 1, 1}});
  const auto c = s.coordinates(Vector{2, 0, 2});
  CHECK_FALSE(c.has_value());
  const auto d = s.coordinates(Vector{2, 1, 2});  // 2*(1,2,0) + 2*(0,1,1)
  REQUIRE(d.has_value());
  CHECK(*d == Vector{2, 2});
}

TEST_CASE("graded maps compose with additive parity") {
  const PrimeField f(3);
  auto space = std::make_shared<const SuperSpace>(1, 2, std::vector<std::string>{"1", "v", "w"});
  Matrix odd(f, 3, 3);
  odd.at(1, 0) = 1;
  odd.at(0, 2) = 2;
  CHECK(matrix_parity(*space, odd) == 1u);
  const GradedLinearMap a(space, space, 1, odd);
  CHECK(a.compose(a).parity() == 0);
  CHECK(matrix_parity(*space, a.compose(a).matrix()).value_or(1) == 0);
  Matrix bad(f, 3, 3);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 1;
  CHECK_FALSE(matrix_parity(*space, bad).has_value());
  CHECK_THROWS(GradedLinearMap(space, space, 1, bad));
}

TEST_CASE("sigma on B(1,2)") {
  const PrimeField f(3);
  const CompositionSuperalgebra b = build_b12(f);
  const auto sp = b.space_ptr();
  const Vector one{1, 0, 0}, v{0, 1, 0}, w{0, 0, 1};
  const Matrix alt = from_rows(f, {{0, 1}, {2, 0}});  // <v|w> = 1
  auto pair = [&](const Vector& x, const Vector& y) {
    return f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1]));
  };
  for (const Vector& u : {v, w}) {
    const auto s = sigma(one, u, b.form(), sp);
    CHECK(s.parity() == 1);
    const Vector image1 = s.matrix().apply(one);
    CHECK(image1 == Vector{0, f.neg(u[1]), f.neg(u[2])});
    for (const Vector& x : {v, w}) {
      const Vector img = s.matrix().apply(x);
      CHECK(img == Vector{f.neg(pair(u, x)), 0, 0});
    }
  }
  const std::vector<Vector> odd{v, w};
  for (const auto& x : odd)
    for (const auto& y : odd) {
      const Matrix g = gamma(std::vector<Residue>{x[1], x[2]}, std::vector<Residue>{y[1], y[2]}, alt);
      CHECK(odd_block(sigma(x, y, b.form(), sp).matrix()) == g.scaled(f.neg(1)));
    }
  const Vector mixed{1, 1, 0};
  CHECK_THROWS(sigma(mixed, v, b.form(), sp));
}

TEST_CASE("gamma") {
  const PrimeField f(3);
  const Matrix alt = from_rows(f, {{0, 1}, {2, 0}});
  const std::vector<Residue> v{1, 0}, w{0, 1};
  CHECK(gamma(v, v, alt).apply(w) == Vector{2, 0});  // 2<v|w> v
  CHECK(gamma(v, w, alt).apply(v) == Vector{2, 0});  // -v
  RowReducer r(f, 4);
  for (const auto& [a, c] : {std::pair{v, v}, std::pair{v, w}, std::pair{w, w}}) r.add(gamma(a, c, alt).data());
  CHECK(r.rank() == 3);
  CHECK_THROWS_AS(gamma(std::vector<Residue>{1, 0, 0}, v, alt), DimensionError);
}

TEST_CASE("osp membership") {
  const PrimeField f(3);
  for (const auto& s : {build_b12(f), build_b42(f), build_hurwitz(HurwitzKind::octonion, f)}) {
    const auto sp = s.space_ptr();
    const std::size_t n = s.dim();
    CHECK(osp_membership(GradedLinearMap(sp, sp, 0, Matrix(f, n, n)), s.form()));
    CHECK_FALSE(osp_membership(GradedLinearMap(sp, sp, 0, Matrix::identity(f, n)), s.form()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto m = sigma(unit_vector(n, i), unit_vector(n, j), s.form(), sp);
        CHECK(osp_membership(m, s.form()));
      }
  }
}

TEST_CASE("quadratic superform") {
  const PrimeField f(3);
  const auto b = build_b42(f);
  CHECK(b.form().regular());
  auto sp = SuperSpace(1, 0, {"x"});
  CHECK_FALSE(QuadraticSuperform(sp, Matrix(f, 1, 1)).regular());
}

#include "supersquare/jordan.hpp"

namespace supersquare {

namespace {

std::vector<std::size_t> jordan_index(const CompositionSuperalgebra& s) {
  std::vector<unsigned> par{0, 0, 0};
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < s.dim(); ++a) par.push_back(s.parity(a));
  return even_first_permutation(par);
}

std::shared_ptr<const SuperSpace> jordan_space(const CompositionSuperalgebra& s, const std::vector<std::size_t>& index) {
  const std::size_t n = 3 + 3 * s.dim();
  std::vector<std::string> labels(n);
  std::size_t even = 3;
  for (unsigned i = 0; i < 3; ++i) labels[index[i]] = "e" + std::to_string(i);
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < s.dim(); ++a) {
      labels[index[3 + i * s.dim() + a]] = "i" + std::to_string(i) + "(" + s.space().label(a) + ")";
      even += s.parity(a) == 0;
    }
  return std::make_shared<const SuperSpace>(even, n - even, std::move(labels));
}

SuperAlgebra jordan_algebra(const CompositionSuperalgebra& s, const std::vector<std::size_t>& index) {
  const auto& f = s.field();
  const std::size_t m = s.dim();
  const std::size_t n = 3 + 3 * m;
  auto space = jordan_space(s, index);
  Vector table(n * n * n, 0);
  auto E = [&](unsigned i) { return index[i % 3]; };
  auto I = [&](unsigned i, std::size_t a) { return index[3 + (i % 3) * m + a]; };
  auto out = [&](std::size_t x, std::size_t y) { return table.begin() + static_cast<std::ptrdiff_t>((x * n + y) * n); };
  for (unsigned i = 0; i < 3; ++i) out(E(i), E(i))[E(i)] = 1;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::size_t a = 0; a < m; ++a) {
        out(E(j), I(i, a))[I(i, a)] = f.half();
        out(I(i, a), E(j))[I(i, a)] = f.half();
      }
    }
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        // iota_i(a) o iota_i(b) = 2 b(a,b) (e_{i+1} + e_{i+2})
        const Residue c = f.mul(2, s.b(a, b));
        out(I(i, a), I(i, b))[E(i + 1)] = c;
        out(I(i, a), I(i, b))[E(i + 2)] = c;
        // iota_i(a) o iota_{i+1}(b) = iota_{i+2}(a.b), and the supercommuted one
        const auto ab = s.product(a, b);
        const Residue sg = f.sign(s.parity(a) * s.parity(b));
        for (std::size_t r = 0; r < m; ++r) {
          if (ab[r] == 0) continue;
          out(I(i, a), I(i + 1, b))[I(i + 2, r)] = ab[r];
          out(I(i + 1, b), I(i, a))[I(i + 2, r)] = f.mul(sg, ab[r]);
        }
      }
  return SuperAlgebra(f, space, std::move(table));
}

std::vector<Degree> jordan_degrees(const CompositionSuperalgebra& s, const std::vector<std::size_t>& index) {
  std::vector<Degree> d(3 + 3 * s.dim());
  static constexpr unsigned kQuarter[3] = {1, 2, 3};
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < s.dim(); ++a) d[index[3 + i * s.dim() + a]] = {0, (kQuarter[i] << 1) | s.parity(a)};
  return d;
}

}  // namespace

JordanSuperalgebra::JordanSuperalgebra(CompositionSuperalgebra s, std::string name)
    : s_(std::move(s)), name_(std::move(name)), index_(jordan_index(s_)), degrees_(jordan_degrees(s_, index_)),
      trace_(3 + 3 * s_.dim(), 0), algebra_(jordan_algebra(s_, index_)) {
  for (unsigned i = 0; i < 3; ++i) trace_[e(i)] = 1;
}

Vector JordanSuperalgebra::unit() const {
  Vector u(dim(), 0);
  for (unsigned i = 0; i < 3; ++i) u[e(i)] = 1;
  return u;
}

JordanSuperalgebra build_h3(const CompositionSuperalgebra& s) {
  if (!s.symmetric()) throw std::invalid_argument("build_h3 expects a para-Hurwitz catalog entry");
  return JordanSuperalgebra(s, "H3(" + s.name() + ")");
}

Matrix trace_form(const JordanSuperalgebra& j) {
  const auto& f = j.field();
  Matrix t(f, j.dim(), j.dim());
  for (std::size_t x = 0; x < j.dim(); ++x)
    for (std::size_t y = 0; y < j.dim(); ++y) {
      const auto p = j.algebra().product(x, y);
      Residue v = 0;
      for (std::size_t k = 0; k < j.dim(); ++k) v = f.fma(p[k], j.trace()[k], v);
      t.at(x, y) = v;
    }
  return t;
}

bool is_supercommutative(const JordanSuperalgebra& j) {
  const auto& f = j.field();
  for (std::size_t x = 0; x < j.dim(); ++x)
    for (std::size_t y = 0; y < j.dim(); ++y) {
      const auto a = j.algebra().product(x, y);
      const auto b = j.algebra().product(y, x);
      const Residue sg = f.sign(j.parity(x) * j.parity(y));
      for (std::size_t k = 0; k < j.dim(); ++k)
        if (a[k] != f.mul(sg, b[k])) return false;
    }
  return true;
}

bool is_derivation(const JordanSuperalgebra& j, const Matrix& d, unsigned parity) {
  const auto& f = j.field();
  const std::size_t n = j.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const Vector dx = d.column(x);
    for (std::size_t y = 0; y < n; ++y) {
      Vector lhs = d.apply(j.algebra().product(x, y));
      Vector rhs = j.multiply(dx, unit_vector(n, y));
      axpy(f, f.sign(parity * j.parity(x)), j.multiply(unit_vector(n, x), d.column(y)), rhs);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

JordanDerivations compute_der(const JordanSuperalgebra& j) {
  GradedProduct p{j.field(), j.space(), j.degrees(), 2, {}};
  p.table.reserve(j.dim() * j.dim());
  for (std::size_t x = 0; x < j.dim(); ++x)
    for (std::size_t y = 0; y < j.dim(); ++y) p.table.push_back(to_sparse(j.algebra().product(x, y)));
  GradedDerivations d = graded_derivations(p);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d.basis.size(); ++i) labels.push_back("D" + std::to_string(i));
  return {MatrixLieSuperalgebra(j.field(), j.space(), std::move(d.basis), std::move(labels), "der(" + j.name() + ")"),
          std::move(d.shift)};
}

Matrix d_inner(const JordanSuperalgebra& j, unsigned i, std::size_t a) {
  const Matrix la = j.left(unit_vector(j.dim(), j.iota(i, a)));
  const Matrix le = j.left(unit_vector(j.dim(), j.e(i + 1)));
  return (la * le - le * la).scaled(2);
}

Matrix d_triality(const JordanSuperalgebra& j, const TrialityElement& t) {
  Matrix m(j.field(), j.dim(), j.dim());
  const std::size_t n = j.s().dim();
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(j.iota(i, r), j.iota(i, c)) = t.d[i].at(r, c);
  return m;
}

LieSubspace inner_der(const JordanSuperalgebra& j, const MatrixLieSuperalgebra& der) {
  RowReducer red(j.field(), der.dim());
  std::vector<Matrix> l;
  for (std::size_t x = 0; x < j.dim(); ++x) l.push_back(j.left(unit_vector(j.dim(), x)));
  for (std::size_t x = 0; x < j.dim() && !red.full(); ++x)
    for (std::size_t y = x; y < j.dim() && !red.full(); ++y) {
      const Matrix c = supercommutator(l[x], j.parity(x), l[y], j.parity(y));
      red.add(der.require_coordinates(c, "[L_x, L_y] is not a derivation"));
    }
  LieSubspace out;
  out.basis = red.row_basis();
  for (const auto& row : out.basis) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    (der.parity(lead) == 0 ? out.even_dim : out.odd_dim) += 1;
  }
  return out;
}

Matrix phi_isomorphism(const MagicSquare& g, const JordanSuperalgebra& j, const MatrixLieSuperalgebra& der) {
  const auto& dec = g.decomposition;
  if (dec.n != 1 || dec.tri_dim != 0 || dec.n2 != j.s().dim()) {
    throw DimensionError("phi: expected g(S1, S) for the S of " + j.name());
  }
  Matrix phi(j.field(), der.dim(), g.lie.dim());
  auto put = [&](std::size_t col, const Matrix& m) {
    const Vector c = der.require_coordinates(m, "phi image is not a derivation");
    for (std::size_t r = 0; r < der.dim(); ++r) phi.at(r, col) = c[r];
  };
  for (std::size_t k = 0; k < dec.tri2_dim; ++k) put(dec.tri2(k), d_triality(j, g.tri2->element(k)));
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < dec.n2; ++a) put(dec.iota(i, 0, a), d_inner(j, i, a));
  return phi;
}

}  // namespace supersquare

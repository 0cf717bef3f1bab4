#include "supersquare/triality.hpp"

namespace supersquare {

Matrix left_multiplication(const CompositionSuperalgebra& s, std::size_t x) {
  return s.algebra().left(unit_vector(s.dim(), x));
}

Matrix right_multiplication(const CompositionSuperalgebra& s, std::size_t x) {
  const auto& f = s.field();
  Matrix m = s.algebra().right(unit_vector(s.dim(), x));
  for (std::size_t c = 0; c < s.dim(); ++c) {
    if (s.parity(x) & s.parity(c))
      for (std::size_t r = 0; r < s.dim(); ++r) m.at(r, c) = f.neg(m.at(r, c));
  }
  return m;
}

bool is_triality(const CompositionSuperalgebra& s, const TrialityElement& t) {
  const auto& f = s.field();
  const std::size_t n = s.dim();
  for (const auto& d : t.d) {
    auto q = matrix_parity(s.space(), d);
    if (q && *q != t.parity) return false;
    if (!osp_membership(GradedLinearMap(s.space_ptr(), s.space_ptr(), t.parity, d), s.form())) return false;
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Vector d1x = t.d[1].column(x);
    for (std::size_t y = 0; y < n; ++y) {
      Vector lhs = t.d[0].apply(s.product(x, y));
      Vector rhs = s.multiply(d1x, unit_vector(n, y));
      Vector x_d2y = s.multiply(unit_vector(n, x), t.d[2].column(y));
      axpy(f, f.sign(t.parity * s.parity(x)), x_d2y, rhs);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

TrialityElement theta(const TrialityElement& t) {
  return {{t.d[2], t.d[0], t.d[1]}, t.parity};
}

TrialityElement t_element(const CompositionSuperalgebra& s, std::size_t x, std::size_t y) {
  const auto& f = s.field();
  const std::size_t n = s.dim();
  const Vector ex = unit_vector(n, x);
  const Vector ey = unit_vector(n, y);
  const Matrix half_b = Matrix::identity(f, n).scaled(f.mul(f.half(), s.b(x, y)));
  const Matrix lx = left_multiplication(s, x);
  const Matrix ly = left_multiplication(s, y);
  const Matrix rx = right_multiplication(s, x);
  const Matrix ry = right_multiplication(s, y);
  TrialityElement t{{sigma(ex, ey, s.form(), s.space_ptr()).matrix(), half_b - rx * ly, half_b - lx * ry},
                    s.parity(x) ^ s.parity(y)};
  if (!is_triality(s, t)) {
    throw std::logic_error("t_{" + s.space().label(x) + "," + s.space().label(y) + "} is not in tri(" +
                           s.name() + ")");
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

/// Kernel of the tri system restricted to maps of parity q.
std::vector<TrialityElement> solve_tri(const CompositionSuperalgebra& s, unsigned q) {
  const auto& f = s.field();
  const std::size_t n = s.dim();
  std::vector<std::int64_t> var(3 * n * n, -1);
  std::vector<std::array<std::size_t, 3>> unknowns;  // slot, row, col
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((s.parity(r) ^ s.parity(c)) == q) {
          var[(slot * n + r) * n + c] = static_cast<std::int64_t>(unknowns.size());
          unknowns.push_back({slot, r, c});
        }
  const std::size_t m = unknowns.size();
  if (m == 0) return {};
  RowReducer red(f, m);
  std::vector<SparseEntry> row;
  auto push = [&](std::size_t slot, std::size_t r, std::size_t c, Residue coef) {
    const auto v = var[(slot * n + r) * n + c];
    if (v >= 0 && coef != 0) row.push_back({static_cast<std::uint32_t>(v), coef});
  };
  auto flush = [&] {
    if (!row.empty() && !red.full()) red.add_sparse(row);
    row.clear();
  };
  // b(d x, y) + (-1)^{q|x|} b(x, d y) = 0
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Residue sg = f.sign(q * s.parity(x));
        for (std::size_t r = 0; r < n; ++r) {
          push(slot, r, x, s.b(r, y));
          push(slot, r, y, f.mul(sg, s.b(x, r)));
        }
        flush();
      }
  // d0(x.y) - d1(x).y - (-1)^{q|x|} x.d2(y) = 0, component k
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xy = s.product(x, y);
      const Residue sg = f.neg(f.sign(q * s.parity(x)));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t mm = 0; mm < n; ++mm) push(0, k, mm, xy[mm]);
        for (std::size_t r = 0; r < n; ++r) {
          push(1, r, x, f.neg(s.product(r, y)[k]));
          push(2, r, y, f.mul(sg, s.product(x, r)[k]));
        }
        flush();
      }
    }
  std::vector<TrialityElement> out;
  for (const auto& sol : red.kernel_basis()) {
    TrialityElement t{{Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n)}, q};
    for (std::size_t u = 0; u < m; ++u) {
      const auto& [slot, r, c] = unknowns[u];
      t.d[slot].at(r, c) = sol[u];
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> TrialityAlgebra::slot_permutation(const CompositionSuperalgebra& s) {
  std::vector<unsigned> par;
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t k = 0; k < s.dim(); ++k) par.push_back(s.parity(k));
  return even_first_permutation(par);
}

SuperSpace TrialityAlgebra::module_space(const CompositionSuperalgebra& s, const std::vector<std::size_t>& perm) {
  const std::size_t n = s.dim();
  std::vector<std::string> labels(3 * n);
  std::size_t even = 0;
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t k = 0; k < n; ++k) {
      labels[perm[slot * n + k]] = "s" + std::to_string(slot) + "." + s.space().label(k);
      even += s.parity(k) == 0;
    }
  return SuperSpace(even, 3 * n - even, std::move(labels));
}

std::vector<Matrix> TrialityAlgebra::embed_all(const CompositionSuperalgebra& s,
                                               const std::vector<TrialityElement>& b,
                                               const std::vector<std::size_t>& perm) {
  const std::size_t n = s.dim();
  std::vector<Matrix> out;
  for (const auto& t : b) {
    Matrix m(s.field(), 3 * n, 3 * n);
    for (std::size_t slot = 0; slot < 3; ++slot)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(perm[slot * n + r], perm[slot * n + c]) = t.d[slot].at(r, c);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {
std::vector<std::string> tri_labels(std::size_t d) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < d; ++i) l.push_back("t" + std::to_string(i));
  return l;
}
}  // namespace

TrialityAlgebra::TrialityAlgebra(CompositionSuperalgebra s, std::vector<TrialityElement> basis)
    : s_(std::move(s)), basis_(std::move(basis)), perm_(slot_permutation(s_)),
      matrices_(s_.field(), module_space(s_, perm_), embed_all(s_, basis_, perm_), tri_labels(basis_.size()),
                "tri(" + s_.name() + ")"),
      t_cache_(3 * s_.dim() * s_.dim()) {}

Matrix TrialityAlgebra::embed(const TrialityElement& t) const { return embed_all(s_, {t}, perm_).front(); }

std::optional<Vector> TrialityAlgebra::coordinates(const TrialityElement& t) const {
  return matrices_.coordinates(embed(t));
}

Vector TrialityAlgebra::require_coordinates(const TrialityElement& t, const std::string& what) const {
  return matrices_.require_coordinates(embed(t), what);
}

TrialityElement TrialityAlgebra::combine(std::span<const Residue> coords) const {
  const std::size_t n = s_.dim();
  const Matrix m = matrices_.combine(coords);
  TrialityElement t{{Matrix(s_.field(), n, n), Matrix(s_.field(), n, n), Matrix(s_.field(), n, n)}, 0};
  auto par = homogeneous_parity(lie().space(), coords);
  t.parity = par.value_or(0);
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) t.d[slot].at(r, c) = m.at(perm_[slot * n + r], perm_[slot * n + c]);
  return t;
}

Matrix TrialityAlgebra::theta_matrix() const {
  Matrix out(s_.field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Vector c = require_coordinates(theta(basis_[i]), "theta(tri)");
    for (std::size_t r = 0; r < dim(); ++r) out.at(r, i) = c[r];
  }
  return out;
}

const Vector& TrialityAlgebra::t_coordinates(unsigned i, std::size_t x, std::size_t y) const {
  const std::size_t n = s_.dim();
  auto& slot = t_cache_.at((i % 3) * n * n + x * n + y);
  if (!slot) {
    TrialityElement t = t_element(s_, x, y);
    for (unsigned k = 0; k < i % 3; ++k) t = theta(t);
    slot = require_coordinates(t, "theta^i t_{x,y}");
  }
  return *slot;
}

std::size_t TrialityAlgebra::t_span_dim() const {
  if (dim() == 0) return 0;
  RowReducer red(s_.field(), dim());
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < s_.dim(); ++x)
      for (std::size_t y = 0; y < s_.dim(); ++y) red.add(t_coordinates(i, x, y));
  return red.rank();
}

TrialityAlgebra compute_tri(const CompositionSuperalgebra& s) {
  std::vector<TrialityElement> basis = solve_tri(s, 0);
  for (auto& t : solve_tri(s, 1)) basis.push_back(std::move(t));
  return TrialityAlgebra(s, std::move(basis));
}

}  // namespace supersquare

#include "supersquare/superlinalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace supersquare {

// ---------------------------------------------------------------------------
// sparse helpers

SparseVector to_sparse(std::span<const Residue> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim, 0);
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

void axpy(const PrimeField& f, Residue coef, const SparseVector& v, Vector& acc) {
  if (coef == 0) return;
  for (const auto& e : v) acc[e.index] = f.fma(coef, e.value, acc[e.index]);
}

void axpy(const PrimeField& f, Residue coef, std::span<const Residue> v, Vector& acc) {
  if (coef == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) acc[i] = f.fma(coef, v[i], acc[i]);
  }
}

bool is_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; });
}

// ---------------------------------------------------------------------------
// SuperSpace

SuperSpace::SuperSpace(std::size_t even_dim, std::size_t odd_dim, std::vector<std::string> labels)
    : even_dim_(even_dim), odd_dim_(odd_dim), labels_(std::move(labels)) {
  if (labels_.size() != even_dim_ + odd_dim_) {
    throw DimensionError("superspace: " + std::to_string(labels_.size()) + " labels for dim " +
                         std::to_string(even_dim_ + odd_dim_));
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw DimensionError("superspace: duplicate label " + *dup);
  for (const auto& l : labels_) {
    if (l.empty() || l.find_first_of(" \t\n\r") != std::string::npos) {
      throw DimensionError("superspace: label '" + l + "' must be nonempty without whitespace");
    }
  }
}

std::optional<std::size_t> SuperSpace::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string SuperSpace::superdim() const {
  return std::to_string(even_dim_) + "|" + std::to_string(odd_dim_);
}

std::optional<unsigned> homogeneous_parity(const SuperSpace& space, std::span<const Residue> v) {
  bool even = false;
  bool odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    (space.parity(i) == 0 ? even : odd) = true;
  }
  if (even == odd) return std::nullopt;
  return even ? 0u : 1u;
}

unsigned require_homogeneous(const SuperSpace& space, std::span<const Residue> v) {
  if (v.size() != space.dim()) throw DimensionError("vector length does not match superspace");
  if (is_zero(v)) return 0;
  auto p = homogeneous_parity(space, v);
  if (!p) throw ParityError("vector is not homogeneous");
  return *p;
}

std::vector<std::size_t> even_first_permutation(const std::vector<unsigned>& parity) {
  std::vector<std::size_t> perm(parity.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < parity.size(); ++i) {
    if (parity[i] == 0) perm[i] = next++;
  }
  for (std::size_t i = 0; i < parity.size(); ++i) {
    if (parity[i] != 0) perm[i] = next++;
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Vector Matrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<std::uint64_t> acc(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) acc[r] += static_cast<std::uint64_t>(at(r, c)) * v[c];
  }
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = static_cast<Residue>(acc[r] % field_.characteristic());
  return out;
}

Vector Matrix::apply(const SparseVector& v) const {
  Vector out(rows_, 0);
  for (const auto& e : v) {
    for (std::size_t r = 0; r < rows_; ++r) out[r] = field_.fma(at(r, e.index), e.value, out[r]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const { return supersquare::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  const auto p = a.field_.characteristic();
  Matrix out(a.field_, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      const Residue* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) = static_cast<Residue>(acc[j] % p);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference size mismatch");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

Matrix Matrix::scaled(Residue c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(c, data_[i]);
  return out;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().characteristic() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::uint32_t p = 0;
  if (!(in >> rows >> cols >> p)) throw std::runtime_error("matrix text: bad header");
  Matrix m(PrimeField(p), rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    std::int64_t v = 0;
    if (!(in >> v)) throw std::runtime_error("matrix text: truncated body");
    if (v < 0 || v >= static_cast<std::int64_t>(p)) {
      throw std::runtime_error("matrix text: entry " + std::to_string(v) + " is not a residue");
    }
    m.data()[i] = static_cast<Residue>(v);
  }
  return m;
}

// ---------------------------------------------------------------------------
// GradedLinearMap

std::optional<unsigned> matrix_parity(const SuperSpace& space, const Matrix& m) {
  bool even = false;
  bool odd = false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      ((space.parity(r) ^ space.parity(c)) == 0 ? even : odd) = true;
    }
  if (even == odd) return std::nullopt;
  return even ? 0u : 1u;
}

GradedLinearMap::GradedLinearMap(std::shared_ptr<const SuperSpace> domain,
                                 std::shared_ptr<const SuperSpace> codomain, unsigned parity,
                                 Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity & 1u),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim()) {
    throw DimensionError("graded map: matrix shape does not match spaces");
  }
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      if (matrix_.at(r, c) != 0 && (codomain_->parity(r) ^ domain_->parity(c)) != parity_) {
        throw ParityError("graded map: entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") violates parity " + std::to_string(parity_));
      }
    }
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap& other) const {
  if (!(other.codomain() == domain())) throw DimensionError("compose: spaces do not match");
  return GradedLinearMap(other.domain_, codomain_, parity_ ^ other.parity_, matrix_ * other.matrix_);
}

GradedLinearMap GradedLinearMap::supercommutator(const GradedLinearMap& other) const {
  const Matrix ab = matrix_ * other.matrix_;
  const Matrix ba = other.matrix_ * matrix_;
  const Matrix m = (parity_ & other.parity_) ? ab + ba : ab - ba;
  return GradedLinearMap(domain_, codomain_, parity_ ^ other.parity_, m);
}

// ---------------------------------------------------------------------------
// QuadraticSuperform

QuadraticSuperform::QuadraticSuperform(const SuperSpace& space, Matrix polar)
    : even_dim_(space.even_dim()), b_(std::move(polar)) {
  const std::size_t n = space.dim();
  if (b_.rows() != n || b_.cols() != n) throw DimensionError("superform: polar matrix shape");
  const auto& f = b_.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Residue v = b_.at(i, j);
      if (space.parity(i) != space.parity(j)) {
        if (v != 0) throw ParityError("superform: b(even, odd) must vanish");
      } else if (space.parity(i) == 0) {
        if (v != b_.at(j, i)) throw std::invalid_argument("superform: b not symmetric on even block");
      } else {
        if (v != f.neg(b_.at(j, i))) {
          throw std::invalid_argument("superform: b not alternating on odd block");
        }
      }
    }
}

Residue QuadraticSuperform::b(std::span<const Residue> x, std::span<const Residue> y) const {
  const auto& f = b_.field();
  std::uint64_t acc = 0;
  const auto p = f.characteristic();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    std::uint64_t inner = 0;
    for (std::size_t j = 0; j < y.size(); ++j) inner += static_cast<std::uint64_t>(b_.at(i, j)) * y[j];
    acc = (acc + (inner % p) * x[i]) % p;
  }
  return static_cast<Residue>(acc);
}

Residue QuadraticSuperform::q0(std::span<const Residue> x) const {
  for (std::size_t i = even_dim_; i < x.size(); ++i) {
    if (x[i] != 0) throw ParityError("q0 is defined on even vectors only");
  }
  const auto& f = b_.field();
  return f.mul(f.half(), b(x, x));
}

Matrix QuadraticSuperform::q0_coefficients() const {
  const auto& f = b_.field();
  Matrix q(f, even_dim_, even_dim_);
  for (std::size_t i = 0; i < even_dim_; ++i) {
    q.at(i, i) = f.mul(f.half(), b_.at(i, i));
    for (std::size_t j = i + 1; j < even_dim_; ++j) q.at(i, j) = b_.at(i, j);
  }
  return q;
}

bool QuadraticSuperform::regular() const { return rank(b_) == b_.rows(); }

// ---------------------------------------------------------------------------
// RowReducer

RowReducer::RowReducer(const PrimeField& field, std::size_t columns)
    : field_(field), cols_(columns), pivot_of_col_(columns, -1), scratch_(columns, 0) {}

void RowReducer::reduce_into(std::vector<std::uint64_t>& acc) const {
  const std::uint64_t p = field_.characteristic();
  for (auto& a : acc) a %= p;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t v = acc[pivot_cols_[k]];
    if (v == 0) continue;
    const std::uint64_t coef = p - v;
    for (const auto& e : sparse_rows_[k]) acc[e.index] += coef * e.value;
  }
  for (auto& a : acc) a %= p;
}

bool RowReducer::insert_reduced(std::vector<std::uint64_t>& acc) {
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (acc[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == cols_) return false;
  const Residue inv = field_.inv(static_cast<Residue>(acc[lead]));
  Vector row(cols_);
  for (std::size_t j = 0; j < cols_; ++j) row[j] = field_.mul(static_cast<Residue>(acc[j]), inv);
  const std::uint64_t p = field_.characteristic();
  for (auto& other : rows_) {
    const Residue v = other[lead];
    if (v == 0) continue;
    const std::uint64_t coef = p - v;
    for (std::size_t j = lead; j < cols_; ++j) {
      if (row[j] != 0) other[j] = static_cast<Residue>((other[j] + coef * row[j]) % p);
    }
    sparse_rows_[static_cast<std::size_t>(&other - rows_.data())] = to_sparse(other);
  }
  pivot_of_col_[lead] = static_cast<std::int64_t>(rows_.size());
  pivot_cols_.push_back(lead);
  sparse_rows_.push_back(to_sparse(row));
  rows_.push_back(std::move(row));
  return true;
}

bool RowReducer::add(std::span<const Residue> row) {
  if (row.size() != cols_) throw DimensionError("row reducer: row length mismatch");
  if (full()) return false;
  std::copy(row.begin(), row.end(), scratch_.begin());
  reduce_into(scratch_);
  return insert_reduced(scratch_);
}

bool RowReducer::add_sparse(std::span<const SparseEntry> row) {
  if (full() || row.empty()) return false;
  std::fill(scratch_.begin(), scratch_.end(), 0);
  for (const auto& e : row) {
    if (e.index >= cols_) throw DimensionError("row reducer: sparse index out of range");
    scratch_[e.index] += e.value;
  }
  reduce_into(scratch_);
  return insert_reduced(scratch_);
}

bool RowReducer::contains(std::span<const Residue> row) const {
  std::vector<std::uint64_t> acc(row.begin(), row.end());
  reduce_into(acc);
  return std::all_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v == 0; });
}

std::vector<Vector> RowReducer::row_basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_cols_[a] < pivot_cols_[b]; });
  std::vector<Vector> out;
  out.reserve(order.size());
  for (auto k : order) out.push_back(rows_[k]);
  return out;
}

std::vector<Vector> RowReducer::kernel_basis() const {
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    Vector k(cols_, 0);
    k[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) k[pivot_cols_[r]] = field_.neg(rows_[r][f]);
    raw.push_back(std::move(k));
  }
  return rref(field_, raw, cols_);
}

std::vector<Vector> rref(const PrimeField& field, const std::vector<Vector>& rows, std::size_t cols) {
  RowReducer red(field, cols);
  for (const auto& r : rows) red.add(r);
  return red.row_basis();
}

std::vector<Vector> kernel(const Matrix& a) {
  RowReducer red(a.field(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) red.add(a.row(r));
  return red.kernel_basis();
}

std::size_t rank(const Matrix& a) {
  RowReducer red(a.field(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) red.add(a.row(r));
  return red.rank();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const PrimeField& field, std::size_t ambient_dim, std::vector<Vector> basis)
    : field_(field), ambient_(ambient_dim), basis_(std::move(basis)),
      to_basis_(field, basis_.size(), basis_.size()) {
  const std::size_t d = basis_.size();
  RowReducer red(field_, ambient_ + d);
  Vector aug(ambient_ + d);
  for (std::size_t i = 0; i < d; ++i) {
    if (basis_[i].size() != ambient_) throw DimensionError("subspace: basis vector length");
    std::fill(aug.begin(), aug.end(), 0);
    std::copy(basis_[i].begin(), basis_[i].end(), aug.begin());
    aug[ambient_ + i] = 1;
    red.add(aug);
  }
  auto rows = red.row_basis();
  echelon_.reserve(d);
  std::size_t k = 0;
  for (const auto& r : rows) {
    std::size_t lead = 0;
    while (lead < r.size() && r[lead] == 0) ++lead;
    if (lead >= ambient_) throw DimensionError("subspace: basis vectors are linearly dependent");
    pivots_.push_back(lead);
    echelon_.push_back(to_sparse(std::span<const Residue>(r.data(), ambient_)));
    for (std::size_t j = 0; j < d; ++j) to_basis_.at(k, j) = r[ambient_ + j];
    ++k;
  }
}

std::optional<Vector> Subspace::finish(Vector reduced, const SparseVector* sparse,
                                       std::span<const Residue> dense) const {
  Vector residual = sparse ? to_dense(*sparse, ambient_) : Vector(dense.begin(), dense.end());
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    if (reduced[k] == 0) continue;
    axpy(field_, field_.neg(reduced[k]), echelon_[k], residual);
  }
  if (!is_zero(residual)) return std::nullopt;
  Vector coords(basis_.size(), 0);
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    if (reduced[k] == 0) continue;
    axpy(field_, reduced[k], to_basis_.row(k), coords);
  }
  return coords;
}

std::optional<Vector> Subspace::coordinates(std::span<const Residue> v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: vector length mismatch");
  Vector reduced(echelon_.size());
  for (std::size_t k = 0; k < echelon_.size(); ++k) reduced[k] = v[pivots_[k]];
  return finish(std::move(reduced), nullptr, v);
}

std::optional<Vector> Subspace::coordinates(const SparseVector& v) const {
  Vector reduced(echelon_.size(), 0);
  for (const auto& e : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<std::size_t>(e.index));
    if (it != pivots_.end() && *it == e.index) reduced[static_cast<std::size_t>(it - pivots_.begin())] = e.value;
  }
  return finish(std::move(reduced), &v, {});
}

Vector Subspace::require_coordinates(std::span<const Residue> v, const std::string& what) const {
  auto c = coordinates(v);
  if (!c) throw std::logic_error(what + ": vector outside subspace");
  return *c;
}

Vector Subspace::combine(std::span<const Residue> coords) const {
  Vector out(ambient_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(field_, coords[i], basis_[i], out);
  return out;
}

bool Subspace::contains_span(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

bool Subspace::same_span(const Subspace& other) const {
  return dim() == other.dim() && contains_span(other);
}

// ---------------------------------------------------------------------------
// sigma, gamma, osp

GradedLinearMap sigma(std::span<const Residue> x, std::span<const Residue> y,
                      const QuadraticSuperform& form, const std::shared_ptr<const SuperSpace>& space) {
  const unsigned px = require_homogeneous(*space, x);
  const unsigned py = require_homogeneous(*space, y);
  const auto& f = form.polar().field();
  const std::size_t n = space->dim();
  Matrix m(f, n, n);
  Vector ez(n, 0);
  for (std::size_t z = 0; z < n; ++z) {
    const unsigned pz = space->parity(z);
    std::fill(ez.begin(), ez.end(), 0);
    ez[z] = 1;
    const Residue bxz = f.mul(f.sign(py * pz), form.b(x, ez));
    const Residue byz = f.mul(f.sign(px * (py + pz)), form.b(y, ez));
    for (std::size_t r = 0; r < n; ++r) {
      m.at(r, z) = f.sub(f.mul(bxz, y[r]), f.mul(byz, x[r]));
    }
  }
  return GradedLinearMap(space, space, px ^ py, std::move(m));
}

Matrix gamma(std::span<const Residue> u, std::span<const Residue> v, const Matrix& alternating) {
  if (alternating.rows() != 2 || alternating.cols() != 2 || u.size() != 2 || v.size() != 2) {
    throw DimensionError("gamma is defined on a 2-dimensional symplectic space");
  }
  const auto& f = alternating.field();
  auto pair = [&](std::span<const Residue> a, std::size_t j) {
    return f.add(f.mul(a[0], alternating.at(0, j)), f.mul(a[1], alternating.at(1, j)));
  };
  Matrix m(f, 2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    const Residue uj = pair(u, j);
    const Residue vj = pair(v, j);
    for (std::size_t r = 0; r < 2; ++r) m.at(r, j) = f.add(f.mul(uj, v[r]), f.mul(vj, u[r]));
  }
  return m;
}

bool osp_membership(const GradedLinearMap& d, const QuadraticSuperform& form) {
  const auto& space = d.domain();
  const auto& m = d.matrix();
  const auto& b = form.polar();
  const auto& f = b.field();
  const std::size_t n = space.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::uint64_t lhs = 0;
      std::uint64_t rhs = 0;
      for (std::size_t k = 0; k < n; ++k) {
        lhs += static_cast<std::uint64_t>(m.at(k, x)) * b.at(k, y);
        rhs += static_cast<std::uint64_t>(b.at(x, k)) * m.at(k, y);
      }
      const Residue total = f.add(f.reduce(static_cast<std::int64_t>(lhs % f.characteristic())),
                                  f.mul(f.sign(d.parity() * space.parity(x)),
                                        static_cast<Residue>(rhs % f.characteristic())));
      if (total != 0) return false;
    }
  return true;
}

SparseVector SparseAccumulator::take(std::uint32_t p) {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  for (auto i : touched_) {
    const auto r = static_cast<Residue>(acc_[i] % p);
    if (r != 0) out.push_back({i, r});
    acc_[i] = 0;
    mark_[i] = 0;
  }
  touched_.clear();
  return out;
}

}  // namespace supersquare

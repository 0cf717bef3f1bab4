#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supersquare/gfp.hpp"

namespace supersquare {

/// Raised when a vector or map is not parity-homogeneous where it must be.
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Residue>;

struct SparseEntry {
  std::uint32_t index;
  Residue value;
  bool operator==(const SparseEntry&) const = default;
};

/// Sorted by index, no zero values.
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(std::span<const Residue> dense);
Vector to_dense(const SparseVector& v, std::size_t dim);
/// Adds coef * v into acc (dense).
void axpy(const PrimeField& f, Residue coef, const SparseVector& v, Vector& acc);
/// Adds coef * v into acc (dense).
void axpy(const PrimeField& f, Residue coef, std::span<const Residue> v, Vector& acc);
bool is_zero(std::span<const Residue> v);

/// Dense uint64 accumulator with a touched list, for building sparse sums.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::size_t n) : acc_(n, 0), mark_(n, 0) {}

  void add(std::uint32_t i, std::uint64_t v) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    acc_[i] += v;
  }
  /// Adds c * v; c must be a reduced residue.
  void add_scaled(const SparseVector& v, std::uint64_t c) {
    for (const auto& e : v) add(e.index, c * e.value);
  }
  /// Sorted result mod p; resets the accumulator.
  SparseVector take(std::uint32_t p);

 private:
  std::vector<std::uint64_t> acc_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

/// Z2-graded vector space with a labelled basis, even block first.
class SuperSpace {
 public:
  SuperSpace() = default;
  SuperSpace(std::size_t even_dim, std::size_t odd_dim, std::vector<std::string> labels);

  std::size_t even_dim() const noexcept { return even_dim_; }
  std::size_t odd_dim() const noexcept { return odd_dim_; }
  std::size_t dim() const noexcept { return even_dim_ + odd_dim_; }
  unsigned parity(std::size_t i) const noexcept { return i < even_dim_ ? 0u : 1u; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Index of a label, or nullopt.
  std::optional<std::size_t> find(const std::string& label) const;

  /// "e|o"
  std::string superdim() const;

  bool operator==(const SuperSpace&) const = default;

 private:
  std::size_t even_dim_ = 0;
  std::size_t odd_dim_ = 0;
  std::vector<std::string> labels_;
};

/// Parity of a vector if it is homogeneous and nonzero, nullopt otherwise.
std::optional<unsigned> homogeneous_parity(const SuperSpace& space, std::span<const Residue> v);
/// Like homogeneous_parity but throws ParityError; zero vectors count as even.
unsigned require_homogeneous(const SuperSpace& space, std::span<const Residue> v);

/// Stable permutation placing even entries first: result[natural] = canonical.
std::vector<std::size_t> even_first_permutation(const std::vector<unsigned>& parity);

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const PrimeField& field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const Vector& data() const noexcept { return data_; }
  Vector& data() noexcept { return data_; }

  Vector apply(std::span<const Residue> v) const;
  Vector apply(const SparseVector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(Residue c) const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
           data_ == other.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector data_;
};

/// Matrix text format: "rows cols p" then row-major residues.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in);

/// Parity-homogeneous linear map between superspaces.
class GradedLinearMap {
 public:
  GradedLinearMap(std::shared_ptr<const SuperSpace> domain,
                  std::shared_ptr<const SuperSpace> codomain, unsigned parity, Matrix matrix);

  const SuperSpace& domain() const noexcept { return *domain_; }
  const SuperSpace& codomain() const noexcept { return *codomain_; }
  std::shared_ptr<const SuperSpace> domain_ptr() const noexcept { return domain_; }
  std::shared_ptr<const SuperSpace> codomain_ptr() const noexcept { return codomain_; }
  unsigned parity() const noexcept { return parity_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// this after other (apply other first).
  GradedLinearMap compose(const GradedLinearMap& other) const;
  /// Super-commutator [this, other] of endomorphisms.
  GradedLinearMap supercommutator(const GradedLinearMap& other) const;

 private:
  std::shared_ptr<const SuperSpace> domain_;
  std::shared_ptr<const SuperSpace> codomain_;
  unsigned parity_;
  Matrix matrix_;
};

/// Parity of a nonzero homogeneous endomorphism matrix of the superspace.
std::optional<unsigned> matrix_parity(const SuperSpace& space, const Matrix& m);

/// Even supersymmetric bilinear form b with q0(x) = b(x,x)/2 on the even block.
///
/// b restricted to the even block is the polar of q0; b is symmetric there,
/// alternating on the odd block, and the two blocks are orthogonal.
class QuadraticSuperform {
 public:
  QuadraticSuperform(const SuperSpace& space, Matrix polar);

  const Matrix& polar() const noexcept { return b_; }
  Residue b(std::size_t i, std::size_t j) const { return b_.at(i, j); }
  Residue b(std::span<const Residue> x, std::span<const Residue> y) const;
  /// q0 on an even vector.
  Residue q0(std::span<const Residue> x) const;
  /// Upper-triangular coefficient table of q0: q0(x) = sum_{i<=j} Q_ij x_i x_j.
  Matrix q0_coefficients() const;
  /// q0 regular and b nondegenerate on the odd block.
  bool regular() const;

 private:
  std::size_t even_dim_;
  Matrix b_;
};

/// Incremental Gaussian elimination keeping a fully reduced row echelon form.
///
/// Pivot rows vanish at every other pivot column, so reducing a new row only
/// needs the row's original values at the pivot columns.
class RowReducer {
 public:
  RowReducer(const PrimeField& field, std::size_t columns);

  std::size_t columns() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivot_cols_.size(); }
  bool full() const noexcept { return rank() == cols_; }

  /// Returns true if the row was independent of the rows seen so far.
  bool add(std::span<const Residue> row);
  /// Entries may repeat an index; values are summed.
  bool add_sparse(std::span<const SparseEntry> row);
  bool contains(std::span<const Residue> row) const;

  /// Rows of the reduced echelon form, sorted by pivot column.
  std::vector<Vector> row_basis() const;
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }
  /// Null space of the accumulated rows, in reduced row echelon form.
  std::vector<Vector> kernel_basis() const;

 private:
  bool insert_reduced(std::vector<std::uint64_t>& acc);
  void reduce_into(std::vector<std::uint64_t>& acc) const;

  PrimeField field_;
  std::size_t cols_;
  std::vector<Vector> rows_;          // pivot rows (insertion order)
  std::vector<SparseVector> sparse_rows_;  // same rows, nonzeros only
  std::vector<std::size_t> pivot_cols_;  // pivot column of rows_[k]
  std::vector<std::int64_t> pivot_of_col_;  // -1 if not a pivot
  mutable std::vector<std::uint64_t> scratch_;
};

/// Reduced row echelon form of a list of vectors (zero rows dropped).
std::vector<Vector> rref(const PrimeField& field, const std::vector<Vector>& rows,
                         std::size_t cols);
std::vector<Vector> kernel(const Matrix& a);
std::size_t rank(const Matrix& a);

/// A subspace with a fixed basis; coordinates are taken w.r.t. that basis.
class Subspace {
 public:
  Subspace(const PrimeField& field, std::size_t ambient_dim, std::vector<Vector> basis);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const PrimeField& field() const noexcept { return field_; }

  bool contains(std::span<const Residue> v) const { return coordinates(v).has_value(); }
  std::optional<Vector> coordinates(std::span<const Residue> v) const;
  std::optional<Vector> coordinates(const SparseVector& v) const;
  /// Throws std::logic_error with `what` if v is not in the subspace.
  Vector require_coordinates(std::span<const Residue> v, const std::string& what) const;
  Vector combine(std::span<const Residue> coords) const;

  /// Spaces are equal as sets (bases may differ).
  bool same_span(const Subspace& other) const;
  bool contains_span(const Subspace& other) const;

 private:
  std::optional<Vector> finish(Vector reduced_coords, const SparseVector* sparse,
                               std::span<const Residue> dense) const;

  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<SparseVector> echelon_;     // rref rows
  std::vector<std::size_t> pivots_;
  Matrix to_basis_;                       // echelon coords -> basis coords
};

/// sigma_{x,y}(z) = (-1)^{|y||z|} b(x,z) y - (-1)^{|x|(|y|+|z|)} b(y,z) x.
GradedLinearMap sigma(std::span<const Residue> x, std::span<const Residue> y,
                      const QuadraticSuperform& form,
                      const std::shared_ptr<const SuperSpace>& space);

/// gamma_{u,v}(w) = <u|w> v + <v|w> u on a 2-dimensional symplectic space.
Matrix gamma(std::span<const Residue> u, std::span<const Residue> v, const Matrix& alternating);

/// b(d x, y) + (-1)^{|d||x|} b(x, d y) = 0 on all basis pairs.
bool osp_membership(const GradedLinearMap& d, const QuadraticSuperform& form);

}  // namespace supersquare

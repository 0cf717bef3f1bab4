#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supersquare/algebra.hpp"

namespace supersquare {

/// Superalgebra with a sparse bracket table; the basis is even-first.
///
/// Construction does not check the axioms; use check_super_jacobi.
class LieSuperalgebra {
 public:
  LieSuperalgebra(const PrimeField& field, SuperSpace space, std::vector<SparseVector> bracket,
                  std::string provenance);

  const PrimeField& field() const noexcept { return field_; }
  const SuperSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  unsigned parity(std::size_t i) const noexcept { return space_.parity(i); }
  const std::string& provenance() const noexcept { return provenance_; }

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<SparseVector>& table() const noexcept { return table_; }
  Vector bracket(std::span<const Residue> x, std::span<const Residue> y) const;
  /// [e_i, y]
  Vector bracket_basis(std::size_t i, std::span<const Residue> y) const;
  /// Matrix of ad_{e_i}.
  Matrix ad(std::size_t i) const;

  bool operator==(const LieSuperalgebra& other) const {
    return field_ == other.field_ && space_ == other.space_ && table_ == other.table_;
  }

 private:
  PrimeField field_;
  SuperSpace space_;
  std::vector<SparseVector> table_;  // [e_i, e_j] at i * dim + j
  std::string provenance_;
};

/// Collects brackets on a basis given in construction order, then sorts it even-first.
class BracketBuilder {
 public:
  BracketBuilder(const PrimeField& field, std::vector<std::string> labels, std::vector<unsigned> parity);

  std::size_t dim() const noexcept { return labels_.size(); }
  unsigned parity(std::size_t i) const { return parity_.at(i); }
  /// [e_i, e_j] = value (construction-order indices; repeated indices are summed).
  void set(std::size_t i, std::size_t j, SparseVector value);
  /// Sets [e_i, e_j] and the reverse bracket by super-anticommutativity.
  void set_pair(std::size_t i, std::size_t j, const SparseVector& value);
  /// Canonical position of construction index i.
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  LieSuperalgebra finish(const std::string& provenance) const;

 private:
  PrimeField field_;
  std::vector<std::string> labels_;
  std::vector<unsigned> parity_;
  std::vector<std::size_t> perm_;
  std::vector<SparseVector> table_;
};

/// Normalizes a list of (index, value) pairs: sorted, merged, zeros dropped.
SparseVector normalize(const PrimeField& f, std::vector<SparseEntry> entries);
SparseVector normalize_signed(const PrimeField& f, std::vector<std::pair<std::uint32_t, std::int64_t>> entries);

struct JacobiReport {
  std::size_t parity_failures = 0;
  std::size_t anticommutativity_failures = 0;
  std::size_t jacobi_failures = 0;
  std::string witness;
  bool pass() const { return parity_failures + anticommutativity_failures + jacobi_failures == 0; }
  std::size_t failures() const { return parity_failures + anticommutativity_failures + jacobi_failures; }
};

/// Parity additivity, super-anticommutativity on all pairs, then the graded
/// Jacobi sum on basis triples i <= j <= k.
JacobiReport check_super_jacobi(const LieSuperalgebra& l);

/// A vector subspace of L recorded by an echelon basis of homogeneous vectors.
struct LieSubspace {
  std::vector<Vector> basis;
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::size_t dim() const { return basis.size(); }
  std::string superdim() const { return std::to_string(even_dim) + "|" + std::to_string(odd_dim); }
};

LieSubspace derived_subalgebra(const LieSuperalgebra& l);
LieSubspace center(const LieSuperalgebra& l);
/// Smallest ideal containing the seed. Throws on a zero seed.
LieSubspace ideal_closure(const LieSuperalgebra& l, std::span<const Residue> seed);
/// [L, I] is contained in I.
bool is_ideal(const LieSuperalgebra& l, const LieSubspace& i);

/// Restriction of the bracket to a subalgebra, on the given basis.
LieSuperalgebra restrict_to(const LieSuperalgebra& l, const LieSubspace& sub, const std::string& provenance);

struct SimplicityVerdict {
  bool probably_simple = false;
  std::string reason;          // "center", "derived", "ideal" when not simple
  std::size_t witness_dim = 0;  // dimension of the proper ideal found
};

/// Sound for "not simple"; "probably simple" after closures from every basis
/// vector and `trials` random homogeneous vectors.
SimplicityVerdict probe_simplicity(const LieSuperalgebra& l, std::size_t trials = 25,
                                   std::uint64_t seed = 20240101);

struct IsomorphismReport {
  bool pass = false;
  std::string reason;
};

/// F maps A to B (columns are images of A's basis, written in B's basis).
IsomorphismReport check_isomorphism(const Matrix& f, const LieSuperalgebra& a, const LieSuperalgebra& b);

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b);

/// Lie superalgebra spanned by homogeneous endomorphisms of a superspace.
///
/// The bracket is the supercommutator; closure is checked and structure
/// constants are read off in the given basis.
class MatrixLieSuperalgebra {
 public:
  /// Basis must be even-first; parities are those of the matrices.
  MatrixLieSuperalgebra(const PrimeField& field, SuperSpace module, std::vector<Matrix> basis,
                        std::vector<std::string> labels, const std::string& provenance);

  const SuperSpace& module() const noexcept { return module_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const Matrix& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  unsigned parity(std::size_t i) const { return lie_.parity(i); }
  const LieSuperalgebra& lie() const noexcept { return lie_; }

  std::optional<Vector> coordinates(const Matrix& m) const;
  Vector require_coordinates(const Matrix& m, const std::string& what) const;
  Matrix combine(std::span<const Residue> coords) const;

 private:
  PrimeField field_;
  SuperSpace module_;
  std::vector<Matrix> basis_;
  Subspace span_;
  LieSuperalgebra lie_;
};

/// Supercommutator of homogeneous matrices of parities pa, pb.
Matrix supercommutator(const Matrix& a, unsigned pa, const Matrix& b, unsigned pb);

}  // namespace supersquare

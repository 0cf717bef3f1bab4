#pragma once

#include <string>
#include <vector>

#include "supersquare/jordan.hpp"

namespace supersquare {

enum class TripleKind { orthogonal, symplectic, orthosymplectic };

std::string to_string(TripleKind k);

/// A superspace with a bilinear form and a triple product [xyz], stored as
/// sparse values on basis triples.
class TripleSystem {
 public:
  TripleSystem(TripleKind kind, std::string name, const PrimeField& field, SuperSpace space,
               std::vector<Degree> degrees, Matrix form, std::vector<SparseVector> product);

  TripleKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const PrimeField& field() const noexcept { return field_; }
  const SuperSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  unsigned parity(std::size_t i) const noexcept { return space_.parity(i); }
  const std::vector<Degree>& degrees() const noexcept { return degrees_; }
  const Matrix& form() const noexcept { return form_; }
  Residue form(std::size_t x, std::size_t y) const { return form_.at(x, y); }
  const SparseVector& triple(std::size_t x, std::size_t y, std::size_t z) const {
    return product_[(x * dim() + y) * dim() + z];
  }
  const std::vector<SparseVector>& table() const noexcept { return product_; }
  /// d_{x,y} = [x y .]
  Matrix operator_matrix(std::size_t x, std::size_t y) const;
  GradedProduct graded_product() const;

  bool operator==(const TripleSystem& o) const {
    return kind_ == o.kind_ && field_ == o.field_ && space_ == o.space_ && form_ == o.form_ && product_ == o.product_;
  }

 private:
  TripleKind kind_;
  std::string name_;
  PrimeField field_;
  SuperSpace space_;
  std::vector<Degree> degrees_;
  Matrix form_;
  std::vector<SparseVector> product_;
};

/// Derivations of a triple system realized as matrices on T, with their degrees.
struct TripleDerivations {
  MatrixLieSuperalgebra algebra;
  std::vector<Degree> degree;
};

/// Span of the d_{x,y}, even first, with degrees.
TripleDerivations inner_derivations(const TripleSystem& t);
/// Full derivation algebra, solved per degree with inder as a verified lower bound.
TripleDerivations derivations(const TripleSystem& t, const TripleDerivations& inder);

/// D[uvw] = [Du v w] + (-1)^{|D||u|}[u Dv w] + (-1)^{|D|(|u|+|v|)}[u v Dw] on basis triples.
bool is_triple_derivation(const TripleSystem& t, const Matrix& d, unsigned parity, std::string* witness = nullptr);

/// Axiom suite of the system's kind. (c) and (d) are checked on a basis of
/// inder T, which is enough by linearity.
AxiomReport verify_triple(const TripleSystem& t);

/// J0 / k1 for J = H3(C), p = 3. Orthogonal for an ordinary C, orthosymplectic for a super C.
///
/// Basis: i^(1) = class of e0 - e1, then i^_i(s); even first.
class JordanTriple {
 public:
  explicit JordanTriple(const JordanSuperalgebra& j);

  const TripleSystem& system() const noexcept { return system_; }
  const JordanSuperalgebra& jordan() const noexcept { return j_; }
  std::size_t hat_one() const { return index_.at(0); }
  std::size_t hat_iota(unsigned i, std::size_t s) const { return index_.at(1 + (i % 3) * j_.s().dim() + s); }
  /// Representative in J0 of basis element k.
  const Vector& lift(std::size_t k) const { return lift_.at(k); }
  /// Class of a trace-zero element; throws otherwise.
  Vector project(std::span<const Residue> x) const;
  /// The map induced on J0/k1 by an endomorphism of J that kills 1 and preserves J0.
  Matrix induced(const Matrix& d) const;

 private:
  JordanSuperalgebra j_;
  std::vector<std::size_t> index_;
  std::vector<Vector> lift_;
  TripleSystem system_;
};

JordanTriple build_tjo(const JordanSuperalgebra& j);

/// The symplectic system on k + J + J + k for an ordinary J.
///
/// Basis order: alpha, a-block (J basis), b-block (J basis), beta.
struct SymplecticJordanTriple {
  TripleSystem system;
  std::size_t jdim = 0;
  std::size_t alpha() const { return 0; }
  std::size_t a(std::size_t k) const { return 1 + k; }
  std::size_t b(std::size_t k) const { return 1 + jdim + k; }
  std::size_t beta() const { return 1 + 2 * jdim; }
};

SymplecticJordanTriple build_tjs(const JordanSuperalgebra& j);

/// x x y = 2 x o y - t(x) y - t(y) x + s(x,y) 1 with s(x,y) = t(x)t(y) - t(x o y),
/// the linearization of the adjoint x -> x^2 - t(x) x + s(x) 1.
Vector cross_product(const JordanSuperalgebra& j, std::span<const Residue> x, std::span<const Residue> y);

}  // namespace supersquare

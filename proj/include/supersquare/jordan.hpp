#pragma once

#include <string>
#include <vector>

#include "supersquare/derivations.hpp"
#include "supersquare/magic_square.hpp"

namespace supersquare {

/// H3(C) built from the para-Hurwitz algebra S of C, on e0, e1, e2 and iota_i(S).
///
/// Basis is even-first: e_i, then iota_i(a) for even a, then odd a. Degrees
/// carry the Z2 x Z2 grading in bits 1 and 2: iota_0 -> (1,0), iota_1 -> (0,1),
/// iota_2 -> (1,1).
class JordanSuperalgebra {
 public:
  JordanSuperalgebra(CompositionSuperalgebra s, std::string name);

  const std::string& name() const noexcept { return name_; }
  const CompositionSuperalgebra& s() const noexcept { return s_; }
  const SuperAlgebra& algebra() const noexcept { return algebra_; }
  const PrimeField& field() const noexcept { return s_.field(); }
  const SuperSpace& space() const noexcept { return algebra_.space(); }
  std::shared_ptr<const SuperSpace> space_ptr() const noexcept { return algebra_.space_ptr(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  unsigned parity(std::size_t i) const noexcept { return algebra_.parity(i); }

  std::size_t e(unsigned i) const { return index_.at(i % 3); }
  std::size_t iota(unsigned i, std::size_t a) const { return index_.at(3 + (i % 3) * s_.dim() + a); }
  const std::vector<Degree>& degrees() const noexcept { return degrees_; }
  /// Z2 x Z2 part of the degree of basis element k.
  unsigned quarter(std::size_t k) const { return degrees_.at(k).bits >> 1; }

  Vector multiply(std::span<const Residue> x, std::span<const Residue> y) const { return algebra_.multiply(x, y); }
  /// Multiplication operator L_x.
  Matrix left(std::span<const Residue> x) const { return algebra_.left(x); }
  Vector unit() const;
  /// t(e_i) = 1, t(iota_i(a)) = 0.
  const Vector& trace() const noexcept { return trace_; }

 private:
  CompositionSuperalgebra s_;
  std::string name_;
  std::vector<std::size_t> index_;  // natural (e0 e1 e2, iota blocks) -> canonical
  std::vector<Degree> degrees_;
  Vector trace_;
  SuperAlgebra algebra_;
};

/// H3(C) for the catalog entry S (S1, S2, S4, S8, S12, S42).
JordanSuperalgebra build_h3(const CompositionSuperalgebra& s);

/// t(x o y) on basis pairs.
Matrix trace_form(const JordanSuperalgebra& j);

/// Supercommutativity of the product on basis pairs.
bool is_supercommutative(const JordanSuperalgebra& j);

/// d(x o y) = d(x) o y + (-1)^{|d||x|} x o d(y) on basis pairs.
bool is_derivation(const JordanSuperalgebra& j, const Matrix& d, unsigned parity);

/// der J with its degree per basis element.
struct JordanDerivations {
  MatrixLieSuperalgebra algebra;
  std::vector<Degree> degree;
};

JordanDerivations compute_der(const JordanSuperalgebra& j);

/// D_i(a) = 2[L_{iota_i(a)}, L_{e_{i+1}}] for a basis element a of S.
Matrix d_inner(const JordanSuperalgebra& j, unsigned i, std::size_t a);
/// D_{(d0,d1,d2)}: kills the e_i, iota_i(a) -> iota_i(d_i a).
Matrix d_triality(const JordanSuperalgebra& j, const TrialityElement& t);

/// Span of [L_x, L_y] over basis pairs, in the coordinates of der J.
LieSubspace inner_der(const JordanSuperalgebra& j, const MatrixLieSuperalgebra& der);

/// Phi: g(S1, S) -> der J; columns are images of the basis of g in der J coordinates.
Matrix phi_isomorphism(const MagicSquare& g, const JordanSuperalgebra& j, const MatrixLieSuperalgebra& der);

}  // namespace supersquare

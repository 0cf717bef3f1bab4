#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "supersquare/composition.hpp"
#include "supersquare/liesuper.hpp"

namespace supersquare {

/// (d0, d1, d2) acting on S, all of one parity.
struct TrialityElement {
  std::array<Matrix, 3> d;
  unsigned parity = 0;
};

/// l_x(y) = x . y
Matrix left_multiplication(const CompositionSuperalgebra& s, std::size_t x);
/// r_x(y) = (-1)^{|x||y|} y . x
Matrix right_multiplication(const CompositionSuperalgebra& s, std::size_t x);

/// Each d_i is orthosymplectic and d0(x.y) = d1(x).y + (-1)^{i|x|} x.d2(y) on basis pairs.
bool is_triality(const CompositionSuperalgebra& s, const TrialityElement& t);

/// (d2, d0, d1)
TrialityElement theta(const TrialityElement& t);

/// t_{x,y} = (sigma_{x,y}, b(x,y)/2 - r_x l_y, b(x,y)/2 - l_x r_y) for basis vectors x, y.
/// Throws std::logic_error if the triple is not in tri(S).
TrialityElement t_element(const CompositionSuperalgebra& s, std::size_t x, std::size_t y);

/// tri(S) realized on S + S + S by block diagonal matrices.
class TrialityAlgebra {
 public:
  TrialityAlgebra(CompositionSuperalgebra s, std::vector<TrialityElement> basis);

  const CompositionSuperalgebra& composition() const noexcept { return s_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const TrialityElement& element(std::size_t i) const { return basis_.at(i); }
  const LieSuperalgebra& lie() const noexcept { return matrices_.lie(); }
  unsigned parity(std::size_t i) const { return basis_.at(i).parity; }
  std::string superdim() const { return lie().space().superdim(); }

  Matrix embed(const TrialityElement& t) const;
  std::optional<Vector> coordinates(const TrialityElement& t) const;
  Vector require_coordinates(const TrialityElement& t, const std::string& what) const;
  TrialityElement combine(std::span<const Residue> coords) const;
  /// theta in this basis (columns are images of basis elements).
  Matrix theta_matrix() const;
  /// Coordinates of theta^i(t_{x,y}); cached per (i, x, y).
  const Vector& t_coordinates(unsigned i, std::size_t x, std::size_t y) const;
  /// dim of span{theta^i t_{x,y}}.
  std::size_t t_span_dim() const;

 private:
  static std::vector<std::size_t> slot_permutation(const CompositionSuperalgebra& s);
  static SuperSpace module_space(const CompositionSuperalgebra& s, const std::vector<std::size_t>& perm);
  static std::vector<Matrix> embed_all(const CompositionSuperalgebra& s, const std::vector<TrialityElement>& b,
                                       const std::vector<std::size_t>& perm);

  CompositionSuperalgebra s_;
  std::vector<TrialityElement> basis_;
  std::vector<std::size_t> perm_;  // slot * n + k -> module index
  MatrixLieSuperalgebra matrices_;
  mutable std::vector<std::optional<Vector>> t_cache_;
};

/// The joined kernel over (d0, d1, d2), per parity, even solutions first.
TrialityAlgebra compute_tri(const CompositionSuperalgebra& s);

}  // namespace supersquare

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supersquare/algebra.hpp"

namespace supersquare {

enum class HurwitzKind { unit, binarion, quaternion, octonion };

/// Composition superalgebra: a product and a regular quadratic superform.
///
/// Hurwitz superalgebras carry their unit; symmetric ones (para-Hurwitz and
/// Petersson twists) carry none and are flagged `symmetric`.
class CompositionSuperalgebra {
 public:
  CompositionSuperalgebra(std::string name, SuperAlgebra algebra, QuadraticSuperform form,
                          std::optional<Vector> unit, bool symmetric);

  const std::string& name() const noexcept { return name_; }
  const SuperAlgebra& algebra() const noexcept { return algebra_; }
  const QuadraticSuperform& form() const noexcept { return form_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }
  bool symmetric() const noexcept { return symmetric_; }

  const PrimeField& field() const noexcept { return algebra_.field(); }
  const SuperSpace& space() const noexcept { return algebra_.space(); }
  std::shared_ptr<const SuperSpace> space_ptr() const noexcept { return algebra_.space_ptr(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  unsigned parity(std::size_t i) const noexcept { return algebra_.parity(i); }

  std::span<const Residue> product(std::size_t i, std::size_t j) const {
    return algebra_.product(i, j);
  }
  Vector multiply(std::span<const Residue> x, std::span<const Residue> y) const {
    return algebra_.multiply(x, y);
  }
  Residue b(std::size_t i, std::size_t j) const { return form_.b(i, j); }
  Residue b(std::span<const Residue> x, std::span<const Residue> y) const { return form_.b(x, y); }

 private:
  std::string name_;
  SuperAlgebra algebra_;
  QuadraticSuperform form_;
  std::optional<Vector> unit_;
  bool symmetric_;
};

/// k, k x k, Mat2(k), or the split octonions as Zorn vector matrices.
CompositionSuperalgebra build_hurwitz(HurwitzKind kind, const PrimeField& field);
/// Throws CharacteristicError unless p = 3.
CompositionSuperalgebra build_b12(const PrimeField& field);
CompositionSuperalgebra build_b42(const PrimeField& field);
/// Same tables without the characteristic guard; used to show the axioms fail off p = 3.
CompositionSuperalgebra build_b12_unchecked(const PrimeField& field);
CompositionSuperalgebra build_b42_unchecked(const PrimeField& field);

/// x -> b(x,1)1 - x.
Matrix standard_involution(const CompositionSuperalgebra& c);

/// x . y = phi(xbar) phi^2(ybar); phi must be an even automorphism of order dividing 3.
CompositionSuperalgebra petersson(const CompositionSuperalgebra& c, const Matrix& phi,
                                  const std::string& name);
CompositionSuperalgebra para_hurwitz(const CompositionSuperalgebra& c, const std::string& name);
/// The twist of B(1,2) by phi(1)=1, phi(v)=v, phi(w)=lambda v + w.
CompositionSuperalgebra build_s12_lambda(const PrimeField& field, Residue lambda);

/// Catalog names: S1 S2 S4 S8 S12 S42; S12_<l> selects the lambda twist.
CompositionSuperalgebra catalog(const std::string& name, const PrimeField& field);
/// The Hurwitz superalgebra whose para-Hurwitz algebra is the catalog entry.
CompositionSuperalgebra hurwitz_of(const std::string& name, const PrimeField& field);
const std::vector<std::string>& catalog_names();

struct AxiomResult {
  std::string id;
  bool pass = true;
  std::string witness;  // first failing tuple of basis labels
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool pass() const;
  const AxiomResult* find(const std::string& id) const;
};

/// Multiplicativity of the norm in polarized form, checked exhaustively on basis
/// tuples, plus unit and associativity of the form where they apply.
AxiomReport verify_composition(const CompositionSuperalgebra& s);

/// Copy with the polar form multiplied by c (used as a mutation control).
CompositionSuperalgebra with_scaled_form(const CompositionSuperalgebra& s, Residue c);

}  // namespace supersquare

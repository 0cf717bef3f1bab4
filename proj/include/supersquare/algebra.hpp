#pragma once

#include <memory>
#include <string>
#include <vector>

#include "supersquare/superlinalg.hpp"

namespace supersquare {

/// Finite-dimensional superalgebra given by a dense structure-constant tensor.
///
/// product(i, j) is the coordinate vector of e_i e_j.
class SuperAlgebra {
 public:
  SuperAlgebra(const PrimeField& field, std::shared_ptr<const SuperSpace> space, Vector table);

  const PrimeField& field() const noexcept { return field_; }
  const SuperSpace& space() const noexcept { return *space_; }
  std::shared_ptr<const SuperSpace> space_ptr() const noexcept { return space_; }
  std::size_t dim() const noexcept { return n_; }
  unsigned parity(std::size_t i) const noexcept { return space_->parity(i); }

  std::span<const Residue> product(std::size_t i, std::size_t j) const {
    return {table_.data() + (i * n_ + j) * n_, n_};
  }
  const Vector& table() const noexcept { return table_; }
  Vector multiply(std::span<const Residue> x, std::span<const Residue> y) const;
  /// z -> x z
  Matrix left(std::span<const Residue> x) const;
  /// z -> z x
  Matrix right(std::span<const Residue> x) const;

  /// The product table respects parity.
  bool parity_additive() const;

  bool operator==(const SuperAlgebra& other) const {
    return field_ == other.field_ && *space_ == *other.space_ && table_ == other.table_;
  }

 private:
  PrimeField field_;
  std::shared_ptr<const SuperSpace> space_;
  std::size_t n_;
  Vector table_;
};

/// Coordinate vector of basis element i.
Vector unit_vector(std::size_t dim, std::size_t i);

}  // namespace supersquare

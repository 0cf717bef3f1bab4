#include "supersquare/algebra.hpp"

namespace supersquare {

SuperAlgebra::SuperAlgebra(const PrimeField& field, std::shared_ptr<const SuperSpace> space,
                           Vector table)
    : field_(field), space_(std::move(space)), n_(space_->dim()), table_(std::move(table)) {
  if (table_.size() != n_ * n_ * n_) throw DimensionError("superalgebra: table size");
  for (auto v : table_) {
    if (v >= field_.characteristic()) throw FieldError("superalgebra: entry is not a residue");
  }
}

Vector SuperAlgebra::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
  Vector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      axpy(field_, field_.mul(x[i], y[j]), product(i, j), out);
    }
  }
  return out;
}

Matrix SuperAlgebra::left(std::span<const Residue> x) const {
  Matrix m(field_, n_, n_);
  for (std::size_t z = 0; z < n_; ++z) {
    Vector col(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) axpy(field_, x[i], product(i, z), col);
    for (std::size_t r = 0; r < n_; ++r) m.at(r, z) = col[r];
  }
  return m;
}

Matrix SuperAlgebra::right(std::span<const Residue> x) const {
  Matrix m(field_, n_, n_);
  for (std::size_t z = 0; z < n_; ++z) {
    Vector col(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) axpy(field_, x[i], product(z, i), col);
    for (std::size_t r = 0; r < n_; ++r) m.at(r, z) = col[r];
  }
  return m;
}

bool SuperAlgebra::parity_additive() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      auto p = product(i, j);
      for (std::size_t k = 0; k < n_; ++k) {
        if (p[k] != 0 && parity(k) != (parity(i) ^ parity(j))) return false;
      }
    }
  return true;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace supersquare

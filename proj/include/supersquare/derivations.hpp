#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "supersquare/superlinalg.hpp"

namespace supersquare {

/// Degree in Z x (Z2)^k: an integer part that adds and bits that XOR.
/// Bit 0 is the parity.
struct Degree {
  int z = 0;
  unsigned bits = 0;

  unsigned parity() const noexcept { return bits & 1u; }
  friend Degree operator+(Degree a, Degree b) { return {a.z + b.z, a.bits ^ b.bits}; }
  friend Degree operator-(Degree a, Degree b) { return {a.z - b.z, a.bits ^ b.bits}; }
  /// Even degrees first.
  friend auto operator<=>(Degree a, Degree b) {
    if (auto c = a.parity() <=> b.parity(); c != 0) return c;
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.bits <=> b.bits;
  }
  friend bool operator==(Degree a, Degree b) = default;
};

/// A graded multilinear product of arity 2 or 3 on a superspace.
struct GradedProduct {
  PrimeField field;
  SuperSpace space;
  std::vector<Degree> degrees;      // per basis element; parity bit must agree with space
  unsigned arity = 2;
  std::vector<SparseVector> table;  // product of basis tuple (x1, ..., xa) at row-major index

  std::size_t dim() const { return space.dim(); }
  const SparseVector& at(std::size_t x, std::size_t y) const { return table[x * dim() + y]; }
  const SparseVector& at(std::size_t x, std::size_t y, std::size_t z) const {
    return table[(x * dim() + y) * dim() + z];
  }
  /// Throws if some product leaves its degree.
  void check_graded() const;
};

struct GradedDerivations {
  std::vector<Matrix> basis;   // even first, grouped by shift
  std::vector<Degree> shift;   // per basis element
};

/// Superderivations D(P(x1..xa)) = sum_j (-1)^{|D|(|x1|+..+|x_{j-1}|)} P(..,D x_j,..),
/// solved one degree shift at a time.
///
/// `lower_bound(s)` is the dimension of a subspace of derivations of shift s
/// known in advance (inner derivations, say). Elimination for that shift stops
/// once the kernel has shrunk to that size, which is then exact.
GradedDerivations graded_derivations(const GradedProduct& p,
                                     const std::function<std::size_t(Degree)>& lower_bound = {});

/// All shifts deg(k) - deg(m) occurring between basis elements, sorted.
std::vector<Degree> degree_shifts(const std::vector<Degree>& degrees);

}  // namespace supersquare

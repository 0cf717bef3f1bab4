#pragma once

#include <memory>
#include <string>
#include <vector>

#include "supersquare/triality.hpp"

namespace supersquare {

/// Where the summands of g(S,S') sit in its even-first basis.
///
/// Natural order is tri(S), tri(S'), then iota_0, iota_1, iota_2 with
/// row-major S (x) S' inside each block; `perm` sends natural to canonical.
struct MagicSquareDecomposition {
  std::size_t tri_dim = 0;
  std::size_t tri2_dim = 0;
  std::size_t n = 0;   // dim S
  std::size_t n2 = 0;  // dim S'
  std::vector<std::size_t> perm;

  std::size_t tri(std::size_t k) const { return perm.at(k); }
  std::size_t tri2(std::size_t k) const { return perm.at(tri_dim + k); }
  std::size_t iota(unsigned i, std::size_t x, std::size_t x2) const {
    return perm.at(tri_dim + tri2_dim + (i * n + x) * n2 + x2);
  }
};

struct MagicSquare {
  std::shared_ptr<const TrialityAlgebra> tri;
  std::shared_ptr<const TrialityAlgebra> tri2;
  LieSuperalgebra lie;
  MagicSquareDecomposition decomposition;
};

MagicSquare magic_square(std::shared_ptr<const TrialityAlgebra> tri, std::shared_ptr<const TrialityAlgebra> tri2);
MagicSquare magic_square(const CompositionSuperalgebra& s, const CompositionSuperalgebra& s2);

/// g(S,S') -> g(S',S): tri(S) and tri(S') swap places, iota_i(x (x) x') -> (-1)^{|x||x'|} iota_i(x' (x) x).
Matrix flip_isomorphism(const MagicSquare& a, const MagicSquare& b);

/// One cell of the supersquare over GF(3) with its frozen superdimension.
struct TableEntry {
  std::string row;
  std::string col;
  std::size_t even = 0;
  std::size_t odd = 0;
  std::string name;
};

/// The 21 cells on and above the diagonal, rows S1 S2 S4 S8 S12 S42.
const std::vector<TableEntry>& supersquare_table();

}  // namespace supersquare

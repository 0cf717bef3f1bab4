#pragma once

#include <string>
#include <vector>

#include "supersquare/triples.hpp"

namespace supersquare {

/// V = span{v, w} with <v|w> = 1. sp(V) has basis gamma_{v,v}, gamma_{v,w}, gamma_{w,w}.
Matrix sp_basis_matrix(const PrimeField& f, unsigned k);
/// Coordinates of an element of sp(V) (2x2 matrix) in the gamma basis; throws if not in sp(V).
Vector sp_coordinates(const PrimeField& f, const Matrix& m);

/// Where sp(V), s and V (x) T sit in the even-first basis of g(T, s).
struct TripleLieLayout {
  std::size_t s_dim = 0;
  std::size_t t_dim = 0;
  bool has_v = true;  // false for the deleted algebra g~(T, s)
  std::vector<std::size_t> perm;

  std::size_t sp(unsigned k) const { return perm.at(k); }
  std::size_t s(std::size_t k) const { return perm.at((has_v ? 3 : 0) + k); }
  /// u = 0 for v, 1 for w.
  std::size_t vt(unsigned u, std::size_t x) const { return perm.at(3 + s_dim + u * t_dim + x); }
  /// Odd part T of g~(T, s).
  std::size_t t(std::size_t x) const { return perm.at(s_dim + x); }
};

struct TripleLie {
  LieSuperalgebra lie;
  TripleLieLayout layout;
};

/// g(T, s) = (sp(V) + s) + V (x) T with [u(x)x, v(x)y] = -(x|y) gamma_{u,v} + <u|v> d_{x,y}.
/// s must consist of derivations of T and contain inder T.
TripleLie lie_from_orthogonal(const TripleSystem& t, const MatrixLieSuperalgebra& s);
/// Same layout, all even, with +(x|y) gamma_{u,v}.
TripleLie lie_from_symplectic(const TripleSystem& t, const MatrixLieSuperalgebra& s);
/// V is odd: |u (x) x| = 1 + |x|, [d, u(x)x] = (-1)^{|d|} u (x) d(x), and the
/// V (x) T bracket carries (-1)^{|x|}. p = 3.
TripleLie lie_from_orthosymplectic(const TripleSystem& t, const MatrixLieSuperalgebra& s);
/// g~(T, s) = s + T with T odd and [x, y] = d_{x,y}. p = 3.
TripleLie superalgebra_from_symplectic(const TripleSystem& t, const MatrixLieSuperalgebra& s);

/// Recovers the form and triple product from g(T, s) built by one of the
/// three V-functors. `model` supplies kind, space and degrees.
TripleSystem extract_triple(const TripleLie& g, const TripleSystem& model);

/// der J acting on J0/k1, in the same basis order as der J. Throws if the action is not faithful.
MatrixLieSuperalgebra induced_derivations(const JordanTriple& t, const MatrixLieSuperalgebra& der);

/// Psi: g(S12, S) -> g(J) = g(T_J^o, der J) (orthosymplectic version for super S).
/// Columns are images of the basis of g in the basis of `target`. `sign` picks the
/// super sign convention on the V (x) T block: u (x) s goes to (-1)^{sign |s|} u (x) s^.
Matrix psi_isomorphism(const MagicSquare& g, const JordanTriple& tj, const MatrixLieSuperalgebra& der,
                       const TripleLie& target, unsigned sign = 0);

/// Everything needed to test Psi for one S.
struct PsiCheck {
  std::string name;
  std::string source_dims;
  std::string target_dims;
  unsigned sign = 0;
  IsomorphismReport report;
};
/// Builds g(S12, S), J, der J, T_J^o(s), g(J) and checks Psi; for super S both sign conventions are tried.
PsiCheck check_psi(const CompositionSuperalgebra& s);

/// g~(T_J^s, der T_J^s) against g(S_r, S42), and the deletion bookkeeping against g(S_r, S4), g(S_r, S8).
struct DeletionReport {
  unsigned r = 0;
  std::vector<AxiomResult> results;
  bool pass() const;
};
DeletionReport deletion_consistency(unsigned r, const PrimeField& field);

}  // namespace supersquare

#include "supersquare/triple_lie.hpp"

#include <map>
#include <stdexcept>

namespace supersquare {

namespace {

// Entries of gamma_k as integers; column c is the image of basis vector c.
constexpr int kGamma[3][2][2] = {
    {{0, 2}, {0, 0}},   // gamma_{v,v}: w -> 2v
    {{-1, 0}, {0, 1}},  // gamma_{v,w}: v -> -v, w -> w
    {{0, 0}, {-2, 0}},  // gamma_{w,w}: v -> -2w
};

}  // namespace

Matrix sp_basis_matrix(const PrimeField& f, unsigned k) {
  Matrix m(f, 2, 2);
  for (unsigned r = 0; r < 2; ++r)
    for (unsigned c = 0; c < 2; ++c) m.at(r, c) = f.reduce(kGamma[k][r][c]);
  return m;
}

namespace {

// <u|u'> for u, u' in {v, w}
Residue symp(const PrimeField& f, unsigned u, unsigned u2) {
  if (u == u2) return 0;
  return u == 0 ? 1 : f.neg(1);
}

// gamma_{u,u'} in the gamma basis
unsigned gamma_index(unsigned u, unsigned u2) { return u + u2; }

enum class Functor { orthogonal, symplectic, orthosymplectic };

void require_derivations(const TripleSystem& t, const MatrixLieSuperalgebra& s) {
  if (s.module().dim() != t.dim()) throw DimensionError("s does not act on " + t.name());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    std::string w;
    if (!is_triple_derivation(t, s.element(k), s.parity(k), &w)) {
      throw std::invalid_argument("element " + std::to_string(k) + " of s is not a derivation of " + t.name() +
                                  " at " + w);
    }
  }
}

// d_{x,y} in the coordinates of s for all basis pairs
std::vector<SparseVector> inner_coordinates(const TripleSystem& t, const MatrixLieSuperalgebra& s) {
  const std::size_t n = t.dim();
  std::vector<SparseVector> out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool any = false;
      for (std::size_t z = 0; z < n && !any; ++z) any = !t.triple(x, y, z).empty();
      if (!any) continue;
      auto c = s.coordinates(t.operator_matrix(x, y));
      if (!c) throw std::invalid_argument("s does not contain inder " + t.name());
      out[x * n + y] = to_sparse(*c);
    }
  return out;
}

// Matrix columns as sparse vectors.
std::vector<SparseVector> columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) cols[c].push_back({static_cast<std::uint32_t>(r), m.at(r, c)});
  return cols;
}

TripleLie build_with_v(const TripleSystem& t, const MatrixLieSuperalgebra& s, Functor kind) {
  const auto& f = t.field();
  const std::size_t n = t.dim();
  const std::size_t sd = s.dim();
  require_derivations(t, s);
  const auto dxy = inner_coordinates(t, s);

  std::vector<std::string> labels{"g_vv", "g_vw", "g_ww"};
  std::vector<unsigned> parity{0, 0, 0};
  for (std::size_t k = 0; k < sd; ++k) {
    labels.push_back(s.lie().space().label(k));
    parity.push_back(s.parity(k));
  }
  for (unsigned u = 0; u < 2; ++u)
    for (std::size_t x = 0; x < n; ++x) {
      labels.push_back(std::string(u == 0 ? "v" : "w") + "*" + t.space().label(x));
      const unsigned p = kind == Functor::orthogonal ? 1 : kind == Functor::symplectic ? 0 : (1 + t.parity(x)) % 2;
      parity.push_back(p);
    }
  auto S = [&](std::size_t k) { return 3 + k; };
  auto VT = [&](unsigned u, std::size_t x) { return 3 + sd + u * n + x; };

  BracketBuilder b(f, labels, parity);
  std::vector<Matrix> gm;
  for (unsigned k = 0; k < 3; ++k) gm.push_back(sp_basis_matrix(f, k));
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned c = a + 1; c < 3; ++c) {
      const Vector v = sp_coordinates(f, gm[a] * gm[c] - gm[c] * gm[a]);
      b.set_pair(a, c, to_sparse(v));
    }
  // sp(V) on V (x) T
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned u = 0; u < 2; ++u)
      for (std::size_t x = 0; x < n; ++x) {
        SparseVector out;
        for (unsigned r = 0; r < 2; ++r)
          if (gm[a].at(r, u) != 0) out.push_back({static_cast<std::uint32_t>(VT(r, x)), gm[a].at(r, u)});
        b.set_pair(a, VT(u, x), normalize(f, std::move(out)));
      }
  // s with s
  for (std::size_t k = 0; k < sd; ++k)
    for (std::size_t l = 0; l < sd; ++l) {
      SparseVector out;
      for (const auto& e : s.lie().bracket(k, l)) out.push_back({static_cast<std::uint32_t>(S(e.index)), e.value});
      b.set(S(k), S(l), std::move(out));
    }
  // s on V (x) T
  for (std::size_t k = 0; k < sd; ++k) {
    const auto cols = columns(s.element(k));
    const Residue sg = kind == Functor::orthosymplectic ? f.sign(s.parity(k)) : 1;
    for (unsigned u = 0; u < 2; ++u)
      for (std::size_t x = 0; x < n; ++x) {
        SparseVector out;
        for (const auto& e : cols[x]) out.push_back({static_cast<std::uint32_t>(VT(u, e.index)), f.mul(sg, e.value)});
        b.set_pair(S(k), VT(u, x), normalize(f, std::move(out)));
      }
  }
  // V (x) T with itself
  const Residue cform = kind == Functor::symplectic ? 1 : f.neg(1);
  for (unsigned u = 0; u < 2; ++u)
    for (std::size_t x = 0; x < n; ++x)
      for (unsigned u2 = 0; u2 < 2; ++u2)
        for (std::size_t y = 0; y < n; ++y) {
          const Residue eps = kind == Functor::orthosymplectic ? f.sign(t.parity(x)) : 1;
          std::vector<SparseEntry> out;
          const Residue fxy = f.mul(eps, f.mul(cform, t.form(x, y)));
          if (fxy != 0) out.push_back({gamma_index(u, u2), fxy});
          const Residue uu = f.mul(eps, symp(f, u, u2));
          if (uu != 0)
            for (const auto& e : dxy[x * n + y])
              out.push_back({static_cast<std::uint32_t>(S(e.index)), f.mul(uu, e.value)});
          b.set(VT(u, x), VT(u2, y), normalize(f, std::move(out)));
        }

  const char* what = kind == Functor::orthogonal ? "g_o(" : kind == Functor::symplectic ? "g_s(" : "g_os(";
  TripleLie out{b.finish(what + t.name() + ")"), {}};
  out.layout.s_dim = sd;
  out.layout.t_dim = n;
  out.layout.perm = b.permutation();
  return out;
}

}  // namespace

Vector sp_coordinates(const PrimeField& f, const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("sp(V): expected a 2x2 matrix");
  if (f.add(m.at(0, 0), m.at(1, 1)) != 0) throw std::invalid_argument("sp(V): trace is not zero");
  // m = a gamma_vv + b gamma_vw + c gamma_ww
  return {f.mul(m.at(0, 1), f.inv(2)), f.neg(m.at(0, 0)), f.mul(m.at(1, 0), f.inv(f.neg(2)))};
}

TripleLie lie_from_orthogonal(const TripleSystem& t, const MatrixLieSuperalgebra& s) {
  if (t.kind() != TripleKind::orthogonal) throw std::invalid_argument(t.name() + " is not orthogonal");
  return build_with_v(t, s, Functor::orthogonal);
}

TripleLie lie_from_symplectic(const TripleSystem& t, const MatrixLieSuperalgebra& s) {
  if (t.kind() != TripleKind::symplectic) throw std::invalid_argument(t.name() + " is not symplectic");
  return build_with_v(t, s, Functor::symplectic);
}

TripleLie lie_from_orthosymplectic(const TripleSystem& t, const MatrixLieSuperalgebra& s) {
  require_characteristic_three(t.field(), "orthosymplectic functor");
  if (t.kind() == TripleKind::symplectic) throw std::invalid_argument(t.name() + " is symplectic");
  return build_with_v(t, s, Functor::orthosymplectic);
}

TripleLie superalgebra_from_symplectic(const TripleSystem& t, const MatrixLieSuperalgebra& s) {
  require_characteristic_three(t.field(), "g~(T, s)");
  if (t.kind() != TripleKind::symplectic) throw std::invalid_argument(t.name() + " is not symplectic");
  const auto& f = t.field();
  const std::size_t n = t.dim();
  const std::size_t sd = s.dim();
  require_derivations(t, s);
  const auto dxy = inner_coordinates(t, s);
  std::vector<std::string> labels;
  std::vector<unsigned> parity;
  for (std::size_t k = 0; k < sd; ++k) {
    labels.push_back(s.lie().space().label(k));
    parity.push_back(s.parity(k));
  }
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(t.space().label(x));
    parity.push_back(1);
  }
  BracketBuilder b(f, labels, parity);
  for (std::size_t k = 0; k < sd; ++k)
    for (std::size_t l = 0; l < sd; ++l) b.set(k, l, s.lie().bracket(k, l));
  for (std::size_t k = 0; k < sd; ++k) {
    const auto cols = columns(s.element(k));
    for (std::size_t x = 0; x < n; ++x) {
      SparseVector out;
      for (const auto& e : cols[x]) out.push_back({static_cast<std::uint32_t>(sd + e.index), e.value});
      b.set_pair(k, sd + x, out);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) b.set(sd + x, sd + y, dxy[x * n + y]);
  TripleLie out{b.finish("g~(" + t.name() + ")"), {}};
  out.layout.s_dim = sd;
  out.layout.t_dim = n;
  out.layout.has_v = false;
  out.layout.perm = b.permutation();
  return out;
}

TripleSystem extract_triple(const TripleLie& g, const TripleSystem& model) {
  const auto& f = model.field();
  const auto& L = g.layout;
  if (!L.has_v || L.t_dim != model.dim()) throw DimensionError("extract_triple: layout does not match");
  const std::size_t n = model.dim();
  const bool osp = model.kind() == TripleKind::orthosymplectic;
  const Residue cform = model.kind() == TripleKind::symplectic ? 1 : f.neg(1);
  // canonical index -> s position
  std::vector<std::int64_t> s_of(g.lie.dim(), -1);
  for (std::size_t k = 0; k < L.s_dim; ++k) s_of[L.s(k)] = static_cast<std::int64_t>(k);
  std::vector<std::int64_t> w_of(g.lie.dim(), -1), v_of(g.lie.dim(), -1);
  for (std::size_t x = 0; x < n; ++x) {
    v_of[L.vt(0, x)] = static_cast<std::int64_t>(x);
    w_of[L.vt(1, x)] = static_cast<std::int64_t>(x);
  }
  Matrix form(f, n, n);
  std::vector<SparseVector> product(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Residue eps = osp ? f.sign(model.parity(x)) : 1;
      Vector d(g.lie.dim(), 0);
      for (const auto& e : g.lie.bracket(L.vt(0, x), L.vt(1, y))) {
        if (e.index == L.sp(1)) form.at(x, y) = f.mul(f.mul(eps, cform), e.value);
        if (s_of[e.index] >= 0) d[e.index] = f.mul(eps, e.value);
      }
      if (is_zero(d)) continue;
      const Residue sg = osp ? f.sign(model.parity(x) + model.parity(y)) : 1;
      for (std::size_t z = 0; z < n; ++z) {
        const Vector r = g.lie.bracket(d, unit_vector(g.lie.dim(), L.vt(0, z)));
        std::vector<SparseEntry> out;
        for (std::size_t k = 0; k < r.size(); ++k) {
          if (r[k] == 0) continue;
          if (v_of[k] < 0) throw std::logic_error("extract_triple: [d, v(x)z] leaves v (x) T");
          out.push_back({static_cast<std::uint32_t>(v_of[k]), f.mul(sg, r[k])});
        }
        product[(x * n + y) * n + z] = normalize(f, std::move(out));
      }
    }
  return TripleSystem(model.kind(), model.name(), f, model.space(), model.degrees(), std::move(form),
                      std::move(product));
}

MatrixLieSuperalgebra induced_derivations(const JordanTriple& t, const MatrixLieSuperalgebra& der) {
  const auto& f = t.system().field();
  const std::size_t n = t.system().dim();
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  RowReducer red(f, n * n);
  for (std::size_t k = 0; k < der.dim(); ++k) {
    basis.push_back(t.induced(der.element(k)));
    red.add(basis.back().data());
    labels.push_back(der.lie().space().label(k));
  }
  if (red.rank() != der.dim()) throw std::logic_error("der J does not act faithfully on " + t.system().name());
  return MatrixLieSuperalgebra(f, t.system().space(), std::move(basis), std::move(labels),
                               "der " + t.jordan().name() + " on " + t.system().name());
}

Matrix psi_isomorphism(const MagicSquare& g, const JordanTriple& tj, const MatrixLieSuperalgebra& der,
                       const TripleLie& target, unsigned sign) {
  const auto& dec = g.decomposition;
  const JordanSuperalgebra& j = tj.jordan();
  const auto& f = j.field();
  if (dec.n != 3 || dec.tri_dim != 5 || dec.n2 != j.s().dim() || g.tri->composition().space().odd_dim() != 2) {
    throw DimensionError("psi: expected g(S12, S) for the S of " + j.name());
  }
  const auto& L = target.layout;
  if (!L.has_v || L.s_dim != der.dim() || L.t_dim != tj.system().dim()) {
    throw DimensionError("psi: target is not g(J)");
  }
  Matrix psi(f, target.lie.dim(), g.lie.dim());
  auto put_der = [&](std::size_t col, const Matrix& m) {
    const Vector c = der.require_coordinates(m, "psi image is not a derivation of J");
    for (std::size_t k = 0; k < der.dim(); ++k) psi.at(L.s(k), col) = c[k];
  };
  // S12 basis: 1, v, w with b(v, w) = 1, matching <v|w> = 1
  const auto& s12 = g.tri->composition();
  if (s12.b(1, 2) != 1) throw std::logic_error("psi: S12 odd basis is not symplectic-normalized");
  for (std::size_t k = 0; k < dec.tri_dim; ++k) {
    const TrialityElement e = g.tri->element(k);
    const Matrix& d = e.d[0];
    const std::size_t col = dec.tri(k);
    if (e.parity == 0) {
      Matrix m(f, 2, 2);
      for (unsigned r = 0; r < 2; ++r)
        for (unsigned c = 0; c < 2; ++c) m.at(r, c) = d.at(1 + r, 1 + c);
      const Vector c = sp_coordinates(f, m);
      for (unsigned a = 0; a < 3; ++a) psi.at(L.sp(a), col) = c[a];
    } else {
      // sigma_{1,u}(1) = -u
      for (unsigned r = 0; r < 2; ++r) psi.at(L.vt(r, tj.hat_one()), col) = f.neg(d.at(1 + r, 0));
    }
  }
  for (std::size_t k = 0; k < dec.tri2_dim; ++k) put_der(dec.tri2(k), d_triality(j, g.tri2->element(k)));
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < dec.n2; ++a) {
      put_der(dec.iota(i, 0, a), d_inner(j, i, a));
      const Residue sg = f.sign(sign * j.s().parity(a));
      for (unsigned u = 0; u < 2; ++u) psi.at(L.vt(u, tj.hat_iota(i, a)), dec.iota(i, 1 + u, a)) = sg;
    }
  return psi;
}

PsiCheck check_psi(const CompositionSuperalgebra& s) {
  const auto& f = s.field();
  const MagicSquare g = magic_square(catalog("S12", f), s);
  const JordanSuperalgebra j = build_h3(s);
  const JordanDerivations der = compute_der(j);
  const JordanTriple tj(j);
  const MatrixLieSuperalgebra sder = induced_derivations(tj, der.algebra);
  const bool super = s.space().odd_dim() != 0;
  const TripleLie target =
      super ? lie_from_orthosymplectic(tj.system(), sder) : lie_from_orthogonal(tj.system(), sder);
  PsiCheck out;
  out.name = s.name();
  out.source_dims = g.lie.space().superdim();
  out.target_dims = target.lie.space().superdim();
  for (unsigned sign = 0; sign < (super ? 2u : 1u); ++sign) {
    out.sign = sign;
    out.report = check_isomorphism(psi_isomorphism(g, tj, der.algebra, target, sign), g.lie, target.lie);
    if (out.report.pass) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

bool DeletionReport::pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

namespace {

std::size_t bracket_span_dim(const LieSuperalgebra& l, unsigned pa, unsigned pb) {
  RowReducer red(l.field(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (l.parity(i) != pa) continue;
    for (std::size_t k = 0; k < l.dim(); ++k)
      if (l.parity(k) == pb && !l.bracket(i, k).empty()) red.add_sparse(l.bracket(i, k));
  }
  return red.rank();
}

}  // namespace

DeletionReport deletion_consistency(unsigned r, const PrimeField& field) {
  static const std::map<unsigned, std::string> names{{1, "S1"}, {2, "S2"}, {4, "S4"}, {8, "S8"}};
  const auto it = names.find(r);
  if (it == names.end()) throw std::invalid_argument("deletion_consistency: r must be 1, 2, 4 or 8");
  const CompositionSuperalgebra sr = catalog(it->second, field);
  const JordanSuperalgebra j = build_h3(sr);
  const SymplecticJordanTriple t = build_tjs(j);
  const TripleDerivations inder = inner_derivations(t.system);
  const TripleDerivations der = derivations(t.system, inder);
  const TripleLie gt = superalgebra_from_symplectic(t.system, der.algebra);
  const MagicSquare g42 = magic_square(sr, catalog("S42", field));

  DeletionReport rep;
  rep.r = r;
  auto add = [&](std::string id, bool pass, std::string witness) {
    rep.results.push_back({std::move(id), pass, std::move(witness)});
  };
  const std::string a = gt.lie.space().superdim(), b = g42.lie.space().superdim();
  add("superdim", a == b, a + " vs " + b);

  const auto ja = check_super_jacobi(gt.lie), jb = check_super_jacobi(g42.lie);
  add("jacobi", ja.pass() && jb.pass(), std::to_string(ja.failures()) + "," + std::to_string(jb.failures()));

  const LieSubspace da = derived_subalgebra(gt.lie), db = derived_subalgebra(g42.lie);
  add("derived", da.superdim() == db.superdim(), da.superdim() + " vs " + db.superdim());
  // [g~(T), g~(T)] for s = der is inder + T
  add("inner", da.dim() == inder.algebra.dim() + t.system.dim(),
      std::to_string(da.dim()) + " vs " + std::to_string(inder.algebra.dim() + t.system.dim()));

  const LieSubspace ca = center(gt.lie), cb = center(g42.lie);
  add("center", ca.superdim() == cb.superdim(), ca.superdim() + " vs " + cb.superdim());

  for (unsigned pa = 0; pa < 2; ++pa)
    for (unsigned pb = pa; pb < 2; ++pb) {
      const std::size_t x = bracket_span_dim(gt.lie, pa, pb), y = bracket_span_dim(g42.lie, pa, pb);
      add("bracket" + std::to_string(pa) + std::to_string(pb), x == y, std::to_string(x) + " vs " + std::to_string(y));
    }

  const MagicSquare g4 = magic_square(sr, catalog("S4", field));
  add("der_dim", der.algebra.dim() == g4.lie.dim(),
      std::to_string(der.algebra.dim()) + " vs " + std::to_string(g4.lie.dim()));
  const MagicSquare g8 = magic_square(sr, catalog("S8", field));
  const std::size_t count = 3 + der.algebra.dim() + 2 * t.system.dim();
  add("undeleted", count == g8.lie.dim(), std::to_string(count) + " vs " + std::to_string(g8.lie.dim()));
  return rep;
}

}  // namespace supersquare

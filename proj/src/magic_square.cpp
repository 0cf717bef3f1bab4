#include "supersquare/magic_square.hpp"

namespace supersquare {

MagicSquare magic_square(std::shared_ptr<const TrialityAlgebra> tri, std::shared_ptr<const TrialityAlgebra> tri2) {
  const auto& s = tri->composition();
  const auto& s2 = tri2->composition();
  if (!(s.field() == s2.field())) throw FieldError("magic square: mixed characteristics");
  const auto& f = s.field();
  const std::size_t a = tri->dim();
  const std::size_t a2 = tri2->dim();
  const std::size_t n = s.dim();
  const std::size_t n2 = s2.dim();

  auto T = [&](std::size_t k) { return static_cast<std::uint32_t>(k); };
  auto T2 = [&](std::size_t k) { return static_cast<std::uint32_t>(a + k); };
  auto I = [&](unsigned i, std::size_t x, std::size_t x2) {
    return static_cast<std::uint32_t>(a + a2 + ((i % 3) * n + x) * n2 + x2);
  };

  std::vector<std::string> labels;
  std::vector<unsigned> parity;
  for (std::size_t k = 0; k < a; ++k) {
    labels.push_back("d" + std::to_string(k));
    parity.push_back(tri->parity(k));
  }
  for (std::size_t k = 0; k < a2; ++k) {
    labels.push_back("d'" + std::to_string(k));
    parity.push_back(tri2->parity(k));
  }
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        labels.push_back("i" + std::to_string(i) + "(" + s.space().label(x) + "*" + s2.space().label(x2) + ")");
        parity.push_back(s.parity(x) ^ s2.parity(x2));
      }
  BracketBuilder g(f, labels, parity);

  auto shifted = [](const SparseVector& v, std::uint32_t off) {
    SparseVector out = v;
    for (auto& e : out) e.index += off;
    return out;
  };
  for (std::size_t k = 0; k < a; ++k)
    for (std::size_t l = 0; l < a; ++l) g.set(T(k), T(l), shifted(tri->lie().bracket(k, l), T(0)));
  for (std::size_t k = 0; k < a2; ++k)
    for (std::size_t l = 0; l < a2; ++l) g.set(T2(k), T2(l), shifted(tri2->lie().bracket(k, l), T2(0)));

  // [d, iota_i(x (x) x')] = iota_i(d_i x (x) x')
  for (std::size_t k = 0; k < a; ++k) {
    const auto& d = tri->element(k);
    for (unsigned i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          std::vector<SparseEntry> v;
          for (std::size_t r = 0; r < n; ++r)
            if (d.d[i].at(r, x) != 0) v.push_back({I(i, r, x2), d.d[i].at(r, x)});
          g.set_pair(T(k), I(i, x, x2), normalize(f, std::move(v)));
        }
  }
  // [d', iota_i(x (x) x')] = (-1)^{|d'||x|} iota_i(x (x) d'_i x')
  for (std::size_t k = 0; k < a2; ++k) {
    const auto& d = tri2->element(k);
    for (unsigned i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < n; ++x) {
        const Residue sg = f.sign(d.parity * s.parity(x));
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          std::vector<SparseEntry> v;
          for (std::size_t r = 0; r < n2; ++r)
            if (d.d[i].at(r, x2) != 0) v.push_back({I(i, x, r), f.mul(sg, d.d[i].at(r, x2))});
          g.set_pair(T2(k), I(i, x, x2), normalize(f, std::move(v)));
        }
      }
  }
  // [iota_i(x (x) x'), iota_{i+1}(y (x) y')] = (-1)^{|x'||y|} iota_{i+2}(x.y (x) x'.y')
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t x2 = 0; x2 < n2; ++x2)
        for (std::size_t y = 0; y < n; ++y) {
          const auto xy = s.product(x, y);
          const Residue sg = f.sign(s2.parity(x2) * s.parity(y));
          for (std::size_t y2 = 0; y2 < n2; ++y2) {
            const auto xy2 = s2.product(x2, y2);
            std::vector<SparseEntry> v;
            for (std::size_t m = 0; m < n; ++m) {
              if (xy[m] == 0) continue;
              for (std::size_t m2 = 0; m2 < n2; ++m2)
                if (xy2[m2] != 0) v.push_back({I(i + 2, m, m2), f.mul(sg, f.mul(xy[m], xy2[m2]))});
            }
            g.set_pair(I(i, x, x2), I(i + 1, y, y2), normalize(f, std::move(v)));
          }
        }
  // [iota_i(x (x) x'), iota_i(y (x) y')] =
  //   (-1)^{|x||x'|+|x||y'|+|y||y'|} b'(x',y') theta^i t_{x,y} + (-1)^{|y||x'|} b(x,y) theta'^i t'_{x',y'}
  // Both orders are computed from the formula.
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t x2 = 0; x2 < n2; ++x2)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t y2 = 0; y2 < n2; ++y2) {
            std::vector<SparseEntry> v;
            const unsigned px = s.parity(x), py = s.parity(y), px2 = s2.parity(x2), py2 = s2.parity(y2);
            if (const Residue b2 = s2.b(x2, y2); b2 != 0 && a != 0) {
              const Residue c = f.mul(f.sign(px * px2 + px * py2 + py * py2), b2);
              const auto& t = tri->t_coordinates(i, x, y);
              for (std::size_t k = 0; k < a; ++k)
                if (t[k] != 0) v.push_back({T(k), f.mul(c, t[k])});
            }
            if (const Residue b1 = s.b(x, y); b1 != 0 && a2 != 0) {
              const Residue c = f.mul(f.sign(py * px2), b1);
              const auto& t = tri2->t_coordinates(i, x2, y2);
              for (std::size_t k = 0; k < a2; ++k)
                if (t[k] != 0) v.push_back({T2(k), f.mul(c, t[k])});
            }
            g.set(I(i, x, x2), I(i, y, y2), normalize(f, std::move(v)));
          }

  MagicSquare out{tri, tri2, g.finish("g(" + s.name() + "," + s2.name() + ")"), {}};
  out.decomposition = {a, a2, n, n2, g.permutation()};
  return out;
}

MagicSquare magic_square(const CompositionSuperalgebra& s, const CompositionSuperalgebra& s2) {
  auto t = std::make_shared<const TrialityAlgebra>(compute_tri(s));
  auto t2 = s.name() == s2.name() && s.algebra() == s2.algebra()
                ? t
                : std::make_shared<const TrialityAlgebra>(compute_tri(s2));
  return magic_square(t, t2);
}

Matrix flip_isomorphism(const MagicSquare& a, const MagicSquare& b) {
  const auto& da = a.decomposition;
  const auto& db = b.decomposition;
  if (da.n != db.n2 || da.n2 != db.n || da.tri_dim != db.tri2_dim || da.tri2_dim != db.tri_dim) {
    throw DimensionError("flip: algebras are not transposed cells");
  }
  const auto& f = a.lie.field();
  const auto& s = a.tri->composition();
  const auto& s2 = a.tri2->composition();
  Matrix m(f, b.lie.dim(), a.lie.dim());
  for (std::size_t k = 0; k < da.tri_dim; ++k) m.at(db.tri2(k), da.tri(k)) = 1;
  for (std::size_t k = 0; k < da.tri2_dim; ++k) m.at(db.tri(k), da.tri2(k)) = 1;
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < da.n; ++x)
      for (std::size_t x2 = 0; x2 < da.n2; ++x2)
        m.at(db.iota(i, x2, x), da.iota(i, x, x2)) = f.sign(s.parity(x) * s2.parity(x2));
  return m;
}

const std::vector<TableEntry>& supersquare_table() {
  static const std::vector<TableEntry> table = {
      {"S1", "S1", 3, 0, "sl2"},
      {"S1", "S2", 8, 0, "pgl3"},
      {"S1", "S4", 21, 0, "sp6"},
      {"S1", "S8", 52, 0, "f4"},
      {"S1", "S12", 6, 8, "psl(2,2)"},
      {"S1", "S42", 21, 14, "sp6+(14)"},
      {"S2", "S2", 16, 0, "pgl3+pgl3"},
      {"S2", "S4", 35, 0, "pgl6"},
      {"S2", "S8", 78, 0, "e6~"},
      {"S2", "S12", 11, 14, "(pgl3+sl2)+(psl3*(2))"},
      {"S2", "S42", 35, 20, "pgl6+(20)"},
      {"S4", "S4", 66, 0, "so12"},
      {"S4", "S8", 133, 0, "e7"},
      {"S4", "S12", 24, 26, "(sp6+sl2)+((13)*(2))"},
      {"S4", "S42", 66, 32, "so12+spin12"},
      {"S8", "S8", 248, 0, "e8"},
      {"S8", "S12", 55, 50, "(f4+sl2)+((25)*(2))"},
      {"S8", "S42", 133, 56, "e7+(56)"},
      {"S12", "S12", 21, 16, "so7+2spin7"},
      {"S12", "S42", 36, 40, "sp8+(40)"},
      {"S42", "S42", 78, 64, "so13+spin13"},
  };
  return table;
}

}  // namespace supersquare

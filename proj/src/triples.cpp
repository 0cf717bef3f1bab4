#include "supersquare/triples.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace supersquare {

std::string to_string(TripleKind k) {
  switch (k) {
    case TripleKind::orthogonal: return "orthogonal";
    case TripleKind::symplectic: return "symplectic";
    case TripleKind::orthosymplectic: return "orthosymplectic";
  }
  return "?";
}

TripleSystem::TripleSystem(TripleKind kind, std::string name, const PrimeField& field, SuperSpace space,
                           std::vector<Degree> degrees, Matrix form, std::vector<SparseVector> product)
    : kind_(kind), name_(std::move(name)), field_(field), space_(std::move(space)), degrees_(std::move(degrees)),
      form_(std::move(form)), product_(std::move(product)) {
  const std::size_t n = space_.dim();
  if (degrees_.size() != n || form_.rows() != n || form_.cols() != n || product_.size() != n * n * n) {
    throw DimensionError("triple system: inconsistent sizes");
  }
  if (kind_ != TripleKind::orthosymplectic && space_.odd_dim() != 0) {
    throw ParityError("triple system: " + to_string(kind_) + " systems are purely even");
  }
}

Matrix TripleSystem::operator_matrix(std::size_t x, std::size_t y) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t z = 0; z < dim(); ++z)
    for (const auto& e : triple(x, y, z)) m.at(e.index, z) = e.value;
  return m;
}

GradedProduct TripleSystem::graded_product() const { return {field_, space_, degrees_, 3, product_}; }

// ---------------------------------------------------------------------------

namespace {

std::optional<Degree> matrix_degree(const Matrix& m, const std::vector<Degree>& deg) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) return deg[r] - deg[c];
  return std::nullopt;
}

std::vector<SparseVector> sparse_columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) cols[c].push_back({static_cast<std::uint32_t>(r), m.at(r, c)});
  return cols;
}

TripleDerivations make_derivations(const TripleSystem& t, std::vector<Matrix> basis, const std::string& what) {
  std::vector<std::pair<Degree, std::size_t>> order;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto d = matrix_degree(basis[i], t.degrees());
    if (!d) throw std::logic_error(what + ": zero basis element");
    order.emplace_back(*d, i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first.parity() < b.first.parity(); });
  std::vector<Matrix> sorted;
  std::vector<Degree> degree;
  std::vector<std::string> labels;
  for (const auto& [d, i] : order) {
    labels.push_back("d" + std::to_string(sorted.size()));
    sorted.push_back(std::move(basis[i]));
    degree.push_back(d);
  }
  return {MatrixLieSuperalgebra(t.field(), t.space(), std::move(sorted), std::move(labels), what + "(" + t.name() + ")"),
          std::move(degree)};
}

}  // namespace

namespace {

std::vector<Matrix> inner_basis(const TripleSystem& t) {
  const std::size_t n = t.dim();
  RowReducer red(t.field(), n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<SparseEntry> row;
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& e : t.triple(x, y, z)) row.push_back({static_cast<std::uint32_t>(e.index * n + z), e.value});
      if (!row.empty()) red.add_sparse(row);
    }
  std::vector<Matrix> basis;
  for (const auto& v : red.row_basis()) {
    Matrix m(t.field(), n, n);
    m.data() = v;
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

TripleDerivations inner_derivations(const TripleSystem& t) { return make_derivations(t, inner_basis(t), "inder"); }

TripleDerivations derivations(const TripleSystem& t, const TripleDerivations& inder) {
  for (std::size_t i = 0; i < inder.algebra.dim(); ++i) {
    if (!is_triple_derivation(t, inder.algebra.element(i), inder.algebra.parity(i))) {
      throw std::logic_error("inner derivation is not a derivation of " + t.name());
    }
  }
  auto lower = [&](Degree s) {
    return static_cast<std::size_t>(std::count(inder.degree.begin(), inder.degree.end(), s));
  };
  GradedDerivations d = graded_derivations(t.graded_product(), lower);
  return make_derivations(t, std::move(d.basis), "der");
}

bool is_triple_derivation(const TripleSystem& t, const Matrix& d, unsigned parity, std::string* witness) {
  const auto& f = t.field();
  const std::size_t n = t.dim();
  const auto p = f.characteristic();
  const auto cols = sparse_columns(d);
  SparseAccumulator lhs(n), rhs(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        for (const auto& e : t.triple(u, v, w)) lhs.add_scaled(cols[e.index], e.value);
        for (const auto& e : cols[u]) rhs.add_scaled(t.triple(e.index, v, w), e.value);
        const Residue s1 = f.sign(parity * t.parity(u));
        for (const auto& e : cols[v]) rhs.add_scaled(t.triple(u, e.index, w), f.mul(s1, e.value));
        const Residue s2 = f.sign(parity * (t.parity(u) + t.parity(v)));
        for (const auto& e : cols[w]) rhs.add_scaled(t.triple(u, v, e.index), f.mul(s2, e.value));
        if (lhs.take(p) != rhs.take(p)) {
          if (witness) *witness = "(" + t.space().label(u) + "," + t.space().label(v) + "," + t.space().label(w) + ")";
          return false;
        }
      }
  return true;
}

// ---------------------------------------------------------------------------

AxiomReport verify_triple(const TripleSystem& t) {
  const auto& f = t.field();
  const std::size_t n = t.dim();
  const auto p = f.characteristic();
  const bool symp = t.kind() == TripleKind::symplectic;
  AxiomReport rep;
  auto label = [&](std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    for (auto i : idx) s += (s.size() > 1 ? "," : "") + t.space().label(i);
    return s + ")";
  };

  AxiomResult form{"form", true, ""};
  bool nonzero = false;
  for (std::size_t x = 0; x < n && form.pass; ++x)
    for (std::size_t y = 0; y < n && form.pass; ++y) {
      const Residue a = t.form(x, y), b = t.form(y, x);
      nonzero = nonzero || a != 0;
      bool ok = true;
      if (a != 0 && t.parity(x) != t.parity(y)) ok = false;
      // symmetric on even, alternating on odd; alternating everywhere for symplectic
      const bool alt = symp || (t.parity(x) & t.parity(y));
      if (alt ? (a != f.neg(b) || (x == y && a != 0)) : a != b) ok = false;
      if (!ok) {
        form.pass = false;
        form.witness = label({x, y});
      }
    }
  if (!nonzero && form.pass) {
    form.pass = false;
    form.witness = "zero form";
  }
  rep.results.push_back(form);

  SparseAccumulator l(n), r(n);
  AxiomResult ax_a{"a", true, ""}, ax_b{"b", true, ""};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const unsigned px = t.parity(x), py = t.parity(y), pz = t.parity(z);
        if (ax_a.pass) {
          // symplectic: [xyz] = [yxz]; otherwise [xyz] + (-1)^{|x||y|}[yxz] = 0
          l.add_scaled(t.triple(x, y, z), 1);
          l.add_scaled(t.triple(y, x, z), symp ? p - 1 : f.sign(px * py));
          if (!l.take(p).empty()) {
            ax_a.pass = false;
            ax_a.witness = label({x, y, z});
          }
        }
        if (ax_b.pass) {
          const Residue syz = f.sign(py * pz);
          if (symp) {
            // [xyz] - [xzy] = (x|z)y - (x|y)z + 2(y|z)x
            l.add_scaled(t.triple(x, y, z), 1);
            l.add_scaled(t.triple(x, z, y), p - 1);
            r.add(static_cast<std::uint32_t>(y), t.form(x, z));
            r.add(static_cast<std::uint32_t>(z), f.neg(t.form(x, y)));
            r.add(static_cast<std::uint32_t>(x), f.mul(2, t.form(y, z)));
          } else {
            // [xyz] + (-1)^{|y||z|}[xzy] = (x|y)z + (-1)^{|y||z|}(x|z)y - 2(y|z)x
            l.add_scaled(t.triple(x, y, z), 1);
            l.add_scaled(t.triple(x, z, y), syz);
            r.add(static_cast<std::uint32_t>(z), t.form(x, y));
            r.add(static_cast<std::uint32_t>(y), f.mul(syz, t.form(x, z)));
            r.add(static_cast<std::uint32_t>(x), f.neg(f.mul(2, t.form(y, z))));
          }
          if (l.take(p) != r.take(p)) {
            ax_b.pass = false;
            ax_b.witness = label({x, y, z});
          }
        }
      }
  rep.results.push_back(ax_a);
  rep.results.push_back(ax_b);

  const std::vector<Matrix> inder = inner_basis(t);
  AxiomResult ax_c{"c", true, ""}, ax_d{"d", true, ""};
  for (std::size_t i = 0; i < inder.size(); ++i) {
    const Matrix& d = inder[i];
    const auto deg = matrix_degree(d, t.degrees());
    const unsigned q = deg ? deg->parity() : 0;
    std::string w;
    if (ax_c.pass && !is_triple_derivation(t, d, q, &w)) {
      ax_c.pass = false;
      ax_c.witness = "inder[" + std::to_string(i) + "] at " + w;
    }
    // (Du|v) + (-1)^{|D||u|}(u|Dv) = 0
    const Matrix m = d.transpose() * t.form();
    const Matrix m2 = t.form() * d;
    for (std::size_t u = 0; u < n && ax_d.pass; ++u)
      for (std::size_t v = 0; v < n && ax_d.pass; ++v) {
        if (f.add(m.at(u, v), f.mul(f.sign(q * t.parity(u)), m2.at(u, v))) != 0) {
          ax_d.pass = false;
          ax_d.witness = "inder[" + std::to_string(i) + "] at " + label({u, v});
        }
      }
  }
  rep.results.push_back(ax_c);
  rep.results.push_back(ax_d);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> hat_index(const JordanSuperalgebra& j) {
  std::vector<unsigned> par{0};
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < j.s().dim(); ++s) par.push_back(j.s().parity(s));
  return even_first_permutation(par);
}

std::vector<Vector> hat_lifts(const JordanSuperalgebra& j, const std::vector<std::size_t>& index) {
  std::vector<Vector> lift(index.size(), Vector(j.dim(), 0));
  auto& one = lift[index[0]];
  one[j.e(0)] = 1;
  one[j.e(1)] = j.field().neg(1);
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < j.s().dim(); ++s) lift[index[1 + i * j.s().dim() + s]][j.iota(i, s)] = 1;
  return lift;
}

Residue trace_of(const JordanSuperalgebra& j, std::span<const Residue> x) {
  Residue v = 0;
  for (std::size_t k = 0; k < j.dim(); ++k) v = j.field().fma(x[k], j.trace()[k], v);
  return v;
}

TripleSystem make_tjo(const JordanSuperalgebra& j, const std::vector<std::size_t>& index,
                      const std::vector<Vector>& lift, const std::function<Vector(std::span<const Residue>)>& project) {
  const auto& f = j.field();
  const std::size_t n = index.size();
  std::vector<std::string> labels(n);
  std::vector<Degree> degrees(n);
  labels[index[0]] = "1^";
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < j.s().dim(); ++s) {
      const std::size_t k = index[1 + i * j.s().dim() + s];
      labels[k] = "i" + std::to_string(i) + "^(" + j.s().space().label(s) + ")";
      degrees[k] = j.degrees()[j.iota(i, s)];
    }
  const std::size_t odd = j.space().odd_dim();
  SuperSpace space(n - odd, odd, labels);

  std::vector<Matrix> L;
  for (const auto& x : lift) L.push_back(j.left(x));
  const Vector one = j.unit();
  Matrix form(f, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) form.at(x, y) = trace_of(j, j.multiply(lift[x], lift[y]));

  std::vector<SparseVector> product(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix c = supercommutator(L[x], space.parity(x), L[y], space.parity(y));
      if (!is_zero(c.apply(one))) throw std::logic_error("[L_x,L_y] does not kill 1");
      for (std::size_t z = 0; z < n; ++z) product[(x * n + y) * n + z] = to_sparse(project(c.apply(lift[z])));
    }
  const TripleKind kind = odd == 0 ? TripleKind::orthogonal : TripleKind::orthosymplectic;
  const std::string name = (odd == 0 ? "TJO(" : "TJOS(") + j.s().name() + ")";
  return TripleSystem(kind, name, f, std::move(space), std::move(degrees), std::move(form), std::move(product));
}

}  // namespace

JordanTriple::JordanTriple(const JordanSuperalgebra& j)
    : j_(j), index_((require_characteristic_three(j.field(), "J0/k1"), hat_index(j_))), lift_(hat_lifts(j_, index_)),
      system_(make_tjo(j_, index_, lift_, [this](std::span<const Residue> x) { return project(x); })) {}

Vector JordanTriple::project(std::span<const Residue> x) const {
  const auto& f = j_.field();
  if (trace_of(j_, x) != 0) throw std::logic_error("projection to J0/k1 of an element with nonzero trace");
  Vector out(index_.size(), 0);
  out[hat_one()] = f.sub(x[j_.e(0)], x[j_.e(2)]);
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < j_.s().dim(); ++s) out[hat_iota(i, s)] = x[j_.iota(i, s)];
  return out;
}

Matrix JordanTriple::induced(const Matrix& d) const {
  if (!is_zero(d.apply(j_.unit()))) throw std::logic_error("induced map: endomorphism does not kill 1");
  const std::size_t n = index_.size();
  Matrix m(j_.field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector c = project(d.apply(lift_[k]));
    for (std::size_t r = 0; r < n; ++r) m.at(r, k) = c[r];
  }
  return m;
}

JordanTriple build_tjo(const JordanSuperalgebra& j) { return JordanTriple(j); }

// ---------------------------------------------------------------------------

Vector cross_product(const JordanSuperalgebra& j, std::span<const Residue> x, std::span<const Residue> y) {
  const auto& f = j.field();
  const Vector xy = j.multiply(x, y);
  const Residue tx = trace_of(j, x), ty = trace_of(j, y), txy = trace_of(j, xy);
  const Residue s = f.sub(f.mul(tx, ty), txy);
  Vector out(j.dim(), 0);
  axpy(f, 2, xy, out);
  axpy(f, f.neg(tx), y, out);
  axpy(f, f.neg(ty), x, out);
  const Vector one = j.unit();
  axpy(f, s, one, out);
  return out;
}

namespace {

struct Block {
  Residue al = 0;
  Vector a;
  Vector b;
  Residue be = 0;
};

}  // namespace

SymplecticJordanTriple build_tjs(const JordanSuperalgebra& j) {
  if (j.space().odd_dim() != 0) throw ParityError("T_J^s is built over an ordinary Jordan algebra");
  const auto& f = j.field();
  const std::size_t m = j.dim();
  const std::size_t n = 2 + 2 * m;
  const Matrix tf = trace_form(j);
  auto t = [&](const Vector& x, const Vector& y) {
    std::uint64_t v = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (x[r] == 0) continue;
      for (std::size_t c = 0; c < m; ++c)
        if (y[c] != 0) v += static_cast<std::uint64_t>(f.mul(x[r], tf.at(r, c))) * y[c];
    }
    return static_cast<Residue>(v % f.characteristic());
  };
  auto cross = [&](const Vector& x, const Vector& y) {
    if (is_zero(x) || is_zero(y)) return Vector(m, 0);
    return cross_product(j, x, y);
  };
  auto basis = [&](std::size_t k) {
    Block x{0, Vector(m, 0), Vector(m, 0), 0};
    if (k == 0) x.al = 1;
    else if (k <= m) x.a[k - 1] = 1;
    else if (k <= 2 * m) x.b[k - 1 - m] = 1;
    else x.be = 1;
    return x;
  };
  auto swap = [](Block x) {
    std::swap(x.al, x.be);
    std::swap(x.a, x.b);
    return x;
  };
  // gamma and c of the product; delta and d follow by the swap
  auto gamma_c = [&](const Block& x1, const Block& x2, const Block& x3) {
    const std::int64_t ab = static_cast<std::int64_t>(f.add(f.mul(x1.al, x2.be), f.mul(x2.al, x1.be)));
    const std::int64_t tab = static_cast<std::int64_t>(f.add(t(x1.a, x2.b), t(x2.a, x1.b)));
    const Vector a12 = cross(x1.a, x2.a);
    Residue g = f.mul(f.reduce(-3 * ab + tab), x3.al);
    g = f.add(g, f.mul(2, f.reduce(static_cast<std::int64_t>(f.mul(x1.al, t(x2.b, x3.a))) +
                                   f.mul(x2.al, t(x1.b, x3.a)) - static_cast<std::int64_t>(t(a12, x3.a)))));
    Vector c(m, 0);
    axpy(f, f.reduce(-ab + tab), x3.a, c);
    axpy(f, f.mul(2, f.sub(t(x2.b, x3.a), f.mul(x2.be, x3.al))), x1.a, c);
    axpy(f, f.mul(2, f.sub(t(x1.b, x3.a), f.mul(x1.be, x3.al))), x2.a, c);
    if (x1.al) axpy(f, f.mul(2, x1.al), cross(x2.b, x3.b), c);
    if (x2.al) axpy(f, f.mul(2, x2.al), cross(x1.b, x3.b), c);
    if (x3.al) axpy(f, f.mul(2, x3.al), cross(x1.b, x2.b), c);
    const Residue m2 = f.neg(2);
    axpy(f, m2, cross(a12, x3.b), c);
    axpy(f, m2, cross(cross(x1.a, x3.a), x2.b), c);
    axpy(f, m2, cross(cross(x2.a, x3.a), x1.b), c);
    return std::pair<Residue, Vector>(g, std::move(c));
  };

  std::vector<Block> el;
  for (std::size_t k = 0; k < n; ++k) el.push_back(basis(k));
  std::vector<SparseVector> product(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto [g, c] = gamma_c(el[x], el[y], el[z]);
        auto [gs, cs] = gamma_c(swap(el[x]), swap(el[y]), swap(el[z]));
        Vector out(n, 0);
        out[0] = g;
        for (std::size_t k = 0; k < m; ++k) {
          out[1 + k] = c[k];
          out[1 + m + k] = f.neg(cs[k]);
        }
        out[n - 1] = f.neg(gs);
        product[(x * n + y) * n + z] = to_sparse(out);
      }

  Matrix form(f, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Block &x1 = el[x], &x2 = el[y];
      form.at(x, y) = f.reduce(static_cast<std::int64_t>(f.mul(x1.al, x2.be)) - f.mul(x2.al, x1.be) -
                               static_cast<std::int64_t>(t(x1.a, x2.b)) + t(x1.b, x2.a));
    }

  std::vector<std::string> labels{"alpha"};
  std::vector<Degree> degrees{{3, 0}};
  for (std::size_t k = 0; k < m; ++k) {
    labels.push_back("a." + j.space().label(k));
    degrees.push_back({1, j.degrees()[k].bits});
  }
  for (std::size_t k = 0; k < m; ++k) {
    labels.push_back("b." + j.space().label(k));
    degrees.push_back({-1, j.degrees()[k].bits});
  }
  labels.push_back("beta");
  degrees.push_back({-3, 0});
  return {TripleSystem(TripleKind::symplectic, "TJS(" + j.s().name() + ")", f, SuperSpace(n, 0, std::move(labels)),
                       std::move(degrees), std::move(form), std::move(product)),
          m};
}

}  // namespace supersquare

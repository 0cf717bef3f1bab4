#include "supersquare/liesuper.hpp"

#include <algorithm>
#include <random>

namespace supersquare {

namespace {

SparseVector scaled(const PrimeField& f, const SparseVector& v, Residue c) {
  SparseVector out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, f.mul(c, e.value)});
  return out;
}

/// [x, y] for sparse x, y; accumulates into acc with an extra coefficient.
void bracket_into(const LieSuperalgebra& l, const SparseVector& x, const SparseVector& y,
                  std::uint64_t coef, SparseAccumulator& acc) {
  const auto p = l.field().characteristic();
  for (const auto& a : x)
    for (const auto& b : y) {
      const std::uint64_t c = (static_cast<std::uint64_t>(a.value) * b.value % p) * coef % p;
      acc.add_scaled(l.bracket(a.index, b.index), c);
    }
}

std::string label_triple(const LieSuperalgebra& l, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + l.space().label(i) + "," + l.space().label(j) + "," + l.space().label(k) + ")";
}

LieSubspace from_reducer(const RowReducer& red, const SuperSpace& space) {
  LieSubspace out;
  out.basis = red.row_basis();
  for (const auto& row : out.basis) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    (space.parity(lead) == 0 ? out.even_dim : out.odd_dim) += 1;
  }
  return out;
}

}  // namespace

SparseVector normalize(const PrimeField& f, std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  for (const auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = f.add(out.back().value, e.value);
    } else {
      out.push_back({e.index, f.reduce(e.value)});
    }
  }
  std::erase_if(out, [](const SparseEntry& e) { return e.value == 0; });
  return out;
}

SparseVector normalize_signed(const PrimeField& f,
                              std::vector<std::pair<std::uint32_t, std::int64_t>> entries) {
  std::vector<SparseEntry> e;
  e.reserve(entries.size());
  for (auto [i, v] : entries) e.push_back({i, f.reduce(v)});
  return normalize(f, std::move(e));
}

// ---------------------------------------------------------------------------

LieSuperalgebra::LieSuperalgebra(const PrimeField& field, SuperSpace space,
                                 std::vector<SparseVector> bracket, std::string provenance)
    : field_(field), space_(std::move(space)), table_(std::move(bracket)),
      provenance_(std::move(provenance)) {
  if (table_.size() != dim() * dim()) throw DimensionError("lie superalgebra: bracket table size");
}

Vector LieSuperalgebra::bracket(std::span<const Residue> x, std::span<const Residue> y) const {
  SparseAccumulator acc(dim());
  bracket_into(*this, to_sparse(x), to_sparse(y), 1, acc);
  return to_dense(acc.take(field_.characteristic()), dim());
}

Vector LieSuperalgebra::bracket_basis(std::size_t i, std::span<const Residue> y) const {
  Vector out(dim(), 0);
  for (std::size_t m = 0; m < y.size(); ++m) {
    if (y[m] != 0) axpy(field_, y[m], bracket(i, m), out);
  }
  return out;
}

Matrix LieSuperalgebra::ad(std::size_t i) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& e : bracket(i, j)) m.at(e.index, j) = e.value;
  return m;
}

// ---------------------------------------------------------------------------

BracketBuilder::BracketBuilder(const PrimeField& field, std::vector<std::string> labels,
                               std::vector<unsigned> parity)
    : field_(field), labels_(std::move(labels)), parity_(std::move(parity)),
      perm_(even_first_permutation(parity_)), table_(labels_.size() * labels_.size()) {
  if (parity_.size() != labels_.size()) throw DimensionError("bracket builder: parity size");
}

void BracketBuilder::set(std::size_t i, std::size_t j, SparseVector value) {
  std::vector<SparseEntry> merged = table_.at(i * dim() + j);
  merged.insert(merged.end(), value.begin(), value.end());
  table_[i * dim() + j] = normalize(field_, std::move(merged));
}

void BracketBuilder::set_pair(std::size_t i, std::size_t j, const SparseVector& value) {
  set(i, j, value);
  if (i != j) {
    const Residue s = field_.neg(field_.sign(parity_[i] * parity_[j]));
    set(j, i, scaled(field_, value, s));
  }
}

LieSuperalgebra BracketBuilder::finish(const std::string& provenance) const {
  const std::size_t n = dim();
  std::vector<std::string> labels(n);
  std::size_t even = 0;
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm_[i]] = labels_[i];
    if (parity_[i] == 0) ++even;
  }
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparseEntry> e;
      for (const auto& x : table_[i * n + j]) e.push_back({static_cast<std::uint32_t>(perm_[x.index]), x.value});
      table[perm_[i] * n + perm_[j]] = normalize(field_, std::move(e));
    }
  return LieSuperalgebra(field_, SuperSpace(even, n - even, std::move(labels)), std::move(table),
                         provenance);
}

// ---------------------------------------------------------------------------

JacobiReport check_super_jacobi(const LieSuperalgebra& l) {
  JacobiReport rep;
  const auto& f = l.field();
  const std::size_t n = l.dim();
  const auto p = f.characteristic();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned pij = l.parity(i) ^ l.parity(j);
      for (const auto& e : l.bracket(i, j)) {
        if (l.parity(e.index) != pij) {
          if (rep.failures() == 0) rep.witness = "parity [" + l.space().label(i) + "," + l.space().label(j) + "]";
          ++rep.parity_failures;
          break;
        }
      }
      if (i > j) continue;
      const Residue s = f.neg(f.sign(l.parity(i) * l.parity(j)));
      if (scaled(f, l.bracket(i, j), s) != l.bracket(j, i)) {
        if (rep.failures() == 0) {
          rep.witness = "anticommutativity [" + l.space().label(i) + "," + l.space().label(j) + "]";
        }
        ++rep.anticommutativity_failures;
      }
    }
  SparseAccumulator acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned pi = l.parity(i);
    const SparseVector xi{{static_cast<std::uint32_t>(i), 1}};
    for (std::size_t j = i; j < n; ++j) {
      const unsigned pj = l.parity(j);
      const SparseVector xj{{static_cast<std::uint32_t>(j), 1}};
      const SparseVector& xy = l.bracket(i, j);
      for (std::size_t k = j; k < n; ++k) {
        const unsigned pk = l.parity(k);
        const SparseVector xk{{static_cast<std::uint32_t>(k), 1}};
        // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
        bracket_into(l, xi, l.bracket(j, k), f.sign(pi * pk), acc);
        bracket_into(l, xj, l.bracket(k, i), f.sign(pj * pi), acc);
        bracket_into(l, xk, xy, f.sign(pk * pj), acc);
        if (!acc.take(p).empty()) {
          if (rep.failures() == 0) rep.witness = "jacobi " + label_triple(l, i, j, k);
          ++rep.jacobi_failures;
        }
      }
    }
  }
  return rep;
}

LieSubspace derived_subalgebra(const LieSuperalgebra& l) {
  RowReducer red(l.field(), l.dim());
  for (std::size_t i = 0; i < l.dim() && !red.full(); ++i)
    for (std::size_t j = i; j < l.dim() && !red.full(); ++j) {
      const auto& b = l.bracket(i, j);
      if (!b.empty()) red.add_sparse(b);
    }
  return from_reducer(red, l.space());
}

LieSubspace center(const LieSuperalgebra& l) {
  const std::size_t n = l.dim();
  // x is central iff sum_i x_i [e_i, e_j] = 0 for every j
  RowReducer red(l.field(), n);
  std::vector<std::vector<SparseEntry>> rows(n);
  for (std::size_t j = 0; j < n && !red.full(); ++j) {
    for (auto& r : rows) r.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : l.bracket(i, j)) rows[e.index].push_back({static_cast<std::uint32_t>(i), e.value});
    for (const auto& r : rows) {
      if (!r.empty()) red.add_sparse(r);
    }
  }
  LieSubspace out;
  out.basis = red.kernel_basis();
  for (const auto& row : out.basis) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    (l.parity(lead) == 0 ? out.even_dim : out.odd_dim) += 1;
  }
  return out;
}

LieSubspace ideal_closure(const LieSuperalgebra& l, std::span<const Residue> seed) {
  if (is_zero(seed)) throw std::invalid_argument("ideal closure of the zero vector");
  RowReducer red(l.field(), l.dim());
  std::vector<Vector> queue;
  red.add(seed);
  queue.emplace_back(seed.begin(), seed.end());
  for (std::size_t q = 0; q < queue.size() && !red.full(); ++q) {
    for (std::size_t j = 0; j < l.dim() && !red.full(); ++j) {
      Vector w = l.bracket_basis(j, queue[q]);
      if (red.add(w)) queue.push_back(std::move(w));
    }
  }
  return from_reducer(red, l.space());
}

bool is_ideal(const LieSuperalgebra& l, const LieSubspace& i) {
  if (i.dim() == 0) return true;
  Subspace span(l.field(), l.dim(), i.basis);
  for (const auto& v : i.basis)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!span.contains(l.bracket_basis(j, v))) return false;
    }
  return true;
}

LieSuperalgebra restrict_to(const LieSuperalgebra& l, const LieSubspace& sub,
                            const std::string& provenance) {
  const std::size_t d = sub.dim();
  Subspace span(l.field(), l.dim(), sub.basis);
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = span.require_coordinates(l.bracket(sub.basis[i], sub.basis[j]), "restriction is not closed");
      table[i * d + j] = to_sparse(c);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  return LieSuperalgebra(l.field(), SuperSpace(sub.even_dim, sub.odd_dim, std::move(labels)),
                         std::move(table), provenance);
}

SimplicityVerdict probe_simplicity(const LieSuperalgebra& l, std::size_t trials, std::uint64_t seed) {
  SimplicityVerdict v;
  auto z = center(l);
  if (z.dim() != 0) {
    v.reason = "center";
    v.witness_dim = z.dim();
    return v;
  }
  auto d = derived_subalgebra(l);
  if (d.dim() != l.dim()) {
    v.reason = "derived";
    v.witness_dim = d.dim();
    return v;
  }
  auto proper = [&](std::span<const Residue> x) {
    auto i = ideal_closure(l, x);
    if (i.dim() != l.dim()) {
      v.reason = "ideal";
      v.witness_dim = i.dim();
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (proper(unit_vector(l.dim(), i))) return v;
  }
  std::mt19937_64 engine(seed);
  const auto p = l.field().characteristic();
  const std::size_t ne = l.space().even_dim();
  for (std::size_t t = 0; t < trials; ++t) {
    const bool odd = l.space().odd_dim() != 0 && (t % 2 == 1 || ne == 0);
    Vector x(l.dim(), 0);
    const std::size_t lo = odd ? ne : 0;
    const std::size_t hi = odd ? l.dim() : ne;
    for (std::size_t i = lo; i < hi; ++i) x[i] = static_cast<Residue>(engine() % p);
    if (is_zero(x)) x[lo] = 1;
    if (proper(x)) return v;
  }
  v.probably_simple = true;
  return v;
}

IsomorphismReport check_isomorphism(const Matrix& f, const LieSuperalgebra& a, const LieSuperalgebra& b) {
  IsomorphismReport rep;
  if (a.dim() != b.dim() || f.rows() != b.dim() || f.cols() != a.dim()) {
    throw DimensionError("check_isomorphism: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (f.at(r, c) != 0 && b.parity(r) != a.parity(c)) {
        rep.reason = "map is not even at column " + a.space().label(c);
        return rep;
      }
    }
  if (rank(f) != n) {
    rep.reason = "map is not invertible";
    return rep;
  }
  std::vector<SparseVector> cols(n);
  for (std::size_t c = 0; c < n; ++c) cols[c] = to_sparse(f.column(c));
  const auto p = a.field().characteristic();
  SparseAccumulator acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& e : a.bracket(i, j)) acc.add_scaled(cols[e.index], e.value);
      SparseVector lhs = acc.take(p);
      bracket_into(b, cols[i], cols[j], 1, acc);
      SparseVector rhs = acc.take(p);
      if (lhs != rhs) {
        rep.reason = "bracket not preserved on (" + a.space().label(i) + "," + a.space().label(j) + ")";
        return rep;
      }
    }
  rep.pass = true;
  return rep;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b) {
  std::vector<std::string> labels;
  std::vector<unsigned> parity;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    labels.push_back("L" + a.space().label(i));
    parity.push_back(a.parity(i));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    labels.push_back("R" + b.space().label(i));
    parity.push_back(b.parity(i));
  }
  BracketBuilder builder(a.field(), labels, parity);
  const auto off = static_cast<std::uint32_t>(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) builder.set(i, j, a.bracket(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      SparseVector v = b.bracket(i, j);
      for (auto& e : v) e.index += off;
      builder.set(i + off, j + off, v);
    }
  return builder.finish(a.provenance() + "+" + b.provenance());
}

// ---------------------------------------------------------------------------

Matrix supercommutator(const Matrix& a, unsigned pa, const Matrix& b, unsigned pb) {
  return (pa & pb) ? a * b + b * a : a * b - b * a;
}

namespace {

/// Rows of a matrix as sparse vectors.
std::vector<SparseVector> sparse_rows(const Matrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = to_sparse(m.row(r));
  return rows;
}

std::vector<Vector> flatten_all(const std::vector<Matrix>& basis) {
  std::vector<Vector> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(m.data());
  return out;
}

LieSuperalgebra matrix_lie(const PrimeField& f, const SuperSpace& module, const std::vector<Matrix>& basis,
                           const Subspace& span, const std::vector<std::string>& labels,
                           const std::string& provenance) {
  const std::size_t d = basis.size();
  const std::size_t n = module.dim();
  std::vector<unsigned> par(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto p = matrix_parity(module, basis[i]);
    if (!p) throw ParityError(provenance + ": basis element " + std::to_string(i) + " is not homogeneous");
    par[i] = *p;
    if (i > 0 && par[i] < par[i - 1]) throw ParityError(provenance + ": basis is not even-first");
  }
  std::vector<std::vector<SparseVector>> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = sparse_rows(basis[i]);
  const auto p = f.characteristic();
  SparseAccumulator acc(n * n);
  // (A B)_{r,c} = sum_k A_{r,k} B_{k,c}
  auto product_into = [&](std::size_t a, std::size_t b, std::uint64_t coef) {
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& ak : rows[a][r]) {
        const std::uint64_t c = static_cast<std::uint64_t>(ak.value) * coef % p;
        for (const auto& bk : rows[b][ak.index]) {
          acc.add(static_cast<std::uint32_t>(r * n + bk.index), c * bk.value);
        }
      }
  };
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      product_into(i, j, 1);
      product_into(j, i, (par[i] & par[j]) ? 1 : p - 1);
      SparseVector c = acc.take(p);
      auto coords = span.coordinates(c);
      if (!coords) {
        throw std::logic_error(provenance + ": not closed under the bracket at (" + labels[i] + "," +
                               labels[j] + ")");
      }
      table[i * d + j] = to_sparse(*coords);
      if (i != j) {
        const Residue s = f.neg(f.sign(par[i] * par[j]));
        table[j * d + i] = scaled(f, table[i * d + j], s);
      }
    }
  std::size_t even = 0;
  for (auto q : par) even += (q == 0);
  return LieSuperalgebra(f, SuperSpace(even, d - even, labels), std::move(table), provenance);
}

}  // namespace

MatrixLieSuperalgebra::MatrixLieSuperalgebra(const PrimeField& field, SuperSpace module,
                                             std::vector<Matrix> basis, std::vector<std::string> labels,
                                             const std::string& provenance)
    : field_(field), module_(std::move(module)), basis_(std::move(basis)),
      span_(field_, module_.dim() * module_.dim(), flatten_all(basis_)),
      lie_(matrix_lie(field_, module_, basis_, span_, labels, provenance)) {}

std::optional<Vector> MatrixLieSuperalgebra::coordinates(const Matrix& m) const {
  return span_.coordinates(to_sparse(m.data()));
}

Vector MatrixLieSuperalgebra::require_coordinates(const Matrix& m, const std::string& what) const {
  auto c = coordinates(m);
  if (!c) throw std::logic_error(what + ": matrix outside the span");
  return *c;
}

Matrix MatrixLieSuperalgebra::combine(std::span<const Residue> coords) const {
  Matrix out(field_, module_.dim(), module_.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) axpy(field_, coords[i], basis_[i].data(), out.data());
  }
  return out;
}

}  // namespace supersquare

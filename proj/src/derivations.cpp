#include "supersquare/derivations.hpp"

#include <algorithm>
#include <stdexcept>

namespace supersquare {

void GradedProduct::check_graded() const {
  const std::size_t n = dim();
  if (degrees.size() != n) throw DimensionError("graded product: degree list size");
  for (std::size_t i = 0; i < n; ++i)
    if (degrees[i].parity() != space.parity(i)) throw ParityError("graded product: degree parity mismatch");
  std::size_t count = 1;
  for (unsigned a = 0; a < arity; ++a) count *= n;
  if (table.size() != count) throw DimensionError("graded product: table size");
  for (std::size_t t = 0; t < count; ++t) {
    Degree d;
    std::size_t rest = t;
    for (unsigned a = 0; a < arity; ++a) {
      d = d + degrees[rest % n];
      rest /= n;
    }
    for (const auto& e : table[t])
      if (!(degrees[e.index] == d)) throw std::logic_error("graded product: product leaves its degree");
  }
}

std::vector<Degree> degree_shifts(const std::vector<Degree>& degrees) {
  std::vector<Degree> out;
  for (auto a : degrees)
    for (auto b : degrees) out.push_back(a - b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Matrix> solve_shift(const GradedProduct& p, Degree sigma, std::size_t lower) {
  const auto& f = p.field;
  const std::size_t n = p.dim();
  const unsigned q = sigma.parity();
  std::vector<std::int64_t> var(n * n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      if (p.degrees[k] - p.degrees[m] == sigma) {
        var[k * n + m] = static_cast<std::int64_t>(unknowns.size());
        unknowns.emplace_back(k, m);
      }
  const std::size_t nu = unknowns.size();
  if (nu == 0) return {};
  // target[x] = basis elements of degree deg(x) + sigma
  std::vector<std::vector<std::uint32_t>> target(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      if (var[k * n + m] >= 0) target[m].push_back(static_cast<std::uint32_t>(k));

  RowReducer red(f, nu);
  auto done = [&] { return nu - red.rank() <= lower; };
  std::vector<std::vector<SparseEntry>> rows(n);
  std::vector<std::uint32_t> touched;
  auto put = [&](std::size_t k, std::size_t r, std::size_t c, Residue v) {
    const auto idx = var[r * n + c];
    if (idx < 0 || v == 0) return;
    if (rows[k].empty()) touched.push_back(static_cast<std::uint32_t>(k));
    rows[k].push_back({static_cast<std::uint32_t>(idx), v});
  };
  const unsigned a = p.arity;
  std::size_t count = 1;
  for (unsigned j = 0; j < a; ++j) count *= n;
  std::vector<std::size_t> x(a);
  for (std::size_t t = 0; t < count && !done(); ++t) {
    std::size_t rest = t;
    for (unsigned j = a; j-- > 0;) {
      x[j] = rest % n;
      rest /= n;
    }
    // D(P(x)): coefficient P(x)_m of D_{k,m}
    for (const auto& e : p.table[t])
      for (auto k : target[e.index]) put(k, k, e.index, e.value);
    unsigned before = 0;
    std::size_t stride = count;
    for (unsigned j = 0; j < a; ++j) {
      stride /= n;
      const Residue sg = f.neg(f.sign(q * before));
      const std::size_t base = t - x[j] * stride;
      for (auto r : target[x[j]]) {
        for (const auto& e : p.table[base + r * stride]) put(e.index, r, x[j], f.mul(sg, e.value));
      }
      before += p.space.parity(x[j]);
    }
    for (auto k : touched) {
      if (!done()) red.add_sparse(rows[k]);
      rows[k].clear();
    }
    touched.clear();
  }
  std::vector<Matrix> out;
  for (const auto& v : red.kernel_basis()) {
    Matrix m(f, n, n);
    for (std::size_t u = 0; u < nu; ++u) m.at(unknowns[u].first, unknowns[u].second) = v[u];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

GradedDerivations graded_derivations(const GradedProduct& p, const std::function<std::size_t(Degree)>& lower_bound) {
  p.check_graded();
  GradedDerivations out;
  for (auto sigma : degree_shifts(p.degrees)) {
    const std::size_t lower = lower_bound ? lower_bound(sigma) : 0;
    for (auto& m : solve_shift(p, sigma, lower)) {
      out.basis.push_back(std::move(m));
      out.shift.push_back(sigma);
    }
  }
  return out;
}

}  // namespace supersquare

#include "supersquare/composition.hpp"

#include <array>
#include <functional>

namespace supersquare {

namespace {

std::shared_ptr<const SuperSpace> make_space(std::size_t even, std::size_t odd,
                                             std::vector<std::string> labels) {
  return std::make_shared<const SuperSpace>(even, odd, std::move(labels));
}

/// Fills a dense table from a bilinear rule on basis indices.
Vector tabulate(const PrimeField& f, std::size_t n,
                const std::function<std::vector<std::int64_t>(std::size_t, std::size_t)>& rule) {
  Vector table(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = rule(i, j);
      for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = f.reduce(p[k]);
    }
  return table;
}

Matrix form_matrix(const PrimeField& f, std::size_t n,
                   std::initializer_list<std::tuple<std::size_t, std::size_t, std::int64_t>> entries) {
  Matrix b(f, n, n);
  for (auto [i, j, c] : entries) b.at(i, j) = f.reduce(c);
  return b;
}

std::string tuple_labels(const SuperSpace& s, std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ",";
    out += s.label(i);
    first = false;
  }
  return out + ")";
}

// Zorn vector matrices (a, u, v, b): basis e1, u1..u3, v1..v3, e2.
using Zorn = std::array<std::int64_t, 8>;

Zorn zorn_mul(const Zorn& x, const Zorn& y) {
  auto dot = [](const std::int64_t* p, const std::int64_t* q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; };
  auto cross = [](const std::int64_t* p, const std::int64_t* q, std::int64_t* out) {
    out[0] = p[1] * q[2] - p[2] * q[1];
    out[1] = p[2] * q[0] - p[0] * q[2];
    out[2] = p[0] * q[1] - p[1] * q[0];
  };
  const std::int64_t a = x[0], b = x[7], a2 = y[0], b2 = y[7];
  const std::int64_t* u = &x[1];
  const std::int64_t* v = &x[4];
  const std::int64_t* u2 = &y[1];
  const std::int64_t* v2 = &y[4];
  std::int64_t vv[3], uu[3];
  cross(v, v2, vv);
  cross(u, u2, uu);
  Zorn r{};
  r[0] = a * a2 + dot(u, v2);
  for (int k = 0; k < 3; ++k) {
    r[1 + k] = a * u2[k] + b2 * u[k] - vv[k];
    r[4 + k] = a2 * v[k] + b * v2[k] + uu[k];
  }
  r[7] = b * b2 + dot(v, u2);
  return r;
}

using Mat2 = std::array<std::int64_t, 4>;  // row-major a b / c d
Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}
Mat2 adjugate(const Mat2& m) { return {m[3], -m[1], -m[2], m[0]}; }
std::array<std::int64_t, 2> mat_apply(const Mat2& m, const std::array<std::int64_t, 2>& u) {
  return {m[0] * u[0] + m[1] * u[1], m[2] * u[0] + m[3] * u[1]};
}
/// <x|y> with <v|w> = 1.
std::int64_t symp(const std::array<std::int64_t, 2>& x, const std::array<std::int64_t, 2>& y) {
  return x[0] * y[1] - x[1] * y[0];
}

CompositionSuperalgebra make_b12(const PrimeField& f) {
  auto space = make_space(1, 2, {"1", "v", "w"});
  Vector t = tabulate(f, 3, [](std::size_t i, std::size_t j) {
    std::vector<std::int64_t> p(3, 0);
    if (i == 0) {
      p[j] = 1;
    } else if (j == 0) {
      p[i] = 1;
    } else if (i == 1 && j == 2) {
      p[0] = 1;
    } else if (i == 2 && j == 1) {
      p[0] = -1;
    }
    return p;
  });
  Matrix b = form_matrix(f, 3, {{0, 0, 2}, {1, 2, 1}, {2, 1, -1}});
  return CompositionSuperalgebra("B12", SuperAlgebra(f, space, std::move(t)),
                                 QuadraticSuperform(*space, std::move(b)), unit_vector(3, 0), false);
}

CompositionSuperalgebra make_b42(const PrimeField& f) {
  // even E11 E12 E21 E22 (E_ij sends the j-th basis vector of V to the i-th), odd v w
  auto space = make_space(4, 2, {"E11", "E12", "E21", "E22", "v", "w"});
  auto decode_mat = [](std::size_t i) {
    Mat2 m{0, 0, 0, 0};
    m[i] = 1;
    return m;
  };
  auto decode_vec = [](std::size_t i) {
    std::array<std::int64_t, 2> u{0, 0};
    u[i - 4] = 1;
    return u;
  };
  Vector t(6 * 6 * 6, 0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::int64_t, 6> r{};
      if (i < 4 && j < 4) {
        Mat2 m = mat_mul(decode_mat(i), decode_mat(j));
        for (int k = 0; k < 4; ++k) r[k] = m[k];
      } else if (i < 4) {
        auto u = mat_apply(adjugate(decode_mat(i)), decode_vec(j));
        r[4] = u[0];
        r[5] = u[1];
      } else if (j < 4) {
        auto u = mat_apply(decode_mat(j), decode_vec(i));
        r[4] = u[0];
        r[5] = u[1];
      } else {
        // x -> <x|u> v' as a matrix: column c is <e_c|u> v'
        auto u = decode_vec(i);
        auto v2 = decode_vec(j);
        for (int c = 0; c < 2; ++c) {
          std::array<std::int64_t, 2> ec{c == 0 ? 1 : 0, c == 1 ? 1 : 0};
          const std::int64_t s = symp(ec, u);
          for (int rr = 0; rr < 2; ++rr) r[rr * 2 + c] += s * v2[rr];
        }
      }
      for (std::size_t k = 0; k < 6; ++k) t[(i * 6 + j) * 6 + k] = f.reduce(r[k]);
    }
  Matrix b = form_matrix(f, 6, {{0, 3, 1}, {3, 0, 1}, {1, 2, -1}, {2, 1, -1}, {4, 5, 1}, {5, 4, -1}});
  Vector unit(6, 0);
  unit[0] = unit[3] = 1;
  return CompositionSuperalgebra("B42", SuperAlgebra(f, space, std::move(t)),
                                 QuadraticSuperform(*space, std::move(b)), unit, false);
}

}  // namespace

CompositionSuperalgebra::CompositionSuperalgebra(std::string name, SuperAlgebra algebra,
                                                 QuadraticSuperform form, std::optional<Vector> unit,
                                                 bool symmetric)
    : name_(std::move(name)), algebra_(std::move(algebra)), form_(std::move(form)),
      unit_(std::move(unit)), symmetric_(symmetric) {
  if (form_.polar().rows() != algebra_.dim()) throw DimensionError("composition: form size");
  if (unit_ && unit_->size() != algebra_.dim()) throw DimensionError("composition: unit size");
}

CompositionSuperalgebra build_hurwitz(HurwitzKind kind, const PrimeField& f) {
  switch (kind) {
    case HurwitzKind::unit: {
      auto space = make_space(1, 0, {"1"});
      Vector t{1};
      return CompositionSuperalgebra("k", SuperAlgebra(f, space, t),
                                     QuadraticSuperform(*space, form_matrix(f, 1, {{0, 0, 2}})),
                                     unit_vector(1, 0), false);
    }
    case HurwitzKind::binarion: {
      auto space = make_space(2, 0, {"e1", "e2"});
      Vector t(8, 0);
      t[(0 * 2 + 0) * 2 + 0] = 1;
      t[(1 * 2 + 1) * 2 + 1] = 1;
      Vector unit{1, 1};
      return CompositionSuperalgebra("kxk", SuperAlgebra(f, space, t),
                                     QuadraticSuperform(*space, form_matrix(f, 2, {{0, 1, 1}, {1, 0, 1}})),
                                     unit, false);
    }
    case HurwitzKind::quaternion: {
      auto space = make_space(4, 0, {"E11", "E12", "E21", "E22"});
      Vector t = tabulate(f, 4, [](std::size_t i, std::size_t j) {
        Mat2 x{0, 0, 0, 0}, y{0, 0, 0, 0};
        x[i] = 1;
        y[j] = 1;
        Mat2 m = mat_mul(x, y);
        return std::vector<std::int64_t>(m.begin(), m.end());
      });
      Matrix b = form_matrix(f, 4, {{0, 3, 1}, {3, 0, 1}, {1, 2, -1}, {2, 1, -1}});
      Vector unit{1, 0, 0, 1};
      return CompositionSuperalgebra("Mat2", SuperAlgebra(f, space, std::move(t)),
                                     QuadraticSuperform(*space, std::move(b)), unit, false);
    }
    case HurwitzKind::octonion: {
      auto space = make_space(8, 0, {"e1", "u1", "u2", "u3", "v1", "v2", "v3", "e2"});
      Vector t(512, 0);
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
          Zorn x{}, y{};
          x[i] = 1;
          y[j] = 1;
          Zorn r = zorn_mul(x, y);
          for (std::size_t k = 0; k < 8; ++k) t[(i * 8 + j) * 8 + k] = f.reduce(r[k]);
        }
      Matrix b = form_matrix(f, 8, {{0, 7, 1}, {7, 0, 1}, {1, 4, -1}, {4, 1, -1}, {2, 5, -1},
                                    {5, 2, -1}, {3, 6, -1}, {6, 3, -1}});
      Vector unit(8, 0);
      unit[0] = unit[7] = 1;
      return CompositionSuperalgebra("C", SuperAlgebra(f, space, std::move(t)),
                                     QuadraticSuperform(*space, std::move(b)), unit, false);
    }
  }
  throw std::invalid_argument("unknown Hurwitz kind");
}

CompositionSuperalgebra build_b12(const PrimeField& field) {
  require_characteristic_three(field, "B(1,2)");
  return make_b12(field);
}

CompositionSuperalgebra build_b42(const PrimeField& field) {
  require_characteristic_three(field, "B(4,2)");
  return make_b42(field);
}

CompositionSuperalgebra build_b12_unchecked(const PrimeField& field) { return make_b12(field); }
CompositionSuperalgebra build_b42_unchecked(const PrimeField& field) { return make_b42(field); }

Matrix standard_involution(const CompositionSuperalgebra& c) {
  if (!c.unit()) throw std::invalid_argument("standard involution needs a unit");
  const auto& f = c.field();
  const std::size_t n = c.dim();
  const Vector& one = *c.unit();
  Matrix m(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Residue bj = c.b(unit_vector(n, j), one);
    for (std::size_t r = 0; r < n; ++r) m.at(r, j) = f.mul(bj, one[r]);
    m.at(j, j) = f.sub(m.at(j, j), 1);
  }
  return m;
}

CompositionSuperalgebra petersson(const CompositionSuperalgebra& c, const Matrix& phi,
                                  const std::string& name) {
  const auto& f = c.field();
  const std::size_t n = c.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionError("petersson: phi shape");
  if (matrix_parity(c.space(), phi).value_or(0) != 0) throw ParityError("petersson: phi must be even");
  const Matrix phi2 = phi * phi;
  if (!(phi2 * phi == Matrix::identity(f, n))) {
    throw std::invalid_argument("petersson: phi^3 is not the identity");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = phi.apply(c.product(i, j));
      Vector rhs = c.multiply(phi.column(i), phi.column(j));
      if (lhs != rhs) throw std::invalid_argument("petersson: phi is not an automorphism");
    }
  const Matrix bar = standard_involution(c);
  const Matrix a = phi * bar;
  const Matrix a2 = phi2 * bar;
  Vector t(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = c.multiply(a.column(i), a2.column(j));
      std::copy(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  return CompositionSuperalgebra(name, SuperAlgebra(f, c.space_ptr(), std::move(t)), c.form(),
                                 std::nullopt, true);
}

CompositionSuperalgebra para_hurwitz(const CompositionSuperalgebra& c, const std::string& name) {
  return petersson(c, Matrix::identity(c.field(), c.dim()), name);
}

CompositionSuperalgebra build_s12_lambda(const PrimeField& field, Residue lambda) {
  CompositionSuperalgebra b12 = build_b12(field);
  Matrix phi = Matrix::identity(field, 3);
  phi.at(1, 2) = field.reduce(lambda);
  const std::string name = lambda == 0 ? "S12" : "S12_" + std::to_string(lambda);
  return petersson(b12, phi, name);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"S1", "S2", "S4", "S8", "S12", "S42"};
  return names;
}

CompositionSuperalgebra hurwitz_of(const std::string& name, const PrimeField& field) {
  if (name == "S1") return build_hurwitz(HurwitzKind::unit, field);
  if (name == "S2") return build_hurwitz(HurwitzKind::binarion, field);
  if (name == "S4") return build_hurwitz(HurwitzKind::quaternion, field);
  if (name == "S8") return build_hurwitz(HurwitzKind::octonion, field);
  if (name == "S12") return build_b12(field);
  if (name == "S42") return build_b42(field);
  throw std::invalid_argument("no Hurwitz superalgebra attached to '" + name + "'");
}

CompositionSuperalgebra catalog(const std::string& name, const PrimeField& field) {
  if (name == "S8~" || name == "S8t" || name == "Okubo") {
    throw std::invalid_argument("the Okubo algebra is not constructed");
  }
  if (name.rfind("S12_", 0) == 0) {
    const std::string tail = name.substr(4);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad lambda in '" + name + "'");
    }
    return build_s12_lambda(field, field.reduce(std::stoll(tail)));
  }
  if (name == "S12") return build_s12_lambda(field, 0);
  return para_hurwitz(hurwitz_of(name, field), name);
}

bool AxiomReport::pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

AxiomReport verify_composition(const CompositionSuperalgebra& s) {
  const auto& f = s.field();
  const auto& sp = s.space();
  const std::size_t n = s.dim();
  const std::size_t ne = sp.even_dim();
  AxiomReport report;

  // b(e_i e_j, e_k e_l), tabulated once
  std::vector<Residue> bp(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          bp[((i * n + j) * n + k) * n + l] = s.b(s.product(i, j), s.product(k, l));
  auto B = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return bp[((i * n + j) * n + k) * n + l];
  };
  auto fail = [&](AxiomResult& r, std::string w) {
    if (r.pass) r.witness = std::move(w);
    r.pass = false;
  };

  AxiomResult regular{"regular", s.form().regular(), ""};
  if (!regular.pass) regular.witness = "polar form is degenerate";
  report.results.push_back(regular);

  AxiomResult parity{"parity", s.algebra().parity_additive(), ""};
  report.results.push_back(parity);

  if (s.unit()) {
    AxiomResult unit{"unit", true, ""};
    for (std::size_t x = 0; x < n; ++x) {
      Vector ex = unit_vector(n, x);
      if (s.multiply(*s.unit(), ex) != ex || s.multiply(ex, *s.unit()) != ex) {
        fail(unit, tuple_labels(sp, {x}));
      }
    }
    report.results.push_back(unit);
  }

  // q0(xy) = q0(x)q0(y) on even basis pairs and in fully polarized form
  AxiomResult mult{"norm_multiplicative", true, ""};
  for (std::size_t x = 0; x < ne; ++x)
    for (std::size_t y = 0; y < ne; ++y) {
      const Residue lhs = f.mul(f.half(), B(x, y, x, y));
      const Residue rhs = f.mul(f.mul(f.half(), s.b(x, x)), f.mul(f.half(), s.b(y, y)));
      if (lhs != rhs) fail(mult, tuple_labels(sp, {x, y}));
      for (std::size_t x2 = 0; x2 < ne; ++x2)
        for (std::size_t y2 = 0; y2 < ne; ++y2) {
          if (f.add(B(x, y, x2, y2), B(x, y2, x2, y)) != f.mul(s.b(x, x2), s.b(y, y2))) {
            fail(mult, tuple_labels(sp, {x, y, x2, y2}));
          }
        }
    }
  report.results.push_back(mult);

  // b(x0 y, x0 z) = q0(x0) b(y,z) = b(y x0, z x0), polarized in x0
  AxiomResult scaling{"norm_scaling", true, ""};
  for (std::size_t x = 0; x < ne; ++x)
    for (std::size_t x2 = 0; x2 < ne; ++x2)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Residue rhs = f.mul(s.b(x, x2), s.b(y, z));
          if (f.add(B(x, y, x2, z), B(x2, y, x, z)) != rhs ||
              f.add(B(y, x, z, x2), B(y, x2, z, x)) != rhs) {
            fail(scaling, tuple_labels(sp, {x, x2, y, z}));
          }
        }
  report.results.push_back(scaling);

  // b(xy,zt) + (-1)^{|x||y|+|x||z|+|y||z|} b(zy,xt) = (-1)^{|y||z|} b(x,z) b(y,t)
  AxiomResult polar{"norm_polarized", true, ""};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          const unsigned px = sp.parity(x), py = sp.parity(y), pz = sp.parity(z);
          const Residue lhs = f.add(B(x, y, z, t), f.mul(f.sign(px * py + px * pz + py * pz), B(z, y, x, t)));
          const Residue rhs = f.mul(f.sign(py * pz), f.mul(s.b(x, z), s.b(y, t)));
          if (lhs != rhs) fail(polar, tuple_labels(sp, {x, y, z, t}));
        }
  report.results.push_back(polar);

  if (s.symmetric()) {
    AxiomResult assoc{"form_associative", true, ""};
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          if (s.b(s.product(x, y), unit_vector(n, z)) != s.b(unit_vector(n, x), s.product(y, z))) {
            fail(assoc, tuple_labels(sp, {x, y, z}));
          }
        }
    report.results.push_back(assoc);
  }
  return report;
}

CompositionSuperalgebra with_scaled_form(const CompositionSuperalgebra& s, Residue c) {
  return CompositionSuperalgebra(s.name(), s.algebra(),
                                 QuadraticSuperform(s.space(), s.form().polar().scaled(c)), s.unit(),
                                 s.symmetric());
}

}  // namespace supersquare

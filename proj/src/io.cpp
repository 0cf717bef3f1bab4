#include "supersquare/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace supersquare {

namespace {

template <class Product>
void fill_binary(TensorFile& t, std::size_t n, Product product) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : product(i, j))
        t.product.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), e.index, e.value});
}

template <class Form>
void fill_form(TensorFile& t, std::size_t n, Form form) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (const Residue c = form(i, j); c != 0)
        t.form.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
}

TensorFile header(std::string kind, std::string name, const PrimeField& f, const SuperSpace& s) {
  TensorFile t;
  t.kind = std::move(kind);
  t.name = std::move(name);
  t.p = f.characteristic();
  t.even_dim = s.even_dim();
  t.odd_dim = s.odd_dim();
  for (std::size_t i = 0; i < s.dim(); ++i) t.labels.push_back(s.label(i));
  return t;
}

void check(const TensorFile& t) {
  if (t.name.empty() || t.name.find_first_of(" \t\n") != std::string::npos) {
    throw std::invalid_argument("tensor file: name must be one nonempty word");
  }
  if (t.labels.size() != t.dim()) throw std::invalid_argument("tensor file: label count");
  const std::size_t width = t.arity() + 2;
  for (const auto& e : t.product) {
    if (e.size() != width) throw std::invalid_argument("tensor file: product entry width");
    for (std::size_t k = 0; k + 1 < width; ++k)
      if (e[k] >= t.dim()) throw std::invalid_argument("tensor file: index out of range");
    if (e.back() == 0 || e.back() >= t.p) throw std::invalid_argument("tensor file: coefficient out of range");
  }
  for (const auto& e : t.form)
    if (e[0] >= t.dim() || e[1] >= t.dim() || e[2] == 0 || e[2] >= t.p)
      throw std::invalid_argument("tensor file: bad form entry");
}

SparseVector sparse_sorted(std::vector<SparseEntry> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k].index == v[k - 1].index) throw std::invalid_argument("tensor file: repeated entry");
  return v;
}

}  // namespace

TensorFile to_tensor(const LieSuperalgebra& l, const std::string& name) {
  TensorFile t = header("algebra", name, l.field(), l.space());
  fill_binary(t, l.dim(), [&](std::size_t i, std::size_t j) -> const SparseVector& { return l.bracket(i, j); });
  return t;
}

TensorFile to_tensor(const CompositionSuperalgebra& s) {
  TensorFile t = header("algebra", s.name(), s.field(), s.space());
  fill_binary(t, s.dim(), [&](std::size_t i, std::size_t j) { return to_sparse(s.product(i, j)); });
  fill_form(t, s.dim(), [&](std::size_t i, std::size_t j) { return s.b(i, j); });
  return t;
}

TensorFile to_tensor(const JordanSuperalgebra& j) {
  TensorFile t = header("algebra", j.name(), j.field(), j.space());
  fill_binary(t, j.dim(), [&](std::size_t a, std::size_t b) { return to_sparse(j.algebra().product(a, b)); });
  const Matrix tf = trace_form(j);
  fill_form(t, j.dim(), [&](std::size_t a, std::size_t b) { return tf.at(a, b); });
  return t;
}

TensorFile to_tensor(const TripleSystem& s) {
  TensorFile t = header(to_string(s.kind()), s.name(), s.field(), s.space());
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& e : s.triple(i, j, k))
          t.product.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                               static_cast<std::uint32_t>(k), e.index, e.value});
  fill_form(t, n, [&](std::size_t a, std::size_t b) { return s.form(a, b); });
  return t;
}

// ---------------------------------------------------------------------------

std::string write_text(const TensorFile& t) {
  check(t);
  std::ostringstream out;
  out << t.kind << ' ' << t.name << ' ' << t.p << ' ' << t.even_dim << ' ' << t.odd_dim << '\n';
  for (std::size_t i = 0; i < t.labels.size(); ++i) out << "label " << i << ' ' << t.labels[i] << '\n';
  out << "product " << t.product.size() << '\n';
  for (const auto& e : t.product) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
  out << "form " << t.form.size() << '\n';
  for (const auto& e : t.form) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
  out << "end\n";
  return out.str();
}

TensorFile read_text(const std::string& text) {
  std::istringstream in(text);
  TensorFile t;
  auto fail = [](const std::string& what) { throw std::invalid_argument("tensor-text: " + what); };
  std::string line;
  if (!std::getline(in, line)) fail("empty input");
  {
    std::istringstream h(line);
    if (!(h >> t.kind >> t.name >> t.p >> t.even_dim >> t.odd_dim)) fail("bad header");
  }
  if (t.kind != "algebra" && t.kind != "orthogonal" && t.kind != "symplectic" && t.kind != "orthosymplectic") {
    fail("unknown kind '" + t.kind + "'");
  }
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (!std::getline(in, line)) fail("missing label");
    std::istringstream l(line);
    std::string tag;
    std::size_t idx = 0;
    if (!(l >> tag >> idx) || tag != "label" || idx != i) fail("bad label line " + std::to_string(i));
    std::string rest;
    l >> std::ws;
    std::getline(l, rest);
    t.labels.push_back(rest);
  }
  std::string tag;
  std::size_t count = 0;
  if (!(in >> tag >> count) || tag != "product") fail("missing product section");
  const std::size_t width = t.arity() + 2;
  t.product.assign(count, std::vector<std::uint32_t>(width));
  for (auto& e : t.product)
    for (auto& x : e)
      if (!(in >> x)) fail("truncated product section");
  if (!(in >> tag >> count) || tag != "form") fail("missing form section");
  t.form.resize(count);
  for (auto& e : t.form)
    if (!(in >> e[0] >> e[1] >> e[2])) fail("truncated form section");
  if (!(in >> tag) || tag != "end") fail("missing end");
  check(t);
  return t;
}

std::string write_json(const TensorFile& t) {
  check(t);
  nlohmann::ordered_json j;
  j["kind"] = t.kind;
  j["name"] = t.name;
  j["p"] = t.p;
  j["even_dim"] = t.even_dim;
  j["odd_dim"] = t.odd_dim;
  j["labels"] = t.labels;
  j["product"] = t.product;
  nlohmann::ordered_json form = nlohmann::ordered_json::array();
  for (const auto& e : t.form) form.push_back({e[0], e[1], e[2]});
  j["form"] = form;
  return j.dump() + "\n";
}

TensorFile read_json(const std::string& text) {
  TensorFile t;
  try {
    const auto j = nlohmann::json::parse(text);
    t.kind = j.at("kind").get<std::string>();
    t.name = j.at("name").get<std::string>();
    t.p = j.at("p").get<std::uint32_t>();
    t.even_dim = j.at("even_dim").get<std::size_t>();
    t.odd_dim = j.at("odd_dim").get<std::size_t>();
    t.labels = j.at("labels").get<std::vector<std::string>>();
    t.product = j.at("product").get<std::vector<std::vector<std::uint32_t>>>();
    for (const auto& e : j.at("form")) {
      const auto v = e.get<std::vector<std::uint32_t>>();
      if (v.size() != 3) throw std::invalid_argument("json: form entries have three fields");
      t.form.push_back({v[0], v[1], v[2]});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
  check(t);
  return t;
}

// ---------------------------------------------------------------------------

LieSuperalgebra lie_from_tensor(const TensorFile& t) {
  if (t.kind != "algebra") throw std::invalid_argument("lie_from_tensor: not a binary product");
  check(t);
  const PrimeField f(t.p);
  const std::size_t n = t.dim();
  std::vector<std::vector<SparseEntry>> table(n * n);
  for (const auto& e : t.product) table[e[0] * n + e[1]].push_back({e[2], e[3]});
  std::vector<SparseVector> out;
  for (auto& v : table) out.push_back(sparse_sorted(std::move(v)));
  return LieSuperalgebra(f, SuperSpace(t.even_dim, t.odd_dim, t.labels), std::move(out), t.name);
}

TripleSystem triple_from_tensor(const TensorFile& t) {
  TripleKind kind;
  if (t.kind == "orthogonal") kind = TripleKind::orthogonal;
  else if (t.kind == "symplectic") kind = TripleKind::symplectic;
  else if (t.kind == "orthosymplectic") kind = TripleKind::orthosymplectic;
  else throw std::invalid_argument("triple_from_tensor: not a triple system");
  check(t);
  const PrimeField f(t.p);
  const std::size_t n = t.dim();
  SuperSpace space(t.even_dim, t.odd_dim, t.labels);
  std::vector<Degree> degrees(n);
  for (std::size_t i = 0; i < n; ++i) degrees[i] = {0, space.parity(i)};
  Matrix form(f, n, n);
  for (const auto& e : t.form) form.at(e[0], e[1]) = e[2];
  std::vector<std::vector<SparseEntry>> table(n * n * n);
  for (const auto& e : t.product) table[(e[0] * n + e[1]) * n + e[2]].push_back({e[3], e[4]});
  std::vector<SparseVector> product;
  for (auto& v : table) product.push_back(sparse_sorted(std::move(v)));
  return TripleSystem(kind, t.name, f, std::move(space), std::move(degrees), std::move(form), std::move(product));
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

}  // namespace supersquare

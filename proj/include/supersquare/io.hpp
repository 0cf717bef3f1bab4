#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "supersquare/triples.hpp"

namespace supersquare {

/// Structure constants of an algebra or triple system in a format-neutral form.
///
/// kind is "algebra" (binary product) or a triple kind (ternary product).
/// Entries are sorted and carry nonzero coefficients only.
struct TensorFile {
  std::string kind;
  std::string name;
  std::uint32_t p = 0;
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> product;  // i j k c, or i j k l c
  std::vector<std::array<std::uint32_t, 3>> form;     // i j c

  unsigned arity() const { return kind == "algebra" ? 2 : 3; }
  std::size_t dim() const { return even_dim + odd_dim; }
  bool operator==(const TensorFile&) const = default;
};

TensorFile to_tensor(const LieSuperalgebra& l, const std::string& name);
TensorFile to_tensor(const CompositionSuperalgebra& s);
/// Product with the trace form t(x o y).
TensorFile to_tensor(const JordanSuperalgebra& j);
TensorFile to_tensor(const TripleSystem& t);

/// Tensor-text:
///   line 1      "<kind> <name> <p> <even_dim> <odd_dim>"
///   labels      one "label <i> <text>" line per basis element
///   products    "<i> <j> <k> <c>" (algebra) or "<i> <j> <k> <l> <c>" (triple), after a "product <count>" line
///   form        "<i> <j> <c>" lines after a "form <count>" line
///   "end"
std::string write_text(const TensorFile& t);
TensorFile read_text(const std::string& text);

/// JSON object with keys kind, name, p, even_dim, odd_dim, labels, product, form;
/// product and form are arrays of integer arrays in the tensor-text order.
std::string write_json(const TensorFile& t);
TensorFile read_json(const std::string& text);

LieSuperalgebra lie_from_tensor(const TensorFile& t);
/// Degrees are reset to the bare parity grading.
TripleSystem triple_from_tensor(const TensorFile& t);

std::string sha256_hex(const std::string& bytes);

}  // namespace supersquare

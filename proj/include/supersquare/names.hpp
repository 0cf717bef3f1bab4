#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supersquare/io.hpp"
#include "supersquare/triple_lie.hpp"

namespace supersquare {

/// Unknown or malformed object name; `suggestion` is the closest known spelling, if any.
class NameError : public std::invalid_argument {
 public:
  NameError(const std::string& what, std::string suggestion)
      : std::invalid_argument(what), suggestion_(std::move(suggestion)) {}
  const std::string& suggestion() const noexcept { return suggestion_; }

 private:
  std::string suggestion_;
};

/// Parsed name: an atom ("S4") or head(args) ("g(S4,S42)").
struct NameNode {
  std::string head;
  std::vector<NameNode> args;
  std::string str() const;
};

/// Grammar:
///   comp  := S1 | S2 | S4 | S8 | S12 | S12_<n> | S42 | B12 | B42
///   obj   := comp | tri(comp) | g(comp,comp) | H3(comp) | der(H3(comp)) | inder(H3(comp))
///          | TJO(comp) | TJS(comp) | TJOS(comp) | der(T) | inder(T)
///          | gJ(comp) | G(T) | G(T,der) | G(T,derJ) | Gt(T) | Gt(T,der)
/// where T is one of the TJ* forms. Whitespace is ignored.
NameNode parse_name(const std::string& text);

enum class ObjectKind { composition, lie, jordan, triple };

/// A constructed catalog object; exactly one payload is set.
struct CatalogObject {
  std::string name;
  ObjectKind kind = ObjectKind::lie;
  std::optional<CompositionSuperalgebra> composition;
  std::optional<LieSuperalgebra> lie;
  std::optional<JordanSuperalgebra> jordan;
  std::optional<TripleSystem> triple;
  std::string superdim() const;
};

CatalogObject build_object(const std::string& text, const PrimeField& field);
TensorFile tensor_of(const CatalogObject& o);

/// Levenshtein distance, for suggestions.
std::size_t edit_distance(const std::string& a, const std::string& b);

}  // namespace supersquare

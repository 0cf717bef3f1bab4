#include "supersquare/names.hpp"

#include <algorithm>
#include <cctype>

namespace supersquare {

std::string NameNode::str() const {
  if (args.empty()) return head;
  std::string s = head + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].str();
  return s + ")";
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

const std::vector<std::string> kAtoms{"S1", "S2", "S4", "S8", "S12", "S42", "B12", "B42"};
const std::vector<std::string> kHeads{"tri", "g", "H3", "der", "inder", "TJO", "TJS", "TJOS", "gJ", "G", "Gt"};

std::string closest(const std::string& word, const std::vector<std::string>& known) {
  std::string best;
  std::size_t d = 3;  // suggest only near misses
  for (const auto& k : known) {
    const std::size_t e = edit_distance(word, k);
    if (e < d) {
      d = e;
      best = k;
    }
  }
  return best;
}

[[noreturn]] void unknown(const std::string& word, const std::vector<std::string>& known, const std::string& what) {
  const std::string s = closest(word, known);
  throw NameError("unknown " + what + " '" + word + "'" + (s.empty() ? "" : "; did you mean '" + s + "'?"), s);
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  NameNode parse() {
    NameNode n = node();
    if (pos_ != s_.size()) throw NameError("trailing characters in name at '" + s_.substr(pos_) + "'", "");
    return n;
  }

 private:
  NameNode node() {
    NameNode n;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      n.head += s_[pos_++];
    if (n.head.empty()) throw NameError("expected a name at position " + std::to_string(pos_), "");
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      n.args.push_back(node());
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        n.args.push_back(node());
      }
      if (pos_ >= s_.size() || s_[pos_] != ')') throw NameError("missing ')' in name", "");
      ++pos_;
    }
    return n;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

void arity(const NameNode& n, std::size_t lo, std::size_t hi) {
  if (n.args.size() < lo || n.args.size() > hi) {
    throw NameError("'" + n.head + "' takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                        " argument(s): " + n.str(),
                    "");
  }
}

bool is_lambda_atom(const std::string& s) {
  return s.size() > 4 && s.rfind("S12_", 0) == 0 && std::all_of(s.begin() + 4, s.end(), ::isdigit);
}

CompositionSuperalgebra composition_atom(const NameNode& n, const PrimeField& f, bool para_only) {
  if (!n.args.empty()) throw NameError("expected a composition superalgebra, got " + n.str(), "");
  if (n.head == "B12" && !para_only) return build_b12(f);
  if (n.head == "B42" && !para_only) return build_b42(f);
  if (is_lambda_atom(n.head) || std::count(kAtoms.begin(), kAtoms.begin() + 6, n.head)) return catalog(n.head, f);
  unknown(n.head, kAtoms, "composition superalgebra");
}

bool is_triple_head(const std::string& h) { return h == "TJO" || h == "TJS" || h == "TJOS"; }

TripleSystem triple_node(const NameNode& n, const PrimeField& f) {
  arity(n, 1, 1);
  const JordanSuperalgebra j = build_h3(composition_atom(n.args[0], f, true));
  if (n.head == "TJS") return build_tjs(j).system;
  const JordanTriple t(j);
  const bool super = j.space().odd_dim() != 0;
  if (n.head == "TJO" && super) throw NameError("TJO needs an ordinary S; use TJOS(" + n.args[0].str() + ")", "TJOS");
  if (n.head == "TJOS" && !super) throw NameError("TJOS needs a super S; use TJO(" + n.args[0].str() + ")", "TJO");
  return t.system();
}

CatalogObject lie_object(const std::string& name, LieSuperalgebra l) {
  CatalogObject o;
  o.name = name;
  o.kind = ObjectKind::lie;
  o.lie = std::move(l);
  return o;
}

}  // namespace

NameNode parse_name(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return Parser(s).parse();
}

std::string CatalogObject::superdim() const {
  switch (kind) {
    case ObjectKind::composition: return composition->space().superdim();
    case ObjectKind::lie: return lie->space().superdim();
    case ObjectKind::jordan: return jordan->space().superdim();
    case ObjectKind::triple: return triple->space().superdim();
  }
  return "?";
}

CatalogObject build_object(const std::string& text, const PrimeField& f) {
  const NameNode n = parse_name(text);
  const std::string name = n.str();
  CatalogObject o;
  o.name = name;
  if (n.args.empty()) {
    o.kind = ObjectKind::composition;
    o.composition = composition_atom(n, f, false);
    return o;
  }
  if (std::find(kHeads.begin(), kHeads.end(), n.head) == kHeads.end()) unknown(n.head, kHeads, "constructor");
  if (n.head == "tri") {
    arity(n, 1, 1);
    return lie_object(name, compute_tri(composition_atom(n.args[0], f, true)).lie());
  }
  if (n.head == "g") {
    arity(n, 2, 2);
    return lie_object(name, magic_square(composition_atom(n.args[0], f, true), composition_atom(n.args[1], f, true)).lie);
  }
  if (n.head == "H3") {
    arity(n, 1, 1);
    o.kind = ObjectKind::jordan;
    o.jordan = build_h3(composition_atom(n.args[0], f, true));
    return o;
  }
  if (is_triple_head(n.head)) {
    o.kind = ObjectKind::triple;
    o.triple = triple_node(n, f);
    return o;
  }
  if (n.head == "der" || n.head == "inder") {
    arity(n, 1, 1);
    const NameNode& a = n.args[0];
    if (a.head == "H3") {
      arity(a, 1, 1);
      const JordanSuperalgebra j = build_h3(composition_atom(a.args[0], f, true));
      const JordanDerivations d = compute_der(j);
      if (n.head == "der") return lie_object(name, d.algebra.lie());
      return lie_object(name, restrict_to(d.algebra.lie(), inner_der(j, d.algebra), name));
    }
    if (is_triple_head(a.head)) {
      const TripleSystem t = triple_node(a, f);
      const TripleDerivations in = inner_derivations(t);
      if (n.head == "inder") return lie_object(name, in.algebra.lie());
      return lie_object(name, derivations(t, in).algebra.lie());
    }
    throw NameError("'" + n.head + "' applies to H3(...) or a TJ* system, got " + a.str(), "");
  }
  if (n.head == "gJ") {
    arity(n, 1, 1);
    const JordanSuperalgebra j = build_h3(composition_atom(n.args[0], f, true));
    const JordanTriple t(j);
    const MatrixLieSuperalgebra s = induced_derivations(t, compute_der(j).algebra);
    return lie_object(name, j.space().odd_dim() ? lie_from_orthosymplectic(t.system(), s).lie
                                                : lie_from_orthogonal(t.system(), s).lie);
  }
  // G and Gt
  arity(n, 1, 2);
  const NameNode& a = n.args[0];
  if (!is_triple_head(a.head)) throw NameError("'" + n.head + "' expects a TJ* system, got " + a.str(), "TJS");
  const std::string which = n.args.size() == 2 ? n.args[1].str() : "inder";
  if (which != "inder" && which != "der" && which != "derJ") {
    unknown(which, {"inder", "der", "derJ"}, "derivation algebra");
  }
  const TripleSystem t = triple_node(a, f);
  std::optional<MatrixLieSuperalgebra> s;
  if (which == "derJ") {
    if (a.head == "TJS") throw NameError("derJ applies to TJO and TJOS", "der");
    const JordanSuperalgebra j = build_h3(composition_atom(a.args[0], f, true));
    s = induced_derivations(JordanTriple(j), compute_der(j).algebra);
  } else {
    TripleDerivations in = inner_derivations(t);
    s = which == "inder" ? std::move(in.algebra) : derivations(t, in).algebra;
  }
  if (n.head == "Gt") {
    if (a.head != "TJS") throw NameError("Gt applies to TJS only", "G");
    return lie_object(name, superalgebra_from_symplectic(t, *s).lie);
  }
  switch (t.kind()) {
    case TripleKind::orthogonal: return lie_object(name, lie_from_orthogonal(t, *s).lie);
    case TripleKind::symplectic: return lie_object(name, lie_from_symplectic(t, *s).lie);
    case TripleKind::orthosymplectic: return lie_object(name, lie_from_orthosymplectic(t, *s).lie);
  }
  throw std::logic_error("unreachable");
}

TensorFile tensor_of(const CatalogObject& o) {
  switch (o.kind) {
    case ObjectKind::composition: return to_tensor(*o.composition);
    case ObjectKind::lie: return to_tensor(*o.lie, o.name);
    case ObjectKind::jordan: return to_tensor(*o.jordan);
    case ObjectKind::triple: return to_tensor(*o.triple);
  }
  throw std::logic_error("unreachable");
}

}  // namespace supersquare

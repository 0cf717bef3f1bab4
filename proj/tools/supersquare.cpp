// Command-line front end: build, verify, table, iso, export, triples.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad usage, unknown name
// or a construction that refuses the requested field.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "supersquare/io.hpp"
#include "supersquare/names.hpp"

using namespace supersquare;

namespace {

struct Reporter {
  std::ostream& out;
  bool failed = false;

  void check(const std::string& id, bool pass, const std::string& dims = "", const std::string& witness = "") {
    out << "CHECK " << id << ' ' << (pass ? "PASS" : "FAIL");
    if (!dims.empty()) out << " dims=" << dims;
    if (!witness.empty()) out << " witness=" << witness;
    out << '\n';
    failed = failed || !pass;
  }
  void info(const std::string& id, const std::string& value) { out << "INFO " << id << ' ' << value << '\n'; }
  int code() const { return failed ? 1 : 0; }
};

void verify_lie(Reporter& r, const std::string& name, const LieSuperalgebra& l, bool probe, std::size_t trials,
                std::uint64_t seed) {
  const JacobiReport j = check_super_jacobi(l);
  r.check(name + ".jacobi", j.pass(), l.space().superdim(), j.witness);
  r.info(name + ".derived", derived_subalgebra(l).superdim());
  r.info(name + ".center", center(l).superdim());
  if (probe) {
    const SimplicityVerdict v = probe_simplicity(l, trials, seed);
    r.check(name + ".simple", v.probably_simple, l.space().superdim(),
            v.probably_simple ? "" : v.reason + ":" + std::to_string(v.witness_dim));
  }
}

void verify_triple_system(Reporter& r, const TripleSystem& t) {
  for (const auto& a : verify_triple(t).results)
    r.check(t.name() + "." + a.id, a.pass, a.id == "form" ? t.space().superdim() : "", a.witness);
}

int cmd_build(Reporter& r, const std::string& name, const PrimeField& f) {
  const CatalogObject o = build_object(name, f);
  r.out << "BUILT " << o.name << " dims=" << o.superdim() << '\n';
  return 0;
}

int cmd_verify(Reporter& r, const std::string& name, const PrimeField& f, bool probe, std::size_t trials,
               std::uint64_t seed) {
  const CatalogObject o = build_object(name, f);
  switch (o.kind) {
    case ObjectKind::composition:
      for (const auto& a : verify_composition(*o.composition).results)
        r.check(o.name + "." + a.id, a.pass, o.superdim(), a.witness);
      break;
    case ObjectKind::lie: verify_lie(r, o.name, *o.lie, probe, trials, seed); break;
    case ObjectKind::jordan: {
      r.check(o.name + ".supercommutative", is_supercommutative(*o.jordan), o.superdim());
      const JordanDerivations d = compute_der(*o.jordan);
      const JacobiReport j = check_super_jacobi(d.algebra.lie());
      r.check(o.name + ".der.jacobi", j.pass(), d.algebra.lie().space().superdim(), j.witness);
      r.info(o.name + ".inder", inner_der(*o.jordan, d.algebra).superdim());
      break;
    }
    case ObjectKind::triple: verify_triple_system(r, *o.triple); break;
  }
  return r.code();
}

int cmd_table(Reporter& r, const PrimeField& f, const std::string& expect) {
  std::ifstream in(expect);
  if (!in) {
    std::cerr << "cannot read expectation file " << expect << '\n';
    return 2;
  }
  std::vector<TableEntry> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream s(line);
    TableEntry e;
    if (!(s >> e.row >> e.col >> e.even >> e.odd)) {
      std::cerr << "bad expectation line: " << line << '\n';
      return 2;
    }
    rows.push_back(e);
  }
  for (const auto& e : rows) {
    const MagicSquare g = magic_square(catalog(e.row, f), catalog(e.col, f));
    const std::string want = std::to_string(e.even) + "|" + std::to_string(e.odd);
    const std::string got = g.lie.space().superdim();
    const JacobiReport j = check_super_jacobi(g.lie);
    r.check("table.g(" + e.row + "," + e.col + ")", got == want && j.pass(), got,
            got != want ? "expected " + want : j.witness);
  }
  r.info("table.rows", std::to_string(rows.size()));
  return r.code();
}

int cmd_iso(Reporter& r, const std::string& which, const std::string& sname, const std::string& tname,
            const PrimeField& f) {
  const CompositionSuperalgebra s = catalog(parse_name(sname).str(), f);
  IsomorphismReport rep;
  std::string a, b;
  std::size_t da = 0, db = 0;
  if (which == "phi") {
    const MagicSquare g = magic_square(catalog("S1", f), s);
    const JordanSuperalgebra j = build_h3(s);
    const JordanDerivations d = compute_der(j);
    rep = check_isomorphism(phi_isomorphism(g, j, d.algebra), g.lie, d.algebra.lie());
    a = g.lie.space().superdim();
    b = d.algebra.lie().space().superdim();
    da = g.lie.dim();
    db = d.algebra.dim();
  } else if (which == "psi") {
    const PsiCheck p = check_psi(s);
    rep = p.report;
    a = p.source_dims;
    b = p.target_dims;
    const MagicSquare g = magic_square(catalog("S12", f), s);
    da = db = g.lie.dim();
  } else if (which == "flip") {
    if (tname.empty()) {
      std::cerr << "iso flip needs --T\n";
      return 2;
    }
    const CompositionSuperalgebra t = catalog(parse_name(tname).str(), f);
    const MagicSquare g1 = magic_square(s, t);
    const MagicSquare g2 = magic_square(t, s);
    rep = check_isomorphism(flip_isomorphism(g1, g2), g1.lie, g2.lie);
    a = g1.lie.space().superdim();
    b = g2.lie.space().superdim();
    da = g1.lie.dim();
    db = g2.lie.dim();
  } else {
    std::cerr << "unknown isomorphism '" << which << "' (phi, psi, flip)\n";
    return 2;
  }
  r.check("iso." + which + "." + s.name() + (tname.empty() ? "" : "." + tname), rep.pass, a + "->" + b, rep.reason);
  r.out << (rep.pass ? "PASS" : "FAIL") << " dim " << da << "↔" << db << '\n';
  return r.code();
}

int cmd_export(Reporter& r, const std::string& name, const PrimeField& f, const std::string& format,
               const std::string& path, bool checksum) {
  const CatalogObject o = build_object(name, f);
  const TensorFile t = tensor_of(o);
  std::string bytes;
  TensorFile back;
  if (format == "tensor-text") {
    bytes = write_text(t);
    back = read_text(bytes);
  } else {
    bytes = write_json(t);
    back = read_json(bytes);
  }
  if (path.empty() || path == "-") {
    r.out << bytes;
  } else {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    if (!out) {
      std::cerr << "cannot write " << path << '\n';
      return 2;
    }
  }
  // report lines go to stderr when the payload is on stdout
  std::ostream& log = (path.empty() || path == "-") ? std::cerr : r.out;
  Reporter side{log};
  side.check("export." + o.name + ".roundtrip", back == t, o.superdim());
  if (checksum) side.info("export." + o.name + ".sha256", sha256_hex(bytes));
  return side.code();
}

int cmd_triples(Reporter& r, const std::string& name, const PrimeField& f) {
  const NameNode n = parse_name(name);
  const CatalogObject o = build_object(name, f);
  if (o.kind != ObjectKind::triple) {
    std::cerr << "triples expects TJO(...), TJS(...) or TJOS(...)\n";
    return 2;
  }
  const TripleSystem& t = *o.triple;
  verify_triple_system(r, t);
  const TripleDerivations in = inner_derivations(t);
  const TripleDerivations der = derivations(t, in);
  r.info(t.name() + ".inder", in.algebra.lie().space().superdim());
  r.info(t.name() + ".der", der.algebra.lie().space().superdim());
  auto lie = [&](const TripleLie& g, const std::string& id) {
    const JacobiReport j = check_super_jacobi(g.lie);
    r.check(id + ".jacobi", j.pass(), g.lie.space().superdim(), j.witness);
  };
  switch (t.kind()) {
    case TripleKind::orthogonal: lie(lie_from_orthogonal(t, in.algebra), "G(" + t.name() + ")"); break;
    case TripleKind::orthosymplectic: lie(lie_from_orthosymplectic(t, in.algebra), "G(" + t.name() + ")"); break;
    case TripleKind::symplectic:
      lie(lie_from_symplectic(t, in.algebra), "G(" + t.name() + ")");
      lie(superalgebra_from_symplectic(t, in.algebra), "Gt(" + t.name() + ")");
      lie(superalgebra_from_symplectic(t, der.algebra), "Gt(" + t.name() + ",der)");
      break;
  }
  if (t.kind() != TripleKind::symplectic) {
    const JordanSuperalgebra j = build_h3(catalog(n.args.at(0).str(), f));
    const JordanTriple jt(j);
    const MatrixLieSuperalgebra s = induced_derivations(jt, compute_der(j).algebra);
    lie(t.kind() == TripleKind::orthogonal ? lie_from_orthogonal(t, s) : lie_from_orthosymplectic(t, s),
        "G(" + t.name() + ",derJ)");
  }
  return r.code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Freudenthal magic supersquare over GF(p)"};
  app.require_subcommand(1);
  unsigned p = 3;
  app.add_option("--p", p, "characteristic")->capture_default_str();
  app.fallthrough();  // accept --p after the verb too

  std::string name, expect = SUPERSQUARE_DATA_DIR "/table1.txt", which, sname, tname, format = "tensor-text", out;
  bool probe = false, checksum = false;
  std::size_t trials = 25;
  std::uint64_t seed = 20240101;

  auto* build = app.add_subcommand("build", "construct an object and print its superdimension");
  build->add_option("name", name, "object name, e.g. g(S4,S42)")->required();
  auto* verify = app.add_subcommand("verify", "run the axiom suite of an object");
  verify->add_option("name", name)->required();
  verify->add_flag("--probe", probe, "also probe simplicity (Lie objects)");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  auto* table = app.add_subcommand("table", "rebuild the 21 supersquare cells and diff against the expectation file");
  table->add_option("--expect", expect)->capture_default_str();
  auto* iso = app.add_subcommand("iso", "check phi, psi or flip");
  iso->add_option("which", which)->required()->check(CLI::IsMember({"phi", "psi", "flip"}));
  iso->add_option("--S", sname)->required();
  iso->add_option("--T", tname);
  auto* exp = app.add_subcommand("export", "write structure constants");
  exp->add_option("name", name)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"tensor-text", "json"}))->capture_default_str();
  exp->add_option("--out", out, "output file (default stdout)");
  exp->add_flag("--checksum", checksum, "print the sha256 of the exported bytes");
  auto* tri = app.add_subcommand("triples", "axioms, derivations and Lie functors of a triple system");
  tri->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Reporter r{std::cout};
  try {
    const PrimeField f(p);
    if (*build) return cmd_build(r, name, f);
    if (*verify) return cmd_verify(r, name, f, probe, trials, seed);
    if (*table) return cmd_table(r, f, expect);
    if (*iso) return cmd_iso(r, which, sname, tname, f);
    if (*exp) return cmd_export(r, name, f, format, out, checksum);
    if (*tri) return cmd_triples(r, name, f);
  } catch (const NameError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

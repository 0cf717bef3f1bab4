// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "supersquare/names.hpp"

using namespace supersquare;

namespace {

// wall-clock budgets, seconds
constexpr double kCompositionBudget = 5.0;
constexpr double kE8Budget = 600.0;
constexpr double kCellBudget = 60.0;

constexpr std::size_t kProbeTrials = 25;
constexpr std::uint64_t kProbeSeed = 20240101;

const PrimeField f3(3);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects failures for one criterion.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

bool report(int id, const std::string& title, const Tally& t, const std::string& extra = "") {
  const bool ok = t.failures.empty();
  std::cout << "CRITERION " << id << ' ' << (ok ? "PASS" : "FAIL") << ' ' << title << " checks=" << t.checks;
  if (!extra.empty()) std::cout << ' ' << extra;
  if (!ok) {
    std::cout << " failed=";
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::cout << (i ? ";" : "") << t.failures[i];
    if (t.failures.size() > 5) std::cout << ";...";
  }
  std::cout << std::endl;
  return ok;
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(4);
  o << std::fixed << s << 's';
  return o.str();
}

const std::vector<std::string> kSix{"S1", "S2", "S4", "S8", "S12", "S42"};

bool criterion1() {
  Tally t;
  Stopwatch w;
  for (const auto name : {"S1", "S2", "S4", "S8", "S12_0", "S12_1", "S12_2", "S42"}) {
    const AxiomReport r = verify_composition(catalog(name, f3));
    std::string bad;
    for (const auto& a : r.results)
      if (!a.pass) bad += a.id + "(" + a.witness + ")";
    t.expect(r.pass(), std::string(name) + ":" + bad);
  }
  const PrimeField f5(5);
  t.expect(!verify_composition(build_b12_unchecked(f5)).pass(), "B12@p5 passed");
  const double s = w.seconds();
  t.expect(s < kCompositionBudget, "time " + fmt(s));
  return report(1, "composition-axioms", t, "time=" + fmt(s));
}

bool criterion2() {
  Tally t;
  const std::map<std::string, std::string> want{{"S1", "0|0"},  {"S2", "2|0"},  {"S4", "9|0"},
                                                {"S8", "28|0"}, {"S12", "3|2"}, {"S42", "9|8"}};
  for (const auto& [name, dims] : want) {
    const std::string got = compute_tri(catalog(name, f3)).superdim();
    t.expect(got == dims, "tri(" + name + ")=" + got);
  }
  // tri(S12) = {(d,d,d) : d in osp(S12)}: every basis triple is diagonal and
  // the diagonal span has the dimension of osp(1|2) = 3|2
  const auto s = catalog("S12", f3);
  const TrialityAlgebra tri = compute_tri(s);
  RowReducer span(f3, s.dim() * s.dim());
  for (std::size_t i = 0; i < tri.dim(); ++i) {
    const auto& d = tri.element(i).d;
    t.expect(d[0] == d[1] && d[1] == d[2], "tri(S12) element " + std::to_string(i) + " not diagonal");
    t.expect(osp_membership(GradedLinearMap(s.space_ptr(), s.space_ptr(), tri.element(i).parity, d[0]), s.form()),
             "tri(S12) element not in osp");
    span.add(d[0].data());
  }
  t.expect(span.rank() == 5, "diagonal span rank " + std::to_string(span.rank()));
  return report(2, "triality-dims", t);
}

std::string table_dims(const LieSuperalgebra& l) { return l.space().superdim(); }

bool criterion3() {
  Tally t;
  std::ifstream in(SUPERSQUARE_DATA_DIR "/table1.txt");
  t.expect(static_cast<bool>(in), "missing table1.txt");
  std::string line;
  std::size_t rows = 0;
  double e8_time = 0, worst = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string r, c;
    std::size_t even = 0, odd = 0;
    ls >> r >> c >> even >> odd;
    ++rows;
    Stopwatch w;
    const MagicSquare m = magic_square(catalog(r, f3), catalog(c, f3));
    const JacobiReport j = check_super_jacobi(m.lie);
    const double s = w.seconds();
    const std::string cell = "g(" + r + "," + c + ")";
    const std::string want = std::to_string(even) + "|" + std::to_string(odd);
    t.expect(table_dims(m.lie) == want, cell + "=" + table_dims(m.lie) + "!=" + want);
    t.expect(j.pass(), cell + " jacobi");
    if (r == "S8" && c == "S8") {
      e8_time = s;
      t.expect(s < kE8Budget, "e8 time " + fmt(s));
    } else {
      worst = std::max(worst, s);
      t.expect(s < kCellBudget, cell + " time " + fmt(s));
    }
    if (r == "S2" && c == "S8") {
      t.expect(m.lie.dim() == 78, "g(S2,S8) total");
      t.expect(derived_subalgebra(m.lie).dim() == 77, "derived g(S2,S8)");
    }
  }
  t.expect(rows == 21, "rows=" + std::to_string(rows));
  return report(3, "table1", t, "rows=" + std::to_string(rows) + " e8=" + fmt(e8_time) + " max_other=" + fmt(worst));
}

bool criterion4() {
  Tally t;
  std::size_t algebras = 0;
  auto jac = [&](const LieSuperalgebra& l, const std::string& name) {
    ++algebras;
    const JacobiReport r = check_super_jacobi(l);
    t.expect(r.pass(), name + ":" + std::to_string(r.failures()) + " " + r.witness);
  };
  for (const auto& e : supersquare_table())
    jac(magic_square(catalog(e.row, f3), catalog(e.col, f3)).lie, "g(" + e.row + "," + e.col + ")");
  for (const auto& s : kSix) {
    jac(compute_tri(catalog(s, f3)).lie(), "tri(" + s + ")");
    const JordanSuperalgebra j = build_h3(catalog(s, f3));
    const JordanDerivations der = compute_der(j);
    jac(der.algebra.lie(), "der H3(" + s + ")");
    const JordanTriple tj(j);
    const TripleSystem& ort = tj.system();
    const TripleDerivations in = inner_derivations(ort);
    const TripleDerivations full = derivations(ort, in);
    const MatrixLieSuperalgebra dj = induced_derivations(tj, der.algebra);
    const bool super = ort.kind() == TripleKind::orthosymplectic;
    auto functor = super ? lie_from_orthosymplectic : lie_from_orthogonal;
    jac(functor(ort, in.algebra).lie, "G(" + ort.name() + ",inder)");
    jac(functor(ort, full.algebra).lie, "G(" + ort.name() + ",der)");
    jac(functor(ort, dj).lie, "G(" + ort.name() + ",derJ)");
    if (super) continue;
    const TripleSystem sym = build_tjs(j).system;
    const TripleDerivations sin = inner_derivations(sym);
    const TripleDerivations sfull = derivations(sym, sin);
    jac(lie_from_symplectic(sym, sin.algebra).lie, "G(" + sym.name() + ",inder)");
    jac(lie_from_symplectic(sym, sfull.algebra).lie, "G(" + sym.name() + ",der)");
    jac(superalgebra_from_symplectic(sym, sin.algebra).lie, "Gt(" + sym.name() + ",inder)");
    jac(superalgebra_from_symplectic(sym, sfull.algebra).lie, "Gt(" + sym.name() + ",der)");
  }
  return report(4, "super-jacobi", t, "algebras=" + std::to_string(algebras));
}

bool criterion5() {
  Tally t;
  for (const auto& name : kSix) {
    const auto s = catalog(name, f3);
    const MagicSquare g = magic_square(catalog("S1", f3), s);
    const JordanSuperalgebra j = build_h3(s);
    const JordanDerivations d = compute_der(j);
    const IsomorphismReport r = check_isomorphism(phi_isomorphism(g, j, d.algebra), g.lie, d.algebra.lie());
    t.expect(r.pass, "phi(" + name + "):" + r.reason);
  }
  for (const auto& name : kSix) {
    const PsiCheck p = check_psi(catalog(name, f3));
    t.expect(p.report.pass, "psi(" + name + "):" + p.report.reason);
    t.expect(p.source_dims == p.target_dims, "psi(" + name + ") dims " + p.source_dims + "->" + p.target_dims);
  }
  return report(5, "isomorphisms", t);
}

bool criterion6() {
  Tally t;
  auto axioms = [&](const TripleSystem& s, const std::string& dims) {
    const AxiomReport r = verify_triple(s);
    std::string bad;
    for (const auto& a : r.results)
      if (!a.pass) bad += a.id + "(" + a.witness + ")";
    t.expect(r.pass(), s.name() + ":" + bad);
    t.expect(s.space().superdim() == dims, s.name() + " dims " + s.space().superdim());
  };
  const std::vector<std::string> four{"S1", "S2", "S4", "S8"};
  const std::vector<std::string> tjo{"4|0", "7|0", "13|0", "25|0"};
  const std::vector<std::string> tjs{"14|0", "20|0", "32|0", "56|0"};
  const std::vector<std::size_t> gt{35, 54, 98, 189};
  for (std::size_t k = 0; k < 4; ++k) {
    const JordanSuperalgebra j = build_h3(catalog(four[k], f3));
    const TripleSystem o = JordanTriple(j).system();
    t.expect(o.kind() == TripleKind::orthogonal, o.name() + " kind");
    axioms(o, tjo[k]);
    const TripleSystem s = build_tjs(j).system;
    t.expect(s.kind() == TripleKind::symplectic, s.name() + " kind");
    axioms(s, tjs[k]);
    const std::size_t total = superalgebra_from_symplectic(s, inner_derivations(s).algebra).lie.dim();
    t.expect(total == gt[k], "Gt(" + s.name() + ")=" + std::to_string(total));
  }
  for (const auto& [name, dims] : {std::pair{"S12", "4|6"}, std::pair{"S42", "13|6"}}) {
    const TripleSystem os = JordanTriple(build_h3(catalog(name, f3))).system();
    t.expect(os.kind() == TripleKind::orthosymplectic, os.name() + " kind");
    axioms(os, dims);
  }
  for (unsigned r : {1u, 2u, 4u, 8u}) {
    const DeletionReport d = deletion_consistency(r, f3);
    std::string bad;
    for (const auto& a : d.results)
      if (!a.pass) bad += a.id + "(" + a.witness + ")";
    t.expect(d.pass(), "deletion r=" + std::to_string(r) + ":" + bad);
  }
  return report(6, "triple-systems", t);
}

bool criterion7() {
  Tally t;
  auto codim = [](const LieSuperalgebra& l) { return l.dim() - derived_subalgebra(l).dim(); };
  for (const auto& e : supersquare_table()) {
    const LieSuperalgebra l = magic_square(catalog(e.row, f3), catalog(e.col, f3)).lie;
    const std::string cell = "g(" + e.row + "," + e.col + ")";
    const std::size_t c = codim(l);
    if (e.row == "S2" && (e.col == "S12" || e.col == "S42")) t.expect(c == 1, cell + " codim " + std::to_string(c));
    if (e.row != "S2" && e.col != "S2") t.expect(c == 0, cell + " codim " + std::to_string(c));
  }
  for (const auto& s : kSix) {
    const LieSuperalgebra d = compute_der(build_h3(catalog(s, f3))).algebra.lie();
    const std::size_t c = codim(d);
    t.expect(c == (s == "S2" ? 1u : 0u), "der H3(" + s + ") codim " + std::to_string(c));
  }
  for (const auto& [a, b] : {std::pair{"S1", "S42"}, std::pair{"S12", "S12"}}) {
    const SimplicityVerdict v = probe_simplicity(magic_square(catalog(a, f3), catalog(b, f3)).lie, kProbeTrials, kProbeSeed);
    t.expect(v.probably_simple, std::string("g(") + a + "," + b + ") " + v.reason);
  }
  return report(7, "derived-and-simplicity", t);
}

bool criterion8() {
  Tally t;
  std::ifstream in(SUPERSQUARE_GOLDEN_FILE);
  t.expect(static_cast<bool>(in), "missing golden file");
  std::string line;
  std::size_t files = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, hash;
    ls >> name >> hash;
    ++files;
    const std::string a = write_text(tensor_of(build_object(name, f3)));
    const std::string b = write_text(tensor_of(build_object(name, f3)));
    t.expect(a == b, name + " text differs between runs");
    t.expect(write_json(read_text(a)) == write_json(read_text(b)), name + " json differs between runs");
    t.expect(sha256_hex(a) == hash, name + " checksum " + sha256_hex(a).substr(0, 12));
  }
  t.expect(files >= 59, "only " + std::to_string(files) + " golden entries");
  return report(8, "determinism", t, "files=" + std::to_string(files));
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> all{criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8};
  bool ok = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      ok = all[i]() && ok;
    } catch (const std::exception& e) {
      std::cout << "CRITERION " << i + 1 << " FAIL exception=" << e.what() << std::endl;
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

// arknit: stable-window computations for path-algebra quotients over prime
// fields.  Subcommands: analyze (knit + classify an algebra's window), mesh
// (additive-function propagation on a Dynkin tree), hom (dimensions of a
// morphism space between two complexes).
//
// Exit codes are the success channel: 0 all requested work done and every
// requested check passed, 2 a budget ran out (partial results are still
// written), 1 bad input or a failed check, with a one-line diagnostic.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arknit/errors.hpp"
#include "arknit/hom.hpp"
#include "arknit/io.hpp"
#include "arknit/mesh.hpp"

namespace {

using namespace arknit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_artifact(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string verdict_line(const ClassificationVerdict& v) {
  std::string s = verdict_name(v.kind);
  if (v.kind == VerdictKind::FiniteTypeDynkin && v.tree)
    s += "(" + tree_name(*v.tree) + ")";
  return s;
}

struct AnalyzeArgs {
  std::string file;
  std::size_t budget = 200;
  int window = 4;
  std::string emit;
  std::string out;
  bool verify = false;
};

int run_analyze(const AnalyzeArgs& args) {
  Algebra A = Algebra::build(parse_algebra_document(read_file(args.file)));
  KnitOptions opts;
  opts.budget = args.budget;
  opts.window_lo = -args.window;
  opts.window_hi = args.window;
  ArComponentGraph g = knit(A, opts);
  ClassificationVerdict v = classify(g, A);
  Report report = make_report(g, v);

  if (args.verify) {
    std::vector<ProjComplex> universe;
    for (const ArNode& n : g.nodes)
      for (int s = g.window_lo; s <= g.window_hi; ++s)
        universe.push_back(shift(n.rep, s));
    for (std::size_t i = 0; i < g.triangles.size(); ++i) {
      VerifyReport vr = verify_ar(g.triangles[i], universe);
      report.triangles[i].status = "verified";
      report.triangles[i].objects_checked = vr.objects_checked;
    }
  }

  if (args.emit.empty()) {
    std::cout << "verdict: " << verdict_line(v) << "\n";
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
    if (v.period)
      std::cout << "periodicity: tau^" << v.period->tau_power << " ≅ ["
                << v.period->shift << "]\n";
    std::cout << "nodes in window: " << g.nodes.size() << "\n"
              << "knitting steps: " << g.steps_used
              << (g.complete ? " (closed)" : " (budget exhausted)") << "\n"
              << "sup l_p: " << v.sup_lp << ", sup l_i: " << v.sup_li
              << "\n";
  } else if (args.emit == "dot") {
    write_artifact(args.out, write_dot(g));
  } else {
    write_artifact(args.out, write_report(report));
  }
  if (!args.out.empty())
    std::cout << "verdict: " << verdict_line(v) << " -> " << args.out
              << "\n";
  return g.complete ? 0 : 2;
}

std::vector<long long> parse_initial_row(const std::string& csv) {
  std::vector<long long> row;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("initial row: \"" + item + "\" is not an integer");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size())
      throw InputError("initial row: \"" + item + "\" is not an integer");
    row.push_back(v);
  }
  if (row.empty()) throw InputError("initial row: empty");
  return row;
}

std::string lin_str(const std::vector<long long>& v, bool symbolic) {
  if (!symbolic) return std::to_string(v[0]);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (s.empty())
      s += (v[i] < 0 ? "-" : "");
    else
      s += (v[i] < 0 ? " - " : " + ");
    long long a = v[i] < 0 ? -v[i] : v[i];
    if (a != 1) s += std::to_string(a) + "*";
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

struct MeshArgs {
  std::string tree;
  std::size_t rows = 8;
  std::string init = "symbolic";
  bool identities = false;
  bool positivity = false;
  std::size_t columns = 64;
};

int run_mesh(const MeshArgs& args) {
  DynkinTree tree = DynkinTree::parse(args.tree);
  std::cout << "tree: " << tree.name() << "\n";

  MeshWindow w = args.init == "symbolic"
                     ? propagate_symbolic(tree, args.rows)
                     : propagate(tree, parse_initial_row(args.init),
                                 args.rows);
  for (std::size_t j = 0; j < w.columns.size(); ++j) {
    std::cout << "j=" << j << ":";
    for (std::size_t t = 0; t < tree.n; ++t)
      std::cout << (t ? ", " : " ") << lin_str(w.value(j, t), w.symbolic);
    std::cout << "\n";
  }

  bool all_pass = true;
  if (args.identities) {
    for (const MeshIdentity& id : check_identities(tree)) {
      std::cout << (id.holds ? "pass " : "FAIL ") << id.name << "\n";
      all_pass = all_pass && id.holds;
    }
  }
  if (args.positivity) {
    if (args.init == "symbolic")
      throw InputError(
          "positivity needs an integer initial row (--init 1,1,...)");
    try {
      PositivityBreak b = positivity_certificate(
          tree, parse_initial_row(args.init), args.columns);
      std::cout << "positivity breaks at vertex " << (b.vertex + 1)
                << ", column " << b.column << ", value " << b.value << "\n";
    } catch (const CertificateNotFoundError& e) {
      std::cerr << "arknit: " << e.what() << "\n";
      return 2;
    }
  }
  return all_pass ? 0 : 1;
}

int run_hom(const std::string& alg_file, const std::string& x_file,
            const std::string& y_file) {
  Algebra A = Algebra::build(parse_algebra_document(read_file(alg_file)));
  ProjComplex X = parse_complex_document(read_file(x_file), A);
  ProjComplex Y = parse_complex_document(read_file(y_file), A);
  HomSpace H = HomSpace::compute(X, Y);
  std::cout << "chain maps: " << H.chain_dim() << "\n"
            << "null homotopic: " << H.null_dim() << "\n"
            << "hom_K: " << H.dim() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auslander-Reiten window computations over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", arknit::tool_version);

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Knit the stable window of an algebra and classify it");
  analyze->add_option("algebra", an.file, "algebra document (JSON)")
      ->required();
  analyze->add_option("--budget", an.budget, "maximum knitting steps")
      ->capture_default_str();
  analyze->add_option("--window", an.window, "shift window half-width")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  analyze->add_option("--emit", an.emit, "artifact format")
      ->check(CLI::IsMember({"dot", "json"}));
  analyze->add_option("--out", an.out, "artifact path (stdout if omitted)");
  analyze->add_flag("--verify", an.verify,
                    "re-verify every triangle against the window universe");

  MeshArgs me;
  CLI::App* mesh = app.add_subcommand(
      "mesh", "Propagate an additive function along a Dynkin tree");
  mesh->add_option("--tree", me.tree, "tree name (A3, D4, E6, E7, E8)")
      ->required();
  mesh->add_option("--rows", me.rows, "rows to propagate")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  mesh->add_option("--init", me.init,
                   "\"symbolic\" or a comma-separated integer row")
      ->capture_default_str();
  mesh->add_flag("--check-identities", me.identities,
                 "check the pinned E-series relations");
  mesh->add_flag("--certify-positivity", me.positivity,
                 "find the first non-positive propagated value");
  mesh->add_option("--columns", me.columns,
                   "search budget for the positivity witness")
      ->check(CLI::Range(0, 1 << 20))
      ->capture_default_str();

  std::string hom_alg, hom_x, hom_y;
  CLI::App* hom = app.add_subcommand(
      "hom", "Dimensions of the morphism space between two complexes");
  hom->add_option("algebra", hom_alg, "algebra document (JSON)")->required();
  hom->add_option("X", hom_x, "source complex document")->required();
  hom->add_option("Y", hom_y, "target complex document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(an);
    if (mesh->parsed()) return run_mesh(me);
    return run_hom(hom_alg, hom_x, hom_y);
  } catch (const arknit::Error& e) {
    std::cerr << "arknit: " << e.what() << "\n";
    return 1;
  }
}

// Acceptance gate for the AR engine: nine pinned criteria, each printing one
// [PASS]/[FAIL] line (the mesh-identity criterion adds one sub-line per
// relation).  Expected counts and time limits are fixed in this file on
// purpose; the exit code is the number of failed criteria.
//
// One failure is expected and deliberate: the pinned long E7 relation
// x3[j+20] = -x3[j] + x4[j] is refuted by exact symbolic propagation, which
// certifies x4[j+8] = -x3[j] + x4[j] instead.  The gate reports the refuted
// form as FAIL and carries the certified form next to it; README.md walks
// through the disproof.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arknit/ar.hpp"
#include "arknit/mesh.hpp"
#include "fixtures.hpp"

namespace {

using namespace arknit;

constexpr double kFastLimit = 1.0;   // seconds, criteria 1 and 2
constexpr double kKnitLimit = 60.0;  // seconds, criteria 3 and 8

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 64-bit LCG, high bits only; deterministic across platforms
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint32_t next(std::uint32_t bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>((state >> 33) % bound);
  }
};

struct CriterionResult {
  bool pass = false;
  std::string headline;
  std::vector<std::string> details;
};

template <typename F>
CriterionResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {false, std::string("aborted by engine error: ") + e.what(), {}};
  } catch (const std::exception& e) {
    return {false, std::string("aborted: ") + e.what(), {}};
  }
}

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::SimpleA1:
      return "Simple_A1";
    case VerdictKind::FiniteTypeDynkin:
      return "FiniteType_Dynkin";
    default:
      return "InfiniteOrInconclusive";
  }
}

std::string tag_name(const std::optional<DynkinTag>& t) {
  if (!t) return "none";
  return std::string(1, t->family) + std::to_string(t->n);
}

// Every window object: each iso class at each shift of the window.
std::vector<ProjComplex> window_universe(const ArComponentGraph& g) {
  std::vector<ProjComplex> u;
  for (const auto& node : g.nodes)
    for (int s = g.window_lo; s <= g.window_hi; ++s)
      u.push_back(shift(node.rep, s));
  return u;
}

// ---------------------------------------------------------------------------
// criterion 1: one vertex, no arrows

CriterionResult criterion_simple(const Algebra& A, ArComponentGraph& g_out) {
  Clock clk;
  g_out = knit(A);
  ClassificationVerdict v = classify(g_out, A);
  std::size_t zero_middles = 0, iso_connecting = 0;
  for (const auto& t : g_out.triangles) {
    if (t.middle.is_zero_complex()) ++zero_middles;
    // w is invertible in the homotopy category iff its cone is contractible
    if (strip_contractibles(make_cone(t.w).cone).min.is_zero_complex())
      ++iso_connecting;
  }
  double el = clk.secs();
  bool ok = v.kind == VerdictKind::SimpleA1 && g_out.complete &&
            g_out.nodes.size() == 1 && !g_out.triangles.empty() &&
            zero_middles == g_out.triangles.size() &&
            iso_connecting == g_out.triangles.size() && el < kFastLimit;
  std::ostringstream o;
  o << "one vertex, no arrows, over F5: verdict " << kind_name(v.kind) << ", "
    << g_out.nodes.size() << " class, " << zero_middles << "/"
    << g_out.triangles.size() << " zero middle terms, " << iso_connecting
    << "/" << g_out.triangles.size() << " invertible connecting maps ("
    << fmt_secs(el) << ", limit 1s)";
  return {ok, o.str(), {}};
}

// ---------------------------------------------------------------------------
// criterion 2: E-series mesh identities

CriterionResult criterion_identities() {
  Clock clk;
  struct Row {
    std::string tree, name, remark;
    bool holds = false;
    bool pinned = true;  // corrected forms ride along without being required
  };
  std::vector<Row> rows;
  for (int n : {6, 7, 8}) {
    DynkinTree tree = DynkinTree::make('E', static_cast<std::size_t>(n));
    for (const MeshIdentity& id : check_identities(tree)) {
      Row r{tree.name(), id.name, "", id.holds, true};
      if (id.name == "x3[j+20] = -x3[j] + x4[j]")
        r.remark =
            "refuted: the propagated values have period 18 with a sign flip "
            "after 9 columns, so x3[j+20] = x3[j+2]";
      if (id.name == "x4[j+8] = -x3[j] + x4[j]") {
        r.pinned = false;
        r.remark = "certified place where -x3 + x4 occurs: the branch vertex";
      }
      if (id.name == "x4[j+9] = -x4[j]") {
        r.pinned = false;
        r.remark = "half-period sign flip behind the correction";
      }
      rows.push_back(std::move(r));
    }
  }
  double el = clk.secs();
  std::size_t pinned = 0, pinned_ok = 0;
  for (const Row& r : rows)
    if (r.pinned) {
      ++pinned;
      if (r.holds) ++pinned_ok;
    }
  bool ok = pinned_ok == pinned && el < kFastLimit;
  std::ostringstream o;
  o << "E-series mesh identities: " << pinned_ok << "/" << pinned
    << " pinned relations certified with exact integer coefficients ("
    << fmt_secs(el) << ", limit 1s)";
  if (pinned_ok != pinned)
    o << "; the failing relation is refuted by the propagation itself, see "
         "the marked line";
  std::vector<std::string> det;
  for (const Row& r : rows) {
    std::ostringstream d;
    d << "         " << (r.holds ? "holds  " : "FAILS  ") << r.tree << "  "
      << r.name;
    if (!r.remark.empty()) d << "   [" << r.remark << "]";
    det.push_back(d.str());
  }
  return {ok, o.str(), det};
}

// ---------------------------------------------------------------------------
// criterion 3: Dynkin knitting closure with two independent counts

std::vector<std::pair<std::size_t, std::size_t>> quiver_edges(
    const Algebra& A) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (const Arrow& a : A.presentation().arrows)
    e.push_back({static_cast<std::size_t>(a.src),
                 static_cast<std::size_t>(a.dst)});
  return e;
}

// Closure of the unit vectors under simple reflections, kept inside the
// positive orthant: for a simply laced diagram this enumerates the positive
// roots.  box_out picks up the componentwise maximum.
std::size_t positive_root_count(
    std::size_t nv,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::vector<std::size_t>& box_out) {
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> work;
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<int> unit(nv, 0);
    unit[i] = 1;
    roots.insert(unit);
    work.push_back(unit);
  }
  while (!work.empty()) {
    std::vector<int> v = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < nv; ++i) {
      int around = 0;
      for (std::size_t j : adj[i]) around += v[j];
      std::vector<int> r = v;
      r[i] = around - v[i];  // simple reflection at i
      bool nonneg = true, nonzero = false;
      for (int x : r) {
        if (x < 0) nonneg = false;
        if (x > 0) nonzero = true;
      }
      if (nonneg && nonzero && roots.insert(r).second) work.push_back(r);
    }
  }
  box_out.assign(nv, 0);
  for (const auto& r : roots)
    for (std::size_t i = 0; i < nv; ++i)
      box_out[i] = std::max(box_out[i], static_cast<std::size_t>(r[i]));
  return roots.size();
}

bool support_connected(
    std::size_t nv,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::vector<std::size_t>& d) {
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::size_t start = nv, support = 0;
  for (std::size_t i = 0; i < nv; ++i)
    if (d[i] > 0) {
      ++support;
      if (start == nv) start = i;
    }
  if (support == 0) return false;
  std::vector<char> seen(nv, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t at = stack.back();
    stack.pop_back();
    for (std::size_t nb : adj[at])
      if (d[nb] > 0 && !seen[nb]) {
        seen[nb] = 1;
        ++reached;
        stack.push_back(nb);
      }
  }
  return reached == support;
}

bool structure_indecomposable(const Algebra& A,
                              const std::vector<std::size_t>& d,
                              std::vector<Matrix> act) {
  AModule M{&A, d, std::move(act)};
  validate_module(M);
  return is_indecomposable(min_proj_resolution(M, 8).complex);
}

// Whether some module structure on the dimension vector is indecomposable.
// Random structures settle the common case fast; the odometer then settles
// the rest exhaustively.
bool admits_indecomposable(
    const Algebra& A,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::vector<std::size_t>& d, Rng& rng) {
  std::size_t total = 0;
  for (std::size_t x : d) total += x;
  if (total == 0) return false;
  // disconnected support splits every structure along its components
  if (!support_connected(d.size(), edges, d)) return false;
  if (total == 1) return true;
  const auto& arrows = A.presentation().arrows;
  std::uint32_t p = A.field().p();
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  std::size_t cells = 0;
  for (const Arrow& a : arrows) {
    shape.push_back({d[a.dst], d[a.src]});
    cells += d[a.dst] * d[a.src];
  }
  auto actions_of = [&](const std::vector<std::uint32_t>& flat) {
    std::vector<Matrix> act;
    std::size_t k = 0;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
      Matrix m(A.field(), shape[ai].first, shape[ai].second);
      for (std::size_t r = 0; r < shape[ai].first; ++r)
        for (std::size_t c = 0; c < shape[ai].second; ++c)
          m.set(r, c, flat[k++]);
      act.push_back(std::move(m));
    }
    return act;
  };
  std::vector<std::uint32_t> flat(cells, 0);
  if (cells > 0)
    for (int probe = 0; probe < 48; ++probe) {
      for (auto& x : flat) x = rng.next(p);
      if (structure_indecomposable(A, d, actions_of(flat))) return true;
    }
  std::fill(flat.begin(), flat.end(), 0);
  while (true) {
    if (structure_indecomposable(A, d, actions_of(flat))) return true;
    std::size_t i = 0;
    while (i < cells) {
      if (++flat[i] == p) {
        flat[i] = 0;
        ++i;
      } else {
        break;
      }
    }
    if (i == cells) return false;
  }
}

std::size_t count_indecomposable_dim_vectors(
    const Algebra& A,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::vector<std::size_t>& box, Rng& rng) {
  std::vector<std::size_t> d(box.size(), 0);
  std::size_t count = 0;
  while (true) {
    if (admits_indecomposable(A, edges, d, rng)) ++count;
    std::size_t i = 0;
    while (i < d.size()) {
      if (++d[i] > box[i]) {
        d[i] = 0;
        ++i;
      } else {
        break;
      }
    }
    if (i == d.size()) break;
  }
  return count;
}

struct DynkinFixture {
  const Algebra* A;
  ArComponentGraph* g;
  std::string label;
  std::size_t expected;
};

CriterionResult criterion_dynkin(const std::vector<DynkinFixture>& fixtures) {
  Rng rng(0xD15EA5E0ULL);
  bool ok = true;
  std::vector<std::string> det;
  std::ostringstream head;
  head << "Dynkin knitting closure over F5:";
  for (const DynkinFixture& fx : fixtures) {
    Clock clk;
    *fx.g = knit(*fx.A);
    ClassificationVerdict v = classify(*fx.g, *fx.A);
    std::vector<std::size_t> box;
    auto edges = quiver_edges(*fx.A);
    std::size_t roots = positive_root_count(fx.A->vertex_count(), edges, box);
    std::size_t mods = count_indecomposable_dim_vectors(*fx.A, edges, box, rng);
    double el = clk.secs();
    bool fine = fx.g->complete && fx.g->period.has_value() &&
                v.kind == VerdictKind::FiniteTypeDynkin &&
                tag_name(v.tree) == fx.label &&
                fx.g->nodes.size() == fx.expected && roots == fx.expected &&
                mods == fx.expected && el < kKnitLimit;
    ok = ok && fine;
    head << " " << fx.label << " " << fx.g->nodes.size() << "/" << roots
         << "/" << mods << (fine ? "" : " MISMATCH");
    std::ostringstream d;
    d << "         " << fx.label << ": " << fx.g->nodes.size()
      << " classes up to shift, " << roots << " positive roots, " << mods
      << " dimension vectors carrying an indecomposable module; ";
    if (fx.g->period)
      d << "tau^" << fx.g->period->tau_power << " = [" << fx.g->period->shift
        << "]; ";
    d << "verdict " << kind_name(v.kind) << "(" << tag_name(v.tree) << ") ("
      << fmt_secs(el) << ", limit 60s)";
    det.push_back(d.str());
  }
  head << " (knitted classes / root count / module scan)";
  return {ok, head.str(), det};
}

// ---------------------------------------------------------------------------
// criterion 4: almost-split verification across the full windows

using NamedGraphs =
    std::vector<std::pair<const ArComponentGraph*, std::string>>;

CriterionResult criterion_axioms(const NamedGraphs& graphs) {
  bool ok = true;
  std::size_t triangles = 0, objects = 0, sequences = 0;
  std::string first_failure;
  for (const auto& [g, label] : graphs) {
    if (g->nodes.empty()) {
      ok = false;
      if (first_failure.empty()) first_failure = label + ": window missing";
      continue;
    }
    std::vector<ProjComplex> universe = window_universe(*g);
    for (const ArTriangle& t : g->triangles) {
      try {
        VerifyReport rep = verify_ar(t, universe);
        ++triangles;
        objects += rep.objects_checked;
        sequences += rep.sequences_checked;
      } catch (const Error& e) {
        ok = false;
        if (first_failure.empty())
          first_failure = label + ": " + std::string(e.what());
      }
    }
  }
  std::ostringstream o;
  o << "almost-split axioms: " << triangles
    << " knitted triangles checked against their full windows (" << objects
    << " objects, " << sequences
    << " hom sequences, all four lifting criteria)";
  if (ok)
    o << ", zero failures";
  else
    o << ", FAILED at " << first_failure;
  return {ok, o.str(), {}};
}

// ---------------------------------------------------------------------------
// criterion 5: length subadditivity on every knitted triangle

CriterionResult criterion_subadditivity(const NamedGraphs& graphs) {
  bool ok = true;
  std::size_t checked = 0, strict = 0;
  std::string why;
  for (const auto& [g, label] : graphs) {
    if (g->nodes.empty()) {
      ok = false;
      if (why.empty()) why = label + ": window missing";
      continue;
    }
    for (const ArTriangle& t : g->triangles) {
      std::size_t mid = lengths(t.middle).l_p;
      std::size_t bound = lengths(t.tau).l_p + lengths(t.x).l_p;
      bool equal = mid == bound;
      if (mid > bound || equal != (t.stripped_pairs == 0)) {
        ok = false;
        if (why.empty())
          why = label + ": middle " + std::to_string(mid) + " vs bound " +
                std::to_string(bound) + " with " +
                std::to_string(t.stripped_pairs) + " stripped pairs";
      }
      ++checked;
      if (!equal) ++strict;
    }
  }
  std::ostringstream o;
  o << "length subadditivity: l_p(middle) <= l_p(tau end) + l_p(end) on "
    << checked << " knitted triangles, equality exactly when the cone kept "
    << "every pair (" << strict << " strict drops)";
  if (ok)
    o << ", zero violations";
  else
    o << ", FAILED at " << why;
  return {ok, o.str(), {}};
}

// ---------------------------------------------------------------------------
// criterion 6: Serre duality dimension symmetry

CriterionResult criterion_serre(const NamedGraphs& graphs) {
  bool ok = true;
  std::size_t pairs = 0, windows = 0;
  std::string why;
  for (const auto& [g, label] : graphs) {
    if (g->nodes.empty()) {
      ok = false;
      if (why.empty()) why = label + ": window missing";
      continue;
    }
    ++windows;
    int span = g->window_hi - g->window_lo;
    std::vector<ProjComplex> nu(g->nodes.size());
    for (std::size_t j = 0; j < g->nodes.size(); ++j)
      nu[j] = shift(tau_candidate(g->nodes[j].rep, 64), 1);  // nu = tau [1]
    for (std::size_t i = 0; i < g->nodes.size() && ok; ++i)
      for (std::size_t j = 0; j < g->nodes.size() && ok; ++j)
        for (int d = -span; d <= span; ++d) {
          std::size_t left =
              HomSpace::compute(g->nodes[i].rep, shift(nu[j], d)).dim();
          std::size_t right =
              HomSpace::compute(g->nodes[j].rep, shift(g->nodes[i].rep, -d))
                  .dim();
          ++pairs;
          if (left != right) {
            ok = false;
            why = label + ": nodes " + std::to_string(i) + ", " +
                  std::to_string(j) + " at shift " + std::to_string(d) +
                  " give " + std::to_string(left) + " vs " +
                  std::to_string(right);
            break;
          }
        }
  }
  std::ostringstream o;
  o << "Serre duality dimensions: dim Hom_K(X, nu Y) = dim Hom_K(Y, X) over "
    << pairs << " shifted pairs across " << windows << " windows";
  if (ok)
    o << ", zero mismatches";
  else
    o << ", FAILED at " << why;
  return {ok, o.str(), {}};
}

// ---------------------------------------------------------------------------
// criterion 7: long radical chains vanish

CriterionResult criterion_chain_vanishing(const ArComponentGraph& g) {
  if (g.nodes.empty())
    return {false, "radical chain vanishing: A2 window missing", {}};
  std::size_t n = 0;
  for (const ArNode& node : g.nodes) n = std::max(n, node.len.l_c);
  std::size_t links = (std::size_t{1} << n) - 1;
  Rng rng(0x7A31C0DEULL);
  std::size_t built = 0, vanished = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ArNode& seed =
        g.nodes[rng.next(static_cast<std::uint32_t>(g.nodes.size()))];
    int at = g.window_lo +
             static_cast<int>(rng.next(
                 static_cast<std::uint32_t>(g.window_hi - g.window_lo + 1)));
    ProjComplex target = shift(seed.rep, at);
    ProjComplex cur = target;
    ChainMap chain;
    bool have = false, stuck = false;
    // walk backwards: each step picks one irreducible map into the current
    // object, read off the middle term of its almost-split triangle
    for (std::size_t step = 0; step < links; ++step) {
      ArTriangle t = ar_triangle(cur);
      if (t.middle.is_zero_complex()) {
        stuck = true;
        break;
      }
      DecomposeResult dec = decompose_with_witness(t.middle);
      std::size_t k =
          rng.next(static_cast<std::uint32_t>(dec.parts.size()));
      ChainMap leg = compose_maps(t.v, dec.into[k]);
      chain = have ? compose_maps(chain, leg) : leg;
      have = true;
      cur = dec.parts[k];
    }
    if (stuck) continue;
    ++built;
    if (HomSpace::compute(cur, target).is_null_homotopic(chain)) ++vanished;
  }
  bool ok = n == 3 && built == 100 && vanished == 100;
  std::ostringstream o;
  o << "radical chain vanishing on the A2 window: longest composition series "
    << n << ", chains of 2^" << n << "-1 = " << links
    << " irreducible maps; " << vanished << "/" << built
    << " of 100 random chains compose null-homotopically";
  return {ok, o.str(), {}};
}

// ---------------------------------------------------------------------------
// criterion 8: self-injective window behaviour

CriterionResult criterion_self_injective(const Algebra& D,
                                         ArComponentGraph& g_out) {
  Clock clk;
  KnitOptions opts;
  opts.budget = 20;
  g_out = knit(D, opts);
  ClassificationVerdict v = classify(g_out, D);
  double el = clk.secs();
  std::size_t self_loops = 0;
  for (const TauEdge& e : g_out.tau_edges)
    if (e.to == e.from && e.shift == -1) ++self_loops;
  bool ladder = !g_out.nodes.empty();
  for (std::size_t i = 0; i < g_out.nodes.size(); ++i)
    ladder = ladder && g_out.nodes[i].len.l_p == i + 1;
  bool ok = !g_out.complete && g_out.steps_used == 20 &&
            g_out.nodes.size() >= 20 && !g_out.tau_edges.empty() &&
            self_loops == g_out.tau_edges.size() &&
            v.kind == VerdictKind::InfiniteOrInconclusive &&
            v.ladder_evidence && ladder && el < kKnitLimit;
  std::ostringstream o;
  o << "dual numbers over F3, 20 knitting steps: tau X = X[-1] on "
    << self_loops << "/" << g_out.tau_edges.size()
    << " processed classes, widths climb 1.." << g_out.nodes.size()
    << ", verdict " << kind_name(v.kind) << " with ladder evidence "
    << (v.ladder_evidence ? "recorded" : "missing") << " (" << fmt_secs(el)
    << ", limit 60s)";
  return {ok, o.str(), {}};
}

// ---------------------------------------------------------------------------
// criterion 9: stripping agrees with an independent summand count

// Surviving summand count from raw unit-path residues: per vertex the unit
// coefficients of the differential form a complex of scalar matrices, and
// rank counts exactly the cancellable pairs at each degree.
std::size_t residue_summand_count(const ProjComplex& X) {
  if (X.is_zero_complex()) return 0;
  const Algebra& A = X.algebra();
  long long total = 0;
  for (std::size_t v = 0; v < A.vertex_count(); ++v) {
    std::map<int, std::vector<std::size_t>> pos;
    for (int deg = X.lo(); deg <= X.hi(); ++deg) {
      const auto& lab = X.labels_at(deg);
      for (std::size_t i = 0; i < lab.size(); ++i)
        if (lab[i] == v) pos[deg].push_back(i);
    }
    std::map<int, long long> rk;
    for (int deg = X.lo(); deg < X.hi(); ++deg) {
      const auto& rows = pos[deg + 1];
      const auto& cols = pos[deg];
      if (rows.empty() || cols.empty()) {
        rk[deg] = 0;
        continue;
      }
      Matrix m(A.field(), rows.size(), cols.size());
      ElemMatrix d = X.diff(deg);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
          m.set(r, c, d.at(rows[r], cols[c])[A.unit_path(v)]);
      rk[deg] = static_cast<long long>(rank(m));
    }
    for (int deg = X.lo(); deg <= X.hi(); ++deg) {
      long long w = static_cast<long long>(pos[deg].size());
      long long out = (deg < X.hi()) ? rk[deg] : 0;
      long long in = (deg > X.lo()) ? rk[deg - 1] : 0;
      total += w - out - in;
    }
  }
  if (total < 0) throw InternalCheckError("residue count went negative");
  return static_cast<std::size_t>(total);
}

// Random bounded complex: a direct sum of stalks and unit cones in degrees
// [-2, 2] with width at most 3 per degree, then conjugated degreewise by
// unit-triangular automorphisms so the contractible pairs stop being
// syntactically visible.
ProjComplex random_sample(const Algebra& A, Rng& rng) {
  const int lo = -2;
  const std::size_t ndeg = 5, cap = 3;
  std::uint32_t nv = static_cast<std::uint32_t>(A.vertex_count());
  std::vector<std::vector<std::size_t>> labels(ndeg);
  struct UnitEntry {
    std::size_t k, r, c, v;
  };
  std::vector<UnitEntry> units;
  std::size_t attempts = 2 + rng.next(5);
  for (std::size_t t = 0; t < attempts; ++t) {
    std::size_t v = rng.next(nv);
    if (rng.next(2) == 0) {
      std::size_t k = rng.next(ndeg);
      if (labels[k].size() < cap) labels[k].push_back(v);
    } else {
      std::size_t k = rng.next(ndeg - 1);
      if (labels[k].size() < cap && labels[k + 1].size() < cap) {
        labels[k].push_back(v);
        labels[k + 1].push_back(v);
        units.push_back({k, labels[k + 1].size() - 1, labels[k].size() - 1, v});
      }
    }
  }
  bool empty = true;
  for (const auto& l : labels) empty = empty && l.empty();
  if (empty) labels[2].push_back(rng.next(nv));
  std::vector<ElemMatrix> diffs;
  for (std::size_t k = 0; k + 1 < ndeg; ++k)
    diffs.emplace_back(A, labels[k + 1].size(), labels[k].size());
  for (const UnitEntry& u : units)
    diffs[u.k].set(u.r, u.c, A.basis_elem(A.unit_path(u.v)));
  std::uint32_t p = A.field().p();
  std::vector<ElemMatrix> T(ndeg), Tinv(ndeg);
  for (std::size_t k = 0; k < ndeg; ++k) {
    ElemMatrix I = elem_identity(A, labels[k]);
    ElemMatrix N(A, labels[k].size(), labels[k].size());
    for (std::size_t r = 0; r < labels[k].size(); ++r)
      for (std::size_t c = 0; c < r; ++c) {
        if (rng.next(2)) continue;
        Elem e = A.zero_elem();
        for (std::size_t b : A.hom_slice(labels[k][c], labels[k][r]))
          e = A.add(e, A.scale(rng.next(p), A.basis_elem(b)));
        N.set(r, c, e);
      }
    T[k] = I.add(N);
    // strictly triangular and width <= 3, so N^3 = 0
    Tinv[k] = I.sub(N).add(compose(N, N));
    if (!(compose(T[k], Tinv[k]) == I))
      throw InternalCheckError("acceptance: bad automorphism inverse");
  }
  for (std::size_t k = 0; k + 1 < ndeg; ++k)
    diffs[k] = compose(T[k + 1], compose(diffs[k], Tinv[k]));
  return ProjComplex::build(A, lo, labels, diffs);
}

CriterionResult criterion_minimality(const Algebra& A) {
  Rng rng(0xFACEFEEDULL);
  const std::size_t samples = 50;
  std::size_t agree = 0, nontrivial = 0;
  std::string why;
  for (std::size_t s = 0; s < samples; ++s) {
    ProjComplex X = random_sample(A, rng);
    LengthTriple lt = lengths(X);
    std::size_t oracle = residue_summand_count(X);
    if (lt.l_p == oracle)
      ++agree;
    else if (why.empty())
      why = "; first mismatch at sample " + std::to_string(s) + " (" +
            std::to_string(lt.l_p) + " vs " + std::to_string(oracle) + ")";
    if (lt.l > lt.l_p) ++nontrivial;
  }
  bool ok = agree == samples;
  std::ostringstream o;
  o << "minimal representative size: " << agree << "/" << samples
    << " random conjugated A3 complexes agree with the unit-residue rank "
    << "count (" << nontrivial << " samples had removable pairs)" << why;
  return {ok, o.str(), {}};
}

}  // namespace

int main() {
  try {
    Algebra Af = Algebra::build(arknit_test::pres_field(5));
    Algebra Aa2 = Algebra::build(arknit_test::pres_a2(5));
    Algebra Aa3 = Algebra::build(arknit_test::pres_a3(5));
    Algebra Ad4 = Algebra::build(arknit_test::pres_d4(5));
    Algebra Adn = Algebra::build(arknit_test::pres_dual_numbers(3));

    CriterionResult res[9];
    ArComponentGraph gf, ga2, ga3, gd4, gdn;

    res[0] = guarded([&] { return criterion_simple(Af, gf); });
    res[1] = guarded([&] { return criterion_identities(); });
    res[2] = guarded([&] {
      std::vector<DynkinFixture> fx = {{&Aa2, &ga2, "A2", 3},
                                       {&Aa3, &ga3, "A3", 6},
                                       {&Ad4, &gd4, "D4", 12}};
      return criterion_dynkin(fx);
    });
    res[7] = guarded([&] { return criterion_self_injective(Adn, gdn); });

    NamedGraphs graphs = {{&gf, "one vertex over F5"},
                          {&ga2, "A2 over F5"},
                          {&ga3, "A3 over F5"},
                          {&gd4, "D4 over F5"},
                          {&gdn, "dual numbers over F3"}};
    res[3] = guarded([&] { return criterion_axioms(graphs); });
    res[4] = guarded([&] { return criterion_subadditivity(graphs); });
    res[5] = guarded([&] { return criterion_serre(graphs); });
    res[6] = guarded([&] { return criterion_chain_vanishing(ga2); });
    res[8] = guarded([&] { return criterion_minimality(Aa3); });

    int failed = 0;
    for (int k = 0; k < 9; ++k) {
      if (!res[k].pass) ++failed;
      std::cout << (res[k].pass ? "[PASS] " : "[FAIL] ") << (k + 1) << ". "
                << res[k].headline << "\n";
      for (const std::string& line : res[k].details) std::cout << line << "\n";
    }
    std::cout << "acceptance: " << (9 - failed) << " of 9 criteria hold, "
              << failed << " fail\n";
    return failed;
  } catch (const std::exception& e) {
    std::cout << "acceptance: setup failed: " << e.what() << "\n";
    return 9;
  }
}

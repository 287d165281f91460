#include "arknit/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "arknit/errors.hpp"
#include "json.hpp"

namespace arknit {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + one_line(e.what()));
  }
}

const json& need(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(where + ": missing key \"" + key + "\"");
  return *it;
}

// Strict shape check: object with exactly the required keys plus any subset
// of the optional ones.
void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  for (const char* k : required) need(j, where, k);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    auto same = [&k](const char* c) { return k == c; };
    if (!std::any_of(required.begin(), required.end(), same) &&
        !std::any_of(optional.begin(), optional.end(), same))
      throw InputError(where + ": unknown key \"" + k + "\"");
  }
}

std::string get_string(const json& j, const std::string& where,
                       const char* key) {
  const json& v = need(j, where, key);
  if (!v.is_string())
    throw InputError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::uint64_t get_uint(const json& j, const std::string& where,
                       const char* key) {
  const json& v = need(j, where, key);
  if (!v.is_number_unsigned())
    throw InputError(where + ": \"" + key +
                     "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::uint32_t get_u32(const json& j, const std::string& where,
                      const char* key) {
  std::uint64_t v = get_uint(j, where, key);
  if (v > 0xffffffffull)
    throw InputError(where + ": \"" + key + "\" is out of range");
  return static_cast<std::uint32_t>(v);
}

int get_i32(const json& j, const std::string& where, const char* key) {
  const json& v = need(j, where, key);
  if (!v.is_number_integer())
    throw InputError(where + ": \"" + key + "\" must be an integer");
  long long x = v.get<long long>();
  if (x < INT_MIN || x > INT_MAX)
    throw InputError(where + ": \"" + key + "\" is out of range");
  return static_cast<int>(x);
}

bool get_bool(const json& j, const std::string& where, const char* key) {
  const json& v = need(j, where, key);
  if (!v.is_boolean())
    throw InputError(where + ": \"" + key + "\" must be a boolean");
  return v.get<bool>();
}

const json& get_array(const json& j, const std::string& where,
                      const char* key) {
  const json& v = need(j, where, key);
  if (!v.is_array())
    throw InputError(where + ": \"" + key + "\" must be an array");
  return v;
}

std::vector<std::uint32_t> arrow_word(const json& path,
                                      const std::string& where,
                                      const std::map<std::string,
                                                     std::uint32_t>& aidx) {
  std::vector<std::uint32_t> word;
  for (const json& an : path) {
    if (!an.is_string())
      throw InputError(where + ": path entries must be arrow names");
    auto it = aidx.find(an.get<std::string>());
    if (it == aidx.end())
      throw InputError(where + ": unknown arrow \"" +
                       an.get<std::string>() + "\"");
    word.push_back(it->second);
  }
  return word;
}

}  // namespace

QuiverPresentation parse_algebra_document(const std::string& text) {
  const std::string top = "algebra document";
  json j = parse_text(text, top.c_str());
  check_keys(j, top, {"char", "vertices", "arrows"}, {"relations"});

  QuiverPresentation pres;
  pres.characteristic = get_u32(j, top, "char");

  std::map<std::string, std::uint32_t> vidx;
  for (const json& v : get_array(j, top, "vertices")) {
    if (!v.is_string())
      throw InputError("vertices: every entry must be a string");
    std::string name = v.get<std::string>();
    if (name.empty() || vidx.count(name))
      throw InputError("vertices: names must be nonempty and unique");
    vidx.emplace(name, static_cast<std::uint32_t>(pres.vertices.size()));
    pres.vertices.push_back(std::move(name));
  }
  if (pres.vertices.empty())
    throw InputError("vertices: at least one vertex is required");

  std::map<std::string, std::uint32_t> aidx;
  for (const json& a : get_array(j, top, "arrows")) {
    check_keys(a, "arrow", {"name", "from", "to"});
    Arrow ar;
    ar.name = get_string(a, "arrow", "name");
    if (ar.name.empty() || aidx.count(ar.name))
      throw InputError("arrows: names must be nonempty and unique");
    auto fi = vidx.find(get_string(a, "arrow", "from"));
    auto ti = vidx.find(get_string(a, "arrow", "to"));
    if (fi == vidx.end() || ti == vidx.end())
      throw InputError("arrow \"" + ar.name +
                       "\": endpoints must name vertices");
    ar.src = fi->second;
    ar.dst = ti->second;
    aidx.emplace(ar.name, static_cast<std::uint32_t>(pres.arrows.size()));
    pres.arrows.push_back(std::move(ar));
  }

  if (j.contains("relations")) {
    for (const json& rel : get_array(j, top, "relations")) {
      if (!rel.is_array() || rel.empty())
        throw InputError(
            "relations: each relation is a nonempty array of terms");
      Relation r;
      for (const json& t : rel) {
        check_keys(t, "relation term", {"coeff", "path"});
        RelationTerm term;
        term.coeff = get_u32(t, "relation term", "coeff");
        term.word = arrow_word(get_array(t, "relation term", "path"),
                               "relation term", aidx);
        r.push_back(std::move(term));
      }
      pres.relations.push_back(std::move(r));
    }
  }
  return pres;
}

ProjComplex parse_complex_document(const std::string& text,
                                   const Algebra& A) {
  const std::string top = "complex document";
  json j = parse_text(text, top.c_str());
  check_keys(j, top, {"degrees"}, {"differentials"});

  std::map<std::string, std::uint32_t> aidx;
  for (std::size_t a = 0; a < A.arrow_count(); ++a)
    aidx.emplace(A.presentation().arrows[a].name,
                 static_cast<std::uint32_t>(a));

  const json& degs = get_array(j, top, "degrees");
  if (degs.empty()) return ProjComplex::zero(A);

  int lo = 0;
  std::vector<std::vector<std::size_t>> labels;
  for (const json& d : degs) {
    check_keys(d, "degree entry", {"degree", "projectives"});
    int deg = get_i32(d, "degree entry", "degree");
    if (deg < -1000000 || deg > 1000000)
      throw InputError("degree entry: degree out of range");
    if (labels.empty())
      lo = deg;
    else if (deg != lo + static_cast<int>(labels.size()))
      throw InputError("degrees: must be consecutive and ascending");
    std::vector<std::size_t> row;
    for (const json& p : get_array(d, "degree entry", "projectives")) {
      if (!p.is_string())
        throw InputError("projectives: entries must be vertex names");
      auto vi = A.vertex_index(p.get<std::string>());
      if (!vi)
        throw InputError("projectives: unknown vertex \"" +
                         p.get<std::string>() + "\"");
      row.push_back(*vi);
    }
    labels.push_back(std::move(row));
  }

  int hi = lo + static_cast<int>(labels.size()) - 1;
  std::vector<ElemMatrix> diffs;
  for (int d = lo; d < hi; ++d)
    diffs.emplace_back(A, labels[d - lo + 1].size(), labels[d - lo].size());

  if (j.contains("differentials")) {
    std::set<int> seen;
    for (const json& dd : get_array(j, top, "differentials")) {
      check_keys(dd, "differential", {"degree", "entries"});
      int deg = get_i32(dd, "differential", "degree");
      if (deg < lo || deg >= hi)
        throw InputError("differential: degree outside the complex");
      if (!seen.insert(deg).second)
        throw InputError("differential: duplicate degree");
      ElemMatrix& m = diffs[deg - lo];
      for (const json& e : get_array(dd, "differential", "entries")) {
        check_keys(e, "differential entry", {"row", "col", "terms"});
        std::uint64_t r = get_uint(e, "differential entry", "row");
        std::uint64_t c = get_uint(e, "differential entry", "col");
        if (r >= m.rows() || c >= m.cols())
          throw InputError("differential entry: index out of range");
        std::size_t row_vertex = labels[deg - lo + 1][r];
        Elem acc = m.at(r, c);
        for (const json& t : get_array(e, "differential entry", "terms")) {
          check_keys(t, "entry term", {"coeff", "path"});
          std::uint32_t coeff = get_u32(t, "entry term", "coeff");
          std::vector<std::uint32_t> word = arrow_word(
              get_array(t, "entry term", "path"), "entry term", aidx);
          acc = A.add(acc, A.scale(coeff,
                                   A.word_elem(word,
                                               static_cast<std::uint32_t>(
                                                   row_vertex))));
        }
        m.set(r, c, std::move(acc));
      }
    }
  }
  return ProjComplex::build(A, lo, std::move(labels), std::move(diffs));
}

std::string verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::SimpleA1:
      return "Simple_A1";
    case VerdictKind::FiniteTypeDynkin:
      return "FiniteType_Dynkin";
    default:
      return "InfiniteOrInconclusive";
  }
}

std::string tree_name(const DynkinTag& tag) {
  return std::string(1, tag.family) + std::to_string(tag.n);
}

namespace {

VerdictKind verdict_from_name(const std::string& s) {
  if (s == "Simple_A1") return VerdictKind::SimpleA1;
  if (s == "FiniteType_Dynkin") return VerdictKind::FiniteTypeDynkin;
  if (s == "InfiniteOrInconclusive")
    return VerdictKind::InfiniteOrInconclusive;
  throw InputError("verdict: unknown kind \"" + s + "\"");
}

DynkinTag tree_from_name(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E'))
    throw InputError("verdict: malformed tree name \"" + s + "\"");
  std::size_t n = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) || n > 1000000)
      throw InputError("verdict: malformed tree name \"" + s + "\"");
    n = n * 10 + static_cast<std::size_t>(s[i] - '0');
  }
  if (n == 0) throw InputError("verdict: malformed tree name \"" + s + "\"");
  return DynkinTag{s[0], n};
}

}  // namespace

Report make_report(const ArComponentGraph& g,
                   const ClassificationVerdict& v) {
  Report r;
  if (g.A) {
    r.characteristic = g.A->presentation().characteristic;
    r.algebra_vertices = g.A->vertex_count();
    r.algebra_arrows = g.A->arrow_count();
  }
  r.window_lo = g.window_lo;
  r.window_hi = g.window_hi;
  r.steps_used = g.steps_used;
  r.complete = g.complete;
  r.kind = v.kind;
  r.tree = v.tree;
  r.period = v.period;
  r.sup_l_p = v.sup_lp;
  r.sup_l_i = v.sup_li;
  r.ladder_evidence = v.ladder_evidence;
  r.note = v.note;
  for (const ArNode& n : g.nodes)
    r.nodes.push_back(ReportNode{n.name, n.len.l_c, n.len.l, n.len.l_p,
                                 n.l_inj});
  r.tau_edges = g.tau_edges;
  r.arrows = g.arrows;
  for (const TauEdge& e : g.tau_edges)
    r.triangles.push_back(ReportTriangle{e.from, "certified", 0});
  return r;
}

std::string write_report(const Report& r) {
  ordered j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["algebra"] = ordered{{"characteristic", r.characteristic},
                         {"vertices", r.algebra_vertices},
                         {"arrows", r.algebra_arrows}};
  j["window"] = ordered{{"lo", r.window_lo}, {"hi", r.window_hi}};
  j["knitting"] = ordered{{"nodes_in_window", r.nodes.size()},
                          {"steps_used", r.steps_used},
                          {"complete", r.complete}};
  ordered verdict;
  verdict["kind"] = verdict_name(r.kind);
  if (r.tree) verdict["tree"] = tree_name(*r.tree);
  if (r.period)
    verdict["periodicity"] = ordered{{"tau_power", r.period->tau_power},
                                     {"shift", r.period->shift}};
  verdict["sup_l_p"] = r.sup_l_p;
  verdict["sup_l_i"] = r.sup_l_i;
  verdict["ladder_evidence"] = r.ladder_evidence;
  verdict["note"] = r.note;
  j["verdict"] = std::move(verdict);

  ordered::array_t nodes;
  for (const ReportNode& n : r.nodes)
    nodes.push_back(ordered{{"name", n.name},
                            {"l_c", n.l_c},
                            {"l", n.l},
                            {"l_p", n.l_p},
                            {"l_inj", n.l_inj}});
  j["nodes"] = std::move(nodes);

  ordered::array_t taus;
  for (const TauEdge& e : r.tau_edges)
    taus.push_back(ordered{{"from", e.from}, {"to", e.to},
                           {"shift", e.shift}});
  j["tau_edges"] = std::move(taus);

  ordered::array_t arrows;
  for (const ArArrow& a : r.arrows)
    arrows.push_back(ordered{{"from", a.from},
                             {"from_shift", a.from_shift},
                             {"to", a.to},
                             {"mult", a.mult}});
  j["arrows"] = std::move(arrows);

  ordered::array_t tris;
  for (const ReportTriangle& t : r.triangles)
    tris.push_back(ordered{{"node", t.node},
                           {"status", t.status},
                           {"objects_checked", t.objects_checked}});
  j["triangles"] = std::move(tris);

  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  const std::string top = "report";
  json j = parse_text(text, top.c_str());
  check_keys(j, top,
             {"tool", "version", "algebra", "window", "knitting", "verdict",
              "nodes", "tau_edges", "arrows", "triangles"});
  Report r;
  r.tool = get_string(j, top, "tool");
  r.version = get_string(j, top, "version");

  const json& alg = need(j, top, "algebra");
  check_keys(alg, "algebra", {"characteristic", "vertices", "arrows"});
  r.characteristic = get_u32(alg, "algebra", "characteristic");
  r.algebra_vertices = get_uint(alg, "algebra", "vertices");
  r.algebra_arrows = get_uint(alg, "algebra", "arrows");

  const json& win = need(j, top, "window");
  check_keys(win, "window", {"lo", "hi"});
  r.window_lo = get_i32(win, "window", "lo");
  r.window_hi = get_i32(win, "window", "hi");

  const json& knitting = need(j, top, "knitting");
  check_keys(knitting, "knitting",
             {"nodes_in_window", "steps_used", "complete"});
  std::uint64_t declared = get_uint(knitting, "knitting", "nodes_in_window");
  r.steps_used = get_uint(knitting, "knitting", "steps_used");
  r.complete = get_bool(knitting, "knitting", "complete");

  const json& verdict = need(j, top, "verdict");
  check_keys(verdict, "verdict",
             {"kind", "sup_l_p", "sup_l_i", "ladder_evidence", "note"},
             {"tree", "periodicity"});
  r.kind = verdict_from_name(get_string(verdict, "verdict", "kind"));
  if (verdict.contains("tree"))
    r.tree = tree_from_name(get_string(verdict, "verdict", "tree"));
  if (verdict.contains("periodicity")) {
    const json& p = need(verdict, "verdict", "periodicity");
    check_keys(p, "periodicity", {"tau_power", "shift"});
    ShiftPeriod sp;
    sp.tau_power = get_uint(p, "periodicity", "tau_power");
    sp.shift = get_i32(p, "periodicity", "shift");
    r.period = sp;
  }
  r.sup_l_p = get_uint(verdict, "verdict", "sup_l_p");
  r.sup_l_i = get_uint(verdict, "verdict", "sup_l_i");
  r.ladder_evidence = get_bool(verdict, "verdict", "ladder_evidence");
  r.note = get_string(verdict, "verdict", "note");

  for (const json& n : get_array(j, top, "nodes")) {
    check_keys(n, "node", {"name", "l_c", "l", "l_p", "l_inj"});
    ReportNode node;
    node.name = get_string(n, "node", "name");
    node.l_c = get_uint(n, "node", "l_c");
    node.l = get_uint(n, "node", "l");
    node.l_p = get_uint(n, "node", "l_p");
    node.l_inj = get_uint(n, "node", "l_inj");
    r.nodes.push_back(std::move(node));
  }
  if (declared != r.nodes.size())
    throw InputError("knitting: node count disagrees with the node list");

  auto node_index = [&](std::uint64_t i, const char* where) {
    if (i >= r.nodes.size())
      throw InputError(std::string(where) + ": node index out of range");
    return static_cast<std::size_t>(i);
  };
  for (const json& e : get_array(j, top, "tau_edges")) {
    check_keys(e, "tau edge", {"from", "to", "shift"});
    TauEdge edge;
    edge.from = node_index(get_uint(e, "tau edge", "from"), "tau edge");
    edge.to = node_index(get_uint(e, "tau edge", "to"), "tau edge");
    edge.shift = get_i32(e, "tau edge", "shift");
    r.tau_edges.push_back(edge);
  }
  for (const json& a : get_array(j, top, "arrows")) {
    check_keys(a, "arrow", {"from", "from_shift", "to", "mult"});
    ArArrow arrow;
    arrow.from = node_index(get_uint(a, "arrow", "from"), "arrow");
    arrow.from_shift = get_i32(a, "arrow", "from_shift");
    arrow.to = node_index(get_uint(a, "arrow", "to"), "arrow");
    arrow.mult = get_uint(a, "arrow", "mult");
    r.arrows.push_back(arrow);
  }
  for (const json& t : get_array(j, top, "triangles")) {
    check_keys(t, "triangle", {"node", "status", "objects_checked"});
    ReportTriangle tri;
    tri.node = node_index(get_uint(t, "triangle", "node"), "triangle");
    tri.status = get_string(t, "triangle", "status");
    if (tri.status != "certified" && tri.status != "verified")
      throw InputError("triangle: unknown status \"" + tri.status + "\"");
    tri.objects_checked = get_uint(t, "triangle", "objects_checked");
    r.triangles.push_back(std::move(tri));
  }
  return r;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string write_dot(const ArComponentGraph& g) {
  std::ostringstream os;
  os << "digraph ar_window {\n"
     << "  rankdir=BT;\n"
     << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(g.nodes[i].name)
       << "\\nl_p=" << g.nodes[i].len.l_p << "\"];\n";
  for (const ArArrow& a : g.arrows) {
    os << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.mult;
    if (a.from_shift != 0) os << " from [" << a.from_shift << "]";
    os << "\"];\n";
  }
  for (const TauEdge& e : g.tau_edges)
    os << "  n" << e.from << " -> n" << e.to
       << " [style=dashed, constraint=false, label=\"tau [" << e.shift
       << "]\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace arknit

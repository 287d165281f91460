#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arknit/ar.hpp"

namespace arknit {

inline constexpr const char* tool_name = "arknit";
inline constexpr const char* tool_version = "0.1.0";

// Strict JSON input.  Unknown keys are rejected at every level so a typo'd
// document fails loudly instead of being silently ignored; every failure is
// an InputError with a single-line message.
//
// Algebra document:
//   {"char": 5, "vertices": ["1", "2"],
//    "arrows": [{"name": "a", "from": "1", "to": "2"}],
//    "relations": [[{"coeff": 1, "path": ["a", "a"]}]]}
// Arrows point from/to vertex names; a relation is a sum of terms, each a
// coefficient on a traversal-ordered arrow word.
QuiverPresentation parse_algebra_document(const std::string& text);

// Complex document, over an already-built algebra:
//   {"degrees": [{"degree": -1, "projectives": ["2"]},
//                {"degree": 0, "projectives": ["1"]}],
//    "differentials": [{"degree": -1, "entries":
//        [{"row": 0, "col": 0, "terms": [{"coeff": 1, "path": ["a"]}]}]}]}
// Degrees must be consecutive and ascending.  The differential listed at
// degree d maps degree d to d+1; an entry's path runs from the row (target)
// vertex to the column (source) vertex in traversal order, the empty path
// meaning the lazy one at the shared vertex.  Slice typing and d∘d = 0 are
// validated on assembly.
ProjComplex parse_complex_document(const std::string& text, const Algebra& A);

// Classification report: verdict and window summary in a plain value type
// that survives a JSON round trip exactly.
struct ReportNode {
  std::string name;
  std::size_t l_c = 0, l = 0, l_p = 0, l_inj = 0;
  bool operator==(const ReportNode&) const = default;
};

// Status is "certified" straight out of knitting (the construction itself
// checks the triangle) and "verified" once verify_ar ran it against a
// universe of objects_checked objects.
struct ReportTriangle {
  std::size_t node = 0;
  std::string status = "certified";
  std::size_t objects_checked = 0;
  bool operator==(const ReportTriangle&) const = default;
};

struct Report {
  std::string tool = tool_name;
  std::string version = tool_version;
  std::uint32_t characteristic = 0;
  std::size_t algebra_vertices = 0, algebra_arrows = 0;
  int window_lo = -4, window_hi = 4;
  std::size_t steps_used = 0;
  bool complete = false;
  VerdictKind kind = VerdictKind::InfiniteOrInconclusive;
  std::optional<DynkinTag> tree;
  std::optional<ShiftPeriod> period;
  std::size_t sup_l_p = 0, sup_l_i = 0;
  bool ladder_evidence = false;
  std::string note;
  std::vector<ReportNode> nodes;
  std::vector<TauEdge> tau_edges;
  std::vector<ArArrow> arrows;
  std::vector<ReportTriangle> triangles;
  bool operator==(const Report&) const = default;
};

Report make_report(const ArComponentGraph& g, const ClassificationVerdict& v);
std::string write_report(const Report& r);
Report parse_report(const std::string& text);

std::string verdict_name(VerdictKind kind);
std::string tree_name(const DynkinTag& tag);

// Window graph in DOT: one box per node named by its degreewise projective
// content, solid arrows labeled with multiplicities (and the source shift
// when nonzero), dashed translate edges labeled with their shift.  Output is
// deterministic across runs.
std::string write_dot(const ArComponentGraph& g);

}  // namespace arknit

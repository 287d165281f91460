#include "arknit/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "arknit/errors.hpp"

namespace arknit {

namespace {

struct Path {
  std::vector<std::uint32_t> word;
  std::uint32_t head = 0, tail = 0;
};

// deglex order used for reduction: longer words are "bigger"; ties broken
// lexicographically, trivial paths by vertex.  Pivots of the relation span
// are chosen at the biggest surviving monomial, so normal forms rewrite a
// path into words that never grow.
bool deglex_greater(const Path& a, const Path& b) {
  if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
  if (a.word != b.word) return a.word < b.word;
  return a.head < b.head;
}

}  // namespace

Elem Algebra::basis_elem(std::size_t b) const {
  Elem e = zero_elem();
  e[b] = 1 % field_.p();
  return e;
}

Elem Algebra::unit() const {
  Elem e = zero_elem();
  for (std::size_t v = 0; v < vertex_count(); ++v) e[v] = 1 % field_.p();
  return e;
}

Elem Algebra::add(const Elem& x, const Elem& y) const {
  Elem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.add(x[i], y[i]);
  return r;
}

Elem Algebra::sub(const Elem& x, const Elem& y) const {
  Elem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.sub(x[i], y[i]);
  return r;
}

Elem Algebra::scale(std::uint32_t c, const Elem& x) const {
  Elem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = field_.mul(c, x[i]);
  return r;
}

bool Algebra::is_zero(const Elem& x) const {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

Elem Algebra::mul(const Elem& x, const Elem& y) const {
  Elem r = zero_elem();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      std::uint32_t c = field_.mul(x[i], y[j]);
      const Elem& t = table_[i * dim() + j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (t[k] != 0) r[k] = field_.add(r[k], field_.mul(c, t[k]));
    }
  }
  return r;
}

bool Algebra::in_radical(const Elem& x) const {
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (x[v] != 0) return false;
  return true;
}

const std::vector<std::size_t>& Algebra::hom_slice(std::size_t i,
                                                   std::size_t j) const {
  return hom_slices_[i * vertex_count() + j];
}

std::optional<Elem> Algebra::local_inverse(const Elem& x,
                                           std::size_t v) const {
  if (x[unit_path(v)] == 0) return std::nullopt;  // not a unit of e_v A e_v
  const auto& slice = hom_slice(v, v);
  Matrix m(field_, slice.size(), slice.size());
  for (std::size_t c = 0; c < slice.size(); ++c) {
    Elem prod = mul(x, basis_elem(slice[c]));
    for (std::size_t r = 0; r < slice.size(); ++r) m.set(r, c, prod[slice[r]]);
  }
  Vec rhs(slice.size(), 0);
  for (std::size_t r = 0; r < slice.size(); ++r)
    if (slice[r] == unit_path(v)) rhs[r] = 1 % field_.p();
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  Elem y = zero_elem();
  for (std::size_t c = 0; c < slice.size(); ++c) y[slice[c]] = (*sol)[c];
  // one-sided inverses are two-sided in a finite-dimensional algebra
  Elem check = mul(y, x);
  check[unit_path(v)] = field_.sub(check[unit_path(v)], 1 % field_.p());
  if (!is_zero(check))
    throw InternalCheckError("local_inverse: one-sided inverse only");
  return y;
}

bool Algebra::is_connected() const {
  std::size_t nv = vertex_count();
  if (nv == 0) return false;
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& a : pres_.arrows) {
    adj[a.src].push_back(a.dst);
    adj[a.dst].push_back(a.src);
  }
  std::vector<bool> seen(nv, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == nv;
}

QuiverPresentation Algebra::opposite_presentation() const {
  QuiverPresentation op;
  op.characteristic = pres_.characteristic;
  op.vertices = pres_.vertices;
  for (const auto& a : pres_.arrows)
    op.arrows.push_back({a.name, a.dst, a.src});
  for (const auto& rel : pres_.relations) {
    Relation r;
    for (const auto& term : rel) {
      RelationTerm t;
      t.coeff = term.coeff;
      t.word.assign(term.word.rbegin(), term.word.rend());
      r.push_back(std::move(t));
    }
    op.relations.push_back(std::move(r));
  }
  return op;
}

std::optional<std::size_t> Algebra::vertex_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < pres_.vertices.size(); ++i)
    if (pres_.vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Algebra::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < pres_.arrows.size(); ++i)
    if (pres_.arrows[i].name == name) return i;
  return std::nullopt;
}

namespace {

struct BuildState {
  const QuiverPresentation* pres;
  PrimeField field;
  std::size_t bound;
  std::vector<Path> paths;
  std::map<std::vector<std::uint32_t>, std::size_t> word_id;  // nonempty words
  std::vector<std::size_t> perm;      // permuted column -> path id
  std::vector<std::size_t> inv_perm;  // path id -> permuted column
};

void validate_presentation(const QuiverPresentation& pres) {
  if (pres.vertices.empty()) throw InputError("quiver has no vertices");
  {
    std::set<std::string> names(pres.vertices.begin(), pres.vertices.end());
    if (names.size() != pres.vertices.size())
      throw InputError("duplicate vertex names");
  }
  std::set<std::string> anames;
  for (const auto& a : pres.arrows) {
    if (a.src >= pres.vertices.size() || a.dst >= pres.vertices.size())
      throw InputError("arrow endpoint out of range: " + a.name);
    if (!anames.insert(a.name).second)
      throw InputError("duplicate arrow name: " + a.name);
  }
  for (const auto& rel : pres.relations) {
    if (rel.empty()) throw NonAdmissibleRelationError("empty relation");
    std::uint32_t head = 0, tail = 0;
    bool first = true;
    for (const auto& term : rel) {
      if (term.word.size() < 2)
        throw NonAdmissibleRelationError(
            "relation term of length < 2 (ideal must be admissible)");
      for (std::size_t k = 0; k < term.word.size(); ++k) {
        if (term.word[k] >= pres.arrows.size())
          throw InputError("relation references unknown arrow");
        if (k + 1 < term.word.size() &&
            pres.arrows[term.word[k]].dst != pres.arrows[term.word[k + 1]].src)
          throw NonAdmissibleRelationError(
              "relation term is not a composable path");
      }
      std::uint32_t h = pres.arrows[term.word.front()].src;
      std::uint32_t t = pres.arrows[term.word.back()].dst;
      if (first) {
        head = h;
        tail = t;
        first = false;
      } else if (h != head || t != tail) {
        throw NonAdmissibleRelationError(
            "relation terms have different endpoints");
      }
    }
  }
}

void enumerate_paths(BuildState& st) {
  const auto& pres = *st.pres;
  for (std::uint32_t v = 0; v < pres.vertices.size(); ++v)
    st.paths.push_back({{}, v, v});
  std::size_t level_begin = 0, level_end = st.paths.size();
  for (std::size_t len = 1; len <= st.bound; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      Path base = st.paths[i];
      for (std::uint32_t a = 0; a < pres.arrows.size(); ++a) {
        if (pres.arrows[a].src != base.tail) continue;
        Path ext = base;
        ext.word.push_back(a);
        ext.tail = pres.arrows[a].dst;
        st.word_id[ext.word] = st.paths.size();
        st.paths.push_back(std::move(ext));
        if (st.paths.size() > 200000)
          throw NotFiniteDimensionalError(
              "path enumeration exceeded 200000 paths below the length bound");
      }
    }
    level_begin = level_end;
    level_end = st.paths.size();
    if (level_begin == level_end) break;  // no paths of this length
  }
}

std::size_t path_id(const BuildState& st,
                    const std::vector<std::uint32_t>& word,
                    std::uint32_t at_vertex) {
  if (word.empty()) return at_vertex;
  auto it = st.word_id.find(word);
  if (it == st.word_id.end())
    throw InternalCheckError("path lookup beyond enumeration bound");
  return it->second;
}

}  // namespace

Algebra Algebra::build(const QuiverPresentation& pres,
                       std::size_t path_bound) {
  validate_presentation(pres);
  Algebra A;
  A.field_ = PrimeField(pres.characteristic);
  A.pres_ = pres;
  A.path_bound_ = path_bound;

  BuildState st;
  st.pres = &A.pres_;
  st.field = A.field_;
  st.bound = path_bound;
  enumerate_paths(st);

  // Columns sorted deglex-descending so reduction pivots sit on the biggest
  // monomial of each ideal element.
  st.perm.resize(st.paths.size());
  for (std::size_t i = 0; i < st.perm.size(); ++i) st.perm[i] = i;
  std::sort(st.perm.begin(), st.perm.end(), [&](std::size_t a, std::size_t b) {
    return deglex_greater(st.paths[a], st.paths[b]);
  });
  st.inv_perm.resize(st.paths.size());
  for (std::size_t c = 0; c < st.perm.size(); ++c) st.inv_perm[st.perm[c]] = c;

  // Span of { x * rel * y } intersected with the enumeration window.
  Subspace ideal(A.field_, st.paths.size());
  for (const auto& rel : pres.relations) {
    std::uint32_t head = pres.arrows[rel.front().word.front()].src;
    std::uint32_t tail = pres.arrows[rel.front().word.back()].dst;
    std::size_t maxlen = 0;
    for (const auto& term : rel) maxlen = std::max(maxlen, term.word.size());
    for (const auto& left : st.paths) {  // traversed before the relation
      if (left.tail != head) continue;
      for (const auto& right : st.paths) {  // traversed after the relation
        if (right.head != tail) continue;
        if (left.word.size() + maxlen + right.word.size() > st.bound) continue;
        Vec v(st.paths.size(), 0);
        bool nonzero = false;
        for (const auto& term : rel) {
          std::uint32_t c = A.field_.reduce(term.coeff);
          if (c == 0) continue;
          std::vector<std::uint32_t> w = left.word;
          w.insert(w.end(), term.word.begin(), term.word.end());
          w.insert(w.end(), right.word.begin(), right.word.end());
          std::size_t id = path_id(st, w, left.head);
          v[st.inv_perm[id]] = A.field_.add(v[st.inv_perm[id]], c);
          nonzero = true;
        }
        if (nonzero) ideal.add(v);
      }
    }
  }

  // Surviving paths = non-pivot columns.
  std::vector<bool> is_pivot_col(st.paths.size(), false);
  {
    // Reconstruct pivot positions by reducing unit vectors: a column is a
    // pivot iff the reduction of its unit vector changes it.  Subspace does
    // not expose pivots directly, so recompute from the stored basis rows.
    for (const auto& row : ideal.basis()) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) {
          is_pivot_col[j] = true;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> surviving;  // path ids
  for (std::size_t id = 0; id < st.paths.size(); ++id)
    if (!is_pivot_col[st.inv_perm[id]]) surviving.push_back(id);
  for (auto id : surviving) {
    if (st.paths[id].word.size() >= path_bound && path_bound > 0) {
      throw NotFiniteDimensionalError(
          "paths of maximal length survive the relations; finite dimension "
          "cannot be certified within path_bound=" +
          std::to_string(path_bound));
    }
  }
  std::sort(surviving.begin(), surviving.end(),
            [&](std::size_t a, std::size_t b) {
              const Path& pa = st.paths[a];
              const Path& pb = st.paths[b];
              if (pa.word.size() != pb.word.size())
                return pa.word.size() < pb.word.size();
              if (pa.word.empty()) return pa.head < pb.head;
              return pa.word < pb.word;
            });

  std::vector<std::size_t> basis_index_of_path(st.paths.size(), SIZE_MAX);
  for (std::size_t b = 0; b < surviving.size(); ++b) {
    basis_index_of_path[surviving[b]] = b;
    const Path& p = st.paths[surviving[b]];
    A.basis_.push_back({p.word, p.head, p.tail});
  }
  const std::size_t dim = A.basis_.size();

  // Normal form of every enumerated path, as coordinates over the basis.
  std::vector<Elem> nf(st.paths.size());
  for (std::size_t id = 0; id < st.paths.size(); ++id) {
    Vec unit_vec(st.paths.size(), 0);
    unit_vec[st.inv_perm[id]] = 1 % A.field_.p();
    Vec red = ideal.reduce(unit_vec);
    Elem e(dim, 0);
    for (std::size_t c = 0; c < red.size(); ++c) {
      if (red[c] == 0) continue;
      std::size_t pid = st.perm[c];
      std::size_t b = basis_index_of_path[pid];
      if (b == SIZE_MAX)
        throw InternalCheckError("normal form hit a pivot column");
      e[b] = red[c];
    }
    nf[id] = std::move(e);
  }

  // Normal form of an arbitrary word: split off a maximal indexed prefix,
  // rewrite it, and recurse on the strictly shorter remainders.
  struct Reducer {
    const BuildState& st;
    const Algebra& A;
    const std::vector<Elem>& nf;
    Elem reduce(const std::vector<std::uint32_t>& word,
                std::uint32_t at) const {
      if (word.size() <= st.bound) {
        if (word.empty()) return nf[at];
        auto it = st.word_id.find(word);
        if (it == st.word_id.end()) return Elem(A.dim(), 0);  // died earlier
        return nf[it->second];
      }
      std::vector<std::uint32_t> prefix(word.begin(),
                                        word.begin() + st.bound);
      auto it = st.word_id.find(prefix);
      if (it == st.word_id.end()) return Elem(A.dim(), 0);
      const Elem& pref_nf = nf[it->second];
      Elem acc(A.dim(), 0);
      for (std::size_t b = 0; b < A.dim(); ++b) {
        if (pref_nf[b] == 0) continue;
        std::vector<std::uint32_t> w = A.basis_word(b).word;
        w.insert(w.end(), word.begin() + st.bound, word.end());
        Elem part = reduce(w, A.basis_word(b).head);
        for (std::size_t k = 0; k < A.dim(); ++k)
          acc[k] = A.field_.add(acc[k],
                                A.field_.mul(pref_nf[b], part[k]));
      }
      return acc;
    }
  };
  Reducer reducer{st, A, nf};

  // Multiplication table: mul(x, y) = class of (word of y, then word of x).
  A.table_.assign(dim * dim, Elem(dim, 0));
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      const BasisWord& bx = A.basis_[x];
      const BasisWord& by = A.basis_[y];
      if (by.tail != bx.head) continue;  // not composable
      std::vector<std::uint32_t> w = by.word;
      w.insert(w.end(), bx.word.begin(), bx.word.end());
      A.table_[x * dim + y] = reducer.reduce(w, by.head);
    }
  }

  // Slices for Hom(P_i, P_j): words with tail i, head j.
  std::size_t nv = pres.vertices.size();
  A.hom_slices_.assign(nv * nv, {});
  for (std::size_t b = 0; b < dim; ++b)
    A.hom_slices_[A.basis_[b].tail * nv + A.basis_[b].head].push_back(b);

  // Unit law and associativity certify the truncated reduction produced an
  // honest algebra (inhomogeneous relations near the bound would break one
  // of these rather than fail silently).
  Elem one = A.unit();
  for (std::size_t b = 0; b < dim; ++b) {
    Elem eb = A.basis_elem(b);
    if (A.mul(one, eb) != eb || A.mul(eb, one) != eb)
      throw InternalCheckError("unit law failed in the quotient algebra");
  }
  if (dim <= 40) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
          Elem lhs = A.mul(A.table_[i * dim + j], A.basis_elem(k));
          Elem rhs = A.mul(A.basis_elem(i), A.table_[j * dim + k]);
          if (lhs != rhs)
            throw InternalCheckError(
                "associativity failed in the quotient algebra (raise "
                "path_bound)");
        }
  } else {
    for (std::uint32_t a = 0; a < pres.arrows.size(); ++a)
      for (std::uint32_t b = 0; b < pres.arrows.size(); ++b)
        for (std::uint32_t c = 0; c < pres.arrows.size(); ++c) {
          Elem ea = A.word_elem({a}), eb = A.word_elem({b}),
               ec = A.word_elem({c});
          if (A.mul(A.mul(ea, eb), ec) != A.mul(ea, A.mul(eb, ec)))
            throw InternalCheckError(
                "associativity failed in the quotient algebra (raise "
                "path_bound)");
        }
  }
  return A;
}

Elem Algebra::word_elem(const std::vector<std::uint32_t>& word,
                        std::uint32_t at) const {
  if (word.empty()) {
    if (at >= vertex_count()) throw InputError("word_elem: bad vertex");
    return basis_elem(unit_path(at));
  }
  Elem acc;
  bool first = true;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] >= arrow_count()) throw InputError("word_elem: bad arrow");
    if (k + 1 < word.size() &&
        pres_.arrows[word[k]].dst != pres_.arrows[word[k + 1]].src)
      throw InputError("word_elem: word is not a composable path");
  }
  // multiply arrow classes right-to-left so the traversal order is word order
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // locate the length-1 basis word for this arrow
    Elem cls;
    bool found = false;
    for (std::size_t b = vertex_count(); b < dim(); ++b) {
      if (basis_[b].word.size() == 1 && basis_[b].word[0] == *it) {
        cls = basis_elem(b);
        found = true;
        break;
      }
    }
    // admissible ideals live in radical square, so every arrow survives
    if (!found) throw InternalCheckError("word_elem: arrow class missing");
    if (first) {
      acc = cls;
      first = false;
    } else {
      acc = mul(acc, cls);
    }
  }
  return acc;
}

}  // namespace arknit

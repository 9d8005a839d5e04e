#include "taucat/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace taucat {

AlgElem alg_add(const AlgElem& a, const AlgElem& b) {
  AlgElem out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].second + b[j].second;
      if (c != 0) out.push_back({a[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

AlgElem alg_scale(const AlgElem& a, const Scalar& s) {
  if (s == 0) return {};
  AlgElem out = a;
  for (auto& t : out) t.second *= s;
  return out;
}

std::string Algebra::vertex_label(int v) const {
  if (quiver) return quiver->vertices[v];
  return std::to_string(v + 1);
}

AlgElem Algebra::multiply(const AlgElem& a, const AlgElem& b) const {
  AlgElem out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) out = alg_add(out, alg_scale(mult[i][j], ci * cj));
  return out;
}

AlgElem Algebra::unit() const {
  AlgElem u;
  for (int i = 0; i < n_; ++i) u.push_back({i, 1});
  return u;
}

Mat Algebra::left_mult_matrix(int g) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, c] : mult[g][j]) m.at(k, j) = c;
  return m;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (mult[i][j] != mult[j][i]) return false;
  return true;
}

bool Algebra::is_local() const { return dim() - radical_basis.cols() == 1; }

// --- path bookkeeping for build_algebra --------------------------------------

namespace {

struct Path {
  int src, tgt;
  std::vector<int> arrows;  // traversal order
  int len() const { return int(arrows.size()); }
};

bool path_lex_less(const Path& a, const Path& b) {
  if (a.len() != b.len()) return a.len() < b.len();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.src < b.src;  // distinguishes trivial paths
}

std::vector<Path> all_paths_up_to(const Quiver& q, int maxlen) {
  std::vector<Path> out;
  for (int v = 0; v < q.n(); ++v) out.push_back({v, v, {}});
  std::vector<Path> frontier = out;
  for (int l = 1; l <= maxlen; ++l) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int a = 0; a < int(q.arrows.size()); ++a)
        if (q.arrows[a].src == p.tgt) {
          Path np{p.src, q.arrows[a].tgt, p.arrows};
          np.arrows.push_back(a);
          next.push_back(np);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(out.begin(), out.end(), path_lex_less);
  return out;
}

}  // namespace

bool is_acyclic(const Quiver& q) {
  std::vector<int> indeg(q.n(), 0);
  for (const auto& a : q.arrows) ++indeg[a.tgt];
  std::vector<int> stack;
  for (int v = 0; v < q.n(); ++v)
    if (!indeg[v]) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : q.arrows)
      if (a.src == v && --indeg[a.tgt] == 0) stack.push_back(a.tgt);
  }
  return seen == q.n();
}

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations, int m) {
  if (m < 2) throw std::runtime_error("not admissible at bound m");
  for (const auto& rel : relations) {
    if (rel.empty()) throw std::runtime_error("relation not parallel");
    int src = -1, tgt = -1;
    for (const auto& term : rel) {
      if (term.path.size() < 2) throw std::runtime_error("not admissible at bound m");
      for (size_t i = 0; i < term.path.size(); ++i) {
        int a = term.path[i];
        if (a < 0 || a >= int(q.arrows.size())) throw std::runtime_error("relation not parallel");
        if (i > 0 && q.arrows[term.path[i - 1]].tgt != q.arrows[a].src)
          throw std::runtime_error("relation not parallel");
      }
      int s = q.arrows[term.path.front()].src;
      int t = q.arrows[term.path.back()].tgt;
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (s != src || t != tgt) {
        throw std::runtime_error("relation not parallel");
      }
    }
  }

  // Columns: all paths of length <= m, sorted by (length, lex) descending so
  // rref pivots eliminate the largest monomials and the surviving basis is the
  // canonically smallest representative set.
  std::vector<Path> cols = all_paths_up_to(q, m);
  std::sort(cols.begin(), cols.end(), [](const Path& a, const Path& b) { return path_lex_less(b, a); });
  std::map<std::pair<int, std::vector<int>>, int> col_index;  // (src, arrows) -> column
  for (int j = 0; j < int(cols.size()); ++j) col_index[{cols[j].src, cols[j].arrows}] = j;

  auto lookup = [&](int src, const std::vector<int>& arrows) -> int {
    auto it = col_index.find({src, arrows});
    return it == col_index.end() ? -1 : it->second;
  };

  // Two-sided ideal closure: u * r * w over all composable path pairs,
  // truncated beyond length m.
  std::vector<std::vector<Scalar>> rows;
  for (const auto& rel : relations) {
    int rsrc = q.arrows[rel.front().path.front()].src;
    int rtgt = q.arrows[rel.front().path.back()].tgt;
    for (const auto& w : cols) {
      if (w.tgt != rsrc) continue;
      for (const auto& u : cols) {
        if (u.src != rtgt) continue;
        std::vector<Scalar> row(cols.size());
        bool nonzero = false;
        for (const auto& term : rel) {
          std::vector<int> arrows = w.arrows;
          arrows.insert(arrows.end(), term.path.begin(), term.path.end());
          arrows.insert(arrows.end(), u.arrows.begin(), u.arrows.end());
          if (int(arrows.size()) > m) continue;  // killed by the nilpotency ideal
          int j = lookup(w.src, arrows);
          if (j < 0) continue;
          row[j] += term.coeff;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }

  Mat ideal(int(rows.size()), int(cols.size()));
  for (int i = 0; i < int(rows.size()); ++i)
    for (int j = 0; j < int(cols.size()); ++j) ideal.at(i, j) = rows[i][j];
  Rref red = rref(ideal);

  // Reduction table: pivot column -> combination of non-pivot columns.
  std::vector<int> pivot_row(cols.size(), -1);
  for (size_t p = 0; p < red.pivots.size(); ++p) pivot_row[red.pivots[p]] = int(p);

  // Admissibility: every path of length exactly m must lie in the ideal.
  for (int j = 0; j < int(cols.size()); ++j) {
    if (cols[j].len() != m) continue;
    if (pivot_row[j] < 0) throw std::runtime_error("not admissible at bound m");
    for (int c = 0; c < int(cols.size()); ++c)
      if (c != j && red.mat.at(pivot_row[j], c) != 0)
        throw std::runtime_error("not admissible at bound m");
  }

  auto a = std::make_shared<Algebra>();
  a->quiver = q;
  a->relations = relations;
  a->m = m;
  a->set_vertex_count(q.n());

  // Surviving basis: non-pivot columns (all of length < m by the check above),
  // ordered (length, lex) ascending with idempotents first.
  std::vector<int> keep;
  for (int j = 0; j < int(cols.size()); ++j)
    if (pivot_row[j] < 0) keep.push_back(j);
  std::sort(keep.begin(), keep.end(),
            [&](int x, int y) { return path_lex_less(cols[x], cols[y]); });
  std::vector<int> col_to_basis(cols.size(), -1);
  for (int b = 0; b < int(keep.size()); ++b) {
    const Path& p = cols[keep[b]];
    a->basis.push_back({p.src, p.tgt, p.arrows});
    col_to_basis[keep[b]] = b;
  }
  if (int(a->basis.size()) < q.n()) throw std::runtime_error("not admissible at bound m");
  for (int v = 0; v < q.n(); ++v)
    if (a->basis[v].src != v || !a->basis[v].path.empty())
      throw std::runtime_error("not admissible at bound m");

  // Reduce an arbitrary path (length <= m) to an AlgElem over the basis.
  auto reduce_path = [&](int src, const std::vector<int>& arrows) -> AlgElem {
    if (int(arrows.size()) > m) return {};
    int j = lookup(src, arrows);
    if (j < 0) return {};
    if (pivot_row[j] < 0) return {{col_to_basis[j], 1}};
    AlgElem out;
    int pr = pivot_row[j];
    for (int c = 0; c < int(cols.size()); ++c) {
      if (c == j) continue;
      const Scalar& coeff = red.mat.at(pr, c);
      if (coeff == 0) continue;
      // pivot = -sum(tail); tails only touch non-pivot columns
      out = alg_add(out, {{col_to_basis[c], -coeff}});
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  int d = a->dim();
  a->mult.assign(d, std::vector<AlgElem>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const BasisElem& bi = a->basis[i];
      const BasisElem& bj = a->basis[j];
      if (bj.tgt != bi.src) continue;  // product applies j first, then i
      std::vector<int> arrows = bj.path;
      arrows.insert(arrows.end(), bi.path.begin(), bi.path.end());
      a->mult[i][j] = reduce_path(bj.src, arrows);
    }

  a->radical_basis = Mat(d, d - q.n());
  for (int b = q.n(); b < d; ++b) a->radical_basis.at(b, b - q.n()) = 1;
  return a;
}

AlgebraPtr tensor_construction(const AlgebraPtr& r, const Quiver& q) {
  if (!r->quiver || r->quiver->n() != 1) throw std::runtime_error("local algebra expected");
  if (!r->is_commutative() || !r->is_local()) throw std::runtime_error("local algebra expected");
  if (!is_acyclic(q)) throw std::runtime_error("quiver has oriented cycle");

  const Quiver& qr = *r->quiver;
  int gens = int(qr.arrows.size());

  Quiver qp;
  qp.vertices = q.vertices;
  TensorInfo info;
  info.loops_per_vertex = gens;
  info.loop_arrow.assign(q.n(), std::vector<int>(gens, -1));
  for (int v = 0; v < q.n(); ++v)
    for (int g = 0; g < gens; ++g) {
      info.loop_arrow[v][g] = int(qp.arrows.size());
      qp.arrows.push_back({qr.arrows[g].label + q.vertices[v], v, v});
    }
  info.embedded_arrow.resize(q.arrows.size());
  for (int a = 0; a < int(q.arrows.size()); ++a) {
    info.embedded_arrow[a] = int(qp.arrows.size());
    qp.arrows.push_back(q.arrows[a]);
  }

  std::vector<Relation> rels;
  // R's relations, one copy per vertex.
  for (int v = 0; v < q.n(); ++v)
    for (const auto& rel : r->relations) {
      Relation copy;
      for (const auto& term : rel) {
        RelTerm t{term.coeff, {}};
        for (int arr : term.path) t.path.push_back(info.loop_arrow[v][arr]);
        copy.push_back(std::move(t));
      }
      rels.push_back(std::move(copy));
    }
  // Commutation of every embedded arrow with every loop generator.
  for (int a = 0; a < int(q.arrows.size()); ++a)
    for (int g = 0; g < gens; ++g) {
      int v = q.arrows[a].src, w = q.arrows[a].tgt;
      Relation rel;
      rel.push_back({Scalar(1), {info.loop_arrow[v][g], info.embedded_arrow[a]}});
      rel.push_back({Scalar(-1), {info.embedded_arrow[a], info.loop_arrow[w][g]}});
      rels.push_back(std::move(rel));
    }

  // Longest path in the acyclic quiver fixes the bound for kQ.
  std::vector<int> depth(q.n(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : q.arrows)
      if (depth[a.tgt] < depth[a.src] + 1) {
        depth[a.tgt] = depth[a.src] + 1;
        changed = true;
      }
  }
  int longest = 0;
  for (int v = 0; v < q.n(); ++v) longest = std::max(longest, depth[v]);
  int mq = std::max(2, longest + 1);
  int mlam = std::max(2, r->m + mq - 1);

  auto lam = std::const_pointer_cast<Algebra>(build_algebra(qp, rels, mlam));
  auto kq = build_algebra(q, {}, mq);
  if (lam->dim() != r->dim() * kq->dim()) throw std::runtime_error("tensor dimension mismatch");

  info.base_quiver = kq;
  info.local = r;
  info.loop_free_image.assign(lam->dim(), -1);
  int nloops = q.n() * gens;
  for (int b = 0; b < lam->dim(); ++b) {
    const BasisElem& be = lam->basis[b];
    bool loops = false;
    std::vector<int> qpath;
    for (int arr : be.path) {
      if (arr < nloops) {
        loops = true;
        break;
      }
      qpath.push_back(arr - nloops);
    }
    if (loops) continue;
    for (int c = 0; c < kq->dim(); ++c)
      if (kq->basis[c].src == be.src && kq->basis[c].path == qpath) {
        info.loop_free_image[b] = c;
        break;
      }
  }
  lam->tensor = std::move(info);
  return lam;
}

// --- abstract algebras --------------------------------------------------------

namespace {

Mat left_mult_of(const std::vector<std::vector<AlgElem>>& table, int dim, const Mat& x) {
  // left multiplication by the element with coefficient column x
  Mat L(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x.at(i, 0) == 0) continue;
    for (int j = 0; j < dim; ++j)
      for (const auto& [k, c] : table[i][j]) L.at(k, j) += x.at(i, 0) * c;
  }
  return L;
}

Mat table_product(const std::vector<std::vector<AlgElem>>& table, int dim, const Mat& x,
                  const Mat& y) {
  Mat p(dim, 1);
  for (int i = 0; i < dim; ++i) {
    if (x.at(i, 0) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y.at(j, 0) == 0) continue;
      for (const auto& [k, c] : table[i][j]) p.at(k, 0) += x.at(i, 0) * y.at(j, 0) * c;
    }
  }
  return p;
}

Mat trace_form_radical(const std::vector<std::vector<AlgElem>>& table, int dim) {
  // Characteristic-zero criterion: rad = kernel of (x,y) -> tr(L_x L_y).
  std::vector<Mat> L(dim);
  for (int g = 0; g < dim; ++g) {
    Mat unit(dim, 1);
    unit.at(g, 0) = 1;
    L[g] = left_mult_of(table, dim, unit);
  }
  Mat T(dim, dim);
  for (int x = 0; x < dim; ++x)
    for (int y = x; y < dim; ++y) {
      Mat p = L[x] * L[y];
      Scalar tr = 0;
      for (int i = 0; i < dim; ++i) tr += p.at(i, i);
      T.at(x, y) = tr;
      T.at(y, x) = tr;
    }
  return kernel_basis(T);
}

}  // namespace

AlgebraPtr algebra_from_structure_constants(int dim, const std::vector<Mat>& idempotents,
                                            const std::vector<std::vector<AlgElem>>& table,
                                            Mat* basis_cols) {
  int nblocks = int(idempotents.size());
  if (dim == 0) {
    auto a = std::make_shared<Algebra>();
    a->set_vertex_count(0);
    a->radical_basis = Mat(0, 0);
    if (basis_cols) *basis_cols = Mat(0, 0);
    return a;
  }

  Mat unit(dim, 1);
  for (const auto& e : idempotents) unit = unit + e;
  for (int b = 0; b < dim; ++b) {
    Mat eb(dim, 1);
    eb.at(b, 0) = 1;
    if (!(table_product(table, dim, unit, eb) == eb) ||
        !(table_product(table, dim, eb, unit) == eb))
      throw std::runtime_error("unit mismatch");
  }
  for (int i = 0; i < nblocks; ++i)
    for (int j = 0; j < nblocks; ++j) {
      Mat p = table_product(table, dim, idempotents[i], idempotents[j]);
      if (i == j ? !(p == idempotents[i]) : !p.is_zero())
        throw std::runtime_error("unit mismatch");
    }

  // Associativity, exhaustive for small algebras and sampled beyond that.
  {
    std::mt19937_64 rng(7);
    long long total = (long long)dim * dim * dim;
    auto check = [&](int x, int y, int z) {
      Mat ex(dim, 1), ey(dim, 1), ez(dim, 1);
      ex.at(x, 0) = 1;
      ey.at(y, 0) = 1;
      ez.at(z, 0) = 1;
      Mat a1 = table_product(table, dim, table_product(table, dim, ex, ey), ez);
      Mat a2 = table_product(table, dim, ex, table_product(table, dim, ey, ez));
      if (!(a1 == a2)) throw std::runtime_error("not associative");
    };
    if (total <= 4096) {
      for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y)
          for (int z = 0; z < dim; ++z) check(x, y, z);
    } else {
      std::uniform_int_distribution<int> pick(0, dim - 1);
      for (int t = 0; t < 4096; ++t) check(pick(rng), pick(rng), pick(rng));
    }
  }

  // Peirce blocks e_i A e_j, keeping each idempotent first in its own block.
  // All other basis elements are drawn from the radical, so they act by zero
  // on simples exactly like nontrivial paths do in a quiver algebra.
  Mat rad_raw = trace_form_radical(table, dim);
  std::vector<Mat> new_cols;           // dim x 1 columns over the raw basis
  std::vector<std::pair<int, int>> tags;  // (src, tgt) per column, map convention below
  for (int i = 0; i < nblocks; ++i) {
    new_cols.push_back(idempotents[i]);
    tags.push_back({i, i});
  }
  auto try_add = [&](const Mat& v, int src, int tgt) {
    Mat cur(dim, int(new_cols.size()));
    for (int c = 0; c < int(new_cols.size()); ++c)
      for (int rix = 0; rix < dim; ++rix) cur.at(rix, c) = new_cols[c].at(rix, 0);
    if (!in_column_space(cur, v)) {
      new_cols.push_back(v);
      tags.push_back({src, tgt});
    }
  };
  for (int i = 0; i < nblocks; ++i)
    for (int j = 0; j < nblocks; ++j)
      for (int b = 0; b < rad_raw.cols(); ++b) {
        Mat v = table_product(table, dim, idempotents[i],
                              table_product(table, dim, rad_raw.submatrix(0, b, dim, 1),
                                            idempotents[j]));
        if (v.is_zero()) continue;
        // v lies in e_i A e_j: as a map it goes j -> i in the representation
        // convention (elements of e_i A e_j send vertex-j spaces to vertex-i).
        try_add(v, j, i);
      }
  // idempotents plus the radical span a basic algebra and nothing else
  if (int(new_cols.size()) != dim) throw std::runtime_error("not basic");

  Mat C(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int rix = 0; rix < dim; ++rix) C.at(rix, c) = new_cols[c].at(rix, 0);
  SolveResult Cinv = inverse(C);
  if (!Cinv.ok) throw std::runtime_error("unit mismatch");

  auto a = std::make_shared<Algebra>();
  a->set_vertex_count(nblocks);
  a->m = 0;
  for (int c = 0; c < dim; ++c) a->basis.push_back({tags[c].first, tags[c].second, {}});
  a->mult.assign(dim, std::vector<AlgElem>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Mat p = table_product(table, dim, new_cols[i], new_cols[j]);
      if (p.is_zero()) continue;
      Mat y = Cinv.x * p;
      AlgElem e;
      for (int k = 0; k < dim; ++k)
        if (y.at(k, 0) != 0) e.push_back({k, y.at(k, 0)});
      a->mult[i][j] = std::move(e);
    }
  a->radical_basis = trace_form_radical(a->mult, dim);
  if (basis_cols) *basis_cols = C;
  return a;
}

AlgebraPtr opposite(const AlgebraPtr& src) {
  auto a = std::make_shared<Algebra>();
  a->set_vertex_count(src->n());
  a->m = src->m;
  if (src->quiver) {
    Quiver q = *src->quiver;
    for (auto& arr : q.arrows) std::swap(arr.src, arr.tgt);
    a->quiver = q;
    for (const auto& rel : src->relations) {
      Relation r = rel;
      for (auto& term : r) std::reverse(term.path.begin(), term.path.end());
      a->relations.push_back(std::move(r));
    }
  }
  for (const auto& be : src->basis) {
    BasisElem e{be.tgt, be.src, be.path};
    std::reverse(e.path.begin(), e.path.end());
    a->basis.push_back(std::move(e));
  }
  int d = src->dim();
  a->mult.assign(d, std::vector<AlgElem>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a->mult[i][j] = src->mult[j][i];
  a->radical_basis = src->radical_basis;
  if (src->tensor) {
    TensorInfo t;
    t.base_quiver = opposite(src->tensor->base_quiver);
    t.local = opposite(src->tensor->local);
    t.loops_per_vertex = src->tensor->loops_per_vertex;
    t.embedded_arrow = src->tensor->embedded_arrow;
    t.loop_arrow = src->tensor->loop_arrow;
    t.loop_free_image = src->tensor->loop_free_image;
    a->tensor = std::move(t);
  }
  return a;
}

VertexQuotient idempotent_quotient(const AlgebraPtr& src, const std::vector<bool>& drop) {
  int d = src->dim();
  // Ideal generated by the dropped idempotents.
  std::vector<Mat> ideal_cols;
  for (int v = 0; v < src->n(); ++v) {
    if (!drop[v]) continue;
    for (int i = 0; i < d; ++i) {
      AlgElem left = src->mult[i][v];
      if (left.empty()) continue;
      for (int j = 0; j < d; ++j) {
        AlgElem full = src->multiply(left, {{j, Scalar(1)}});
        if (full.empty()) continue;
        Mat col(d, 1);
        for (const auto& [k, c] : full) col.at(k, 0) = c;
        ideal_cols.push_back(std::move(col));
      }
    }
  }
  Mat ideal(d, int(ideal_cols.size()));
  for (int c = 0; c < int(ideal_cols.size()); ++c)
    for (int i = 0; i < d; ++i) ideal.at(i, c) = ideal_cols[c].at(i, 0);
  ideal = column_space_basis(ideal);
  int r = ideal.cols();

  // Section: basis unit vectors independent modulo the ideal, greedy in basis
  // order (keeps surviving idempotents first).
  std::vector<int> section;
  Mat cur = ideal;
  for (int b = 0; b < d; ++b) {
    Mat eb(d, 1);
    eb.at(b, 0) = 1;
    if (!in_column_space(cur, eb)) {
      section.push_back(b);
      cur = cur.hstack(eb);
    }
  }
  int nd = d - r;
  if (int(section.size()) != nd) throw std::runtime_error("idempotent quotient failed");

  Mat basis_full = ideal;
  for (int sgm : section) {
    Mat eb(d, 1);
    eb.at(sgm, 0) = 1;
    basis_full = basis_full.hstack(eb);
  }
  SolveResult inv = inverse(basis_full);
  if (!inv.ok) throw std::runtime_error("idempotent quotient failed");

  auto project = [&](const AlgElem& x) -> AlgElem {
    Mat col(d, 1);
    for (const auto& [k, c] : x) col.at(k, 0) = c;
    Mat y = inv.x * col;
    AlgElem out;
    for (int s = 0; s < nd; ++s)
      if (y.at(r + s, 0) != 0) out.push_back({s, y.at(r + s, 0)});
    return out;
  };

  std::vector<int> vertex_map(src->n(), -1);
  int nv = 0;
  for (int v = 0; v < src->n(); ++v)
    if (!drop[v]) vertex_map[v] = nv++;
  // Sanity: kept idempotents must head the section in vertex order.
  for (int v = 0; v < src->n(); ++v)
    if (!drop[v] && section[vertex_map[v]] != v)
      throw std::runtime_error("idempotent quotient failed");

  auto a = std::make_shared<Algebra>();
  a->set_vertex_count(nv);
  a->m = src->m;
  std::vector<int> arrow_map;
  if (src->quiver) {
    Quiver q;
    for (int v = 0; v < src->n(); ++v)
      if (!drop[v]) q.vertices.push_back(src->quiver->vertices[v]);
    arrow_map.assign(src->quiver->arrows.size(), -1);
    for (int arr = 0; arr < int(src->quiver->arrows.size()); ++arr) {
      const auto& ad = src->quiver->arrows[arr];
      if (drop[ad.src] || drop[ad.tgt]) continue;
      arrow_map[arr] = int(q.arrows.size());
      q.arrows.push_back({ad.label, vertex_map[ad.src], vertex_map[ad.tgt]});
    }
    a->quiver = std::move(q);
    for (const auto& rel : src->relations) {
      Relation out;
      bool ok = true;
      for (const auto& term : rel) {
        RelTerm t{term.coeff, {}};
        for (int arr : term.path) {
          if (arrow_map[arr] < 0) {
            ok = false;
            break;
          }
          t.path.push_back(arrow_map[arr]);
        }
        if (!ok) break;
        out.push_back(std::move(t));
      }
      if (ok && !out.empty()) a->relations.push_back(std::move(out));
    }
  }
  for (int s = 0; s < nd; ++s) {
    BasisElem be = src->basis[section[s]];
    be.src = vertex_map[be.src];
    be.tgt = vertex_map[be.tgt];
    if (src->quiver) {
      std::vector<int> mapped;
      for (int arr : be.path) mapped.push_back(arrow_map.empty() ? arr : arrow_map[arr]);
      be.path = std::move(mapped);
    }
    a->basis.push_back(std::move(be));
  }
  a->mult.assign(nd, std::vector<AlgElem>(nd));
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j)
      a->mult[i][j] = project(src->mult[section[i]][section[j]]);
  a->radical_basis = trace_form_radical(a->mult, nd);
  std::vector<AlgElem> proj_all;
  proj_all.reserve(d);
  for (int b = 0; b < d; ++b) proj_all.push_back(project({{b, Scalar(1)}}));
  return {a, vertex_map, section, std::move(proj_all)};
}

DynkinClass is_dynkin(const Quiver& q) {
  int n = q.n();
  // Underlying graph with multi-edge and loop detection.
  std::set<std::pair<int, int>> edges;
  for (const auto& a : q.arrows) {
    if (a.src == a.tgt) return {false, "not-Dynkin", 0};
    auto e = std::minmax(a.src, a.tgt);
    if (edges.count({e.first, e.second})) return {false, "not-Dynkin", 0};
    edges.insert({e.first, e.second});
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> labels;
  long long roots = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) verts.push_back(v);
    int cn = int(verts.size());
    int ce = 0;
    for (const auto& [u, v] : edges)
      if (comp[u] == c) ++ce;
    if (ce != cn - 1) return {false, "not-Dynkin", 0};  // not a tree
    int deg3 = 0, degbig = 0, branch = -1;
    for (int v : verts) {
      if (int(adj[v].size()) == 3) {
        ++deg3;
        branch = v;
      }
      if (int(adj[v].size()) > 3) ++degbig;
    }
    if (degbig) return {false, "not-Dynkin", 0};
    if (deg3 == 0) {
      labels.push_back("A" + std::to_string(cn));
      roots += (long long)cn * (cn + 1) / 2;
      continue;
    }
    if (deg3 > 1) return {false, "not-Dynkin", 0};
    // Arm lengths from the branch vertex.
    std::vector<int> arms;
    for (int start : adj[branch]) {
      int len = 1, prev = branch, cur = start;
      while (int(adj[cur].size()) == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      labels.push_back("D" + std::to_string(cn));
      roots += (long long)cn * (cn - 1);
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) {
      labels.push_back("E6");
      roots += 36;
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) {
      labels.push_back("E7");
      roots += 63;
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) {
      labels.push_back("E8");
      roots += 120;
    } else {
      return {false, "not-Dynkin", 0};
    }
  }
  std::sort(labels.begin(), labels.end());
  std::string label;
  for (size_t i = 0; i < labels.size(); ++i) label += (i ? "+" : "") + labels[i];
  if (label.empty()) label = "empty";
  return {true, label, roots};
}

}  // namespace taucat

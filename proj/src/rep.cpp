#include "taucat/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace taucat {

namespace {

int arrow_basis_index(const AlgebraPtr& a, int arrow) {
  for (int i = 0; i < a->dim(); ++i)
    if (a->basis[i].path.size() == 1 && a->basis[i].path[0] == arrow) return i;
  throw std::runtime_error("arrow not in basis");
}

Mat block_diag(const std::vector<Mat>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat out(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

Mat mat_pow(Mat base, int e) {
  Mat acc = Mat::identity(base.rows());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// Indices of the basis elements whose action pins down a module: the arrows
// for a quiver algebra, every non-idempotent basis element otherwise.
std::vector<int> generator_indices(const AlgebraPtr& a) {
  std::vector<int> out;
  if (a->quiver) {
    for (int arr = 0; arr < int(a->quiver->arrows.size()); ++arr)
      out.push_back(arrow_basis_index(a, arr));
  } else {
    for (int i = a->n(); i < a->dim(); ++i) out.push_back(i);
  }
  return out;
}

}  // namespace

const Mat& Representation::arrow_matrix(int arrow) const {
  return act[arrow_basis_index(algebra, arrow)];
}

// --- morphism utilities -------------------------------------------------------

RepMorphism identity_morphism(const Representation& m) {
  RepMorphism f;
  for (int d : m.dims) f.comps.push_back(Mat::identity(d));
  return f;
}

RepMorphism zero_morphism(const Representation& src, const Representation& dst) {
  RepMorphism f;
  for (size_t v = 0; v < src.dims.size(); ++v) f.comps.push_back(Mat(dst.dims[v], src.dims[v]));
  return f;
}

RepMorphism compose(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism out;
  for (size_t v = 0; v < f.comps.size(); ++v) out.comps.push_back(f.comps[v] * g.comps[v]);
  return out;
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism out;
  for (size_t v = 0; v < f.comps.size(); ++v) out.comps.push_back(f.comps[v] + g.comps[v]);
  return out;
}

RepMorphism scale(const RepMorphism& f, const Scalar& c) {
  RepMorphism out;
  for (const auto& m : f.comps) out.comps.push_back(m * c);
  return out;
}

bool is_invertible(const RepMorphism& f) {
  for (const auto& m : f.comps) {
    if (m.rows() != m.cols()) return false;
    if (!inverse(m).ok) return false;
  }
  return true;
}

RepMorphism invert(const RepMorphism& f) {
  RepMorphism out;
  for (const auto& m : f.comps) {
    SolveResult r = inverse(m);
    if (!r.ok) throw std::runtime_error("morphism not invertible");
    out.comps.push_back(r.x);
  }
  return out;
}

bool is_zero(const RepMorphism& f) {
  for (const auto& m : f.comps)
    if (!m.is_zero()) return false;
  return true;
}

// --- construction -------------------------------------------------------------

Representation rep_from_action(const AlgebraPtr& a, const std::vector<int>& dims,
                               std::vector<Mat> act) {
  if (int(dims.size()) != a->n() || int(act.size()) != a->dim())
    throw std::runtime_error("shape mismatch");
  for (int b = 0; b < a->dim(); ++b) {
    const BasisElem& be = a->basis[b];
    if (act[b].rows() != dims[be.tgt] || act[b].cols() != dims[be.src])
      throw std::runtime_error("shape mismatch");
  }
  for (int v = 0; v < a->n(); ++v)
    if (!act[v].is_identity()) throw std::runtime_error("relations violated");
  for (int i = 0; i < a->dim(); ++i)
    for (int j = 0; j < a->dim(); ++j) {
      if (a->basis[j].tgt != a->basis[i].src) continue;
      Mat lhs = act[i] * act[j];
      Mat rhs(dims[a->basis[i].tgt], dims[a->basis[j].src]);
      for (const auto& [k, c] : a->mult[i][j]) rhs = rhs + act[k] * c;
      if (!(lhs == rhs)) throw std::runtime_error("relations violated");
    }
  Representation r;
  r.algebra = a;
  r.dims = dims;
  r.act = std::move(act);
  return r;
}

Representation rep_from_arrow_maps(const AlgebraPtr& a, const std::vector<int>& dims,
                                   const std::vector<Mat>& arrow_mats) {
  if (!a->quiver) throw std::runtime_error("algebra has no quiver");
  if (arrow_mats.size() != a->quiver->arrows.size()) throw std::runtime_error("shape mismatch");
  std::vector<Mat> act;
  for (int b = 0; b < a->dim(); ++b) {
    const BasisElem& be = a->basis[b];
    Mat m = Mat::identity(dims[be.src]);
    for (int arr : be.path) m = arrow_mats[arr] * m;
    act.push_back(std::move(m));
  }
  return rep_from_action(a, dims, std::move(act));
}

Representation zero_rep(const AlgebraPtr& a) {
  std::vector<int> dims(a->n(), 0);
  std::vector<Mat> act;
  for (int b = 0; b < a->dim(); ++b) act.push_back(Mat(0, 0));
  return rep_from_action(a, dims, std::move(act));
}

Representation simple_rep(const AlgebraPtr& a, int v) {
  std::vector<int> dims(a->n(), 0);
  dims[v] = 1;
  std::vector<Mat> act;
  for (int b = 0; b < a->dim(); ++b) {
    const BasisElem& be = a->basis[b];
    // only the vertex idempotent survives; everything else sits in the radical
    if (b == v)
      act.push_back(Mat::identity(1));
    else
      act.push_back(Mat(dims[be.tgt], dims[be.src]));
  }
  return rep_from_action(a, dims, std::move(act));
}

Representation indec_projective(const AlgebraPtr& a, int v) {
  // P_v = A e_v, graded by target vertex.
  std::vector<std::vector<int>> slots(a->n());
  std::vector<int> pos(a->dim(), -1);
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis[b].src == v) {
      pos[b] = int(slots[a->basis[b].tgt].size());
      slots[a->basis[b].tgt].push_back(b);
    }
  std::vector<int> dims(a->n());
  for (int w = 0; w < a->n(); ++w) dims[w] = int(slots[w].size());
  std::vector<Mat> act;
  for (int g = 0; g < a->dim(); ++g) {
    int s = a->basis[g].src, t = a->basis[g].tgt;
    Mat m(dims[t], dims[s]);
    for (int x : slots[s])
      for (const auto& [k, c] : a->mult[g][x]) m.at(pos[k], pos[x]) = c;
    act.push_back(std::move(m));
  }
  return rep_from_action(a, dims, std::move(act));
}

Representation indec_injective(const AlgebraPtr& a, int v) {
  // I_v = D(e_v A); coordinates at w are dual to the basis of e_v A e_w.
  std::vector<std::vector<int>> slots(a->n());
  std::vector<int> pos(a->dim(), -1);
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis[b].tgt == v) {
      pos[b] = int(slots[a->basis[b].src].size());
      slots[a->basis[b].src].push_back(b);
    }
  std::vector<int> dims(a->n());
  for (int w = 0; w < a->n(); ++w) dims[w] = int(slots[w].size());
  std::vector<Mat> act;
  for (int g = 0; g < a->dim(); ++g) {
    int s = a->basis[g].src, t = a->basis[g].tgt;
    // (g·f)(x) = f(x·g) for x with src == t, tgt == v.
    Mat m(dims[t], dims[s]);
    for (int x : slots[t])
      for (const auto& [y, c] : a->mult[x][g]) m.at(pos[x], pos[y]) = c;
    act.push_back(std::move(m));
  }
  return rep_from_action(a, dims, std::move(act));
}

Representation free_module(const AlgebraPtr& a) {
  std::vector<Representation> parts;
  for (int v = 0; v < a->n(); ++v) parts.push_back(indec_projective(a, v));
  return direct_sum(a, parts);
}

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
  std::vector<int> dims(a->n(), 0);
  for (const auto& p : parts) {
    if (p.algebra != a) throw std::runtime_error("algebra mismatch");
    for (int v = 0; v < a->n(); ++v) dims[v] += p.dims[v];
  }
  std::vector<Mat> act;
  for (int b = 0; b < a->dim(); ++b) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.act[b]);
    act.push_back(parts.empty() ? Mat(0, 0) : block_diag(blocks));
  }
  if (parts.empty()) return zero_rep(a);
  return rep_from_action(a, dims, std::move(act));
}

Representation dualize(const Representation& m, const AlgebraPtr& op) {
  std::vector<Mat> act;
  for (const auto& mat : m.act) act.push_back(mat.transpose());
  return rep_from_action(op, m.dims, std::move(act));
}

// --- hom spaces ---------------------------------------------------------------

namespace {

struct HomLayout {
  std::vector<int> off;  // per vertex offset into the unknown vector
  int total = 0;
};

HomLayout hom_layout(const Representation& m, const Representation& n) {
  HomLayout l;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    l.off.push_back(l.total);
    l.total += n.dims[v] * m.dims[v];
  }
  return l;
}

Mat hom_constraints(const Representation& m, const Representation& n, const HomLayout& l) {
  const AlgebraPtr& a = m.algebra;
  std::vector<int> gens = generator_indices(a);
  int rows = 0;
  for (int g : gens) rows += n.dims[a->basis[g].tgt] * m.dims[a->basis[g].src];
  Mat c(rows, l.total);
  int r0 = 0;
  for (int g : gens) {
    int s = a->basis[g].src, t = a->basis[g].tgt;
    const Mat& Ng = n.act[g];
    const Mat& Mg = m.act[g];
    // (Ng f_s - f_t Mg)[i][j] = 0
    for (int i = 0; i < n.dims[t]; ++i)
      for (int j = 0; j < m.dims[s]; ++j) {
        int row = r0 + i * m.dims[s] + j;
        for (int k = 0; k < n.dims[s]; ++k)
          c.at(row, l.off[s] + k * m.dims[s] + j) += Ng.at(i, k);
        for (int k = 0; k < m.dims[t]; ++k)
          c.at(row, l.off[t] + i * m.dims[t] + k) -= Mg.at(k, j);
      }
    r0 += n.dims[t] * m.dims[s];
  }
  return c;
}

RepMorphism unpack_hom(const Representation& m, const Representation& n, const HomLayout& l,
                       const Mat& col, int c) {
  RepMorphism f;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Mat comp(n.dims[v], m.dims[v]);
    for (int i = 0; i < n.dims[v]; ++i)
      for (int j = 0; j < m.dims[v]; ++j)
        comp.at(i, j) = col.at(l.off[v] + i * m.dims[v] + j, c);
    f.comps.push_back(std::move(comp));
  }
  return f;
}

}  // namespace

std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra) throw std::runtime_error("algebra mismatch");
  HomLayout l = hom_layout(m, n);
  Mat k = kernel_basis(hom_constraints(m, n, l));
  std::vector<RepMorphism> out;
  for (int c = 0; c < k.cols(); ++c) out.push_back(unpack_hom(m, n, l, k, c));
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra) throw std::runtime_error("algebra mismatch");
  HomLayout l = hom_layout(m, n);
  if (l.total == 0) return 0;
  return l.total - rank(hom_constraints(m, n, l));
}

// --- sub and quotient ---------------------------------------------------------

SubQuot sub_representation(const Representation& m, const std::vector<Mat>& bases) {
  const AlgebraPtr& a = m.algebra;
  std::vector<int> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Mat> act;
  for (int g = 0; g < a->dim(); ++g) {
    int s = a->basis[g].src, t = a->basis[g].tgt;
    SolveResult r = solve(bases[t], m.act[g] * bases[s]);
    if (!r.ok) throw std::runtime_error("submodule not closed");
    act.push_back(r.x);
  }
  SubQuot sq;
  sq.rep = rep_from_action(a, dims, std::move(act));
  sq.map.comps = bases;
  return sq;
}

SubQuot quotient_representation(const Representation& m, const std::vector<Mat>& bases) {
  const AlgebraPtr& a = m.algebra;
  int nv = a->n();
  std::vector<Mat> proj(nv, Mat(0, 0)), sect(nv, Mat(0, 0));
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    int d = m.dims[v], r = bases[v].cols();
    dims[v] = d - r;
    Mat cur = bases[v];
    Mat comp(d, d - r);
    int got = 0;
    for (int i = 0; i < d && got < d - r; ++i) {
      Mat e(d, 1);
      e.at(i, 0) = 1;
      if (!in_column_space(cur, e)) {
        cur = cur.hstack(e);
        comp.at(i, got++) = 1;
      }
    }
    if (got != d - r) throw std::runtime_error("quotient basis failed");
    Mat full = bases[v].hstack(comp);
    SolveResult inv = inverse(full);
    if (!inv.ok) throw std::runtime_error("quotient basis failed");
    proj[v] = inv.x.submatrix(r, 0, d - r, d);
    sect[v] = comp;
  }
  std::vector<Mat> act;
  for (int g = 0; g < a->dim(); ++g) {
    int s = a->basis[g].src, t = a->basis[g].tgt;
    act.push_back(proj[t] * m.act[g] * sect[s]);
  }
  SubQuot sq;
  sq.rep = rep_from_action(a, dims, std::move(act));
  sq.map.comps = proj;
  return sq;
}

std::vector<Mat> morphism_kernel(const Representation& src, const Representation&,
                                 const RepMorphism& f) {
  std::vector<Mat> out;
  for (size_t v = 0; v < src.dims.size(); ++v) out.push_back(kernel_basis(f.comps[v]));
  return out;
}

std::vector<Mat> morphism_image(const Representation&, const Representation&,
                                const RepMorphism& f) {
  std::vector<Mat> out;
  for (const auto& c : f.comps) out.push_back(column_space_basis(c));
  return out;
}

// --- endomorphism radical -----------------------------------------------------

namespace {

Scalar morphism_trace(const RepMorphism& f, const RepMorphism& g) {
  Scalar t = 0;
  for (size_t v = 0; v < f.comps.size(); ++v) {
    Mat p = f.comps[v] * g.comps[v];
    for (int i = 0; i < p.rows(); ++i) t += p.at(i, i);
  }
  return t;
}

// rank of the trace form on End(m); this equals dim End/rad since the module
// is faithful over its image algebra and we work in characteristic zero.
int end_top_dim(const std::vector<RepMorphism>& end_basis) {
  int e = int(end_basis.size());
  Mat t(e, e);
  for (int i = 0; i < e; ++i)
    for (int j = i; j < e; ++j) {
      Scalar tr = morphism_trace(end_basis[i], end_basis[j]);
      t.at(i, j) = tr;
      t.at(j, i) = tr;
    }
  return rank(t);
}

}  // namespace

bool in_end_radical(const Representation&, const std::vector<RepMorphism>& end_basis,
                    const RepMorphism& h) {
  for (const auto& b : end_basis)
    if (morphism_trace(h, b) != 0) return false;
  return true;
}

// --- splitting machinery --------------------------------------------------------

namespace {

using Poly = std::vector<Scalar>;  // ascending coefficients

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_monic(Poly p) {
  poly_trim(p);
  if (p.empty()) return p;
  Scalar lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_deriv(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(long(i)));
  poly_trim(d);
  return d;
}

// division with remainder; divisor nonzero
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  poly_trim(num);
  Poly q(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Scalar(0));
  while (num.size() >= den.size() && !num.empty()) {
    Scalar c = num.back() / den.back();
    size_t sh = num.size() - den.size();
    q[sh] = c;
    for (size_t i = 0; i < den.size(); ++i) num[sh + i] -= c * den[i];
    poly_trim(num);
  }
  poly_trim(q);
  return {q, num};
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Mat poly_eval_mat(const Poly& p, const Mat& h) {
  Mat acc(h.rows(), h.rows());
  for (size_t i = p.size(); i-- > 0;) acc = acc * h + Mat::identity(h.rows()) * p[i];
  return acc;
}

// Minimal polynomial of a square matrix via Krylov iteration on the matrix
// space.
Poly min_poly(const Mat& h) {
  int n = h.rows();
  if (n == 0) return {Scalar(1)};  // unit polynomial by convention
  std::vector<Mat> powers{Mat::identity(n)};
  for (int k = 1;; ++k) {
    powers.push_back(powers.back() * h);
    Mat span(n * n, k);
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) span.at(i * n + j, c) = powers[c].at(i, j);
    Mat target(n * n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) target.at(i * n + j, 0) = powers[k].at(i, j);
    SolveResult r = solve(span, target);
    if (r.ok) {
      Poly p(k + 1, Scalar(0));
      p[k] = 1;
      for (int i = 0; i < k; ++i) p[i] = -r.x.at(i, 0);
      return p;
    }
  }
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Poly g = poly_gcd(a, b);
  Poly prod(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  return poly_monic(poly_divmod(prod, g).first);
}

std::vector<mpz_class> divisors_with_fallback(mpz_class n) {
  // trial division; any unfactored cofactor contributes itself as a divisor
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.push_back({p, e});
    }
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        if (divs.size() > 4000) break;
        divs.push_back(divs[i] * pk);
      }
    }
  }
  if (n > 1) {
    size_t base = divs.size();
    for (size_t i = 0; i < base && divs.size() <= 4000; ++i) divs.push_back(divs[i] * n);
  }
  return divs;
}

// All rational roots of a squarefree polynomial.
std::vector<Scalar> rational_roots(const Poly& p) {
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  Poly q = p;
  if (poly_eval(q, 0) == 0) {
    roots.push_back(0);
    q = poly_divmod(q, Poly{Scalar(0), Scalar(1)}).first;
  }
  if (q.size() <= 1) return roots;
  // clear denominators
  mpz_class den = 1;
  for (const auto& c : q) den = lcm(den, c.get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : q) ic.push_back(mpz_class(c * den));
  std::vector<mpz_class> us = divisors_with_fallback(ic.front());
  std::vector<mpz_class> ws = divisors_with_fallback(ic.back());
  for (const auto& u : us)
    for (const auto& w : ws)
      for (int sgn = -1; sgn <= 1; sgn += 2) {
        Scalar cand(u * sgn, w);
        cand.canonicalize();
        if (poly_eval(q, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Try to split m along the generalized eigenspaces of one endomorphism.
std::optional<std::vector<std::vector<Mat>>> split_by(const Representation& m,
                                                      const RepMorphism& h) {
  int nv = int(m.dims.size());
  Poly p;
  for (int v = 0; v < nv; ++v)
    if (m.dims[v] > 0) p = poly_lcm(p, min_poly(h.comps[v]));
  if (p.size() <= 2) return std::nullopt;  // scalar action never splits
  Poly d = poly_deriv(p);
  Poly red = d.empty() ? p : poly_monic(poly_divmod(p, poly_gcd(p, d)).first);
  std::vector<Scalar> roots = rational_roots(red);
  Poly resid = red;
  for (const auto& r : roots) resid = poly_divmod(resid, Poly{-r, Scalar(1)}).first;
  int parts = int(roots.size()) + (resid.size() > 1 ? 1 : 0);
  if (parts < 2) return std::nullopt;

  std::vector<std::vector<Mat>> result;
  std::vector<std::vector<int>> partdims;
  for (const auto& r : roots) {
    std::vector<Mat> bases;
    for (int v = 0; v < nv; ++v) {
      Mat shifted = h.comps[v] + Mat::identity(m.dims[v]) * (-r);
      bases.push_back(kernel_basis(mat_pow(shifted, std::max(m.dims[v], 1))));
    }
    result.push_back(std::move(bases));
  }
  if (resid.size() > 1) {
    std::vector<Mat> bases;
    for (int v = 0; v < nv; ++v) {
      Mat rm = poly_eval_mat(resid, h.comps[v]);
      bases.push_back(kernel_basis(mat_pow(rm, std::max(m.dims[v], 1))));
    }
    result.push_back(std::move(bases));
  }
  // primary decomposition must be exhaustive and nontrivial
  int nonzero = 0;
  std::vector<int> sums(nv, 0);
  for (const auto& part : result) {
    int t = 0;
    for (int v = 0; v < nv; ++v) {
      t += part[v].cols();
      sums[v] += part[v].cols();
    }
    if (t > 0) ++nonzero;
  }
  for (int v = 0; v < nv; ++v)
    if (sums[v] != m.dims[v]) throw std::runtime_error("primary decomposition failed");
  if (nonzero < 2) return std::nullopt;
  std::vector<std::vector<Mat>> pruned;
  for (auto& part : result) {
    int t = 0;
    for (const auto& b : part) t += b.cols();
    if (t > 0) pruned.push_back(std::move(part));
  }
  return pruned;
}

std::optional<std::vector<std::vector<Mat>>> find_split(
    const Representation& m, const std::vector<RepMorphism>& end_basis, unsigned seed) {
  for (const auto& h : end_basis) {
    auto s = split_by(m, h);
    if (s) return s;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 40; ++attempt) {
    RepMorphism h = zero_morphism(m, m);
    for (const auto& b : end_basis) h = add(h, scale(b, Scalar(coeff(rng))));
    auto s = split_by(m, h);
    if (s) return s;
  }
  return std::nullopt;
}

// Isomorphism test for indecomposables: some composite g∘f must avoid the
// radical of End; the witness is then invertible because End is local.
std::optional<RepMorphism> pair_iso(const Representation& x, const Representation& y) {
  if (x.dims != y.dims) return std::nullopt;
  auto f = hom_basis(x, y);
  auto g = hom_basis(y, x);
  auto ex = hom_basis(x, x);
  for (const auto& fi : f)
    for (const auto& gj : g) {
      RepMorphism h = compose(gj, fi);
      if (!in_end_radical(x, ex, h)) {
        if (!is_invertible(fi)) throw std::runtime_error("pairing witness not invertible");
        return fi;
      }
    }
  return std::nullopt;
}

bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& f) {
  for (int g : generator_indices(m.algebra)) {
    int s = m.algebra->basis[g].src, t = m.algebra->basis[g].tgt;
    if (!(n.act[g] * f.comps[s] == f.comps[t] * m.act[g])) return false;
  }
  return true;
}

}  // namespace

// --- indecomposability and decomposition ---------------------------------------

IndecResult is_indecomposable(const Representation& m) {
  if (m.is_zero()) throw std::runtime_error("zero module");
  auto end = hom_basis(m, m);
  int e = int(end.size());
  int top = end_top_dim(end);
  if (top == 1) return {true, true, e, 1};
  auto split = find_split(m, end, 1);
  if (split) return {false, false, e, top};
  return {true, false, e, top};
}

Decomposition decompose(const Representation& m, unsigned seed) {
  Decomposition out;
  if (m.is_zero()) return out;

  std::vector<std::pair<Representation, RepMorphism>> stack{{m, identity_morphism(m)}};
  std::vector<std::pair<Representation, RepMorphism>> indecs;
  while (!stack.empty()) {
    auto [x, inc] = std::move(stack.back());
    stack.pop_back();
    if (x.is_zero()) continue;
    auto end = hom_basis(x, x);
    if (end_top_dim(end) == 1) {
      indecs.push_back({std::move(x), std::move(inc)});
      continue;
    }
    auto split = find_split(x, end, seed);
    if (!split) throw std::runtime_error("decompose: field extension required");
    for (const auto& part : *split) {
      SubQuot sq = sub_representation(x, part);
      stack.push_back({std::move(sq.rep), compose(inc, sq.map)});
    }
  }

  // group isomorphic summands
  std::vector<int> group_of(indecs.size(), -1);
  std::vector<int> leaders;
  for (size_t i = 0; i < indecs.size(); ++i) {
    for (size_t l = 0; l < leaders.size(); ++l)
      if (pair_iso(indecs[leaders[l]].first, indecs[i].first)) {
        group_of[i] = int(l);
        break;
      }
    if (group_of[i] < 0) {
      group_of[i] = int(leaders.size());
      leaders.push_back(int(i));
    }
  }

  // deterministic order: total dimension descending, then dim vector
  std::vector<int> order(leaders.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Representation& ra = indecs[leaders[a]].first;
    const Representation& rb = indecs[leaders[b]].first;
    if (ra.total_dim() != rb.total_dim()) return ra.total_dim() > rb.total_dim();
    if (ra.dims != rb.dims) return ra.dims < rb.dims;
    return a < b;
  });

  for (int g : order) {
    std::vector<RepMorphism> incs;
    for (size_t i = 0; i < indecs.size(); ++i)
      if (group_of[i] == g) incs.push_back(indecs[i].second);
    out.summands.push_back({indecs[leaders[g]].first, int(incs.size())});
    out.inclusions.push_back(std::move(incs));
  }

  // witness: all inclusions together must be invertible onto m
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Mat all(m.dims[v], 0);
    for (const auto& incs : out.inclusions)
      for (const auto& inc : incs) all = all.hstack(inc.comps[v]);
    if (all.cols() != m.dims[v] || !inverse(all).ok)
      throw std::runtime_error("decomposition witness failed");
  }
  return out;
}

IsoResult is_isomorphic(const Representation& m, const Representation& n, unsigned seed) {
  if (m.algebra != n.algebra) throw std::runtime_error("algebra mismatch");
  if (m.dims != n.dims) return {false, {}, "dimension vectors differ"};
  if (m.is_zero()) return {true, identity_morphism(m), "zero modules"};

  auto h = hom_basis(m, n);
  if (h.empty()) return {false, {}, "no homomorphisms"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int attempt = 0; attempt < 30; ++attempt) {
    RepMorphism f = zero_morphism(m, n);
    for (const auto& b : h) f = add(f, scale(b, Scalar(coeff(rng))));
    if (is_invertible(f)) return {true, f, "random invertible combination"};
  }

  // exact fallback through full decompositions
  Decomposition dm = decompose(m, seed);
  Decomposition dn = decompose(n, seed);
  if (dm.summands.size() != dn.summands.size())
    return {false, {}, "indecomposable summand multisets differ"};
  std::vector<int> match(dm.summands.size(), -1);
  std::vector<bool> used(dn.summands.size(), false);
  std::vector<RepMorphism> isos(dm.summands.size());
  for (size_t i = 0; i < dm.summands.size(); ++i) {
    for (size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j] || dm.summands[i].second != dn.summands[j].second) continue;
      auto iso = pair_iso(dm.summands[i].first, dn.summands[j].first);
      if (iso) {
        match[i] = int(j);
        used[j] = true;
        isos[i] = *iso;
        break;
      }
    }
    if (match[i] < 0) return {false, {}, "indecomposable summand multisets differ"};
  }

  // assemble: f = (inclusions into n) ∘ blockdiag(isos) ∘ (inclusions into m)^{-1}
  RepMorphism f;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Mat wm(m.dims[v], 0), wn(n.dims[v], 0);
    std::vector<Mat> blocks;
    for (size_t i = 0; i < dm.summands.size(); ++i) {
      for (int c = 0; c < dm.summands[i].second; ++c) {
        wm = wm.hstack(dm.inclusions[i][c].comps[v]);
        wn = wn.hstack(dn.inclusions[match[i]][c].comps[v]);
        blocks.push_back(isos[i].comps[v]);
      }
    }
    SolveResult inv = inverse(wm);
    if (!inv.ok) throw std::runtime_error("decomposition witness failed");
    f.comps.push_back(wn * block_diag(blocks) * inv.x);
  }
  if (!is_morphism(m, n, f) || !is_invertible(f))
    throw std::runtime_error("assembled isomorphism invalid");
  return {true, f, "matched indecomposable decompositions"};
}

// --- induction and restriction --------------------------------------------------

Representation induction(const AlgebraPtr& lam, const Representation& m) {
  if (!lam->tensor) throw std::runtime_error("not a tensor algebra");
  const TensorInfo& t = *lam->tensor;
  if (m.algebra != t.base_quiver) throw std::runtime_error("algebra mismatch");
  const AlgebraPtr& r = t.local;
  int dr = r->dim();

  std::vector<int> dims;
  for (int d : m.dims) dims.push_back(dr * d);
  int narrows = int(lam->quiver->arrows.size());
  std::vector<Mat> arrows(narrows, Mat(0, 0));
  for (int v = 0; v < int(m.dims.size()); ++v)
    for (int g = 0; g < t.loops_per_vertex; ++g) {
      int gb = arrow_basis_index(r, g);
      arrows[t.loop_arrow[v][g]] =
          r->left_mult_matrix(gb).kron(Mat::identity(m.dims[v]));
    }
  for (int a = 0; a < int(t.embedded_arrow.size()); ++a)
    arrows[t.embedded_arrow[a]] = Mat::identity(dr).kron(m.arrow_matrix(a));
  return rep_from_arrow_maps(lam, dims, arrows);
}

Representation restriction(const Representation& n) {
  const AlgebraPtr& lam = n.algebra;
  if (!lam->tensor) throw std::runtime_error("not a tensor algebra");
  const TensorInfo& t = *lam->tensor;
  std::vector<Mat> arrows;
  for (int a = 0; a < int(t.embedded_arrow.size()); ++a)
    arrows.push_back(n.arrow_matrix(t.embedded_arrow[a]));
  return rep_from_arrow_maps(t.base_quiver, n.dims, arrows);
}

RepMorphism induction_map(const AlgebraPtr& lam, const RepMorphism& f) {
  if (!lam->tensor) throw std::runtime_error("not a tensor algebra");
  int dr = lam->tensor->local->dim();
  RepMorphism out;
  Mat id = Mat::identity(dr);
  for (const Mat& c : f.comps) out.comps.push_back(id.kron(c));
  return out;
}

Representation restrict_to_quotient(const Representation& x, const VertexQuotient& vq) {
  const AlgebraPtr& q = vq.algebra;
  std::vector<int> dims(q->n(), 0);
  for (size_t v = 0; v < vq.vertex_map.size(); ++v) {
    if (vq.vertex_map[v] >= 0)
      dims[vq.vertex_map[v]] = x.dims[v];
    else if (x.dims[v] != 0)
      throw std::runtime_error("not in subcategory");
  }
  // The ideal kills the module, so any basis lift acts consistently.
  std::vector<Mat> act;
  act.reserve(vq.section.size());
  for (int b : vq.section) act.push_back(x.act[b]);
  return rep_from_action(q, dims, std::move(act));
}

Representation embed_from_quotient(const Representation& y, const AlgebraPtr& a,
                                   const VertexQuotient& vq) {
  std::vector<int> dims(a->n(), 0);
  for (int v = 0; v < a->n(); ++v)
    if (vq.vertex_map[v] >= 0) dims[v] = y.dims[vq.vertex_map[v]];
  std::vector<Mat> act;
  act.reserve(a->dim());
  for (int b = 0; b < a->dim(); ++b) {
    const BasisElem& be = a->basis[size_t(b)];
    Mat m(dims[be.tgt], dims[be.src]);
    for (const auto& [s, c] : vq.proj[b]) m = m + y.act[s] * c;
    act.push_back(std::move(m));
  }
  return rep_from_action(a, dims, std::move(act));
}

}  // namespace taucat

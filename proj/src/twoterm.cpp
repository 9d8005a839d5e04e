#include "taucat/twoterm.hpp"

#include <algorithm>
#include <stdexcept>

namespace taucat {

namespace {

// Flatten a morphism into one coordinate column (row-major per vertex).
Mat morphism_vec(const RepMorphism& f) {
  int total = 0;
  for (const Mat& c : f.comps) total += c.rows() * c.cols();
  Mat v(total, 1);
  int at = 0;
  for (const Mat& c : f.comps)
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) v.at(at++, 0) = c.at(i, j);
  return v;
}

Mat homset_matrix(const std::vector<RepMorphism>& basis, int rows) {
  Mat m(rows, int(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) {
    Mat v = morphism_vec(basis[k]);
    for (int i = 0; i < rows; ++i) m.at(i, int(k)) = v.at(i, 0);
  }
  return m;
}

int vec_rows(const Representation& src, const Representation& tgt) {
  int total = 0;
  for (size_t v = 0; v < src.dims.size(); ++v) total += src.dims[v] * tgt.dims[v];
  return total;
}

// Coordinates of f in the span of a hom basis; the basis always spans.
Mat coords_of(const std::vector<RepMorphism>& basis, const Mat& basis_mat,
              const RepMorphism& f) {
  if (basis.empty()) return Mat(0, 1);
  SolveResult s = solve(basis_mat, morphism_vec(f));
  if (!s.ok) throw std::runtime_error("hom coordinate solve failed");
  return s.x;
}

RepMorphism combine(const std::vector<RepMorphism>& basis, const Mat& coeffs,
                    const Representation& src, const Representation& tgt) {
  RepMorphism f = zero_morphism(src, tgt);
  for (size_t k = 0; k < basis.size(); ++k)
    if (coeffs.at(int(k), 0) != 0) f = add(f, scale(basis[k], coeffs.at(int(k), 0)));
  return f;
}

struct ChainHomData {
  std::vector<RepMorphism> b11, b00;  // hom bases for the two components
  Mat chain;                          // kernel of the square condition
  Mat null;                           // homotopy image, a subspace of chain
  std::vector<int> cls_cols;          // columns of `chain` giving coset reps
  Mat quo;                            // [null | chain(cls_cols)] for coordinates
};

// Chain maps modulo homotopy for shift 0, in hom-basis coordinates
// (f1-coordinates first, then f0-coordinates).
ChainHomData chain_hom_data(const TwoTermComplex& x, const TwoTermComplex& y) {
  ChainHomData d;
  d.b11 = hom_basis(x.p1, y.p1);
  d.b00 = hom_basis(x.p0, y.p0);
  const int n1 = int(d.b11.size()), n0 = int(d.b00.size());
  Mat m11 = homset_matrix(d.b11, vec_rows(x.p1, y.p1));
  Mat m00 = homset_matrix(d.b00, vec_rows(x.p0, y.p0));

  // square condition: f0 d_x - d_y f1 = 0 inside Hom(x.p1, y.p0)
  const int crows = vec_rows(x.p1, y.p0);
  Mat cons(crows, n1 + n0);
  for (int k = 0; k < n1; ++k) {
    Mat v = morphism_vec(compose(y.d, d.b11[k]));
    for (int i = 0; i < crows; ++i) cons.at(i, k) = -v.at(i, 0);
  }
  for (int k = 0; k < n0; ++k) {
    Mat v = morphism_vec(compose(d.b00[k], x.d));
    for (int i = 0; i < crows; ++i) cons.at(i, n1 + k) = v.at(i, 0);
  }
  d.chain = kernel_basis(cons);

  std::vector<RepMorphism> h01 = hom_basis(x.p0, y.p1);
  Mat null(n1 + n0, int(h01.size()));
  for (size_t k = 0; k < h01.size(); ++k) {
    Mat c1 = coords_of(d.b11, m11, compose(h01[k], x.d));
    Mat c0 = coords_of(d.b00, m00, compose(y.d, h01[k]));
    for (int i = 0; i < n1; ++i) null.at(i, int(k)) = c1.at(i, 0);
    for (int i = 0; i < n0; ++i) null.at(n1 + i, int(k)) = c0.at(i, 0);
  }
  d.null = null;

  Rref r = rref(null.hstack(d.chain));
  for (int p : r.pivots)
    if (p >= null.cols()) d.cls_cols.push_back(p - null.cols());
  Mat quo = null;
  for (int c : d.cls_cols)
    quo = quo.hstack(d.chain.submatrix(0, c, d.chain.rows(), 1));
  d.quo = quo;
  return d;
}

// Class coordinates of a chain map (f1, f0) in the coset basis of `d`.
Mat class_coords(const ChainHomData& d, const TwoTermComplex& x, const TwoTermComplex& y,
                 const RepMorphism& f1, const RepMorphism& f0) {
  Mat m11 = homset_matrix(d.b11, vec_rows(x.p1, y.p1));
  Mat m00 = homset_matrix(d.b00, vec_rows(x.p0, y.p0));
  Mat c1 = coords_of(d.b11, m11, f1);
  Mat c0 = coords_of(d.b00, m00, f0);
  const int n1 = int(d.b11.size()), n0 = int(d.b00.size());
  Mat v(n1 + n0, 1);
  for (int i = 0; i < n1; ++i) v.at(i, 0) = c1.at(i, 0);
  for (int i = 0; i < n0; ++i) v.at(n1 + i, 0) = c0.at(i, 0);
  Mat out(int(d.cls_cols.size()), 1);
  if (d.quo.cols() == 0) {
    if (!v.is_zero()) throw std::runtime_error("hom coordinate solve failed");
    return out;
  }
  SolveResult s = solve(d.quo, v);
  if (!s.ok) throw std::runtime_error("hom coordinate solve failed");
  const int off = d.null.cols();
  for (size_t i = 0; i < d.cls_cols.size(); ++i) out.at(int(i), 0) = s.x.at(off + int(i), 0);
  return out;
}

ChainMapClass class_from_coords(const ChainHomData& d, const TwoTermComplex& x,
                                const TwoTermComplex& y, const Mat& col) {
  const int n1 = int(d.b11.size());
  ChainMapClass c;
  c.f1 = zero_morphism(x.p1, y.p1);
  c.f0 = zero_morphism(x.p0, y.p0);
  for (int k = 0; k < n1; ++k)
    if (col.at(k, 0) != 0) c.f1 = add(c.f1, scale(d.b11[k], col.at(k, 0)));
  for (int k = 0; k < int(d.b00.size()); ++k)
    if (col.at(n1 + k, 0) != 0) c.f0 = add(c.f0, scale(d.b00[k], col.at(n1 + k, 0)));
  return c;
}

RepMorphism hstack_morphisms(const std::vector<RepMorphism>& parts,
                             const Representation& tgt) {
  RepMorphism out;
  for (size_t v = 0; v < tgt.dims.size(); ++v) {
    Mat row(tgt.dims[v], 0);
    for (const auto& p : parts) row = row.hstack(p.comps[v]);
    out.comps.push_back(row);
  }
  return out;
}

}  // namespace

TwoTermComplex presentation_complex(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  TwoTermComplex x;
  if (m.is_zero()) {
    x.p1 = zero_rep(a);
    x.p0 = zero_rep(a);
    x.d = zero_morphism(x.p1, x.p0);
    return x;
  }
  MinPresentation mp = min_presentation(m);
  x.p1 = mp.p1;
  x.p0 = mp.p0;
  x.d = mp.d1;
  x.verts1 = mp.verts1;
  x.verts0 = mp.verts0;
  return x;
}

TwoTermComplex stalk_complex(const Representation& p) {
  TwoTermComplex x;
  x.p1 = zero_rep(p.algebra);
  x.p0 = p;
  x.d = zero_morphism(x.p1, x.p0);
  return x;
}

TwoTermComplex shifted_stalk_complex(const Representation& p) {
  TwoTermComplex x;
  x.p1 = p;
  x.p0 = zero_rep(p.algebra);
  x.d = zero_morphism(x.p1, x.p0);
  return x;
}

TwoTermComplex direct_sum_complex(const AlgebraPtr& a,
                                  const std::vector<TwoTermComplex>& parts) {
  TwoTermComplex x;
  std::vector<Representation> p1s, p0s;
  for (const auto& p : parts) {
    p1s.push_back(p.p1);
    p0s.push_back(p.p0);
    x.verts1.insert(x.verts1.end(), p.verts1.begin(), p.verts1.end());
    x.verts0.insert(x.verts0.end(), p.verts0.begin(), p.verts0.end());
  }
  x.p1 = p1s.empty() ? zero_rep(a) : direct_sum(a, p1s);
  x.p0 = p0s.empty() ? zero_rep(a) : direct_sum(a, p0s);
  for (size_t v = 0; v < x.p0.dims.size(); ++v) {
    Mat block(x.p0.dims[v], x.p1.dims[v]);
    int r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      const Mat& c = p.d.comps[v];
      for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) block.at(r0 + i, c0 + j) = c.at(i, j);
      r0 += c.rows();
      c0 += c.cols();
    }
    x.d.comps.push_back(block);
  }
  return x;
}

Representation h_zero(const TwoTermComplex& x) {
  std::vector<Mat> img = morphism_image(x.p1, x.p0, x.d);
  return quotient_representation(x.p0, img).rep;
}

Representation h_minus_one(const TwoTermComplex& x) {
  std::vector<Mat> ker = morphism_kernel(x.p1, x.p0, x.d);
  return sub_representation(x.p1, ker).rep;
}

TwoTermComplex induce_complex(const AlgebraPtr& lam, const TwoTermComplex& x) {
  TwoTermComplex y;
  y.p1 = induction(lam, x.p1);
  y.p0 = induction(lam, x.p0);
  y.d = induction_map(lam, x.d);
  y.verts1 = x.verts1;
  y.verts0 = x.verts0;
  return y;
}

HomotopyHomSpace hom_upto_homotopy(const TwoTermComplex& x, const TwoTermComplex& y,
                                   int shift) {
  HomotopyHomSpace out;
  if (shift == 0) {
    ChainHomData d = chain_hom_data(x, y);
    out.dim = int(d.cls_cols.size());
    for (int c : d.cls_cols)
      out.basis.push_back(
          class_from_coords(d, x, y, d.chain.submatrix(0, c, d.chain.rows(), 1)));
    return out;
  }
  if (shift == 1) {
    // every map x.p1 -> y.p0 is a chain map into the shift
    std::vector<RepMorphism> b10 = hom_basis(x.p1, y.p0);
    Mat m10 = homset_matrix(b10, vec_rows(x.p1, y.p0));
    std::vector<RepMorphism> h00 = hom_basis(x.p0, y.p0);
    std::vector<RepMorphism> h11 = hom_basis(x.p1, y.p1);
    Mat null(int(b10.size()), int(h00.size() + h11.size()));
    int col = 0;
    for (const auto& h : h00) {
      Mat c = coords_of(b10, m10, compose(h, x.d));
      for (int i = 0; i < null.rows(); ++i) null.at(i, col) = c.at(i, 0);
      ++col;
    }
    for (const auto& h : h11) {
      Mat c = coords_of(b10, m10, compose(y.d, h));
      for (int i = 0; i < null.rows(); ++i) null.at(i, col) = c.at(i, 0);
      ++col;
    }
    Mat full = Mat::identity(int(b10.size()));
    Rref r = rref(null.hstack(full));
    for (int p : r.pivots)
      if (p >= null.cols()) {
        ChainMapClass c;
        c.f1 = b10[p - null.cols()];
        c.f0 = zero_morphism(x.p0, y.p0);
        out.basis.push_back(c);
      }
    out.dim = int(out.basis.size());
    return out;
  }
  if (shift == -1) {
    // maps x.p0 -> y.p1 annihilated by both differentials; no homotopies
    std::vector<RepMorphism> b01 = hom_basis(x.p0, y.p1);
    const int rows1 = vec_rows(x.p1, y.p1), rows0 = vec_rows(x.p0, y.p0);
    Mat cons(rows1 + rows0, int(b01.size()));
    for (size_t k = 0; k < b01.size(); ++k) {
      Mat v1 = morphism_vec(compose(b01[k], x.d));
      Mat v0 = morphism_vec(compose(y.d, b01[k]));
      for (int i = 0; i < rows1; ++i) cons.at(i, int(k)) = v1.at(i, 0);
      for (int i = 0; i < rows0; ++i) cons.at(rows1 + i, int(k)) = v0.at(i, 0);
    }
    Mat ker = kernel_basis(cons);
    for (int c = 0; c < ker.cols(); ++c) {
      ChainMapClass cm;
      cm.f1 = zero_morphism(x.p1, y.p1);
      cm.f0 = combine(b01, ker.submatrix(0, c, ker.rows(), 1), x.p0, y.p1);
      out.basis.push_back(cm);
    }
    out.dim = int(out.basis.size());
    return out;
  }
  throw std::runtime_error("shift out of range");
}

std::vector<TwoTermComplex> two_silt(const AlgebraPtr& a) {
  std::vector<TwoTermComplex> out;
  for (const SttObject& o : support_tau_tilting(a)) {
    TwoTermComplex pm = presentation_complex(o.m);
    std::vector<TwoTermComplex> parts = {pm};
    if (!o.p.is_zero()) {
      TwoTermComplex sh = shifted_stalk_complex(o.p);
      sh.verts1 = o.proj_verts;
      parts.push_back(sh);
    }
    TwoTermComplex t = direct_sum_complex(a, parts);
    HomotopyHomSpace ext = hom_upto_homotopy(t, t, 1);
    if (ext.dim != 0) throw std::runtime_error("presilting check failed");
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Right-approximation property: every class of Hom(atom, target) lies in the
// span of the classes of alpha composed with chain maps atom -> source.
bool approximates(const ChainMapClass& alpha, const TwoTermComplex& source,
                  const TwoTermComplex& target, const std::vector<TwoTermComplex>& atoms) {
  for (const auto& atom : atoms) {
    ChainHomData tgt = chain_hom_data(atom, target);
    const int full = int(tgt.cls_cols.size());
    if (full == 0) continue;
    HomotopyHomSpace maps = hom_upto_homotopy(atom, source, 0);
    Mat span(full, maps.dim);
    for (int k = 0; k < maps.dim; ++k) {
      RepMorphism g1 = compose(alpha.f1, maps.basis[k].f1);
      RepMorphism g0 = compose(alpha.f0, maps.basis[k].f0);
      Mat c = class_coords(tgt, atom, target, g1, g0);
      for (int i = 0; i < full; ++i) span.at(i, k) = c.at(i, 0);
    }
    if (rank(span) < full) return false;
  }
  return true;
}

struct SourceBuild {
  TwoTermComplex source;
  ChainMapClass alpha;
};

SourceBuild assemble(const AlgebraPtr& a, const std::vector<TwoTermComplex>& atoms,
                     const std::vector<std::pair<int, ChainMapClass>>& copies,
                     const TwoTermComplex& target) {
  std::vector<TwoTermComplex> parts;
  std::vector<RepMorphism> f1s, f0s;
  for (const auto& [ai, cls] : copies) {
    parts.push_back(atoms[ai]);
    f1s.push_back(cls.f1);
    f0s.push_back(cls.f0);
  }
  SourceBuild b;
  b.source = direct_sum_complex(a, parts);
  b.alpha.f1 = hstack_morphisms(f1s, target.p1);
  b.alpha.f0 = hstack_morphisms(f0s, target.p0);
  if (parts.empty()) {
    b.alpha.f1 = zero_morphism(b.source.p1, target.p1);
    b.alpha.f0 = zero_morphism(b.source.p0, target.p0);
  }
  return b;
}

}  // namespace

Approximation minimal_right_approximation(const TwoTermComplex& target,
                                          const std::vector<TwoTermComplex>& atoms) {
  const AlgebraPtr& a = target.p0.algebra;
  std::vector<std::pair<int, ChainMapClass>> copies;
  for (size_t i = 0; i < atoms.size(); ++i) {
    HomotopyHomSpace h = hom_upto_homotopy(atoms[i], target, 0);
    for (const auto& cls : h.basis) copies.emplace_back(int(i), cls);
  }
  // strip copies while the factorization property survives
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < copies.size(); ++i) {
      std::vector<std::pair<int, ChainMapClass>> trial = copies;
      trial.erase(trial.begin() + i);
      SourceBuild b = assemble(a, atoms, trial, target);
      if (approximates(b.alpha, b.source, target, atoms)) {
        copies = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  SourceBuild b = assemble(a, atoms, copies, target);
  Approximation out;
  out.source = std::move(b.source);
  out.map = std::move(b.alpha);
  for (const auto& [ai, cls] : copies) out.copy_atom.push_back(ai);
  return out;
}

bool is_right_approximation(const Approximation& appr, const TwoTermComplex& target,
                            const std::vector<TwoTermComplex>& atoms) {
  return approximates(appr.map, appr.source, target, atoms);
}

MinLeftApprox minimal_left_approximation(const Representation& v,
                                         const std::vector<Representation>& atoms) {
  const AlgebraPtr& a = v.algebra;
  struct Copy {
    int atom;
    RepMorphism f;  // v -> atoms[atom]
  };
  std::vector<Copy> copies;
  for (size_t i = 0; i < atoms.size(); ++i)
    for (const auto& f : hom_basis(v, atoms[i])) copies.push_back({int(i), f});

  auto approximates_left = [&](const std::vector<Copy>& kept) {
    std::vector<Representation> parts;
    for (const auto& c : kept) parts.push_back(atoms[c.atom]);
    Representation t = parts.empty() ? zero_rep(a) : direct_sum(a, parts);
    RepMorphism map;
    for (size_t vx = 0; vx < v.dims.size(); ++vx) {
      Mat col(0, v.dims[vx]);
      for (const auto& c : kept) col = col.vstack(c.f.comps[vx]);
      if (kept.empty()) col = Mat(0, v.dims[vx]);
      map.comps.push_back(col);
    }
    // every map v -> atom must factor as g . map for some g: t -> atom
    for (const auto& atom : atoms) {
      std::vector<RepMorphism> fs = hom_basis(v, atom);
      if (fs.empty()) continue;
      std::vector<RepMorphism> gs = hom_basis(t, atom);
      const int rows = vec_rows(v, atom);
      Mat span(rows, int(gs.size()));
      for (size_t k = 0; k < gs.size(); ++k) {
        Mat c = morphism_vec(compose(gs[k], map));
        for (int i = 0; i < rows; ++i) span.at(i, int(k)) = c.at(i, 0);
      }
      for (const auto& f : fs)
        if (!in_column_space(span, morphism_vec(f))) return false;
    }
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < copies.size(); ++i) {
      std::vector<Copy> trial = copies;
      trial.erase(trial.begin() + i);
      if (approximates_left(trial)) {
        copies = std::move(trial);
        changed = true;
        break;
      }
    }
  }

  MinLeftApprox out;
  std::vector<Representation> parts;
  for (const auto& c : copies) {
    parts.push_back(atoms[c.atom]);
    out.copy_atom.push_back(c.atom);
  }
  out.target = parts.empty() ? zero_rep(a) : direct_sum(a, parts);
  for (size_t vx = 0; vx < v.dims.size(); ++vx) {
    Mat col(0, v.dims[vx]);
    for (const auto& c : copies) col = col.vstack(c.f.comps[vx]);
    out.map.comps.push_back(col);
  }
  return out;
}

Representation b_m_v(const Representation& m, const Representation& v, bool v_shifted,
                     const std::vector<Representation>& candidates) {
  const AlgebraPtr& a = m.algebra;
  if (v.is_zero()) throw std::runtime_error("V not in Gen M and not shifted projective");

  if (v_shifted) {
    PdResult pd = pd_capped(v, 1);
    if (pd.capped || pd.pd != 0)
      throw std::runtime_error("V not in Gen M and not shifted projective");
    Representation b = bongartz(m, candidates);
    std::vector<Representation> atoms;
    for (const auto& [rep, mult] : decompose(b).summands) atoms.push_back(rep);
    MinLeftApprox ap = minimal_left_approximation(v, atoms);
    if (!is_indecomposable(ap.target).indecomposable)
      throw std::runtime_error("approximation target decomposable");
    return ap.target;
  }

  if (!gen_membership(m, v))
    throw std::runtime_error("V not in Gen M and not shifted projective");

  TwoTermComplex pv = presentation_complex(v);
  std::vector<TwoTermComplex> atoms;
  for (const auto& [rep, mult] : decompose(m).summands)
    atoms.push_back(presentation_complex(rep));
  Approximation ap = minimal_right_approximation(pv, atoms);

  // B = H^0 of the shifted cone: kernel of [alpha_0  d_v] modulo the image
  // of (-d_src, alpha_-1).
  Representation dom = direct_sum(a, {ap.source.p0, pv.p1});
  RepMorphism big;
  RepMorphism small;
  for (size_t vx = 0; vx < dom.dims.size(); ++vx) {
    big.comps.push_back(ap.map.f0.comps[vx].hstack(pv.d.comps[vx]));
    Mat neg = scale(ap.source.d, Scalar(-1)).comps[vx];
    small.comps.push_back(neg.vstack(ap.map.f1.comps[vx]));
  }
  std::vector<Mat> ker = morphism_kernel(dom, pv.p0, big);
  SubQuot sub = sub_representation(dom, ker);
  std::vector<Mat> img;
  for (size_t vx = 0; vx < dom.dims.size(); ++vx) {
    Mat target_cols = small.comps[vx];
    if (target_cols.cols() == 0 || ker[vx].cols() == 0) {
      img.push_back(Mat(sub.rep.dims[vx], 0));
      continue;
    }
    SolveResult s = solve(ker[vx], target_cols);
    if (!s.ok) throw std::runtime_error("cone image escapes kernel");
    img.push_back(column_space_basis(s.x));
  }
  Representation b = quotient_representation(sub.rep, img).rep;
  if (!b.is_zero() && !is_indecomposable(b).indecomposable)
    throw std::runtime_error("approximation target decomposable");
  return b;
}

}  // namespace taucat

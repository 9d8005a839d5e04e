#include "taucat/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace taucat {

std::vector<Mat> radical_of_module(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  int nv = a->n();
  std::vector<Mat> cols(nv, Mat(0, 0));
  for (int v = 0; v < nv; ++v) cols[v] = Mat(m.dims[v], 0);
  // rad M = (rad A) M, accumulated blockwise over the radical basis
  for (int c = 0; c < a->radical_basis.cols(); ++c) {
    // split the radical vector by (src, tgt) blocks
    std::vector<std::vector<std::pair<int, Scalar>>> blocks;
    std::vector<std::pair<int, int>> tags;
    for (int b = 0; b < a->dim(); ++b) {
      const Scalar& coeff = a->radical_basis.at(b, c);
      if (coeff == 0) continue;
      std::pair<int, int> tag{a->basis[b].src, a->basis[b].tgt};
      int slot = -1;
      for (size_t s = 0; s < tags.size(); ++s)
        if (tags[s] == tag) slot = int(s);
      if (slot < 0) {
        slot = int(tags.size());
        tags.push_back(tag);
        blocks.push_back({});
      }
      blocks[slot].push_back({b, coeff});
    }
    for (size_t s = 0; s < tags.size(); ++s) {
      auto [src, tgt] = tags[s];
      Mat op(m.dims[tgt], m.dims[src]);
      for (const auto& [b, coeff] : blocks[s]) op = op + m.act[b] * coeff;
      cols[tgt] = cols[tgt].hstack(op);
    }
  }
  for (int v = 0; v < nv; ++v) cols[v] = column_space_basis(cols[v]);
  return cols;
}

namespace {

// Direct sum of indec projectives P(verts[i]) with per-block, per-vertex
// column offsets into the sum.
struct LabeledProj {
  Representation rep;
  std::vector<std::vector<int>> offset;  // [block][vertex]
};

LabeledProj labeled_proj_sum(const AlgebraPtr& a, const std::vector<int>& verts) {
  LabeledProj lp;
  std::vector<Representation> parts;
  std::vector<int> cursor(a->n(), 0);
  for (int v : verts) {
    Representation p = indec_projective(a, v);
    lp.offset.push_back(cursor);
    for (int w = 0; w < a->n(); ++w) cursor[w] += p.dims[w];
    parts.push_back(std::move(p));
  }
  lp.rep = direct_sum(a, parts);
  return lp;
}

struct LabeledInj {
  Representation rep;
  std::vector<std::vector<int>> offset;
};

LabeledInj labeled_inj_sum(const AlgebraPtr& a, const std::vector<int>& verts) {
  LabeledInj li;
  std::vector<Representation> parts;
  std::vector<int> cursor(a->n(), 0);
  for (int v : verts) {
    Representation p = indec_injective(a, v);
    li.offset.push_back(cursor);
    for (int w = 0; w < a->n(); ++w) cursor[w] += p.dims[w];
    parts.push_back(std::move(p));
  }
  li.rep = direct_sum(a, parts);
  return li;
}

// slots of P(v) / I(v) at a given vertex, in basis order
std::vector<int> proj_slots(const AlgebraPtr& a, int v, int at) {
  std::vector<int> out;
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis[b].src == v && a->basis[b].tgt == at) out.push_back(b);
  return out;
}

std::vector<int> inj_slots(const AlgebraPtr& a, int v, int at) {
  std::vector<int> out;
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis[b].tgt == v && a->basis[b].src == at) out.push_back(b);
  return out;
}

// A map between labeled projective sums, with entries in the algebra:
// entries[i][j] ∈ e_{src_verts[j]} A e_{tgt_verts[i]} describes the component
// P(src_verts[j]) -> P(tgt_verts[i]) acting by right multiplication.
struct ProjMap {
  std::vector<int> src_verts, tgt_verts;
  std::vector<std::vector<AlgElem>> entries;
};

ProjMap extract_proj_map(const AlgebraPtr& a, const std::vector<int>& src_verts,
                         const LabeledProj& src, const std::vector<int>& tgt_verts,
                         const LabeledProj& tgt, const RepMorphism& f) {
  ProjMap pm;
  pm.src_verts = src_verts;
  pm.tgt_verts = tgt_verts;
  pm.entries.assign(tgt_verts.size(), std::vector<AlgElem>(src_verts.size()));
  for (size_t j = 0; j < src_verts.size(); ++j) {
    int u = src_verts[j];
    // the idempotent slot of P(u) sits first among its vertex-u slots
    int col = src.offset[j][u];
    for (size_t i = 0; i < tgt_verts.size(); ++i) {
      int w = tgt_verts[i];
      std::vector<int> rows = proj_slots(a, w, u);
      AlgElem x;
      for (size_t rix = 0; rix < rows.size(); ++rix) {
        const Scalar& c = f.comps[u].at(tgt.offset[i][u] + int(rix), col);
        if (c != 0) x.push_back({rows[rix], c});
      }
      pm.entries[i][j] = std::move(x);
    }
  }
  return pm;
}

RepMorphism realize_proj_map(const AlgebraPtr& a, const ProjMap& pm, const LabeledProj& src,
                             const LabeledProj& tgt) {
  RepMorphism f;
  for (int z = 0; z < a->n(); ++z)
    f.comps.push_back(Mat(tgt.rep.dims[z], src.rep.dims[z]));
  for (size_t i = 0; i < pm.tgt_verts.size(); ++i)
    for (size_t j = 0; j < pm.src_verts.size(); ++j) {
      const AlgElem& x = pm.entries[i][j];
      if (x.empty()) continue;
      int u = pm.src_verts[j], w = pm.tgt_verts[i];
      for (int z = 0; z < a->n(); ++z) {
        std::vector<int> cols = proj_slots(a, u, z);
        std::vector<int> rows = proj_slots(a, w, z);
        for (size_t cix = 0; cix < cols.size(); ++cix) {
          // right multiplication: slot b ∈ e_z A e_u goes to b·x = mult[b][x]
          AlgElem prod = a->multiply({{cols[cix], Scalar(1)}}, x);
          for (const auto& [k, c] : prod)
            for (size_t rix = 0; rix < rows.size(); ++rix)
              if (rows[rix] == k)
                f.comps[z].at(tgt.offset[i][z] + int(rix), src.offset[j][z] + int(cix)) += c;
        }
      }
    }
  return f;
}

// ν on a labeled map: component for x ∈ e_u A e_w is the transpose of left
// multiplication by x, i.e. [νφ]_{y,b} = coeff_b(x·y).
RepMorphism nakayama_map(const AlgebraPtr& a, const ProjMap& pm, const LabeledInj& src,
                         const LabeledInj& tgt) {
  RepMorphism f;
  for (int z = 0; z < a->n(); ++z)
    f.comps.push_back(Mat(tgt.rep.dims[z], src.rep.dims[z]));
  for (size_t i = 0; i < pm.tgt_verts.size(); ++i)
    for (size_t j = 0; j < pm.src_verts.size(); ++j) {
      const AlgElem& x = pm.entries[i][j];
      if (x.empty()) continue;
      int u = pm.src_verts[j], w = pm.tgt_verts[i];
      for (int z = 0; z < a->n(); ++z) {
        std::vector<int> cols = inj_slots(a, u, z);  // basis of e_u A e_z
        std::vector<int> rows = inj_slots(a, w, z);  // basis of e_w A e_z
        for (size_t rix = 0; rix < rows.size(); ++rix) {
          AlgElem prod = a->multiply(x, {{rows[rix], Scalar(1)}});
          for (const auto& [k, c] : prod)
            for (size_t cix = 0; cix < cols.size(); ++cix)
              if (cols[cix] == k)
                f.comps[z].at(tgt.offset[i][z] + int(rix), src.offset[j][z] + int(cix)) += c;
        }
      }
    }
  return f;
}

struct CoverData {
  std::vector<int> verts;
  LabeledProj lp;
  RepMorphism map;
};

CoverData cover_data(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  std::vector<Mat> rad = radical_of_module(m);
  CoverData cd;
  std::vector<std::vector<Mat>> generators;  // per chosen top representative
  for (int v = 0; v < a->n(); ++v) {
    // coset representatives of M_v / rad_v
    Mat cur = rad[v];
    for (int i = 0; i < m.dims[v]; ++i) {
      Mat e(m.dims[v], 1);
      e.at(i, 0) = 1;
      if (!in_column_space(cur, e)) {
        cur = cur.hstack(e);
        cd.verts.push_back(v);
        generators.push_back({e});
      }
    }
  }
  cd.lp = labeled_proj_sum(a, cd.verts);
  // map: on the copy of P(v) generated by u, slot b goes to act[b]·u
  for (int z = 0; z < a->n(); ++z) {
    Mat comp(m.dims[z], cd.lp.rep.dims[z]);
    for (size_t blk = 0; blk < cd.verts.size(); ++blk) {
      int v = cd.verts[blk];
      const Mat& u = generators[blk][0];
      std::vector<int> slots = proj_slots(a, v, z);
      for (size_t s = 0; s < slots.size(); ++s) {
        Mat col = m.act[slots[s]] * u;
        for (int i = 0; i < m.dims[z]; ++i) comp.at(i, cd.lp.offset[blk][z] + int(s)) = col.at(i, 0);
      }
    }
    cd.map.comps.push_back(std::move(comp));
  }
  // surjectivity check (graded Nakayama guarantees it, but verify)
  for (int z = 0; z < a->n(); ++z)
    if (rank(cd.map.comps[z]) != m.dims[z]) throw std::runtime_error("cover not surjective");
  return cd;
}

}  // namespace

Cover projective_cover(const Representation& m) {
  CoverData cd = cover_data(m);
  return {cd.verts, cd.lp.rep, cd.map};
}

MinPresentation min_presentation(const Representation& m) {
  CoverData c0 = cover_data(m);
  std::vector<Mat> ker = morphism_kernel(c0.lp.rep, m, c0.map);
  SubQuot sub = sub_representation(c0.lp.rep, ker);
  CoverData c1 = cover_data(sub.rep);
  MinPresentation mp;
  mp.verts0 = c0.verts;
  mp.verts1 = c1.verts;
  mp.p0 = c0.lp.rep;
  mp.p1 = c1.lp.rep;
  mp.d0 = c0.map;
  mp.d1 = compose(sub.map, c1.map);
  return mp;
}

GVector g_vector(const Representation& m) {
  MinPresentation mp = min_presentation(m);
  GVector g;
  g.coords.assign(m.algebra->n(), 0);
  for (int v : mp.verts0) ++g.coords[v];
  for (int v : mp.verts1) --g.coords[v];
  return g;
}

Representation nakayama_of_projective(const Representation& p) {
  const AlgebraPtr& a = p.algebra;
  if (p.is_zero()) return zero_rep(a);
  Decomposition d = decompose(p);
  std::vector<Representation> parts;
  for (const auto& [rep, mult] : d.summands) {
    int vert = -1;
    for (int v = 0; v < a->n(); ++v)
      if (is_isomorphic(rep, indec_projective(a, v)).isomorphic) {
        vert = v;
        break;
      }
    if (vert < 0) throw std::runtime_error("input not projective");
    for (int c = 0; c < mult; ++c) parts.push_back(indec_injective(a, vert));
  }
  return direct_sum(a, parts);
}

Representation tau(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  if (m.is_zero()) return zero_rep(a);
  CoverData c0 = cover_data(m);
  std::vector<Mat> ker = morphism_kernel(c0.lp.rep, m, c0.map);
  SubQuot sub = sub_representation(c0.lp.rep, ker);
  CoverData c1 = cover_data(sub.rep);
  if (c1.verts.empty()) return zero_rep(a);  // projective module
  RepMorphism d1 = compose(sub.map, c1.map);
  ProjMap pm = extract_proj_map(a, c1.verts, c1.lp, c0.verts, c0.lp, d1);
  LabeledInj nu1 = labeled_inj_sum(a, c1.verts);
  LabeledInj nu0 = labeled_inj_sum(a, c0.verts);
  RepMorphism nud1 = nakayama_map(a, pm, nu1, nu0);
  std::vector<Mat> k = morphism_kernel(nu1.rep, nu0.rep, nud1);
  return sub_representation(nu1.rep, k).rep;
}

namespace {

// Tr(M): cokernel of Hom(d1, A) for a minimal presentation, as a module over
// the opposite algebra (passed in by the caller to avoid rebuilding it).
Representation transpose_module(const Representation& m, const AlgebraPtr& aop) {
  const AlgebraPtr& a = m.algebra;
  CoverData c0 = cover_data(m);
  std::vector<Mat> ker = morphism_kernel(c0.lp.rep, m, c0.map);
  SubQuot sub = sub_representation(c0.lp.rep, ker);
  CoverData c1 = cover_data(sub.rep);
  if (c1.verts.empty()) return zero_rep(aop);
  RepMorphism d1 = compose(sub.map, c1.map);
  ProjMap pm = extract_proj_map(a, c1.verts, c1.lp, c0.verts, c0.lp, d1);

  // Over the opposite algebra, Hom(-, A) swaps source and target and keeps
  // the same structure constants.
  ProjMap op;
  op.src_verts = pm.tgt_verts;
  op.tgt_verts = pm.src_verts;
  op.entries.assign(pm.src_verts.size(), std::vector<AlgElem>(pm.tgt_verts.size()));
  for (size_t i = 0; i < pm.tgt_verts.size(); ++i)
    for (size_t j = 0; j < pm.src_verts.size(); ++j) op.entries[j][i] = pm.entries[i][j];
  LabeledProj src = labeled_proj_sum(aop, op.src_verts);
  LabeledProj tgt = labeled_proj_sum(aop, op.tgt_verts);
  RepMorphism homd1 = realize_proj_map(aop, op, src, tgt);
  std::vector<Mat> img = morphism_image(src.rep, tgt.rep, homd1);
  return quotient_representation(tgt.rep, img).rep;
}

}  // namespace

Representation tau_dtr_oracle(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  if (m.is_zero()) return zero_rep(a);
  return dualize(transpose_module(m, opposite(a)), a);
}

Representation tau_inverse(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  if (m.is_zero()) return zero_rep(a);
  AlgebraPtr aop = opposite(a);
  Representation tr = transpose_module(dualize(m, aop), opposite(aop));
  // The double opposite has the same basis and multiplication table, so the
  // action matrices transfer index-for-index.
  return rep_from_action(a, tr.dims, tr.act);
}

int ext_dim(const Representation& m, const Representation& n, int k) {
  if (k == 0) return hom_dim(m, n);
  Representation x = m;
  // shift: Ext^k(M, N) = Ext^1(Ω^{k-1} M, N)
  for (int i = 0; i < k - 1; ++i) {
    if (x.is_zero()) return 0;
    CoverData c = cover_data(x);
    std::vector<Mat> ker = morphism_kernel(c.lp.rep, x, c.map);
    x = sub_representation(c.lp.rep, ker).rep;
  }
  if (x.is_zero()) return 0;
  CoverData c = cover_data(x);
  std::vector<Mat> ker = morphism_kernel(c.lp.rep, x, c.map);
  Representation omega = sub_representation(c.lp.rep, ker).rep;
  return hom_dim(omega, n) - hom_dim(c.lp.rep, n) + hom_dim(x, n);
}

PdResult pd_capped(const Representation& m, int cap) {
  Representation x = m;
  for (int pd = 0; pd < cap; ++pd) {
    if (x.is_zero()) return {pd == 0 ? 0 : pd - 1, false};
    CoverData c = cover_data(x);
    std::vector<Mat> ker = morphism_kernel(c.lp.rep, x, c.map);
    Representation omega = sub_representation(c.lp.rep, ker).rep;
    if (omega.is_zero()) return {pd, false};
    x = omega;
  }
  return {cap, true};
}

}  // namespace taucat

#include "taucat/tau.hpp"

#include <algorithm>
#include <stdexcept>

namespace taucat {

namespace {

bool dims_less(const Representation& x, const Representation& y) {
  return x.dims < y.dims;
}

bool same_module(const Representation& x, const Representation& y) {
  return x.dims == y.dims && is_isomorphic(x, y).isomorphic;
}

bool hereditary(const AlgebraPtr& a) {
  for (int v = 0; v < a->n(); ++v) {
    PdResult r = pd_capped(simple_rep(a, v), 2);
    if (r.capped || r.pd > 1) return false;
  }
  return true;
}

}  // namespace

bool is_tau_rigid(const Representation& m) {
  if (m.is_zero()) return true;
  return hom_dim(m, tau(m)) == 0;
}

TorsionDecomposition torsion_parts(const Representation& m, const Representation& x) {
  const AlgebraPtr& a = x.algebra;
  std::vector<RepMorphism> homs = hom_basis(m, x);
  std::vector<Mat> tb(x.dims.size());
  for (size_t v = 0; v < x.dims.size(); ++v) {
    Mat stacked(x.dims[v], 0);
    for (const auto& h : homs) stacked = stacked.hstack(h.comps[v]);
    tb[v] = column_space_basis(stacked);
  }
  TorsionDecomposition out;
  out.t_basis = tb;
  SubQuot s = sub_representation(x, tb);
  out.tx = s.rep;
  out.t_incl = s.map;
  SubQuot q = quotient_representation(x, tb);
  out.fx = q.rep;
  out.f_proj = q.map;
  (void)a;
  return out;
}

bool gen_membership(const Representation& m, const Representation& x) {
  TorsionDecomposition d = torsion_parts(m, x);
  return d.tx.total_dim() == x.total_dim();
}

std::vector<Representation> indec_tau_rigid(const AlgebraPtr& a,
                                            const std::vector<Representation>& candidates) {
  std::vector<Representation> out;
  if (a->dim() == 0) return out;

  if (!candidates.empty()) {
    for (const auto& c : candidates) {
      if (c.is_zero()) continue;
      if (!is_indecomposable(c).indecomposable) continue;
      if (!is_tau_rigid(c)) continue;
      bool dup = false;
      for (const auto& o : out)
        if (same_module(o, c)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(c);
    }
  } else if (a->radical_basis.cols() == 0) {
    for (int v = 0; v < a->n(); ++v) out.push_back(simple_rep(a, v));
  } else if (a->tensor) {
    std::vector<Representation> base = indec_tau_rigid(a->tensor->base_quiver);
    for (const auto& m : base) {
      Representation im = induction(a, m);
      if (!is_indecomposable(im).indecomposable || !is_tau_rigid(im))
        throw std::runtime_error("enumeration route unavailable");
      out.push_back(std::move(im));
    }
  } else if (a->quiver && hereditary(a)) {
    DynkinClass dc = is_dynkin(*a->quiver);
    if (!dc.dynkin) throw std::runtime_error("enumeration route unavailable");
    std::vector<Representation> pool;
    for (int v = 0; v < a->n(); ++v) pool.push_back(indec_projective(a, v));
    for (size_t i = 0; i < pool.size(); ++i) {
      if (pool.size() > 200) throw std::runtime_error("enumeration route unavailable");
      Representation next = tau_inverse(pool[i]);
      if (next.is_zero()) continue;  // pool[i] is injective
      if (!is_indecomposable(next).indecomposable)
        throw std::runtime_error("enumeration route unavailable");
      bool dup = false;
      for (const auto& o : pool)
        if (same_module(o, next)) {
          dup = true;
          break;
        }
      if (!dup) pool.push_back(std::move(next));
    }
    if (int(pool.size()) != dc.positive_roots)
      throw std::runtime_error("enumeration route unavailable");
    for (auto& m : pool)
      if (is_tau_rigid(m)) out.push_back(std::move(m));
  } else if (a->is_local()) {
    // every tau-rigid module over a local algebra is free
    out.push_back(free_module(a));
  } else {
    throw std::runtime_error("enumeration route unavailable");
  }

  std::stable_sort(out.begin(), out.end(), dims_less);
  return out;
}

std::vector<SttObject> support_tau_tilting(const AlgebraPtr& a,
                                           const std::vector<Representation>& candidates) {
  std::vector<Representation> indecs = indec_tau_rigid(a, candidates);
  const int t = int(indecs.size());
  const int n = a->n();
  std::vector<Representation> taus;
  taus.reserve(t);
  for (const auto& m : indecs) taus.push_back(tau(m));
  std::vector<Representation> projs;
  projs.reserve(n);
  for (int v = 0; v < n; ++v) projs.push_back(indec_projective(a, v));

  const int total = t + n;
  std::vector<std::vector<char>> ok(total, std::vector<char>(total, 0));
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j) {
      bool c;
      if (i < t && j < t)
        c = hom_dim(indecs[i], taus[j]) == 0 && hom_dim(indecs[j], taus[i]) == 0;
      else if (i < t)
        c = hom_dim(projs[j - t], indecs[i]) == 0;
      else
        c = true;  // shifted projectives never interfere
      ok[i][j] = ok[j][i] = c;
    }

  std::vector<SttObject> out;
  std::vector<int> chosen;
  auto emit = [&]() {
    SttObject o;
    std::vector<Representation> ms, ps;
    for (int v : chosen) {
      if (v < t) {
        o.module_summands.push_back(v);
        ms.push_back(indecs[v]);
      } else {
        o.proj_verts.push_back(v - t);
        ps.push_back(projs[v - t]);
      }
    }
    o.m = ms.empty() ? zero_rep(a) : direct_sum(a, ms);
    o.p = ps.empty() ? zero_rep(a) : direct_sum(a, ps);
    out.push_back(std::move(o));
  };
  std::function<void(int)> rec = [&](int start) {
    if (int(chosen.size()) == n) {
      emit();
      return;
    }
    for (int v = start; v < total; ++v) {
      bool fits = true;
      for (int u : chosen)
        if (!ok[u][v]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> summand_indices(const std::vector<Representation>& indecs,
                                 const Representation& m) {
  std::vector<int> out;
  if (m.is_zero()) return out;
  Decomposition d = decompose(m);
  for (const auto& [rep, mult] : d.summands) {
    if (mult != 1) throw std::runtime_error("not basic");
    int found = -1;
    for (size_t i = 0; i < indecs.size(); ++i)
      if (same_module(indecs[i], rep)) {
        found = int(i);
        break;
      }
    if (found < 0) throw std::runtime_error("not jointly rigid");
    out.push_back(found);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Representation bongartz(const Representation& m,
                        const std::vector<Representation>& candidates) {
  const AlgebraPtr& a = m.algebra;
  std::vector<Representation> indecs = indec_tau_rigid(a, candidates);
  std::vector<SttObject> stt = support_tau_tilting(a, candidates);
  std::vector<int> mi = summand_indices(indecs, m);

  std::vector<const SttObject*> comps;
  for (const auto& o : stt) {
    if (!o.proj_verts.empty()) continue;
    if (std::includes(o.module_summands.begin(), o.module_summands.end(), mi.begin(), mi.end()))
      comps.push_back(&o);
  }
  if (comps.empty()) throw std::runtime_error("no module-only completion");

  auto dominates = [&](const SttObject* x) {
    for (const SttObject* y : comps)
      for (int idx : y->module_summands)
        if (!gen_membership(x->m, indecs[idx])) return false;
    return true;
  };
  const SttObject* best = nullptr;
  for (const SttObject* x : comps)
    if (dominates(x)) {
      if (best) throw std::runtime_error("bongartz completion not unique");
      best = x;
    }
  if (!best) throw std::runtime_error("no module-only completion");

  // certify Ext-projectivity of every summand inside Gen(best)
  for (int i : best->module_summands) {
    Representation ti = tau(indecs[i]);
    for (int j : best->module_summands)
      if (hom_dim(indecs[j], ti) != 0)
        throw std::runtime_error("bongartz completion not unique");
  }
  return best->m;
}

SttObject co_bongartz(const Representation& m,
                      const std::vector<Representation>& candidates) {
  const AlgebraPtr& a = m.algebra;
  const int n = a->n();
  std::vector<Representation> indecs = indec_tau_rigid(a, candidates);
  std::vector<int> mi = summand_indices(indecs, m);

  std::vector<int> mods = mi;
  for (size_t i = 0; i < indecs.size(); ++i) {
    if (std::find(mi.begin(), mi.end(), int(i)) != mi.end()) continue;
    if (!gen_membership(m, indecs[i])) continue;
    if (hom_dim(m, tau(indecs[i])) != 0) continue;
    mods.push_back(int(i));
  }
  std::sort(mods.begin(), mods.end());

  SttObject o;
  o.module_summands = mods;
  std::vector<Representation> ms, ps;
  for (int i : mods) ms.push_back(indecs[i]);
  for (int v = 0; v < n; ++v) {
    Representation p = indec_projective(a, v);
    if (hom_dim(p, m) == 0) {
      o.proj_verts.push_back(v);
      ps.push_back(std::move(p));
    }
  }
  o.m = ms.empty() ? zero_rep(a) : direct_sum(a, ms);
  o.p = ps.empty() ? zero_rep(a) : direct_sum(a, ps);

  if (o.size() != n) throw std::runtime_error("co-Bongartz completion invalid");
  Representation tm = tau(o.m);
  if (hom_dim(o.m, tm) != 0 || hom_dim(o.p, o.m) != 0)
    throw std::runtime_error("co-Bongartz completion invalid");
  return o;
}

SplitParts split_projective_split(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  SplitParts out{zero_rep(a), zero_rep(a), {}};
  if (m.is_zero()) return out;
  Decomposition d = decompose(m);
  const int k = int(d.summands.size());

  auto generates = [&](unsigned mask) {
    std::vector<Representation> gens;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i))
        for (int c = 0; c < d.summands[i].second; ++c) gens.push_back(d.summands[i].first);
    Representation g = gens.empty() ? zero_rep(a) : direct_sum(a, gens);
    for (int i = 0; i < k; ++i)
      if (!(mask & (1u << i)) && !gen_membership(g, d.summands[i].first)) return false;
    return true;
  };

  std::vector<unsigned> minimal;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (!generates(mask)) continue;
    bool is_min = true;
    for (int i = 0; i < k && is_min; ++i)
      if ((mask & (1u << i)) && generates(mask & ~(1u << i))) is_min = false;
    if (is_min) minimal.push_back(mask);
  }
  if (minimal.size() != 1) throw std::runtime_error("minimal generating subset not unique");

  std::vector<Representation> sp, nsp;
  for (int i = 0; i < k; ++i) {
    auto& [rep, mult] = d.summands[i];
    for (int c = 0; c < mult; ++c) {
      if (minimal[0] & (1u << i))
        sp.push_back(rep);
      else
        nsp.push_back(rep);
    }
    if (minimal[0] & (1u << i)) out.split_idx.push_back(i);
  }
  if (!sp.empty()) out.split = direct_sum(a, sp);
  if (!nsp.empty()) out.non_split = direct_sum(a, nsp);
  return out;
}

bool g_vector_reduction_check(const AlgebraPtr& lam) {
  if (!lam->tensor) throw std::runtime_error("not a tensor algebra");
  auto collect = [](const std::vector<Representation>& mods) {
    std::vector<std::vector<long long>> gs;
    for (const auto& m : mods) gs.push_back(g_vector(m).coords);
    std::sort(gs.begin(), gs.end());
    return gs;
  };
  return collect(indec_tau_rigid(lam)) == collect(indec_tau_rigid(lam->tensor->base_quiver));
}

}  // namespace taucat

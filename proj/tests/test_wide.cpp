#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "taucat/wide.hpp"

using namespace taucat;

namespace {

Quiver a2_quiver() {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  return q;
}

Quiver a3_quiver() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  return q;
}

AlgebraPtr ka2() { return build_algebra(a2_quiver(), {}, 2); }
AlgebraPtr ka3() { return build_algebra(a3_quiver(), {}, 3); }
AlgebraPtr a3rad2() { return build_algebra(a3_quiver(), {{{Scalar(1), {0, 1}}}}, 2); }

AlgebraPtr rxy() {
  Quiver q;
  q.vertices = {"*"};
  q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  return build_algebra(q,
                       {{{Scalar(1), {0, 0}}},
                        {{Scalar(1), {1, 1}}},
                        {{Scalar(1), {0, 1}}, {Scalar(-1), {1, 0}}}},
                       3);
}

AlgebraPtr dual_numbers() {
  Quiver q;
  q.vertices = {"*"};
  q.arrows = {{"x", 0, 0}};
  return build_algebra(q, {{{Scalar(1), {0, 0}}}}, 2);
}

AlgebraPtr example7() { return tensor_construction(rxy(), a2_quiver()); }
AlgebraPtr a2_dual() { return tensor_construction(dual_numbers(), a2_quiver()); }

SupportPair mpair(const Representation& m) { return {m, zero_rep(m.algebra)}; }
SupportPair ppair(const Representation& p) { return {zero_rep(p.algebra), p}; }
SupportPair zpair(const AlgebraPtr& a) { return {zero_rep(a), zero_rep(a)}; }

SupportPair as_pair(const SignedObject& v) {
  return v.shifted ? ppair(v.m) : mpair(v.m);
}

SupportPair join(const SupportPair& u, const SignedObject& v) {
  const AlgebraPtr& a = v.m.algebra;
  SupportPair out = u;
  if (v.shifted)
    out.p = u.p.is_zero() ? v.m : direct_sum(a, {u.p, v.m});
  else
    out.m = u.m.is_zero() ? v.m : direct_sum(a, {u.m, v.m});
  return out;
}

bool same_signed(const SignedObject& x, const SignedObject& y) {
  if (x.shifted != y.shifted || x.m.dims != y.m.dims) return false;
  return x.m.is_zero() || is_isomorphic(x.m, y.m).isomorphic;
}

bool contains_iso(const std::vector<SignedObject>& xs, const SignedObject& y) {
  for (const auto& x : xs)
    if (same_signed(x, y)) return true;
  return false;
}

}  // namespace

TEST_CASE("membership") {
  auto a = ka2();
  Representation p1 = indec_projective(a, 0), p2 = indec_projective(a, 1);
  Representation s1 = simple_rep(a, 0);

  // J(S1) = add P1, J(P1) = add P2
  CHECK(j_membership(mpair(s1), p1));
  CHECK_FALSE(j_membership(mpair(s1), p2));
  CHECK_FALSE(j_membership(mpair(s1), s1));
  CHECK(j_membership(mpair(p1), p2));
  CHECK_FALSE(j_membership(mpair(p1), p1));
  CHECK(j_membership(mpair(s1), zero_rep(a)));

  // shifted part: J(P[1]) kills the support of P
  CHECK(j_membership(ppair(p2), s1));
  CHECK_FALSE(j_membership(ppair(p2), p1));

  // membership transfers along the tensor construction
  auto lam = example7();
  AlgebraPtr kq = lam->tensor->base_quiver;
  std::vector<Representation> base = {indec_projective(kq, 0), indec_projective(kq, 1),
                                      simple_rep(kq, 0)};
  for (const auto& x : base)
    for (const auto& y : base)
      CHECK(j_membership(mpair(induction(lam, x)), induction(lam, y)) ==
            j_membership(mpair(x), y));
}

TEST_CASE("whole category reduction") {
  auto a = ka2();
  WidePtr w0 = jasso_reduction(a, zpair(a));
  CHECK(w0->gamma->n() == 2);
  CHECK(w0->gamma->dim() == 3);
  REQUIRE(w0->simples.size() == 2);
  CHECK(is_isomorphic(w0->simples[0], simple_rep(a, 1)).isomorphic);
  CHECK(is_isomorphic(w0->simples[1], simple_rep(a, 0)).isomorphic);

  auto lam = example7();
  WidePtr wl = jasso_reduction(lam, zpair(lam));
  CHECK(wl->gamma->dim() == lam->dim());
  CHECK(wl->gamma->n() == 2);
  REQUIRE(wl->simples.size() == 2);
  for (const auto& s : wl->simples) CHECK(s.total_dim() == 1);

  // G and its quasi-inverse are mutually inverse on objects
  Representation lp1 = indec_projective(lam, 0), lp2 = indec_projective(lam, 1);
  Representation li1 = induction(lam, simple_rep(lam->tensor->base_quiver, 0));
  std::vector<Representation> probes = {lp1, lp2, li1, simple_rep(lam, 0),
                                        direct_sum(lam, {lp2, li1}),
                                        direct_sum(lam, {lp1, simple_rep(lam, 1)})};
  for (const auto& x : probes) {
    Representation y = gamma_module(*wl, x);
    CHECK(is_isomorphic(f_inverse(*wl, y), x).isomorphic);
  }
}

TEST_CASE("reduced algebra structure") {
  auto lam = example7();
  AlgebraPtr kq = lam->tensor->base_quiver;
  Representation li1 = induction(lam, simple_rep(kq, 0));

  WidePtr w = jasso_reduction(lam, mpair(li1));
  CHECK(w->gamma->dim() == 4);
  CHECK(w->gamma->is_local());
  CHECK(w->gamma->is_commutative());
  REQUIRE(w->simples.size() == 1);
  CHECK(w->simples[0].dims == std::vector<int>{1, 1});
  CHECK(is_indecomposable(w->simples[0]).top_dim == 1);

  // the same reduction over the base has a one dimensional endomorphism ring,
  // and the tensor reduction scales it by dim R
  auto a = ka2();
  WidePtr wb = jasso_reduction(a, mpair(simple_rep(a, 0)));
  CHECK(wb->gamma->dim() == 1);
  CHECK(w->gamma->dim() == 4 * wb->gamma->dim());
  REQUIRE(wb->simples.size() == 1);
  CHECK(is_isomorphic(wb->simples[0], indec_projective(a, 0)).isomorphic);

  // the vertex-2 simple belongs to the other reduction
  WidePtr wp = jasso_reduction(lam, mpair(indec_projective(lam, 0)));
  REQUIRE(wp->simples.size() == 1);
  CHECK(wp->simples[0].dims == std::vector<int>{0, 1});

  // smaller local ring, same shape
  auto lam2 = a2_dual();
  WidePtr w2 = jasso_reduction(lam2, mpair(induction(lam2, simple_rep(lam2->tensor->base_quiver, 0))));
  CHECK(w2->gamma->dim() == 2);
  CHECK(w2->gamma->is_local());

  // endomorphism classes multiply opposite to composition
  CHECK(gamma_class(*w, identity_morphism(w->b)) == w->gamma->unit());
  for (const auto& f : w->end_basis)
    for (const auto& g : w->end_basis) {
      AlgElem lhs = gamma_class(*w, compose(g, f));
      AlgElem rhs = w->gamma->multiply(gamma_class(*w, f), gamma_class(*w, g));
      CHECK(lhs == rhs);
    }

  // a module pair and the matching shifted pair cut out the same subcategory
  auto p2 = indec_projective(a, 1);
  CHECK(same_wide(*jasso_reduction(a, mpair(p2)), *jasso_reduction(a, ppair(p2))));

  // complete pairs reduce to the zero algebra
  WidePtr wc = jasso_reduction(a, mpair(free_module(a)));
  CHECK(wc->gamma->dim() == 0);
  CHECK(wc->simples.empty());
}

TEST_CASE("lift and round trip") {
  auto a = ka2();
  WidePtr w = jasso_reduction(a, mpair(simple_rep(a, 0)));
  // the unique simple of J(S1) lifts to P1
  Representation lift = f_inverse(*w, simple_rep(w->gamma, 0));
  CHECK(is_isomorphic(lift, indec_projective(a, 0)).isomorphic);

  CHECK_THROWS_WITH(gamma_module(*w, simple_rep(a, 0)), "not in subcategory");
  CHECK_THROWS_WITH(gamma_module(*w, indec_projective(a, 1)), "not in subcategory");

  auto lam = example7();
  Representation li1 = induction(lam, simple_rep(lam->tensor->base_quiver, 0));
  WidePtr wl = jasso_reduction(lam, mpair(li1));
  for (const auto& x :
       {wl->simples[0], indec_projective(lam, 0),
        direct_sum(lam, {wl->simples[0], indec_projective(lam, 0)})}) {
    Representation y = gamma_module(*wl, x);
    CHECK(is_isomorphic(f_inverse(*wl, y), x).isomorphic);
  }
}

TEST_CASE("homological invariants in the subcategory") {
  auto a = a3rad2();
  std::vector<Representation> cands = {indec_projective(a, 0), indec_projective(a, 1),
                                       indec_projective(a, 2), simple_rep(a, 0),
                                       simple_rep(a, 1)};
  Representation s1 = simple_rep(a, 0), s3 = simple_rep(a, 2);

  // ambient values
  PdResult amb = pd_capped(s1);
  CHECK(amb.pd == 2);
  CHECK_FALSE(amb.capped);
  CHECK(ext_dim(s1, s3, 2) == 1);

  // inside J(P3[1]) the relation disappears and S(1) has projective dimension 1
  WidePtr w1 = jasso_reduction(a, ppair(indec_projective(a, 2)));
  PdResult in1 = pd_in_wide(s1, *w1);
  CHECK(in1.pd == 1);
  CHECK_FALSE(in1.capped);

  // inside J(P2) everything is semisimple and the extension dies
  WidePtr w2 = jasso_reduction(a, mpair(indec_projective(a, 1)), cands);
  CHECK(w2->gamma->n() == 2);
  CHECK(ext_in_wide(*w2, s1, s3, 2) == 0);
  PdResult in2 = pd_in_wide(s1, *w2);
  CHECK(in2.pd == 0);
  CHECK_THROWS_WITH(pd_in_wide(simple_rep(a, 1), *w2), "not in subcategory");

  // reduction by nothing changes nothing
  auto b = ka2();
  WidePtr w0 = jasso_reduction(b, zpair(b));
  for (const auto& x : {indec_projective(b, 0), indec_projective(b, 1), simple_rep(b, 0)}) {
    PdResult direct = pd_capped(x);
    PdResult through = pd_in_wide(x, *w0);
    CHECK(direct.pd == through.pd);
    CHECK(direct.capped == through.capped);
  }
}

TEST_CASE("translate in the subcategory") {
  auto lam = a2_dual();
  AlgebraPtr kq = lam->tensor->base_quiver;
  Representation lp2 = indec_projective(lam, 1);
  Representation li1 = induction(lam, simple_rep(kq, 0));

  // whole category: the relative translate is the plain one
  WidePtr w0 = jasso_reduction(lam, zpair(lam));
  CHECK(is_isomorphic(tau_in_wide(*w0, li1), lp2).isomorphic);

  // and it matches the base computation under induction
  AlgebraPtr b = kq;
  WidePtr wb0 = jasso_reduction(b, zpair(b));
  Representation base_tau = tau_in_wide(*wb0, simple_rep(b, 0));
  CHECK(is_isomorphic(induction(lam, base_tau), lp2).isomorphic);

  // a proper subcategory with a nonzero internal translate: J(P2) over the
  // dual-number tensor algebra is module-equivalent to k[x]/(x^2)
  WidePtr w = jasso_reduction(lam, mpair(lp2));
  Representation s1 = simple_rep(lam, 0);
  CHECK(is_isomorphic(tau_in_wide(*w, s1), s1).isomorphic);
  CHECK(tau_in_wide(*w, li1).is_zero());

  // base side: J(P2) over the path algebra is semisimple, translate vanishes
  WidePtr wb = jasso_reduction(b, mpair(indec_projective(b, 1)));
  CHECK(tau_in_wide(*wb, simple_rep(b, 0)).is_zero());
}

TEST_CASE("epsilon tables") {
  auto a = ka2();
  Representation p1 = indec_projective(a, 0), p2 = indec_projective(a, 1);
  Representation s1 = simple_rep(a, 0);

  // without a reduction nothing moves
  for (const auto& v : {SignedObject{p1, false}, SignedObject{s1, false},
                        SignedObject{p2, true}}) {
    SignedObject e = epsilon(zpair(a), v);
    CHECK(same_signed(e, v));
  }

  // pure shift: modules pass through, shifted projectives get cut down
  CHECK(same_signed(epsilon(ppair(p1), {p2, false}), {p2, false}));
  CHECK(same_signed(epsilon(ppair(p1), {p2, true}), {p2, true}));
  CHECK(same_signed(epsilon(ppair(p2), {s1, false}), {s1, false}));
  CHECK(same_signed(epsilon(ppair(p2), {p1, true}), {s1, true}));

  // module reductions
  CHECK(same_signed(epsilon(mpair(s1), {p1, false}), {p1, false}));
  CHECK(same_signed(epsilon(mpair(s1), {p2, true}), {p1, true}));
  CHECK(same_signed(epsilon(mpair(p1), {p2, false}), {p2, false}));
  CHECK(same_signed(epsilon(mpair(p1), {s1, false}), {p2, true}));
  CHECK(same_signed(epsilon(mpair(p2), {p1, false}), {s1, false}));
  CHECK(same_signed(epsilon(mpair(p2), {p1, true}), {s1, true}));

  // incompatible inputs are refused
  CHECK_THROWS_WITH(epsilon(mpair(s1), {s1, false}), "not jointly rigid");
  CHECK_THROWS_WITH(epsilon(mpair(p1), {p1, true}), "not jointly rigid");
  CHECK_THROWS_WITH(epsilon(mpair(p2), {s1, false}), "not jointly rigid");

  // a mixed pair over the three-vertex quiver routes through the quotient
  auto c = ka3();
  Representation cs2 = simple_rep(c, 1), cp3 = indec_projective(c, 2);
  Representation ci2 = indec_injective(c, 1), cs1 = simple_rep(c, 0);
  Representation cp1 = indec_projective(c, 0);
  SupportPair mixed{cs2, cp3};
  CHECK(same_signed(epsilon(mixed, {ci2, false}), {cs1, false}));
  CHECK(same_signed(epsilon(mixed, {cp1, true}), {cs1, true}));
}

TEST_CASE("epsilon is a bijection with computable inverse") {
  auto a = ka2();
  Representation p1 = indec_projective(a, 0), p2 = indec_projective(a, 1);
  Representation s1 = simple_rep(a, 0);
  std::vector<SignedObject> universe = {{p1, false}, {p2, false}, {s1, false},
                                        {p1, true},  {p2, true}};

  std::vector<std::pair<SupportPair, size_t>> setups = {
      {zpair(a), 5},     {mpair(s1), 2}, {mpair(p1), 2}, {mpair(p2), 2},
      {ppair(p1), 2},    {ppair(p2), 2}};
  for (const auto& [u, expect] : setups) {
    std::vector<SignedObject> images;
    for (const auto& v : universe) {
      SignedObject e;
      try {
        e = epsilon(u, v);
      } catch (const std::runtime_error&) {
        continue;
      }
      CHECK_FALSE(contains_iso(images, e));  // injective
      images.push_back(e);
      CHECK(same_signed(epsilon_inverse(u, e), v));  // left inverse
    }
    CHECK(images.size() == expect);
  }

  // nothing is compatible with a complete pair
  CHECK_THROWS_WITH(epsilon_inverse(mpair(free_module(a)), {p1, false}), "no preimage");

  // tensor side round trip
  auto lam = example7();
  Representation li1 = induction(lam, simple_rep(lam->tensor->base_quiver, 0));
  Representation lp1 = indec_projective(lam, 0), lp2 = indec_projective(lam, 1);
  std::vector<SignedObject> lu = {{lp1, false}, {lp2, false}, {li1, false},
                                  {lp1, true},  {lp2, true}};
  size_t hits = 0;
  for (const auto& v : lu) {
    SignedObject e;
    try {
      e = epsilon(mpair(li1), v);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++hits;
    CHECK(same_signed(epsilon_inverse(mpair(li1), e), v));
  }
  CHECK(hits == 2);
}

TEST_CASE("epsilon respects induction") {
  auto lam = a2_dual();
  AlgebraPtr a = lam->tensor->base_quiver;
  Representation p1 = indec_projective(a, 0), p2 = indec_projective(a, 1);
  Representation s1 = simple_rep(a, 0);
  std::vector<SignedObject> universe = {{p1, false}, {p2, false}, {s1, false},
                                        {p1, true},  {p2, true}};
  std::vector<SupportPair> setups = {zpair(a),  mpair(s1), mpair(p1),
                                     mpair(p2), ppair(p1), ppair(p2)};

  auto ind_pair = [&](const SupportPair& u) {
    SupportPair out{zero_rep(lam), zero_rep(lam)};
    if (!u.m.is_zero()) out.m = induction(lam, u.m);
    if (!u.p.is_zero()) out.p = induction(lam, u.p);
    return out;
  };

  int checked = 0;
  for (const auto& u : setups)
    for (const auto& v : universe) {
      SignedObject e;
      try {
        e = epsilon(u, v);
      } catch (const std::runtime_error&) {
        continue;
      }
      SignedObject el = epsilon(ind_pair(u), {induction(lam, v.m), v.shifted});
      CHECK(el.shifted == e.shifted);
      CHECK(is_isomorphic(el.m, induction(lam, e.m)).isomorphic);
      ++checked;
    }
  CHECK(checked == 15);
}

TEST_CASE("composition of reductions") {
  // reducing in two steps through the subcategory agrees with reducing at once
  auto a = ka2();
  {
    Representation p1 = indec_projective(a, 0), p2 = indec_projective(a, 1);
    Representation s1 = simple_rep(a, 0);
    std::vector<SignedObject> universe = {{p1, false}, {p2, false}, {s1, false},
                                          {p1, true},  {p2, true}};
    WidePtr w0 = jasso_reduction(a, zpair(a));
    for (const auto& v : universe)
      for (const auto& t : universe) {
        SignedObject direct;
        try {
          direct = epsilon(as_pair(v), t);
        } catch (const std::runtime_error&) {
          continue;
        }
        SignedObject through = epsilon_in_wide(*w0, as_pair(v), t);
        CHECK(same_signed(direct, through));
      }
  }

  auto c = ka3();
  std::vector<SignedObject> universe;
  for (int v = 0; v < 3; ++v) universe.push_back({indec_projective(c, v), false});
  for (int v = 0; v < 3; ++v) universe.push_back({simple_rep(c, v), false});
  universe.push_back({indec_injective(c, 1), false});
  for (int v = 0; v < 3; ++v) universe.push_back({indec_projective(c, v), true});

  int checked = 0;
  for (const auto& x : universe) {
    SupportPair u1 = as_pair(x);
    WidePtr w1;
    try {
      w1 = jasso_reduction(c, u1);
    } catch (const std::runtime_error&) {
      continue;
    }
    for (const auto& y : universe) {
      SignedObject vred;
      try {
        vred = epsilon(u1, y);
      } catch (const std::runtime_error&) {
        continue;
      }
      SupportPair u2 = join(u1, y);
      for (const auto& t : universe) {
        SignedObject lhs;
        try {
          lhs = epsilon(u2, t);
        } catch (const std::runtime_error&) {
          continue;
        }
        SignedObject tred = epsilon(u1, t);
        SignedObject rhs = epsilon_in_wide(*w1, as_pair(vred), tred);
        CHECK(same_signed(lhs, rhs));
        ++checked;
      }
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("two descriptions of the same subcategory") {
  auto c = ka3();
  // the six indecomposables, with S3 = P3 listed once
  std::vector<Representation> indecs;
  for (int v = 0; v < 3; ++v) indecs.push_back(indec_projective(c, v));
  for (int v = 0; v < 2; ++v) indecs.push_back(simple_rep(c, v));
  indecs.push_back(indec_injective(c, 1));

  int checked = 0;
  for (const auto& m : indecs) {
    if (!is_indecomposable(m).indecomposable) continue;
    for (int v = 0; v < 3; ++v) {
      Representation pv = indec_projective(c, v);
      if (hom_dim(pv, m) != 0) continue;
      // mixed pair (M, P[1]) versus the module pair (P ⊕ V) with f_P(V) = M
      SupportPair mixed{m, pv};
      SignedObject vmod = epsilon_inverse(mpair(pv), {m, false});
      CHECK_FALSE(vmod.shifted);
      SupportPair modonly{direct_sum(c, {pv, vmod.m}), zero_rep(c)};
      CHECK(same_wide(*jasso_reduction(c, mixed), *jasso_reduction(c, modonly)));
      ++checked;
    }
  }
  CHECK(checked == 8);

  // hand-checked instance: J(S2 ⊕ P3[1]) has the single simple S1
  WidePtr w = jasso_reduction(c, {simple_rep(c, 1), indec_projective(c, 2)});
  REQUIRE(w->simples.size() == 1);
  CHECK(is_isomorphic(w->simples[0], simple_rep(c, 0)).isomorphic);
}

TEST_CASE("left subcategory of a torsion class") {
  auto a = ka2();
  Representation p1 = indec_projective(a, 0), p2 = indec_projective(a, 1);
  Representation s1 = simple_rep(a, 0);

  // Gen(P1 ⊕ S1) = Gen P1, and only S1 survives the split-projective cut
  SttObject t1{direct_sum(a, {p1, s1}), zero_rep(a), {}, {}};
  CHECK(same_wide(*w_left(t1), *jasso_reduction(a, mpair(s1))));

  // the whole module category comes from the free module
  SttObject t2{free_module(a), zero_rep(a), {}, {}};
  CHECK(same_wide(*w_left(t2), *jasso_reduction(a, zpair(a))));

  // the zero torsion class
  SttObject t3{zero_rep(a), free_module(a), {}, {}};
  CHECK(w_left(t3)->simples.empty());

  // one-sided case: Gen(P2) with P1 shifted away
  SttObject t4{p2, p1, {}, {}};
  WidePtr w4 = w_left(t4);
  REQUIRE(w4->simples.size() == 1);
  CHECK(is_isomorphic(w4->simples[0], p2).isomorphic);
}

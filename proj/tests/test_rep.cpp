#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taucat/rep.hpp"

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

}  // namespace

TEST_CASE("projectives, injectives, simples over A2") {
  auto a = ka2();
  auto p1 = indec_projective(a, 0);
  auto p2 = indec_projective(a, 1);
  auto s1 = simple_rep(a, 0);
  auto s2 = simple_rep(a, 1);
  auto i1 = indec_injective(a, 0);
  auto i2 = indec_injective(a, 1);
  CHECK(p1.dims == std::vector<int>{1, 1});
  CHECK(p2.dims == std::vector<int>{0, 1});
  CHECK(i1.dims == std::vector<int>{1, 0});
  CHECK(i2.dims == std::vector<int>{1, 1});
  CHECK(s1.dims == std::vector<int>{1, 0});
  CHECK(p1.arrow_matrix(0).at(0, 0) == 1);

  CHECK(hom_dim(p1, s1) == 1);
  CHECK(hom_dim(p2, s1) == 0);
  CHECK(hom_dim(s1, p1) == 0);
  CHECK(hom_dim(p2, p1) == 1);
  CHECK(hom_dim(p1, p2) == 0);
  CHECK(hom_dim(p1, p1) == 1);
  CHECK(is_isomorphic(p2, s2).isomorphic);
  CHECK(is_isomorphic(i1, s1).isomorphic);
  CHECK(is_isomorphic(i2, p1).isomorphic);
  CHECK_FALSE(is_isomorphic(p1, s1).isomorphic);
  CHECK(is_isomorphic(p1, s1).certificate == "dimension vectors differ");
}

TEST_CASE("rep validation catches bad matrices") {
  auto a = build_algebra(a3_quiver(), {{{Scalar(1), {0, 1}}}}, 2);
  // composite b∘a must vanish; identity maps violate that
  Mat one = Mat::identity(1);
  CHECK_THROWS_WITH(rep_from_arrow_maps(a, {1, 1, 1}, {one, one}), "relations violated");
  // a valid rep: kill the second arrow
  auto ok = rep_from_arrow_maps(a, {1, 1, 1}, {one, Mat(1, 1)});
  CHECK(ok.total_dim() == 3);
  CHECK_THROWS_WITH(rep_from_arrow_maps(a, {1, 1}, {one, one}), "shape mismatch");
}

TEST_CASE("hom over different algebras is rejected") {
  auto a = ka2();
  auto b = ka2();
  CHECK_THROWS_WITH(hom_dim(simple_rep(a, 0), simple_rep(b, 0)), "algebra mismatch");
}

TEST_CASE("indecomposability") {
  auto a = ka2();
  auto p1 = indec_projective(a, 0);
  auto s1 = simple_rep(a, 0);
  auto r = is_indecomposable(p1);
  CHECK(r.indecomposable);
  CHECK(r.absolutely);
  CHECK(r.end_dim == 1);
  auto sum = direct_sum(a, {p1, s1});
  auto r2 = is_indecomposable(sum);
  CHECK_FALSE(r2.indecomposable);
  CHECK_THROWS_WITH(is_indecomposable(zero_rep(a)), "zero module");
}

TEST_CASE("decompose with multiplicities") {
  auto a = ka2();
  auto p1 = indec_projective(a, 0);
  auto s1 = simple_rep(a, 0);
  auto m = direct_sum(a, {p1, s1, p1});
  Decomposition d = decompose(m);
  REQUIRE(d.summands.size() == 2);
  CHECK(d.summands[0].first.dims == std::vector<int>{1, 1});
  CHECK(d.summands[0].second == 2);
  CHECK(d.summands[1].first.dims == std::vector<int>{1, 0});
  CHECK(d.summands[1].second == 1);
  // inclusions really land in m and are morphisms
  for (size_t g = 0; g < d.summands.size(); ++g)
    for (const auto& inc : d.inclusions[g])
      for (size_t v = 0; v < m.dims.size(); ++v)
        CHECK(inc.comps[v].rows() == m.dims[v]);

  CHECK(decompose(zero_rep(a)).summands.empty());
}

TEST_CASE("decompose a scrambled direct sum") {
  auto a = ka2();
  // dims (2,2): arrow acts by an invertible non-diagonal matrix => P1 ⊕ P1
  Mat f(2, 2);
  f.at(0, 0) = 1;
  f.at(0, 1) = 3;
  f.at(1, 0) = 2;
  f.at(1, 1) = 7;
  auto m = rep_from_arrow_maps(a, {2, 2}, {f});
  Decomposition d = decompose(m);
  REQUIRE(d.summands.size() == 1);
  CHECK(d.summands[0].second == 2);
  CHECK(is_isomorphic(d.summands[0].first, indec_projective(a, 0)).isomorphic);

  // dims (2,2) with rank-1 arrow => P1 ⊕ S1 ⊕ S2
  Mat g(2, 2);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  auto m2 = rep_from_arrow_maps(a, {2, 2}, {g});
  Decomposition d2 = decompose(m2);
  int total = 0;
  for (const auto& [rep, mult] : d2.summands) total += mult;
  CHECK(total == 3);
  CHECK(d2.summands.size() == 3);
}

TEST_CASE("iso detection via decompositions") {
  auto a = ka2();
  auto p1 = indec_projective(a, 0);
  auto s1 = simple_rep(a, 0);
  auto s2 = simple_rep(a, 1);
  auto m = direct_sum(a, {p1, s1});
  auto n = direct_sum(a, {s1, p1});
  auto iso = is_isomorphic(m, n);
  CHECK(iso.isomorphic);
  // sanity: the witness is invertible
  CHECK(is_invertible(iso.witness));
  auto bad = is_isomorphic(direct_sum(a, {s1, s2}), p1);
  CHECK_FALSE(bad.isomorphic);
}

TEST_CASE("sub and quotient") {
  auto a = ka2();
  auto p1 = indec_projective(a, 0);
  // socle of P1: the span of the vertex-2 component
  std::vector<Mat> soc = {Mat(1, 0), Mat::identity(1)};
  SubQuot sub = sub_representation(p1, soc);
  CHECK(sub.rep.dims == std::vector<int>{0, 1});
  CHECK(is_isomorphic(sub.rep, simple_rep(a, 1)).isomorphic);
  SubQuot quot = quotient_representation(p1, soc);
  CHECK(quot.rep.dims == std::vector<int>{1, 0});
  CHECK(is_isomorphic(quot.rep, simple_rep(a, 0)).isomorphic);
  // the vertex-1 span is not closed under the action
  std::vector<Mat> bad = {Mat::identity(1), Mat(1, 0)};
  CHECK_THROWS_WITH(sub_representation(p1, bad), "submodule not closed");
}

TEST_CASE("kernel and image of morphisms") {
  auto a = ka2();
  auto p1 = indec_projective(a, 0);
  auto s1 = simple_rep(a, 0);
  auto maps = hom_basis(p1, s1);
  REQUIRE(maps.size() == 1);
  auto img = morphism_image(p1, s1, maps[0]);
  CHECK(img[0].cols() == 1);
  CHECK(img[1].cols() == 0);
  auto ker = morphism_kernel(p1, s1, maps[0]);
  SubQuot k = sub_representation(p1, ker);
  CHECK(is_isomorphic(k.rep, simple_rep(a, 1)).isomorphic);
}

TEST_CASE("dualize over the opposite algebra") {
  auto a = ka2();
  auto op = opposite(a);
  auto dp1 = dualize(indec_projective(a, 0), op);
  CHECK(dp1.dims == std::vector<int>{1, 1});
  CHECK(is_isomorphic(dp1, indec_injective(op, 0)).isomorphic);
  auto ds1 = dualize(simple_rep(a, 0), op);
  CHECK(is_isomorphic(ds1, simple_rep(op, 0)).isomorphic);
}

TEST_CASE("induction and restriction for the running tensor algebra") {
  auto r = rxy();
  auto lam = tensor_construction(r, a2_quiver());
  const auto& kq = lam->tensor->base_quiver;

  auto s1 = simple_rep(kq, 0);
  auto p1 = indec_projective(kq, 0);
  auto p2 = indec_projective(kq, 1);

  auto is1 = induction(lam, s1);
  CHECK(is1.dims == std::vector<int>{4, 0});
  CHECK(is_indecomposable(is1).indecomposable);
  // Λ ⊗ S1 is the big injective at vertex 1
  CHECK(is_isomorphic(is1, indec_injective(lam, 0)).isomorphic);

  auto ip1 = induction(lam, p1);
  CHECK(ip1.dims == std::vector<int>{4, 4});
  CHECK(is_isomorphic(ip1, indec_projective(lam, 0)).isomorphic);
  auto ip2 = induction(lam, p2);
  CHECK(ip2.dims == std::vector<int>{0, 4});
  CHECK(is_isomorphic(ip2, indec_projective(lam, 1)).isomorphic);

  // restriction splits into dim R copies
  auto res = restriction(is1);
  Decomposition d = decompose(res);
  REQUIRE(d.summands.size() == 1);
  CHECK(d.summands[0].second == 4);
  CHECK(is_isomorphic(d.summands[0].first, s1).isomorphic);

  auto resp = restriction(ip1);
  Decomposition dp = decompose(resp);
  REQUIRE(dp.summands.size() == 1);
  CHECK(dp.summands[0].second == 4);
  CHECK(is_isomorphic(dp.summands[0].first, p1).isomorphic);

  // hom dimensions multiply by dim R under induction
  CHECK(hom_dim(ip1, is1) == 4 * hom_dim(p1, s1));
  CHECK(hom_dim(ip1, ip2) == 4 * hom_dim(p1, p2));
  CHECK(hom_dim(ip2, ip1) == 4 * hom_dim(p2, p1));

  // adjunction: Hom_Λ(Λ⊗M, N) = Hom_kQ(M, res N)
  CHECK(hom_dim(ip1, is1) == hom_dim(p1, restriction(is1)));
  CHECK(hom_dim(ip2, ip1) == hom_dim(p2, restriction(ip1)));

  // induction is additive and preserves indecomposability here
  auto both = induction(lam, direct_sum(kq, {s1, p2}));
  Decomposition db = decompose(both);
  CHECK(db.summands.size() == 2);
}

TEST_CASE("free module decomposes into the projectives") {
  auto a = build_algebra(a3_quiver(), {}, 3);
  Decomposition d = decompose(free_module(a));
  CHECK(d.summands.size() == 3);
  for (const auto& [rep, mult] : d.summands) CHECK(mult == 1);
}

#include "taucat/fixtures.hpp"

#include <stdexcept>

namespace taucat {

namespace {

Quiver linear_quiver(int n) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (int v = 0; v + 1 < n; ++v)
    q.arrows.push_back({std::string(1, char('a' + v)), v, v + 1});
  return q;
}

AlgebraPtr point() {
  Quiver q;
  q.vertices = {"*"};
  return build_algebra(q, {}, 2);
}

AlgebraPtr dual_numbers() {
  Quiver q;
  q.vertices = {"*"};
  q.arrows = {{"x", 0, 0}};
  return build_algebra(q, {{{Scalar(1), {0, 0}}}}, 2);
}

AlgebraPtr r_xy() {
  Quiver q;
  q.vertices = {"*"};
  q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  // x^2, y^2, xy - yx
  return build_algebra(q,
                       {{{Scalar(1), {0, 0}}},
                        {{Scalar(1), {1, 1}}},
                        {{Scalar(1), {0, 1}}, {Scalar(-1), {1, 0}}}},
                       3);
}

AlgebraPtr a3_rad2() {
  return build_algebra(linear_quiver(3), {{{Scalar(1), {0, 1}}}}, 2);
}

}  // namespace

AlgebraPtr fixture(const std::string& name) {
  if (name == "point") return point();
  if (name == "a2") return build_algebra(linear_quiver(2), {}, 2);
  if (name == "a3") return build_algebra(linear_quiver(3), {}, 3);
  if (name == "a3-rad2") return a3_rad2();
  if (name == "dual-numbers") return dual_numbers();
  if (name == "r-xy") return r_xy();
  if (name == "example-7") return tensor_construction(r_xy(), linear_quiver(2));
  if (name == "a2-dual-numbers") return tensor_construction(dual_numbers(), linear_quiver(2));
  if (name == "a3-dual-numbers") return tensor_construction(dual_numbers(), linear_quiver(3));
  throw std::runtime_error("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"point",      "a2",   "a3",        "a3-rad2",         "dual-numbers",
          "r-xy",       "example-7", "a2-dual-numbers", "a3-dual-numbers"};
}

}  // namespace taucat

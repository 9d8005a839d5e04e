#pragma once

#include <string>
#include <vector>

#include "taucat/algebra.hpp"

namespace taucat {

// Built-in example algebras:
//   point            k (one vertex, no arrows)
//   a2               path algebra of 1 -> 2
//   a3               path algebra of 1 -> 2 -> 3
//   a3-rad2          k(1 -> 2 -> 3) / rad^2
//   dual-numbers     k[x]/(x^2)
//   r-xy             k[x,y]/(x^2, y^2, xy - yx)
//   example-7        r-xy tensor a2
//   a2-dual-numbers  dual-numbers tensor a2
//   a3-dual-numbers  dual-numbers tensor a3
// Throws "unknown fixture" for any other name.
AlgebraPtr fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace taucat

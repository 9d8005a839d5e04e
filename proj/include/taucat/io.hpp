#pragma once

#include <string>

#include "taucat/algebra.hpp"

namespace taucat {

// Parse a JSON algebra spec. Two shapes are accepted:
//
//   {"vertices": ["1","2"],
//    "arrows": [{"label":"a","src":"1","tgt":"2"}],
//    "relations": [[{"coeff":"1","path":["a","b"]}]],
//    "nilpotency_bound": 2}
//
//   {"local": <spec with one vertex>, "quiver": {"vertices":..., "arrows":...}}
//
// Arrow paths are written in traversal order (first arrow first), vertices are
// referenced by name, coefficients are exact integers or rational strings like
// "2/3". Unknown fields are rejected. Errors are thrown as "algebra spec: ...".
AlgebraPtr parse_algebra_spec(const std::string& text);

// Resolve a CLI algebra argument: an existing file is parsed as a spec,
// anything else must be a built-in fixture name.
AlgebraPtr load_algebra(const std::string& path_or_fixture);

}  // namespace taucat

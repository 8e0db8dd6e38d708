#pragma once

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// The 7-dimensional IDP counterexample: conv(e_1, ..., e_7,
/// (1,-1,-1,-1,-1,0,0), (-1,-1,0,0,0,-1,-1)).
Polytope theorem1_polytope();

/// The 12-dimensional IDP 0/1 counterexample with 15 vertices.
Polytope theorem2_polytope();

}  // namespace ehrhart

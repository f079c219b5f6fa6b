#pragma once

#include "dvc/groebner.hpp"
#include "dvc/poly.hpp"

#include <vector>

namespace dvc {

// The three variables a ternary form is read in.  Empty means "all variables
// of the ring", which then must have exactly three.
using FormVars = std::vector<int>;

// True iff a linear form over C divides f.  f must be a homogeneous cubic.
bool linear_factor_exists(const MultiPoly& f, FormVars vars = {});

// True iff l^2 divides f for some linear form l over C.  f homogeneous, degree >= 2.
bool square_linear_factor_exists(const MultiPoly& f, FormVars vars = {});

// For f of degree <= 3 with f(0) = 0: true iff f splits into two non-constant
// factors over C, i.e. (f = 0) has an irreducible component through 0 other than itself.
bool proper_component_through_origin(const MultiPoly& f, FormVars vars = {});

}  // namespace dvc

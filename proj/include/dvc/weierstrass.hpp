#pragma once

#include "dvc/change.hpp"
#include "dvc/poly.hpp"

namespace dvc {

struct SquareReduction {
    Jet reduced;               // pivot^2 + B(other variables)
    CoordinateChange change;   // pivot -> pivot - A/2
    Jet unit;                  // unit * (F o change) == reduced
};

struct WeierstrassDivision {
    MultiPoly quotient;   // a unit
    MultiPoly remainder;  // pivot-degree < k
};

// pivot^k = quotient * F + remainder at jet order `order`.  Requires the
// coefficient of pivot^k in F to be a unit and the lower pivot-coefficients
// of F to vanish at 0.
WeierstrassDivision weierstrass_divide(const MultiPoly& F, int pivot, int k, int order);

// Weierstrass division of pivot^2 by F followed by completing the square.
// Requires the coefficient of pivot^2 to be a unit and F, dF/dpivot to vanish at 0.
SquareReduction weierstrass_square_reduce(const Jet& F, int pivot, int order);

}  // namespace dvc

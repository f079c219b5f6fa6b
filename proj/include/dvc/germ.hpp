#pragma once

#include "dvc/change.hpp"
#include "dvc/poly.hpp"

#include <string>
#include <vector>

namespace dvc {

// Coordinates adapted to a smooth curve: the curve is {x_j = 0 : j in normal}
// and the remaining variable runs along it.
struct CurveFrame {
    Jet F;                    // the equation in frame coordinates, F o change
    CoordinateChange change;
    std::vector<int> normal;  // normal[k] carries the k-th curve generator
    int along = -1;
};

// A hypersurface germ (F = 0) at the origin of k^n with a smooth curve through
// the origin cut out by n - 1 generators.  n = 4 for threefolds, 3 for surfaces.
class Germ {
public:
    // Throws std::invalid_argument when the generators have dependent linear
    // parts, do not vanish at 0, or F does not vanish on the curve.
    Germ(const MultiPoly& F, std::vector<MultiPoly> curve, int order);

    const Jet& F() const { return F_; }
    const std::vector<MultiPoly>& curve() const { return curve_; }
    const VarList& vars() const { return F_.vars(); }
    int order() const { return F_.order(); }
    const CurveFrame& frame() const { return frame_; }
    // The curve generators are exactly the variables normal (in some order).
    bool curve_is_coordinate() const;

private:
    Jet F_;
    std::vector<MultiPoly> curve_;
    CurveFrame frame_;
};

using Germ3Fold = Germ;
using SurfaceGerm = Germ;

Germ parse_germ(const std::string& equation, const std::vector<std::string>& curve, const VarList& vars, int order);

}  // namespace dvc

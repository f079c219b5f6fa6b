#pragma once

#include "dvc/germ.hpp"
#include "dvc/groebner.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvc {

// One affine chart of the blow-up of the curve, in frame coordinates.  The
// chart keeps normal variable `chart` and substitutes x_j = x_j * x_chart for
// the other normal variables, so the exceptional divisor is {x_chart = 0}.
struct BlowupChart {
    int chart = -1;
    std::vector<std::string> substitutions;  // "x = x*t"
    MultiPoly total;                         // F after substitution
    MultiPoly strict;                        // total / x_chart^multiplicity
    int multiplicity = 0;
    int source_order = 0;                    // jet order of F
};

// Chart-local ideals of E1 (dominating the curve), E2 (over the origin) and L = E1 n E2.
struct ChartDivisors {
    PolyIdeal E1;
    std::optional<PolyIdeal> E2;
    std::optional<PolyIdeal> L;
    MultiPoly e1;  // E1 = (x_chart, e1)
};

// Preimage of the curve is E1 + d E2; d = 0 means E2 is absent.
struct ExceptionalDecomposition {
    int d = 0;
    std::vector<ChartDivisors> charts;
    bool e2_present() const { return d > 0; }
};

struct Blowup {
    CurveFrame frame;
    std::vector<BlowupChart> charts;
    ExceptionalDecomposition decomposition;
    const BlowupChart& chart_for(const std::string& var) const;
    const ChartDivisors& divisors_for(const std::string& var) const;
};

// Blow-up of the curve of a threefold (or surface) germ.  Throws
// std::invalid_argument when F vanishes to order > 1 along the curve.
Blowup blowup_curve(const Germ& g);
// Same computation for a germ in three variables with a two-generator curve;
// the result's d is the multiplicity of the exceptional curve E.
Blowup surface_blowup(const SurfaceGerm& s);

struct SingularLocusReport {
    enum class Verdict { Empty, Finite, PositiveDimensional, Undecided };
    Verdict verdict = Verdict::Undecided;
    int dimension = -1;                  // of Sing n locus; -1 when empty
    std::optional<PolyIdeal> witness;    // Groebner basis of the singular locus on the query locus
    std::string label() const;           // "empty", "finite", "positive-dimensional", "undecided"
};

// Dimension of V(G, dG) n V(locus).  The locus must lie on {G = 0}.
SingularLocusReport singular_locus_along(const MultiPoly& G, const PolyIdeal& locus, const GroebnerBudget& budget = {});

class UnsupportedRegime : public std::runtime_error {
public:
    explicit UnsupportedRegime(const std::string& what) : std::runtime_error(what) {}
};

// Blow-up of E1 inside one chart of Y, in the chart keeping the same exceptional coordinate.
struct QFactorialization {
    int chart = -1;                            // chart of Y that is blown up
    std::vector<std::string> substitutions;    // the second substitution, e.g. "y = y*t"
    MultiPoly Z;                               // chart equation of Z
    PolyIdeal C;                               // preimage of the chart origin
    SingularLocusReport along_L;               // Y along L
    SingularLocusReport along_C;               // Z along C
};

// Requires E1 = (x_chart, c * v) for a variable v in that chart and finitely
// many singular points of Y on L; otherwise throws UnsupportedRegime.
QFactorialization qfactorialize(const Blowup& b, int chart, const GroebnerBudget& budget = {});

// Coefficient of E2 in f^* S for the hypersurface section S = {h = 0} through
// the origin, h not vanishing on the curve.  Equals m_P(X) - 1.
int multiplicity_drop(const Germ& g, const MultiPoly& h);

}  // namespace dvc

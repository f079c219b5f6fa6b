#pragma once

#include "dvc/blowup.hpp"
#include "dvc/cycles.hpp"
#include "dvc/duval.hpp"
#include "dvc/factor.hpp"
#include "dvc/germ.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvc {

// A sampling run that did not settle, or a jet order that was too low.
class Inconclusive : public std::runtime_error {
public:
    explicit Inconclusive(const std::string& what) : std::runtime_error("inconclusive: " + what) {}
};

// The f3 criterion and the chart computation disagree.
class CrossCheckFailure : public std::logic_error {
public:
    explicit CrossCheckFailure(const std::string& what) : std::logic_error("cross-check failure: " + what) {}
};

struct SectionSample {
    std::vector<long> coefficients;  // one per curve generator
    MultiPoly hyperplane;            // the same hypersurface in the input coordinates
    Jet section;                     // after eliminating one normal variable
    std::vector<MultiPoly> section_curve;
    int along = -1;  // section variable running along the curve
    DuValType type;
    bool order_sufficient = false;
    std::optional<CurvePosition> position;
    int d = 0;
};

// Rank used to pick the most generic sample; smaller is more generic.
struct GenericityOrder {
    static int rank(const DuValType& t);
    static bool less(const DuValType& a, const DuValType& b) { return rank(a) < rank(b); }
};

struct SectionSearch {
    enum class Status { Found, NoDuValSection, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<SectionSample> best;
    std::vector<SectionSample> samples;
    int rounds = 0;
    bool square_test_allows_A = false;  // is_general_section_A on the germ
    std::string note;
};

struct SamplingBudget {
    int per_round = 6;
    int max_rounds = 4;
};

SectionSearch find_general_section(const Germ& g, const SamplingBudget& budget = {});

// Classifies one hyperplane section sum c_i X_i = 0 of the frame's normal variables.
SectionSample sample_section(const Germ& g, const std::vector<long>& coefficients);

// For the D5 case where d cannot tell FD_l from FD_r: compares the curve's
// tangent with the double line of the cubic term on the tangent plane.
CurvePosition tangent_position(const Jet& section, int along);

struct TangentCubic {
    MultiPoly f3;   // in the ring of F, free of the eliminated variable
    FormVars vars;  // the three variables f3 is read in
};

// Cubic term of F on the hyperplane {l = 0}, where l^2 spans the quadratic part.
// Empty when the quadratic part does not have rank one.
std::optional<TangentCubic> cubic_on_tangent_hyperplane(const Jet& F);

bool d4_section_exists(const Germ& g);

struct LiftedConstraint {
    CurvePosition::Kind position;
    std::optional<int> max_n;  // FD_l: general type is D_m with m <= max_n
    bool even_only = false;    // FD_r: general type is D_even
    std::string label() const;
};

LiftedConstraint lift_special_section(const SectionSample& special);

struct ChartVerdict {
    enum class Regime { Terminal, CanonicalOnly, Unsupported };
    Regime regime = Regime::Unsupported;
    std::string stratum;
    std::optional<QFactorialization> charts;
    std::string note;
    std::string label() const;  // "terminal-regime", "canonical-only-regime", "unsupported"
};

ChartVerdict verify_by_charts(const Germ& g, const std::optional<SectionSample>& hint = std::nullopt,
                              const GroebnerBudget& budget = {});

struct TerminalPayload {
    int index_min = 0;
    int index_max = 0;
    std::optional<int> point_count;  // higher index points, when the count is known
    std::string point_type;          // "cA", "cA_x", "cD"
    int generator_bound = 0;
};

struct CrossCheck {
    bool ran = false;
    std::string criterion;  // "terminal" or "canonical-only"
    std::string chart;
    bool agree = true;
};

struct ContractionVerdict {
    enum class Kind { NoDuValSection, CanonicalOnly, Terminal, UndeterminedByPaper };
    Kind kind = Kind::UndeterminedByPaper;
    std::string stratum;  // "A1 edge", "D4", "D6 FD_r", ...
    std::optional<SectionSample> section;
    std::optional<TerminalPayload> terminal;
    CrossCheck cross_check;
    std::vector<std::string> evidence;
    std::string label() const;  // "NoDuValSection", "CanonicalOnly", "Terminal", "UndeterminedByPaper"
};

ContractionVerdict decide_contraction(const Germ& g, const SamplingBudget& sampling = {},
                                      const GroebnerBudget& budget = {});

struct GeneratorCheck {
    bool holds = true;
    int failed_degree = 0;  // first d with I^(d) not generated in lower degrees
    std::vector<int> checked;
};

// Whether the symbolic Rees algebra of the curve is generated in degrees <= bound,
// checked up to d_max.  Throws BudgetExceeded.
GeneratorCheck check_generator_degrees(const Germ& g, int bound, int d_max, const GroebnerBudget& budget = {});

}  // namespace dvc

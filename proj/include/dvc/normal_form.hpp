#pragma once

#include "dvc/change.hpp"
#include "dvc/germ.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvc {

// Raised when a germ is not in the stratum a reduction was asked for.
class WrongStratum : public std::runtime_error {
public:
    explicit WrongStratum(const std::string& what) : std::runtime_error("wrong stratum: " + what) {}
};

enum class FormTag { D_FDl, D_FDl_n5plus, D_FDr_even, D_FDr_odd_a, D_FDr_odd_b, A3_middle };
std::string form_tag_name(FormTag tag);

// A monomial family that must not occur in the normal form.
struct ExcludedFamily {
    std::string name;  // e.g. "t*y^k"
    std::function<bool(Exponent)> hits;
};

struct NormalFormResult {
    FormTag tag;
    int n = 0;                // D_n (or 3 for the A3 form)
    Jet F_normal;
    CoordinateChange change;  // unit * (F o change) == F_normal
    Jet unit;
    std::vector<ExcludedFamily> excluded;
    std::optional<MultiPoly> f_le3;  // A3 middle: terms of degree <= 3 besides x^2 and y^2
};

// True iff unit * (F o change) == F_normal as jets.
bool certificate_holds(const MultiPoly& F, const NormalFormResult& r);
// Names of excluded families that do occur in F_normal (empty when all hold).
std::vector<std::string> excluded_violations(const NormalFormResult& r);

// q2 = a1 x^2 + a2 y^2 + a3 z^2 + a4 xy + a5 xz + a6 yz in its first three
// variables: true iff q2(by + cz, y, z) is a square for all b, c.
bool square_test_q2(const MultiPoly& q2);
// True iff the quadratic part of the general hyperplane section through the
// curve has rank >= 2, i.e. the general section is A_m.
bool is_general_section_A(const Germ& g);

// The germ must use the variables x, y, z, t.  FD_l targets need curve (x, z, t)
// and t = 0 section x^2 + y^2 z + c z^(n-1); FD_r targets need curve (x, y, t)
// and t = 0 section x^2 + y^2 z + b y z^m (n = 2m) or x^2 + y^2 z + b x z^m (n = 2m + 1).
NormalFormResult normalize(const Germ& g, FormTag target);

// Curve (x, y, t) with t = 0 section x^2 + c y^2 + 2 x z^2, or curve
// (x - z^2, y - z^2, t) with t = 0 section x y - z^4.
NormalFormResult normalize_A3_middle(const Germ& g);

}  // namespace dvc

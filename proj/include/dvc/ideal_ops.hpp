#pragma once

#include "dvc/groebner.hpp"

#include <optional>

namespace dvc {

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal ideal_power(const PolyIdeal& a, int d);
PolyIdeal maximal_ideal(const VarList& vars);

// Equality and inclusion of ideals via reduced grevlex bases.
bool ideal_subset(const PolyIdeal& a, const PolyIdeal& b, const GroebnerBudget& budget = {});
bool ideals_equal(const PolyIdeal& a, const PolyIdeal& b, const GroebnerBudget& budget = {});

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b, const GroebnerBudget& budget = {});
// I : f^infinity, by eliminating s from I + (1 - s f).
PolyIdeal saturate_by(const PolyIdeal& I, const MultiPoly& f, const GroebnerBudget& budget = {});
// I : J^infinity = intersection of I : g^infinity over the generators g of J.
PolyIdeal saturate(const PolyIdeal& I, const PolyIdeal& J, const GroebnerBudget& budget = {});

// d-th symbolic power of the curve ideal I in k[vars]/(F), computed as
// (I^d + (F)) : m^infinity and returned including F.  F absent means a smooth
// ambient.  When some variable g has I + (g) = m, every associated prime of
// I^d + (F) other than m avoids g, so the saturation by g alone is used.
PolyIdeal symbolic_power(const PolyIdeal& I, int d, const std::optional<MultiPoly>& F,
                         const GroebnerBudget& budget = {});

}  // namespace dvc

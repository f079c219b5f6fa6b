#pragma once
/*
 * Buchberger's algorithm with the sugar selection strategy and the
 * Gebauer-Moeller pair criteria.  Every run is bounded by a budget; running
 * out raises BudgetExceeded instead of returning a partial basis.
 */

#include "dvc/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvc {

enum class MonomialOrder { Lex, GrLex, GrevLex };

struct OrderSpec {
    MonomialOrder base = MonomialOrder::GrevLex;
    // When positive, variables [0, elim_block) form a first block compared by
    // graded reverse lex before anything else (an elimination order).
    int elim_block = 0;

    static OrderSpec lex() { return {MonomialOrder::Lex, 0}; }
    static OrderSpec grlex() { return {MonomialOrder::GrLex, 0}; }
    static OrderSpec grevlex() { return {MonomialOrder::GrevLex, 0}; }
    static OrderSpec eliminate(int k) { return {MonomialOrder::GrevLex, k}; }
    std::string name() const;
};

// -1, 0, 1 as a <, =, > b.
int compare(Exponent a, Exponent b, const OrderSpec& order, int nvars);

struct GroebnerBudget {
    std::size_t max_basis = 4000;
    int max_degree = 80;
    std::size_t max_pairs = 400000;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

class PolyIdeal {
public:
    PolyIdeal() = default;
    PolyIdeal(VarList vars, std::vector<MultiPoly> gens);

    const VarList& vars() const { return vars_; }
    const std::vector<MultiPoly>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

private:
    VarList vars_;
    std::vector<MultiPoly> gens_;
};

struct GroebnerStats {
    std::size_t pairs = 0;
    std::size_t reductions_to_zero = 0;
};

// Reduced, monic Groebner basis.
PolyIdeal groebner(const PolyIdeal& ideal, const OrderSpec& order = OrderSpec::grevlex(),
                   const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr);

Exponent leading_exponent(const MultiPoly& p, const OrderSpec& order);
Rational leading_coeff(const MultiPoly& p, const OrderSpec& order);

// Remainder of p on division by a basis (full reduction).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis, const OrderSpec& order);
MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const OrderSpec& order);

bool is_unit_ideal_basis(const PolyIdeal& basis);
// Krull dimension of k[vars]/I from the leading monomials of a Groebner basis; -1 for the unit ideal.
int dimension_from_basis(const PolyIdeal& basis, const OrderSpec& order);

bool ideal_contains(const PolyIdeal& basis, const MultiPoly& p, const OrderSpec& order);

// Solvable over C iff the reduced basis is not {1}.
bool has_common_zero(const PolyIdeal& system, const GroebnerBudget& budget = {});

}  // namespace dvc

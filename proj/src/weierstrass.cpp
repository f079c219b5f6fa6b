#include "dvc/weierstrass.hpp"

#include <stdexcept>

namespace dvc {

namespace {

// g = low + pivot^k * high with low of pivot-degree < k.
void split(const MultiPoly& g, int pivot, int k, MultiPoly& low, MultiPoly& high)
{
    low = MultiPoly(g.vars());
    high = MultiPoly(g.vars());
    for (const auto& [e, c] : g.terms()) {
        if (e[pivot] < k) {
            low.add_term(e, c);
        } else {
            Exponent f = e;
            f.set(pivot, e[pivot] - k);
            high.add_term(f, c);
        }
    }
}

}  // namespace

WeierstrassDivision weierstrass_divide(const MultiPoly& Fin, int pivot, int k, int order)
{
    const MultiPoly F = Fin.truncate(order);
    const VarList& vars = F.vars();
    MultiPoly F_low, E;
    split(F, pivot, k, F_low, E);
    if (E.constant_term() == 0) throw std::domain_error("pivot power coefficient is not a unit");
    for (const auto& [e, c] : F_low.terms())
        if (e.degree() == e[pivot]) throw std::domain_error("germ has a pure pivot term below the division degree");
    const MultiPoly E_inv = inverse_unit(E, order);

    MultiPoly q(vars), r(vars);
    MultiPoly g = MultiPoly::variable(vars, pivot).pow(k);
    // F_low lies in the ideal of the other variables, so each pass raises
    // the order in those variables by one.
    for (int it = 0; it <= order + 2 && !g.is_zero(); ++it) {
        MultiPoly low, high;
        split(g, pivot, k, low, high);
        r += low;
        const MultiPoly h = mul_trunc(high, E_inv, order);
        q += h;
        g = -mul_trunc(h, F_low, order);
    }
    if (!g.is_zero()) throw std::logic_error("Weierstrass division did not terminate");
    return {q, r};
}

SquareReduction weierstrass_square_reduce(const Jet& Fj, int pivot, int order)
{
    order = std::min(order, Fj.order());
    const VarList& vars = Fj.vars();
    const MultiPoly F = Fj.poly().truncate(order);
    if (F.constant_term() != 0 || F.coeff(Exponent::unit(pivot)) != 0)
        throw std::domain_error("germ has a nonzero value or pivot-linear term at the origin");
    auto [q, r] = weierstrass_divide(F, pivot, 2, order);

    // p^2 + A p + B = p^2 - r
    MultiPoly A(vars), B(vars);
    for (const auto& [e, c] : r.terms()) {
        Exponent f = e;
        f.set(pivot, 0);
        if (e[pivot] == 1) A.add_term(f, -c);
        else B.add_term(f, -c);
    }
    const CoordinateChange change = CoordinateChange::substitution(
        vars, {{pivot, MultiPoly::variable(vars, pivot) - A * Rational(1, 2)}});
    MultiPoly G = MultiPoly::variable(vars, pivot).pow(2) + B - mul_trunc(A, A, order) * Rational(1, 4);
    Jet unit = apply_change(q, change, order);
    return {Jet(G, order), change, unit};
}

}  // namespace dvc

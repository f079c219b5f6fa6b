#include "dvc/ideal_ops.hpp"

#include <stdexcept>

namespace dvc {

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b)
{
    std::vector<MultiPoly> g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return PolyIdeal(a.vars(), std::move(g));
}

PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b)
{
    std::vector<MultiPoly> g;
    for (const auto& p : a.gens())
        for (const auto& q : b.gens()) g.push_back(p * q);
    return PolyIdeal(a.vars(), std::move(g));
}

PolyIdeal ideal_power(const PolyIdeal& a, int d)
{
    if (d < 0) throw std::invalid_argument("negative ideal power");
    PolyIdeal r(a.vars(), {MultiPoly(a.vars(), Rational(1))});
    for (int i = 0; i < d; ++i) r = ideal_product(r, a);
    return r;
}

PolyIdeal maximal_ideal(const VarList& vars)
{
    std::vector<MultiPoly> g;
    for (int i = 0; i < vars.size(); ++i) g.push_back(MultiPoly::variable(vars, i));
    return PolyIdeal(vars, std::move(g));
}

bool ideal_subset(const PolyIdeal& a, const PolyIdeal& b, const GroebnerBudget& budget)
{
    const PolyIdeal gb = groebner(b, OrderSpec::grevlex(), budget);
    for (const auto& g : a.gens())
        if (!ideal_contains(gb, g, OrderSpec::grevlex())) return false;
    return true;
}

bool ideals_equal(const PolyIdeal& a, const PolyIdeal& b, const GroebnerBudget& budget)
{
    return groebner(a, OrderSpec::grevlex(), budget).gens() == groebner(b, OrderSpec::grevlex(), budget).gens();
}

namespace {

// Ring with one extra variable in front.
struct Extended {
    VarList ring;
    std::vector<int> map;
};

Extended extend(const VarList& vars)
{
    std::vector<std::string> names{"_s"};
    names.insert(names.end(), vars.names().begin(), vars.names().end());
    Extended e{VarList(names), {}};
    for (int i = 0; i < vars.size(); ++i) e.map.push_back(i + 1);
    return e;
}

PolyIdeal contract(const PolyIdeal& gb, const VarList& vars)
{
    std::vector<int> back(vars.size() + 1, -1);
    for (int i = 0; i < vars.size(); ++i) back[i + 1] = i;
    std::vector<MultiPoly> out;
    for (const auto& g : gb.gens())
        if (g.degree_in(0) <= 0) out.push_back(g.remap(vars, back));
    return PolyIdeal(vars, std::move(out));
}

}  // namespace

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b, const GroebnerBudget& budget)
{
    const Extended ext = extend(a.vars());
    const MultiPoly s = MultiPoly::variable(ext.ring, 0);
    const MultiPoly one(ext.ring, Rational(1));
    std::vector<MultiPoly> g;
    for (const auto& p : a.gens()) g.push_back(s * p.remap(ext.ring, ext.map));
    for (const auto& p : b.gens()) g.push_back((one - s) * p.remap(ext.ring, ext.map));
    return contract(groebner(PolyIdeal(ext.ring, g), OrderSpec::eliminate(1), budget), a.vars());
}

PolyIdeal saturate_by(const PolyIdeal& I, const MultiPoly& f, const GroebnerBudget& budget)
{
    const Extended ext = extend(I.vars());
    std::vector<MultiPoly> g;
    for (const auto& p : I.gens()) g.push_back(p.remap(ext.ring, ext.map));
    g.push_back(MultiPoly(ext.ring, Rational(1)) - MultiPoly::variable(ext.ring, 0) * f.remap(ext.ring, ext.map));
    const PolyIdeal contracted = contract(groebner(PolyIdeal(ext.ring, g), OrderSpec::eliminate(1), budget), I.vars());
    return groebner(contracted, OrderSpec::grevlex(), budget);
}

PolyIdeal saturate(const PolyIdeal& I, const PolyIdeal& J, const GroebnerBudget& budget)
{
    if (J.gens().empty()) return groebner(I, OrderSpec::grevlex(), budget);
    PolyIdeal acc = saturate_by(I, J.gens().front(), budget);
    for (std::size_t k = 1; k < J.gens().size(); ++k) acc = intersect(acc, saturate_by(I, J.gens()[k], budget), budget);
    return groebner(acc, OrderSpec::grevlex(), budget);
}

PolyIdeal symbolic_power(const PolyIdeal& I, int d, const std::optional<MultiPoly>& F, const GroebnerBudget& budget)
{
    if (d < 1) throw std::invalid_argument("symbolic power needs d >= 1");
    const VarList& vars = I.vars();
    std::vector<MultiPoly> extra;
    if (F) extra.push_back(*F);
    if (d == 1) {
        std::vector<MultiPoly> g = I.gens();
        g.insert(g.end(), extra.begin(), extra.end());
        return PolyIdeal(vars, std::move(g));
    }
    PolyIdeal J = ideal_sum(ideal_power(I, d), PolyIdeal(vars, extra));
    const PolyIdeal m = maximal_ideal(vars);
    const PolyIdeal m_gb = groebner(m);
    for (int i = 0; i < vars.size(); ++i) {
        const MultiPoly g = MultiPoly::variable(vars, i);
        if (groebner(ideal_sum(I, PolyIdeal(vars, {g})), OrderSpec::grevlex(), budget).gens() == m_gb.gens())
            return saturate_by(J, g, budget);
    }
    return saturate(J, m, budget);
}

}  // namespace dvc

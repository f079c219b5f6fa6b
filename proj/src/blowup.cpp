#include "dvc/blowup.hpp"

#include <algorithm>

namespace dvc {

namespace {

MultiPoly chart_map(const MultiPoly& p, const std::vector<int>& normal, int chart)
{
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        int s = 0;
        for (int j : normal) s += e[j];
        f.set(chart, s);
        r.add_term(f, c);
    }
    return r;
}

MultiPoly divide_by_power(const MultiPoly& p, int var, int k)
{
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f.set(var, e[var] - k);
        r.add_term(f, c);
    }
    return r;
}

bool is_scaled_variable(const MultiPoly& p, int* var)
{
    if (p.size() != 1) return false;
    const Exponent e = p.terms().begin()->first;
    if (e.degree() != 1) return false;
    for (int i = 0; i < p.nvars(); ++i)
        if (e[i] == 1) *var = i;
    return true;
}

}  // namespace

const BlowupChart& Blowup::chart_for(const std::string& var) const
{
    for (const auto& c : charts)
        if (frame.F.vars()[c.chart] == var) return c;
    throw std::invalid_argument("no chart named " + var);
}

const ChartDivisors& Blowup::divisors_for(const std::string& var) const
{
    for (std::size_t k = 0; k < charts.size(); ++k)
        if (frame.F.vars()[charts[k].chart] == var) return decomposition.charts[k];
    throw std::invalid_argument("no chart named " + var);
}

Blowup blowup_curve(const Germ& g)
{
    Blowup b{g.frame(), {}, {}};
    const MultiPoly& F = b.frame.F.poly();
    const VarList& vars = F.vars();
    const auto& normal = b.frame.normal;
    const int W = b.frame.along;
    int mu = -1;
    for (const auto& [e, c] : F.terms()) {
        int s = 0;
        for (int j : normal) s += e[j];
        mu = mu < 0 ? s : std::min(mu, s);
    }
    if (mu != 1) throw std::invalid_argument("the hypersurface is singular along the curve");

    for (int i : normal) {
        BlowupChart ch;
        ch.chart = i;
        for (int j : normal)
            if (j != i) ch.substitutions.push_back(vars[j] + " = " + vars[j] + "*" + vars[i]);
        ch.total = chart_map(F, normal, i);
        ch.multiplicity = mu;
        ch.strict = divide_by_power(ch.total, i, mu);
        ch.source_order = b.frame.F.order();

        const MultiPoly restriction = ch.strict.evaluate(i, 0);
        const int d = restriction.ord_in(W);
        ChartDivisors div{PolyIdeal(vars, {}), std::nullopt, std::nullopt, divide_by_power(restriction, W, d)};
        const MultiPoly xi = MultiPoly::variable(vars, i);
        div.E1 = PolyIdeal(vars, {xi, div.e1});
        if (d > 0) {
            const MultiPoly w = MultiPoly::variable(vars, W);
            div.E2 = PolyIdeal(vars, {xi, w});
            div.L = PolyIdeal(vars, {xi, w, div.e1.evaluate(W, 0)});
        }
        if (b.charts.empty()) {
            b.decomposition.d = d;
        } else if (b.decomposition.d != d) {
            throw std::logic_error("E2 multiplicity differs between charts");
        }
        b.charts.push_back(std::move(ch));
        b.decomposition.charts.push_back(std::move(div));
    }
    return b;
}

Blowup surface_blowup(const SurfaceGerm& s)
{
    if (s.vars().size() != 3) throw std::invalid_argument("surface blow-up needs a germ in three variables");
    return blowup_curve(s);
}

std::string SingularLocusReport::label() const
{
    switch (verdict) {
    case Verdict::Empty: return "empty";
    case Verdict::Finite: return "finite";
    case Verdict::PositiveDimensional: return "positive-dimensional";
    case Verdict::Undecided: return "undecided";
    }
    return "?";
}

SingularLocusReport singular_locus_along(const MultiPoly& G, const PolyIdeal& locus, const GroebnerBudget& budget)
{
    const VarList& vars = G.vars();
    SingularLocusReport rep;
    try {
        const PolyIdeal lb = groebner(locus, OrderSpec::grevlex(), budget);
        if (!ideal_contains(lb, G, OrderSpec::grevlex()))
            throw std::invalid_argument("the query locus does not lie on the hypersurface");

        std::vector<int> zero;
        for (const auto& g : locus.gens()) {
            int v = -1;
            if (is_scaled_variable(g, &v)) zero.push_back(v);
        }
        auto restrict_ = [&](MultiPoly p) {
            for (int v : zero) p = p.evaluate(v, 0);
            return p;
        };
        std::vector<MultiPoly> gens{restrict_(G)};
        for (int v = 0; v < vars.size(); ++v) gens.push_back(restrict_(G.derivative(v)));
        for (const auto& g : locus.gens()) gens.push_back(g);
        const PolyIdeal basis = groebner(PolyIdeal(vars, gens), OrderSpec::grevlex(), budget);
        rep.dimension = dimension_from_basis(basis, OrderSpec::grevlex());
        rep.witness = basis;
        rep.verdict = rep.dimension < 0    ? SingularLocusReport::Verdict::Empty
                      : rep.dimension == 0 ? SingularLocusReport::Verdict::Finite
                                           : SingularLocusReport::Verdict::PositiveDimensional;
    } catch (const BudgetExceeded&) {
        rep.verdict = SingularLocusReport::Verdict::Undecided;
    }
    return rep;
}

QFactorialization qfactorialize(const Blowup& b, int chart, const GroebnerBudget& budget)
{
    std::size_t k = 0;
    while (k < b.charts.size() && b.charts[k].chart != chart) ++k;
    if (k == b.charts.size()) throw std::invalid_argument("no such chart");
    const BlowupChart& ch = b.charts[k];
    const ChartDivisors& div = b.decomposition.charts[k];
    if (!b.decomposition.e2_present()) throw UnsupportedRegime("E2 is absent: the ambient point is smooth");
    int v = -1;
    if (!is_scaled_variable(div.e1, &v) || v == chart)
        throw UnsupportedRegime("E1 is not a coordinate plane in this chart");

    QFactorialization q;
    q.chart = chart;
    q.along_L = singular_locus_along(ch.strict, *div.L, budget);
    if (q.along_L.verdict == SingularLocusReport::Verdict::Undecided) throw BudgetExceeded("singular locus of Y along L");
    if (q.along_L.verdict == SingularLocusReport::Verdict::PositiveDimensional)
        throw UnsupportedRegime("Y is singular along L; blowing up E1 is not a Q-factorialization here");

    const VarList& vars = ch.strict.vars();
    q.substitutions.push_back(vars[v] + " = " + vars[v] + "*" + vars[chart]);
    MultiPoly sub(vars);
    int mu = -1;
    for (const auto& [e, c] : ch.strict.terms()) {
        Exponent f = e;
        f.set(chart, e[chart] + e[v]);
        sub.add_term(f, c);
        mu = mu < 0 ? f[chart] : std::min(mu, f[chart]);
    }
    q.Z = divide_by_power(sub, chart, mu);
    std::vector<MultiPoly> cg;
    for (int i = 0; i < vars.size(); ++i)
        if (i != v) cg.push_back(MultiPoly::variable(vars, i));
    q.C = PolyIdeal(vars, cg);
    q.along_C = singular_locus_along(q.Z, q.C, budget);
    if (q.along_C.verdict == SingularLocusReport::Verdict::Undecided) throw BudgetExceeded("singular locus of Z along C");
    return q;
}

int multiplicity_drop(const Germ& g, const MultiPoly& h)
{
    if (!(h.vars() == g.vars())) throw std::invalid_argument("section over different variables");
    if (h.constant_term() != 0) throw std::invalid_argument("section does not pass through the origin");
    MultiPoly hf = apply_change(h, g.frame().change, g.order()).poly();
    for (int v : g.frame().normal) hf = hf.evaluate(v, 0);
    if (hf.is_zero()) throw std::invalid_argument("section contains the curve; take a section through the point only");
    const Blowup b = blowup_curve(g);
    const int W = b.frame.along;
    int a = -1;
    for (const auto& ch : b.charts) {
        int o = -1;
        for (const auto& [e, c] : ch.strict.terms()) {
            const int s = e[ch.chart] + e[W];
            o = o < 0 ? s : std::min(o, s);
        }
        if (a >= 0 && a != o) throw std::logic_error("E2 coefficient differs between charts");
        a = o;
    }
    return a;
}

}  // namespace dvc

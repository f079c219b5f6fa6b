#include "dvc/groebner.hpp"

#include <algorithm>
#include <list>

namespace dvc {

std::string OrderSpec::name() const
{
    std::string b = base == MonomialOrder::Lex ? "lex" : base == MonomialOrder::GrLex ? "grlex" : "grevlex";
    if (elim_block > 0) b = "elim" + std::to_string(elim_block) + "+" + b;
    return b;
}

namespace {

int grevlex_range(Exponent a, Exponent b, int lo, int hi)
{
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

}  // namespace

int compare(Exponent a, Exponent b, const OrderSpec& order, int nvars)
{
    if (a == b) return 0;
    if (order.elim_block > 0) {
        const int c = grevlex_range(a, b, 0, order.elim_block);
        if (c != 0) return c;
        return grevlex_range(a, b, order.elim_block, nvars);
    }
    switch (order.base) {
    case MonomialOrder::Lex:
        return a < b ? -1 : 1;
    case MonomialOrder::GrLex: {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        return a < b ? -1 : 1;
    }
    case MonomialOrder::GrevLex:
        return grevlex_range(a, b, 0, nvars);
    }
    return 0;
}

PolyIdeal::PolyIdeal(VarList vars, std::vector<MultiPoly> gens) : vars_(std::move(vars))
{
    for (auto& g : gens) {
        if (!(g.vars() == vars_)) throw std::invalid_argument("generator over different variables");
        if (g.is_zero()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
    }
}

namespace {

struct Term {
    Exponent e;
    Rational c;
};

// Polynomial as terms sorted descending in the active order.
struct SPoly {
    std::vector<Term> t;
    int sugar = 0;
    Exponent lm() const { return t.front().e; }
};

class Engine {
public:
    Engine(const OrderSpec& order, int nvars, const VarList& vars)
        : order_(order), n_(nvars), vars_(vars)
    {
    }

    SPoly convert(const MultiPoly& p) const
    {
        SPoly s;
        for (const auto& [e, c] : p.terms()) s.t.push_back({e, c});
        std::sort(s.t.begin(), s.t.end(), [&](const Term& a, const Term& b) { return cmp(a.e, b.e) > 0; });
        s.sugar = p.degree();
        return s;
    }

    MultiPoly back(const SPoly& s) const
    {
        MultiPoly p(vars_);
        for (const auto& term : s.t) p.add_term(term.e, term.c);
        return p;
    }

    int cmp(Exponent a, Exponent b) const { return compare(a, b, order_, n_); }

    static void make_monic(SPoly& s)
    {
        if (s.t.empty()) return;
        const Rational inv = 1 / s.t.front().c;
        for (auto& term : s.t) term.c *= inv;
    }

    // f - c * x^m * g, merged.
    std::vector<Term> sub_mul(const std::vector<Term>& f, std::size_t fstart, const Rational& c, Exponent m,
                              const std::vector<Term>& g) const
    {
        std::vector<Term> out;
        out.reserve(f.size() - fstart + g.size());
        std::size_t i = fstart, j = 0;
        while (i < f.size() || j < g.size()) {
            if (j == g.size()) { out.push_back(f[i++]); continue; }
            const Exponent ge = g[j].e + m;
            if (i == f.size()) { out.push_back({ge, -c * g[j].c}); ++j; continue; }
            const int r = cmp(f[i].e, ge);
            if (r > 0) {
                out.push_back(f[i++]);
            } else if (r < 0) {
                out.push_back({ge, -c * g[j].c});
                ++j;
            } else {
                Rational v = f[i].c - c * g[j].c;
                if (v != 0) out.push_back({ge, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    // Full reduction by the monic polynomials polys[idx] for idx in basis.
    SPoly reduce(SPoly f, const std::vector<const SPoly*>& basis) const
    {
        SPoly r;
        r.sugar = f.sugar;
        std::size_t pos = 0;
        while (pos < f.t.size()) {
            const Exponent e = f.t[pos].e;
            const SPoly* div = nullptr;
            for (const SPoly* g : basis)
                if (g->lm().divides(e)) { div = g; break; }
            if (!div) {
                r.t.push_back(f.t[pos]);
                ++pos;
                continue;
            }
            const Exponent m = e - div->lm();
            const Rational c = f.t[pos].c;
            f.sugar = std::max(f.sugar, m.degree() + div->sugar);
            r.sugar = std::max(r.sugar, f.sugar);
            f.t = sub_mul(f.t, pos, c, m, div->t);
            pos = 0;
        }
        return r;
    }

    SPoly spoly(const SPoly& f, const SPoly& g) const
    {
        const Exponent l = f.lm().lcm(g.lm());
        const Exponent mf = l - f.lm(), mg = l - g.lm();
        std::vector<Term> a;
        a.reserve(f.t.size());
        for (const auto& term : f.t) a.push_back({term.e + mf, term.c / f.t.front().c});
        SPoly s;
        s.t = sub_mul(a, 0, 1 / g.t.front().c, mg, g.t);
        s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
        return s;
    }

private:
    OrderSpec order_;
    int n_;
    VarList vars_;
};

struct Pair {
    std::size_t i, j;
    Exponent lcm;
    int sugar;
};

}  // namespace

Exponent leading_exponent(const MultiPoly& p, const OrderSpec& order)
{
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
    Exponent best = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        if (compare(e, best, order, p.nvars()) > 0) best = e;
    return best;
}

Rational leading_coeff(const MultiPoly& p, const OrderSpec& order)
{
    return p.coeff(leading_exponent(p, order));
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis, const OrderSpec& order)
{
    Engine eng(order, p.nvars(), p.vars());
    std::vector<SPoly> conv;
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        conv.push_back(eng.convert(b));
        Engine::make_monic(conv.back());
    }
    std::vector<const SPoly*> ptrs;
    for (const auto& s : conv) ptrs.push_back(&s);
    return eng.back(eng.reduce(eng.convert(p), ptrs));
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const OrderSpec& order)
{
    Engine eng(order, f.nvars(), f.vars());
    return eng.back(eng.spoly(eng.convert(f), eng.convert(g)));
}

PolyIdeal groebner(const PolyIdeal& ideal, const OrderSpec& order, const GroebnerBudget& budget,
                   GroebnerStats* stats)
{
    const VarList& vars = ideal.vars();
    const int n = vars.size();
    Engine eng(order, n, vars);
    std::vector<SPoly> polys;
    std::vector<std::size_t> G;
    std::list<Pair> B;
    GroebnerStats local;

    auto update = [&](std::size_t h) {
        const Exponent lh = polys[h].lm();
        std::vector<Pair> C;
        for (std::size_t g : G) {
            const Exponent l = lh.lcm(polys[g].lm());
            const int sug = std::max(polys[h].sugar + (l - lh).degree(),
                                     polys[g].sugar + (l - polys[g].lm()).degree());
            C.push_back({g, h, l, sug});
        }
        std::vector<Pair> D;
        for (std::size_t k = 0; k < C.size(); ++k) {
            const Pair& p = C[k];
            const bool coprime = lh.coprime(polys[p.i].lm());
            bool keep = coprime;
            if (!keep) {
                keep = true;
                for (std::size_t q = k + 1; q < C.size() && keep; ++q)
                    if (C[q].lcm.divides(p.lcm)) keep = false;
                for (const Pair& q : D)
                    if (keep && q.lcm.divides(p.lcm)) keep = false;
            }
            if (keep) D.push_back(p);
        }
        for (auto it = B.begin(); it != B.end();) {
            const Exponent l = it->lcm;
            if (lh.divides(l) && lh.lcm(polys[it->i].lm()) != l && lh.lcm(polys[it->j].lm()) != l)
                it = B.erase(it);
            else
                ++it;
        }
        for (const Pair& p : D)
            if (!lh.coprime(polys[p.i].lm())) B.push_back(p);
        std::vector<std::size_t> G2;
        for (std::size_t g : G)
            if (!lh.divides(polys[g].lm())) G2.push_back(g);
        G2.push_back(h);
        G = std::move(G2);
    };

    auto basis_ptrs = [&]() {
        std::vector<const SPoly*> ptrs;
        for (std::size_t g : G) ptrs.push_back(&polys[g]);
        return ptrs;
    };

    for (const auto& g : ideal.gens()) {
        SPoly s = eng.reduce(eng.convert(g), basis_ptrs());
        if (s.t.empty()) continue;
        Engine::make_monic(s);
        polys.push_back(std::move(s));
        update(polys.size() - 1);
    }

    while (!B.empty()) {
        auto best = B.begin();
        for (auto it = B.begin(); it != B.end(); ++it) {
            if (it->sugar < best->sugar ||
                (it->sugar == best->sugar && eng.cmp(it->lcm, best->lcm) < 0))
                best = it;
        }
        const Pair p = *best;
        B.erase(best);
        if (++local.pairs > budget.max_pairs) throw BudgetExceeded("S-pair count");
        if (p.lcm.degree() > budget.max_degree) throw BudgetExceeded("degree cap");
        SPoly s = eng.reduce(eng.spoly(polys[p.i], polys[p.j]), basis_ptrs());
        if (s.t.empty()) {
            ++local.reductions_to_zero;
            continue;
        }
        Engine::make_monic(s);
        polys.push_back(std::move(s));
        if (polys.size() > budget.max_basis) throw BudgetExceeded("basis size");
        update(polys.size() - 1);
        if (polys.back().lm().is_zero()) break;  // unit ideal
    }

    // Reduced basis: keep minimal leading terms, then interreduce.
    std::vector<std::size_t> minimal;
    for (std::size_t g : G) {
        if (polys[g].lm().is_zero()) {
            minimal = {g};
            break;
        }
        minimal.push_back(g);
    }
    std::vector<SPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const SPoly*> others;
        for (std::size_t q = 0; q < minimal.size(); ++q)
            if (q != k) others.push_back(&polys[minimal[q]]);
        SPoly head;
        head.t.push_back(polys[minimal[k]].t.front());
        SPoly tail = polys[minimal[k]];
        tail.t.erase(tail.t.begin());
        SPoly red = eng.reduce(tail, others);
        head.t.insert(head.t.end(), red.t.begin(), red.t.end());
        out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(), [&](const SPoly& a, const SPoly& b) { return eng.cmp(a.lm(), b.lm()) < 0; });
    std::vector<MultiPoly> gens;
    for (const auto& s : out) gens.push_back(eng.back(s));
    if (stats) *stats = local;
    return PolyIdeal(vars, std::move(gens));
}

bool is_unit_ideal_basis(const PolyIdeal& basis)
{
    for (const auto& g : basis.gens())
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

int dimension_from_basis(const PolyIdeal& basis, const OrderSpec& order)
{
    if (is_unit_ideal_basis(basis)) return -1;
    const int n = basis.vars().size();
    std::vector<Exponent> lms;
    for (const auto& g : basis.gens()) lms.push_back(leading_exponent(g, order));
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (Exponent e : lms) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

bool ideal_contains(const PolyIdeal& basis, const MultiPoly& p, const OrderSpec& order)
{
    return reduce(p, basis.gens(), order).is_zero();
}

bool has_common_zero(const PolyIdeal& system, const GroebnerBudget& budget)
{
    if (system.is_zero_ideal()) return true;
    return !is_unit_ideal_basis(groebner(system, OrderSpec::grevlex(), budget));
}

}  // namespace dvc

#include "dvc/normal_form.hpp"

#include "dvc/duval.hpp"
#include "dvc/weierstrass.hpp"

#include <algorithm>

namespace dvc {

namespace {

struct Roles {
    int x, y, z, t;
};

Roles roles_of(const VarList& v)
{
    Roles r{v.index_of("x"), v.index_of("y"), v.index_of("z"), v.index_of("t")};
    if (v.size() != 4 || r.x < 0 || r.y < 0 || r.z < 0 || r.t < 0)
        throw std::invalid_argument("normal forms are stated in the variables x, y, z, t");
    return r;
}

// Keeps unit * (F o change) == G.
class Reducer {
public:
    explicit Reducer(const Jet& F)
        : N_(F.order()), G(F), change(CoordinateChange::identity(F.vars())), unit(MultiPoly(F.vars(), Rational(1)), N_)
    {
    }

    void substitute(const CoordinateChange& c)
    {
        G = apply_change(G, c, N_);
        unit = apply_change(unit, c, N_);
        change = change.then(c, N_);
    }

    void substitute(int var, const MultiPoly& image)
    {
        substitute(CoordinateChange::substitution(G.vars(), {{var, image}}));
    }

    void multiply(const Jet& u)
    {
        G = u * G;
        unit = u * unit;
    }

    void absorb(const SquareReduction& s)
    {
        unit = s.unit * apply_change(unit, s.change, N_);
        change = change.then(s.change, N_);
        G = s.reduced;
    }

    int order() const { return N_; }

    int N_;
    Jet G;
    CoordinateChange change;
    Jet unit;
};

MultiPoly var(const VarList& v, int i)
{
    return MultiPoly::variable(v, i);
}

MultiPoly mono(const VarList& v, std::initializer_list<std::pair<int, int>> powers, const Rational& c = 1)
{
    Exponent e;
    for (auto [i, k] : powers) e.set(i, k);
    return MultiPoly(v, e, c);
}

void require_curve(const Germ& g, std::initializer_list<int> expected, const char* text)
{
    std::vector<int> want(expected);
    std::vector<int> have = g.frame().normal;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (!g.curve_is_coordinate() || want != have)
        throw WrongStratum(std::string("the curve must be ") + text);
}

// Linear terms of phi in F = ... + t * phi.
void reject_linear_phi(const MultiPoly& G, int t)
{
    for (const auto& [e, c] : G.terms())
        if (e.degree() == 2 && e[t] > 0)
            throw WrongStratum("the ambient point is cA: the general section through the curve is A_m");
}

// Sum of c * v^(k - shift) over the monomials t * v^k of G with k >= min_k.
MultiPoly pure_tail(const MultiPoly& G, int t, int v, int min_k, int shift, int* lowest)
{
    MultiPoly out(G.vars());
    *lowest = -1;
    for (const auto& [e, c] : G.terms()) {
        if (e[t] != 1 || e[v] < min_k || e.degree() != 1 + e[v]) continue;
        if (*lowest < 0 || e[v] < *lowest) *lowest = e[v];
        if (e[v] >= shift) out.add_term(Exponent::unit(v, e[v] - shift), c);
    }
    return out;
}

ExcludedFamily family(std::string name, std::function<bool(Exponent)> f)
{
    return ExcludedFamily{std::move(name), std::move(f)};
}

std::optional<int> d4_witness(const MultiPoly& G, const Roles& r, int order)
{
    const VarList s{"x", "y", "z"};
    for (int lambda = 1; lambda <= 12; ++lambda) {
        std::vector<MultiPoly> im(4, MultiPoly(s));
        im[r.x] = var(s, 0);
        im[r.y] = var(s, 1);
        im[r.z] = var(s, 2);
        im[r.t] = var(s, 2) * Rational(lambda);
        const MultiPoly sec = substitute(G, im, order);
        if (classify_duval(Jet(sec, order), order) == DuValType::D(4)) return lambda;
    }
    return std::nullopt;
}

NormalFormResult finish(FormTag tag, int n, const Reducer& red, std::vector<ExcludedFamily> ex)
{
    return NormalFormResult{tag, n, red.G, red.change, red.unit, std::move(ex), std::nullopt};
}

NormalFormResult normalize_fdl(const Germ& g, const Roles& r)
{
    require_curve(g, {r.x, r.z, r.t}, "(x, z, t) for an FD_l form");
    const VarList& v = g.vars();
    Reducer red(g.F());
    red.absorb(weierstrass_square_reduce(red.G, r.x, red.order()));

    const MultiPoly section = red.G.poly().evaluate(r.t, 0) - mono(v, {{r.x, 2}});
    int k = -1;
    for (const auto& [e, c] : section.terms())
        if (e == Exponent::unit(r.z, e[r.z]) && e[r.z] >= 3) k = e[r.z];
    if (k < 0 || section.size() != 2 || section.coeff(mono(v, {{r.y, 2}, {r.z, 1}}).terms().begin()->first) != 1)
        throw WrongStratum("t = 0 section is not x^2 + y^2 z + c z^(n-1)");
    const int n = k + 1;
    reject_linear_phi(red.G.poly(), r.t);

    auto clear_y_powers = [&] {
        for (int pass = 0; pass <= red.order(); ++pass) {
            int lowest;
            const MultiPoly tail = pure_tail(red.G.poly(), r.t, r.y, 2, 2, &lowest);
            if (lowest < 0) return;
            red.substitute(r.z, var(v, r.z) - var(v, r.t) * tail);
        }
        throw std::logic_error("y-power elimination did not terminate");
    };
    clear_y_powers();

    const int x = r.x, y = r.y, z = r.z, t = r.t;
    std::vector<ExcludedFamily> ex{
        family("x*t", [=](Exponent e) { return e[x] > 0 && e[t] > 0; }),
        family("t*y^k", [=](Exponent e) { return e[t] == 1 && e.degree() == 1 + e[y]; }),
        family("t*(linear)", [=](Exponent e) { return e[t] > 0 && e.degree() == 2; }),
    };
    if (n == 4) return finish(FormTag::D_FDl, n, red, std::move(ex));

    auto phi2 = [&](std::initializer_list<std::pair<int, int>> m) {
        Exponent e = Exponent::unit(t);
        for (auto [i, p] : m) e.set(i, e[i] + p);
        return red.G.poly().coeff(e);
    };
    const Rational a1 = phi2({{z, 2}}), a2 = phi2({{t, 2}}), a3 = phi2({{y, 1}, {z, 1}}), a4 = phi2({{y, 1}, {t, 1}}),
                   a5 = phi2({{z, 1}, {t, 1}});
    const bool zero = a1 == 0 && a2 == 0 && a3 == 0 && a4 == 0 && a5 == 0;
    if (!zero) {
        if (a1 == 0 && a2 == 0 && a4 == 0 && 4 * a5 == a3 * a3) {
            red.substitute(y, var(v, y) - var(v, t) * Rational(a3 / 2));
            clear_y_powers();
        } else {
            const auto lambda = d4_witness(red.G.poly(), r, red.order());
            throw WrongStratum(lambda ? "a D4 section exists (t = " + std::to_string(*lambda) + "*z)"
                                      : std::string("phi_2 is not zero, so a D4 section exists"));
        }
    }
    ex.push_back(family("t*(quadratic)", [=](Exponent e) { return e[t] > 0 && e.degree() == 3; }));
    return finish(FormTag::D_FDl_n5plus, n, red, std::move(ex));
}

NormalFormResult normalize_fdr_even(const Germ& g, const Roles& r)
{
    require_curve(g, {r.x, r.y, r.t}, "(x, y, t) for an FD_r form");
    const VarList& v = g.vars();
    const int x = r.x, y = r.y, z = r.z, t = r.t;
    Reducer red(g.F());
    red.absorb(weierstrass_square_reduce(red.G, x, red.order()));

    const MultiPoly section = red.G.poly().evaluate(t, 0) - mono(v, {{x, 2}});
    int m = -1;
    Rational b;
    for (const auto& [e, c] : section.terms())
        if (e[y] == 1 && e.degree() == 1 + e[z] && e[z] >= 2) {
            m = e[z];
            b = c;
        }
    if (m < 0 || section.size() != 2 || !(section - mono(v, {{y, 1}, {z, m}}, b) == mono(v, {{y, 2}, {z, 1}})))
        throw WrongStratum("t = 0 section is not x^2 + y^2 z + b y z^m");
    reject_linear_phi(red.G.poly(), t);

    for (int pass = 0;; ++pass) {
        if (pass > red.order()) throw std::logic_error("z-power elimination did not terminate");
        int lowest;
        const MultiPoly tail = pure_tail(red.G.poly(), t, z, 2, m, &lowest);
        if (lowest < 0) break;
        if (lowest < m)
            throw WrongStratum("t*z^" + std::to_string(lowest) + " with " + std::to_string(lowest) + " < " +
                               std::to_string(m) + ": the general section is a smaller D type");
        red.substitute(y, var(v, y) - var(v, t) * tail * Rational(1 / b));
    }
    std::vector<ExcludedFamily> ex{
        family("x*t", [=](Exponent e) { return e[x] > 0 && e[t] > 0; }),
        family("t*z^k", [=](Exponent e) { return e[t] == 1 && e.degree() == 1 + e[z]; }),
        family("t*(linear)", [=](Exponent e) { return e[t] > 0 && e.degree() == 2; }),
    };
    return finish(FormTag::D_FDr_even, 2 * m, red, std::move(ex));
}

NormalFormResult normalize_fdr_odd(const Germ& g, const Roles& r, bool variant_b)
{
    require_curve(g, {r.x, r.y, r.t}, "(x, y, t) for an FD_r form");
    const VarList& v = g.vars();
    const int x = r.x, y = r.y, z = r.z, t = r.t;
    Reducer red(g.F());
    const WeierstrassDivision wd = weierstrass_divide(red.G.poly(), x, 2, red.order());
    red.multiply(Jet(wd.quotient, red.order()));

    const MultiPoly section = red.G.poly().evaluate(t, 0) - mono(v, {{x, 2}});
    int m = -1;
    Rational b;
    for (const auto& [e, c] : section.terms())
        if (e[x] == 1 && e.degree() == 1 + e[z] && e[z] >= 2) {
            m = e[z];
            b = c;
        }
    if (m < 0 || section.size() != 2 || !(section - mono(v, {{x, 1}, {z, m}}, b) == mono(v, {{y, 2}, {z, 1}})))
        throw WrongStratum("t = 0 section is not x^2 + y^2 z + b x z^m");
    reject_linear_phi(red.G.poly(), t);

    auto coeff = [&](std::initializer_list<std::pair<int, int>> m_) {
        Exponent e;
        for (auto [i, p] : m_) e.set(i, p);
        return red.G.poly().coeff(e);
    };
    for (int pass = 0;; ++pass) {
        if (pass > 4 * red.order()) throw std::logic_error("odd FD_r reduction did not terminate");
        int lowest;
        const MultiPoly tail = pure_tail(red.G.poly(), t, z, 2, m, &lowest);
        if (lowest >= 0) {
            if (lowest <= m)
                throw WrongStratum("t*z^" + std::to_string(lowest) + " with " + std::to_string(lowest) +
                                   " <= " + std::to_string(m) + " is excluded for D_odd FD_r");
            red.substitute(x, var(v, x) - var(v, t) * tail * Rational(1 / b));
            continue;
        }
        const Rational byz = coeff({{t, 1}, {y, 1}, {z, 1}});
        if (byz != 0) {
            red.substitute(y, var(v, y) - var(v, t) * Rational(byz / 2));
            continue;
        }
        const Rational cyy = coeff({{t, 1}, {y, 2}});
        if (variant_b && cyy != 0) {
            red.substitute(z, var(v, z) - var(v, t) * cyy);
            continue;
        }
        break;
    }
    std::vector<ExcludedFamily> ex{
        family("t*z^k", [=](Exponent e) { return e[t] == 1 && e.degree() == 1 + e[z]; }),
        family("t*y*z", [=](Exponent e) { return e == Exponent::unit(t) + Exponent::unit(y) + Exponent::unit(z); }),
        family("t*(linear)", [=](Exponent e) { return e[t] > 0 && e.degree() == 2; }),
    };
    if (variant_b)
        ex.push_back(family("t*y^2", [=](Exponent e) { return e == Exponent::unit(t) + Exponent::unit(y, 2); }));
    return finish(variant_b ? FormTag::D_FDr_odd_b : FormTag::D_FDr_odd_a, 2 * m + 1, red, std::move(ex));
}

}  // namespace

std::string form_tag_name(FormTag tag)
{
    switch (tag) {
    case FormTag::D_FDl: return "D_FDl";
    case FormTag::D_FDl_n5plus: return "D_FDl_n5plus";
    case FormTag::D_FDr_even: return "D_FDr_even";
    case FormTag::D_FDr_odd_a: return "D_FDr_odd_a";
    case FormTag::D_FDr_odd_b: return "D_FDr_odd_b";
    case FormTag::A3_middle: return "A3_middle";
    }
    return "?";
}

bool certificate_holds(const MultiPoly& F, const NormalFormResult& r)
{
    const int N = r.F_normal.order();
    return r.unit * apply_change(F, r.change, N) == r.F_normal;
}

std::vector<std::string> excluded_violations(const NormalFormResult& r)
{
    std::vector<std::string> out;
    for (const auto& fam : r.excluded)
        for (const auto& [e, c] : r.F_normal.poly().terms())
            if (fam.hits(e)) {
                out.push_back(fam.name);
                break;
            }
    return out;
}

bool square_test_q2(const MultiPoly& q)
{
    if (q.nvars() < 3) throw std::invalid_argument("q2 needs three variables");
    auto c = [&](int i, int j) {
        Exponent e = Exponent::unit(i);
        e.set(j, e[j] + 1);
        return q.coeff(e);
    };
    const Rational a1 = c(0, 0), a2 = c(1, 1), a3 = c(2, 2), a4 = c(0, 1), a5 = c(0, 2), a6 = c(1, 2);
    return a1 == 0 && a4 == 0 && a5 == 0 && 4 * a2 * a3 == a6 * a6;
}

bool is_general_section_A(const Germ& g)
{
    const CurveFrame& fr = g.frame();
    const MultiPoly q = fr.F.poly().homogeneous_part(2);
    const int n = g.vars().size();
    // Ring (b, c, remaining frame variables); the hyperplane is X0 = b X1 + c X2.
    std::vector<std::string> names{"_b", "_c"};
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != fr.normal[0]) {
            rest.push_back(i);
            names.push_back(g.vars()[i]);
        }
    const VarList R(names);
    std::vector<MultiPoly> im(n, MultiPoly(R));
    for (std::size_t k = 0; k < rest.size(); ++k) im[rest[k]] = MultiPoly::variable(R, 2 + static_cast<int>(k));
    const int p1 = 2 + static_cast<int>(std::find(rest.begin(), rest.end(), fr.normal[1]) - rest.begin());
    const int p2 = 2 + static_cast<int>(std::find(rest.begin(), rest.end(), fr.normal[2]) - rest.begin());
    im[fr.normal[0]] = MultiPoly::variable(R, 0) * MultiPoly::variable(R, p1) + MultiPoly::variable(R, 1) * MultiPoly::variable(R, p2);
    const MultiPoly psi = substitute(q, im, 4);
    const int m = static_cast<int>(rest.size());
    std::vector<std::vector<MultiPoly>> M(m, std::vector<MultiPoly>(m, MultiPoly(R)));
    for (const auto& [e, c] : psi.terms()) {
        std::vector<int> idx;
        for (int k = 0; k < m; ++k)
            for (int p = 0; p < e[2 + k]; ++p) idx.push_back(k);
        Exponent bc;
        bc.set(0, e[0]);
        bc.set(1, e[1]);
        if (idx[0] == idx[1]) {
            M[idx[0]][idx[0]].add_term(bc, c);
        } else {
            M[idx[0]][idx[1]].add_term(bc, c / 2);
            M[idx[1]][idx[0]].add_term(bc, c / 2);
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = k + 1; l < m; ++l)
                    if (!(M[i][k] * M[j][l] - M[i][l] * M[j][k]).is_zero()) return true;
    return false;
}

NormalFormResult normalize(const Germ& g, FormTag target)
{
    const Roles r = roles_of(g.vars());
    switch (target) {
    case FormTag::D_FDl:
    case FormTag::D_FDl_n5plus: {
        NormalFormResult res = normalize_fdl(g, r);
        if (target == FormTag::D_FDl_n5plus && res.n < 5) throw WrongStratum("D4 has no n >= 5 form");
        if (target == FormTag::D_FDl && res.n >= 5) res.tag = FormTag::D_FDl_n5plus;
        return res;
    }
    case FormTag::D_FDr_even: return normalize_fdr_even(g, r);
    case FormTag::D_FDr_odd_a: return normalize_fdr_odd(g, r, false);
    case FormTag::D_FDr_odd_b: return normalize_fdr_odd(g, r, true);
    case FormTag::A3_middle: return normalize_A3_middle(g);
    }
    throw std::invalid_argument("unknown target");
}

NormalFormResult normalize_A3_middle(const Germ& g)
{
    const Roles r = roles_of(g.vars());
    const VarList& v = g.vars();
    const int x = r.x, y = r.y, z = r.z, t = r.t;
    const MultiPoly X = var(v, x), Y = var(v, y), Z = var(v, z), T = var(v, t);
    Reducer red(g.F());

    std::vector<MultiPoly> middle_curve{X - Z * Z, Y - Z * Z, T};
    auto same_set = [](std::vector<MultiPoly> a, std::vector<MultiPoly> b) {
        for (const auto& p : a)
            if (std::find(b.begin(), b.end(), p) == b.end()) return false;
        return a.size() == b.size();
    };
    if (same_set(g.curve(), middle_curve)) {
        red.substitute(CoordinateChange::substitution(v, {{x, X + Z * Z}, {y, Y + Z * Z}}));
        red.substitute(CoordinateChange::substitution(v, {{x, X - Y}, {y, X + Y}}));
    } else {
        require_curve(g, {x, y, t}, "(x, y, t) or (x - z^2, y - z^2, t) for the A3 middle form");
    }

    // Weierstrass on y^2, then scale so that x^2 has coefficient 1.
    const Rational cy0 = red.G.poly().coeff(Exponent::unit(y, 2));
    if (cy0 == 0) throw WrongStratum("no y^2 term");
    red.multiply(Jet(MultiPoly(v, Rational(1 / cy0)), red.order()));
    red.absorb(weierstrass_square_reduce(red.G, y, red.order()));
    const Rational sx = red.G.poly().coeff(Exponent::unit(x, 2));
    if (sx == 0) throw WrongStratum("no x^2 term");
    red.multiply(Jet(MultiPoly(v, Rational(1 / sx)), red.order()));
    const Rational cy = 1 / sx;
    if (!(red.G.poly().evaluate(t, 0) == X * X + Y * Y * cy + X * Z * Z * Rational(2)))
        throw WrongStratum("t = 0 section is not x^2 + c y^2 + 2 x z^2");
    for (const auto& [e, c] : red.G.poly().terms())
        if (e == Exponent::unit(t) + Exponent::unit(z))
            throw WrongStratum("t*z occurs: the general section through the curve is A1");

    for (int pass = 0;; ++pass) {
        if (pass > red.order()) throw std::logic_error("z-power elimination did not terminate");
        int lowest;
        const MultiPoly tail = pure_tail(red.G.poly(), t, z, 2, 2, &lowest);
        if (lowest < 0) break;
        red.substitute(x, X - T * tail * Rational(1, 2));
    }
    NormalFormResult res = finish(FormTag::A3_middle, 3, red, {
        family("y outside y^2", [=](Exponent e) { return e[y] > 0 && !(e == Exponent::unit(y, 2)); }),
        family("t*z^k", [=](Exponent e) { return e[t] == 1 && e.degree() == 1 + e[z]; }),
    });
    res.f_le3 = (red.G.poly() - X * X - Y * Y * cy).truncate(3);
    return res;
}

}  // namespace dvc

#include "dvc/duval.hpp"

#include "dvc/weierstrass.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dvc {

DuValType DuValType::A(int n)
{
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    return {Family::A, n};
}

DuValType DuValType::D(int n)
{
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    return {Family::D, n};
}

DuValType DuValType::E(int n)
{
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    return {Family::E, n};
}

std::string DuValType::label() const
{
    switch (family) {
    case Family::A: return "A" + std::to_string(index);
    case Family::D: return "D" + std::to_string(index);
    case Family::E: return "E" + std::to_string(index);
    case Family::Smooth: return "smooth";
    case Family::NotDuVal: return "not-DuVal";
    case Family::Undetermined: return "undetermined@" + std::to_string(index);
    }
    return "?";
}

DuValType DuValType::from_label(const std::string& s)
{
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D' || s[0] == 'E')) {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(s.substr(1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad Du Val label '" + s + "'");
        }
        if (used + 1 != s.size()) throw std::invalid_argument("bad Du Val label '" + s + "'");
        if (s[0] == 'A') return A(n);
        if (s[0] == 'D') return D(n);
        return E(n);
    }
    if (s == "smooth") return smooth();
    if (s == "not-DuVal") return not_duval();
    throw std::invalid_argument("bad Du Val label '" + s + "'");
}

namespace {

using Uni = std::vector<Rational>;  // ascending coefficients

void trim(Uni& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Uni uni_derivative(const Uni& p)
{
    Uni d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

// Remainder and quotient of a by b (b nonzero).
std::pair<Uni, Uni> uni_divmod(Uni a, const Uni& b)
{
    trim(a);
    Uni q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

Uni uni_gcd(Uni a, Uni b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Uni r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Root of a monic-able linear polynomial.
Rational linear_root(const Uni& p)
{
    return -p[0] / p[1];
}

}  // namespace

CubicLines binary_cubic_lines(const MultiPoly& c, int v, int w)
{
    const VarList& vars = c.vars();
    CubicLines out{CubicPattern::Zero, MultiPoly(vars), MultiPoly(vars)};
    if (c.is_zero()) return out;
    if (!c.is_homogeneous() || c.degree() != 3) throw std::invalid_argument("binary cubic expected");
    Uni p(4);
    for (const auto& [e, coef] : c.terms()) {
        if (e[v] + e[w] != 3) throw std::invalid_argument("cubic uses variables other than the two given");
        p[e[v]] += coef;
    }
    trim(p);
    const MultiPoly V = MultiPoly::variable(vars, v), W = MultiPoly::variable(vars, w);
    auto line = [&](const Rational& r) { return V - W * r; };
    const int deg = static_cast<int>(p.size()) - 1;
    const Uni g = uni_gcd(p, uni_derivative(p));
    const int gdeg = static_cast<int>(g.size()) - 1;
    switch (deg) {
    case 0:
        out.pattern = CubicPattern::Triple;
        out.repeated = W;
        break;
    case 1:
        out.pattern = CubicPattern::DoubleAndSimple;
        out.repeated = W;
        out.simple = line(linear_root(p));
        break;
    case 2:
        if (gdeg == 1) {
            out.pattern = CubicPattern::DoubleAndSimple;
            out.repeated = line(linear_root(g));
            out.simple = W;
        } else {
            out.pattern = CubicPattern::ThreeDistinct;
        }
        break;
    default:
        if (gdeg == 0) {
            out.pattern = CubicPattern::ThreeDistinct;
        } else if (gdeg == 1) {
            out.pattern = CubicPattern::DoubleAndSimple;
            const Rational r = linear_root(g);
            out.repeated = line(r);
            const Uni sq{r * r, -2 * r, Rational(1)};
            out.simple = line(linear_root(uni_divmod(p, sq).first));
        } else {
            out.pattern = CubicPattern::Triple;
            out.repeated = line(-g[1] / 2);
        }
    }
    return out;
}

CubicPattern binary_cubic_pattern(const MultiPoly& c, int v, int w)
{
    return binary_cubic_lines(c, v, w).pattern;
}

namespace {

// Linear change sending the variables (v, w) to new ones in which the linear
// forms a and b (in v, w) become v and w.
CoordinateChange linear_forms_to_coordinates(const MultiPoly& a, const MultiPoly& b, int v, int w)
{
    const VarList& vars = a.vars();
    const Exponent ev = Exponent::unit(v), ew = Exponent::unit(w);
    const auto inv = invert_matrix({{a.coeff(ev), a.coeff(ew)}, {b.coeff(ev), b.coeff(ew)}});
    const MultiPoly V = MultiPoly::variable(vars, v), W = MultiPoly::variable(vars, w);
    return CoordinateChange::substitution(vars, {{v, V * inv[0][0] + W * inv[0][1]}, {w, V * inv[1][0] + W * inv[1][1]}});
}

// Pivots whose square appears; when only cross terms remain, shear one in.
struct Pivot {
    int var;
    CoordinateChange shear;
};

std::optional<Pivot> find_pivot(const MultiPoly& q, const std::vector<int>& free_vars)
{
    const VarList& vars = q.vars();
    for (int i : free_vars)
        if (q.coeff(Exponent::unit(i, 2)) != 0) return Pivot{i, CoordinateChange::identity(vars)};
    for (int i : free_vars)
        for (int j : free_vars) {
            if (i == j) continue;
            if (q.coeff(Exponent::unit(i) + Exponent::unit(j)) != 0) {
                auto shear = CoordinateChange::substitution(
                    vars, {{i, MultiPoly::variable(vars, i) + MultiPoly::variable(vars, j)}});
                return Pivot{j, shear};
            }
        }
    return std::nullopt;
}

DuValType classify_d(MultiPoly h, int v, int w, int order)
{
    const VarList& vars = h.vars();
    const MultiPoly V = MultiPoly::variable(vars, v), W = MultiPoly::variable(vars, w);
    const MultiPoly target = V.pow(2) * W;
    // Absorb every term of v-degree >= 2 into the coordinate w' = P(v, w).
    for (int pass = 0; pass <= order + 1; ++pass) {
        MultiPoly P(vars), rest(vars);
        for (const auto& [e, c] : h.terms()) {
            if (e[v] >= 2) {
                Exponent f = e;
                f.set(v, e[v] - 2);
                P.add_term(f, c);
            } else {
                rest.add_term(e, c);
            }
        }
        if (P == W) break;
        const CoordinateChange to_new = CoordinateChange::substitution(vars, {{w, P}});
        h = apply_change(h, to_new.inverse(order), order).poly();
        if (pass == order + 1) return DuValType::undetermined(order);
    }
    // h = v^2 w + v Q(w) + R(w); complete the square in v.
    MultiPoly Q(vars), R(vars);
    for (const auto& [e, c] : h.terms()) {
        if (e[v] == 1) {
            Exponent f = e;
            f.set(v, 0);
            if (f[w] < 1) return DuValType::not_duval();
            f.set(w, f[w] - 1);
            Q.add_term(f, c);
        } else if (e[v] == 0) {
            R.add_term(e, c);
        }
    }
    R -= mul_trunc(mul_trunc(Q, Q, order), W, order) * Rational(1, 4);
    R = R.truncate(order);
    if (R.is_zero()) return DuValType::undetermined(order);
    const int k = R.ord();
    if (k < 3) return DuValType::not_duval();
    return DuValType::D(k + 1);
}

DuValType classify_e(MultiPoly h, int v, int w, int order)
{
    // h = unit (v^3 + a v^2 + b v + c), then v -> v - a/3.
    const auto div = weierstrass_divide(h, v, 3, order);
    MultiPoly a(h.vars()), b(h.vars()), c(h.vars());
    for (const auto& [e, coef] : div.remainder.terms()) {
        Exponent f = e;
        f.set(v, 0);
        if (e[v] == 2) a.add_term(f, -coef);
        else if (e[v] == 1) b.add_term(f, -coef);
        else c.add_term(f, -coef);
    }
    const MultiPoly V = MultiPoly::variable(h.vars(), v);
    const MultiPoly cubic = V.pow(3) + mul_trunc(a, V.pow(2), order) + mul_trunc(b, V, order) + c;
    const CoordinateChange shift = CoordinateChange::substitution(h.vars(), {{v, V - a * Rational(1, 3)}});
    const MultiPoly g = apply_change(cubic, shift, order).poly();
    MultiPoly b2(h.vars()), c2(h.vars());
    for (const auto& [e, coef] : g.terms()) {
        Exponent f = e;
        f.set(v, 0);
        if (e[v] == 1) b2.add_term(f, coef);
        else if (e[v] == 0) c2.add_term(f, coef);
    }
    (void)w;
    const int oc = c2.is_zero() ? order + 1 : c2.ord();
    const int ob = b2.is_zero() ? order + 1 : b2.ord();
    if (oc == 4) return DuValType::E(6);
    if (oc >= 5 && ob == 3) return order >= 5 ? DuValType::E(7) : DuValType::undetermined(order);
    if (oc == 5 && ob >= 4) return order >= 5 ? DuValType::E(8) : DuValType::undetermined(order);
    if (order < 5) return DuValType::undetermined(order);
    return DuValType::not_duval();
}

}  // namespace

DuValReport classify_duval_report(const Jet& gj, int order)
{
    order = std::min(order, gj.order());
    MultiPoly f = gj.poly().truncate(order);
    const VarList& vars = f.vars();
    DuValReport rep{DuValType::undetermined(order), order, false, 0, MultiPoly(vars)};
    if (f.constant_term() != 0) throw std::invalid_argument("germ does not pass through the origin");
    if (f.is_zero()) return rep;
    rep.order_sufficient = true;
    if (f.ord() == 1) {
        rep.type = DuValType::smooth();
        return rep;
    }
    if (f.ord() >= 3) {
        rep.type = DuValType::not_duval();
        rep.residual = f;
        return rep;
    }
    std::vector<int> free_vars;
    for (int i = 0; i < vars.size(); ++i) free_vars.push_back(i);
    // Split off squares one pivot at a time; units are dropped, which keeps the zero set.
    for (;;) {
        const MultiPoly q = f.homogeneous_part(2);
        auto pivot = q.is_zero() ? std::nullopt : find_pivot(q, free_vars);
        if (!pivot) break;
        f = apply_change(f, pivot->shear, order).poly();
        const auto red = weierstrass_square_reduce(Jet(f, order), pivot->var, order);
        const MultiPoly P = MultiPoly::variable(vars, pivot->var);
        f = red.reduced.poly() - P.pow(2);
        ++rep.quadratic_rank;
        free_vars.erase(std::find(free_vars.begin(), free_vars.end(), pivot->var));
        if (free_vars.empty()) break;
    }
    rep.residual = f;
    const int r = rep.quadratic_rank;
    if (r == 3) {
        rep.type = DuValType::A(1);
        return rep;
    }
    if (r == 2) {
        if (f.is_zero()) {
            rep.type = DuValType::undetermined(order);
            rep.order_sufficient = false;
        } else {
            rep.type = DuValType::A(f.ord() - 1);
        }
        return rep;
    }
    if (r == 0 || vars.size() - r != 2) {
        rep.type = DuValType::not_duval();
        return rep;
    }
    const int v = free_vars[0], w = free_vars[1];
    const MultiPoly c3 = f.homogeneous_part(3);
    const CubicLines lines = binary_cubic_lines(c3, v, w);
    switch (lines.pattern) {
    case CubicPattern::Zero:
        rep.type = f.is_zero() ? DuValType::undetermined(order) : DuValType::not_duval();
        break;
    case CubicPattern::ThreeDistinct:
        rep.type = DuValType::D(4);
        break;
    case CubicPattern::DoubleAndSimple: {
        const auto ch = linear_forms_to_coordinates(lines.repeated, lines.simple, v, w);
        MultiPoly h = apply_change(f, ch, order).poly();
        // cubic is now k v^2 w; rescale w.
        const Rational k = h.coeff(Exponent::unit(v, 2) + Exponent::unit(w));
        const MultiPoly W = MultiPoly::variable(vars, w);
        h = apply_change(h, CoordinateChange::substitution(vars, {{w, W * Rational(1 / k)}}), order).poly();
        rep.type = classify_d(h, v, w, order);
        break;
    }
    case CubicPattern::Triple: {
        const MultiPoly other = lines.repeated.coeff(Exponent::unit(v)) != 0 ? MultiPoly::variable(vars, w)
                                                                            : MultiPoly::variable(vars, v);
        const bool v_first = lines.repeated.coeff(Exponent::unit(v)) != 0;
        const auto ch = v_first ? linear_forms_to_coordinates(lines.repeated, other, v, w)
                                : linear_forms_to_coordinates(other, lines.repeated, v, w);
        const MultiPoly h = apply_change(f, ch, order).poly();
        rep.type = v_first ? classify_e(h, v, w, order) : classify_e(h, w, v, order);
        break;
    }
    }
    rep.order_sufficient = rep.type.family != DuValType::Family::Undetermined;
    return rep;
}

DuValType classify_duval(const Jet& g, int order)
{
    return classify_duval_report(g, order).type;
}

}  // namespace dvc

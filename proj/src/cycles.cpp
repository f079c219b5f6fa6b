#include "dvc/cycles.hpp"

#include <stdexcept>

namespace dvc {

DynkinGraph::DynkinGraph(DuValType type) : type_(type), n_(type.index)
{
    using F = DuValType::Family;
    if (type.family != F::A && type.family != F::D && type.family != F::E)
        throw std::invalid_argument("Dynkin graphs exist for A, D, E types only");
    m_.assign(n_, std::vector<int>(n_, 0));
    auto link = [&](int i, int j) { m_[i - 1][j - 1] = m_[j - 1][i - 1] = 1; };
    for (int i = 1; i <= n_; ++i) m_[i - 1][i - 1] = -2;
    switch (type.family) {
    case F::A:
        for (int i = 1; i < n_; ++i) link(i, i + 1);
        break;
    case F::D:
        for (int i = 1; i < n_ - 2; ++i) link(i, i + 1);
        link(n_ - 2, n_ - 1);
        link(n_ - 2, n_);
        break;
    default:
        for (int i = 1; i < n_ - 1; ++i) link(i, i + 1);
        link(3, n_);
    }
}

std::vector<int> DynkinGraph::neighbours(int i) const
{
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (j != i && entry(i, j) != 0) out.push_back(j);
    return out;
}

namespace {

mpz_class det(const std::vector<std::vector<int>>& m, int k)
{
    // Bareiss on the leading k x k block.
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
    mpz_class prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (a[p][p] == 0) {
            int r = p + 1;
            while (r < k && a[r][p] == 0) ++r;
            if (r == k) return 0;
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

}  // namespace

bool negative_definite(const DynkinGraph& g)
{
    for (int k = 1; k <= g.size(); ++k) {
        const mpz_class d = det(g.matrix(), k);
        if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) return false;
    }
    return true;
}

std::vector<int> fundamental_cycle(const DynkinGraph& g)
{
    std::vector<int> z(g.size(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i <= g.size(); ++i) {
            int dot = 0;
            for (int j = 1; j <= g.size(); ++j) dot += z[j - 1] * g.entry(i, j);
            if (dot > 0) {
                ++z[i - 1];
                changed = true;
            }
        }
    }
    return z;
}

void check_meeting(const DynkinGraph& g, int meeting)
{
    const int n = g.size();
    if (meeting < 1 || meeting > n) throw std::invalid_argument("meeting vertex out of range");
    if (g.type().family == DuValType::Family::D && meeting != 1 && meeting != n - 1 && meeting != n)
        throw std::invalid_argument("a smooth curve on a D_n point meets E1, E(n-1) or En only");
}

CycleSolution solve_cycle(const DynkinGraph& g, int meeting, int E)
{
    check_meeting(g, meeting);
    const int n = g.size();
    if (E < 1 || E > n) throw std::invalid_argument("hypothesis vertex out of range");
    // Fraction-free elimination on [M | b] with b = -e_E - e_meeting.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = g.matrix()[i][j];
        a[i][n] = -(i + 1 == E ? 1 : 0) - (i + 1 == meeting ? 1 : 0);
    }
    mpz_class prev = 1;
    for (int p = 0; p < n; ++p) {
        if (a[p][p] == 0) {
            int r = p + 1;
            while (r < n && a[r][p] == 0) ++r;
            if (r == n) throw std::logic_error("intersection matrix is singular");
            std::swap(a[p], a[r]);
        }
        for (int i = p + 1; i < n; ++i) {
            for (int j = p + 1; j <= n; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    std::vector<Rational> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rational s = Rational(a[i][n]);
        for (int j = i + 1; j < n; ++j) s -= Rational(a[i][j]) * x[j];
        x[i] = s / Rational(a[i][i]);
        x[i].canonicalize();
    }
    CycleSolution sol;
    sol.meeting = meeting;
    sol.E = E;
    sol.coefficients = x;
    sol.integral = true;
    for (const auto& c : x)
        if (c.get_den() != 1 || c < 0) sol.integral = false;
    sol.d = x[E - 1];
    return sol;
}

CycleSolution select_edge(const DynkinGraph& g, int meeting)
{
    check_meeting(g, meeting);
    const auto z = fundamental_cycle(g);
    std::vector<CycleSolution> found;
    for (int v = 1; v <= g.size(); ++v) {
        if (z[v - 1] != 1) continue;
        CycleSolution s = solve_cycle(g, meeting, v);
        if (s.integral) found.push_back(std::move(s));
    }
    if (found.empty()) throw std::runtime_error("no integral exceptional cycle for this meeting vertex");
    if (found.size() > 1) throw std::runtime_error("several integral exceptional cycles for this meeting vertex");
    return found.front();
}

std::string CurvePosition::label() const
{
    switch (kind) {
    case Kind::A: return "A:k=" + std::to_string(k);
    case Kind::FDl: return "FD_l";
    case Kind::FDr: return "FD_r";
    case Kind::D4Symmetric: return "D4-symmetric";
    case Kind::Ambiguous: return "FD_l|FD_r";
    }
    return "?";
}

CurvePosition position_from_d(const DuValType& type, int d)
{
    using F = DuValType::Family;
    const int n = type.index;
    if (type.family == F::A) {
        if (d < 1 || d > (n + 1) / 2) throw std::invalid_argument("d inconsistent with " + type.label());
        return {CurvePosition::Kind::A, d};
    }
    if (type.family == F::D) {
        if (n == 4) {
            if (d != 2) throw std::invalid_argument("d inconsistent with D4");
            return {CurvePosition::Kind::D4Symmetric, 0};
        }
        const int right = n % 2 == 0 ? n / 2 : (n - 1) / 2;
        if (d == 2 && right == 2) return {CurvePosition::Kind::Ambiguous, 0};
        if (d == 2) return {CurvePosition::Kind::FDl, 0};
        if (d == right) return {CurvePosition::Kind::FDr, 0};
        throw std::invalid_argument("d inconsistent with " + type.label());
    }
    throw std::invalid_argument("no curve positions are tabulated for " + type.label());
}

}  // namespace dvc

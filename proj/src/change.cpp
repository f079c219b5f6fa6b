#include "dvc/change.hpp"

#include <algorithm>
#include <stdexcept>

namespace dvc {

namespace {

std::vector<std::vector<Rational>> linear_part(const std::vector<MultiPoly>& images, int n)
{
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = images[i].coeff(Exponent::unit(j));
    return m;
}

// Horner evaluation over variables first..n-1 with a per-call power cache.
class Substituter {
public:
    Substituter(const std::vector<MultiPoly>& images, int order, const VarList& target)
        : images_(images), order_(order), target_(target), powers_(images.size())
    {
    }

    MultiPoly run(const MultiPoly& p) { return eval(p, 0); }

private:
    const MultiPoly& power(int var, int k)
    {
        auto& cache = powers_[var];
        if (cache.empty()) {
            cache.emplace_back(target_, Rational(1));
            cache.push_back(images_[var].truncate(order_));
        }
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(mul_trunc(cache.back(), cache[1], order_));
        return cache[k];
    }

    MultiPoly eval(const MultiPoly& p, int var)
    {
        if (p.is_zero()) return MultiPoly(target_);
        if (var == static_cast<int>(images_.size())) return MultiPoly(target_, p.constant_term());
        auto parts = coefficients_in(p, var);
        MultiPoly acc(target_);
        int last = static_cast<int>(parts.size()) - 1;
        for (int k = last; k >= 0; --k) {
            if (parts[k].is_zero()) continue;
            MultiPoly v = eval(parts[k], var + 1);
            if (acc.is_zero()) {
                acc = std::move(v);
            } else {
                acc = mul_trunc(acc, power(var, last - k), order_);
                acc += v;
            }
            last = k;
        }
        if (last > 0) acc = mul_trunc(acc, power(var, last), order_);
        return acc;
    }

    const std::vector<MultiPoly>& images_;
    int order_;
    VarList target_;
    std::vector<std::vector<MultiPoly>> powers_;
};

}  // namespace

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m)
{
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational s = 1 / m[col][col];
        for (int j = 0; j < n; ++j) { m[col][j] *= s; inv[col][j] *= s; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int j = 0; j < n; ++j) { m[r][j] -= f * m[col][j]; inv[r][j] -= f * inv[col][j]; }
        }
    }
    return inv;
}

CoordinateChange::CoordinateChange(VarList vars, std::vector<MultiPoly> images)
    : vars_(std::move(vars)), images_(std::move(images))
{
    const int n = vars_.size();
    if (static_cast<int>(images_.size()) != n) throw std::invalid_argument("one image per variable required");
    for (const auto& im : images_) {
        if (!(im.vars() == vars_)) throw std::invalid_argument("image over different variables");
        if (im.constant_term() != 0) throw std::invalid_argument("not a coordinate change: image has a constant term");
    }
    try {
        (void)invert_matrix(linear_part(images_, n));
    } catch (const std::domain_error&) {
        throw std::invalid_argument("not a coordinate change: linear part is not invertible");
    }
}

CoordinateChange CoordinateChange::identity(const VarList& vars)
{
    std::vector<MultiPoly> im;
    for (int i = 0; i < vars.size(); ++i) im.push_back(MultiPoly::variable(vars, i));
    return CoordinateChange(vars, std::move(im));
}

CoordinateChange CoordinateChange::substitution(const VarList& vars,
                                                const std::vector<std::pair<int, MultiPoly>>& subs)
{
    std::vector<MultiPoly> im;
    for (int i = 0; i < vars.size(); ++i) im.push_back(MultiPoly::variable(vars, i));
    for (const auto& [v, p] : subs) im.at(v) = p;
    return CoordinateChange(vars, std::move(im));
}

bool CoordinateChange::is_identity() const
{
    for (int i = 0; i < vars_.size(); ++i)
        if (!(images_[i] == MultiPoly::variable(vars_, i))) return false;
    return true;
}

CoordinateChange CoordinateChange::then(const CoordinateChange& next, int order) const
{
    std::vector<MultiPoly> im;
    for (const auto& p : images_) im.push_back(apply_change(p, next, order).poly());
    return CoordinateChange(vars_, std::move(im));
}

CoordinateChange CoordinateChange::truncated(int order) const
{
    std::vector<MultiPoly> im;
    for (const auto& p : images_) im.push_back(p.truncate(order));
    return CoordinateChange(vars_, std::move(im));
}

CoordinateChange CoordinateChange::inverse(int order) const
{
    const int n = vars_.size();
    const auto linv = invert_matrix(linear_part(images_, n));
    std::vector<MultiPoly> higher;
    for (const auto& p : images_) higher.push_back(p.part_between(2, order));
    auto apply_linv = [&](const std::vector<MultiPoly>& v) {
        std::vector<MultiPoly> out(n, MultiPoly(vars_));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (linv[i][j] != 0) out[i] += v[j] * linv[i][j];
        return out;
    };
    std::vector<MultiPoly> x;
    for (int i = 0; i < n; ++i) x.push_back(MultiPoly::variable(vars_, i));
    // g = L^{-1} (x - H(g)), each pass fixes one more degree.
    std::vector<MultiPoly> g = apply_linv(x);
    for (int pass = 2; pass <= order; ++pass) {
        std::vector<MultiPoly> rhs = x;
        for (int i = 0; i < n; ++i) rhs[i] -= substitute(higher[i], g, order);
        g = apply_linv(rhs);
    }
    return CoordinateChange(vars_, std::move(g));
}

std::vector<std::pair<std::string, std::string>> CoordinateChange::describe() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < vars_.size(); ++i)
        if (!(images_[i] == MultiPoly::variable(vars_, i))) out.emplace_back(vars_[i], images_[i].to_string());
    return out;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int order)
{
    if (static_cast<int>(images.size()) != p.nvars()) throw std::invalid_argument("one image per variable required");
    if (images.empty()) return p;
    const VarList target = images.front().vars();
    return Substituter(images, order, target).run(p).truncate(order);
}

Jet apply_change(const MultiPoly& p, const CoordinateChange& c, int order)
{
    if (!(p.vars() == c.vars())) throw std::invalid_argument("change over different variables");
    return Jet(substitute(p.truncate(order), c.images(), order), order);
}

}  // namespace dvc

#include "dvc/factor.hpp"

#include "dvc/change.hpp"

#include <stdexcept>

namespace dvc {

namespace {

FormVars resolve(const MultiPoly& f, FormVars vars)
{
    if (vars.empty()) {
        if (f.nvars() != 3) throw std::invalid_argument("form variables must be given for a ring with other than 3 variables");
        vars = {0, 1, 2};
    }
    if (vars.size() != 3) throw std::invalid_argument("exactly three form variables expected");
    for (int v : f.used_vars())
        if (v != vars[0] && v != vars[1] && v != vars[2])
            throw std::invalid_argument("polynomial uses a variable outside the form variables");
    return vars;
}

// Ring: params..., v0, v1, v2.  Returns f written in that ring.
struct LineRing {
    VarList ring;
    int nparams;
    MultiPoly image_of_f;
};

LineRing embed(const MultiPoly& f, const FormVars& vars, const std::vector<std::string>& params)
{
    std::vector<std::string> names = params;
    names.insert(names.end(), {"v0", "v1", "v2"});
    VarList ring(names);
    std::vector<int> map(f.nvars(), -1);
    for (int k = 0; k < 3; ++k) map[vars[k]] = static_cast<int>(params.size()) + k;
    return {ring, static_cast<int>(params.size()), f.remap(ring, map)};
}

// Substitute v_p = -(affine) - b v_q1 - c v_q2 and return the coefficient
// system in the parameters, one polynomial per monomial in v_q1, v_q2.
std::vector<MultiPoly> vanishing_system(const LineRing& lr, const MultiPoly& g, int p, bool affine)
{
    const VarList& R = lr.ring;
    const int base = lr.nparams;
    const int q1 = base + (p + 1) % 3, q2 = base + (p + 2) % 3;
    // params: [a0,] b, c
    const int pb = affine ? 1 : 0;
    MultiPoly line = -(MultiPoly::variable(R, pb) * MultiPoly::variable(R, q1)) -
                     MultiPoly::variable(R, pb + 1) * MultiPoly::variable(R, q2);
    if (affine) line -= MultiPoly::variable(R, 0);
    std::vector<MultiPoly> images;
    for (int i = 0; i < R.size(); ++i) images.push_back(MultiPoly::variable(R, i));
    images[base + p] = line;
    const MultiPoly s = substitute(g, images, 1000);
    std::vector<MultiPoly> out;
    for (auto& [key, coeff] : coefficients_in(s, std::vector<int>{q1, q2})) out.push_back(coeff);
    return out;
}

bool any_chart_solvable(const LineRing& lr, const std::vector<MultiPoly>& polys, bool affine)
{
    for (int p = 0; p < 3; ++p) {
        std::vector<MultiPoly> system;
        for (const auto& g : polys) {
            auto part = vanishing_system(lr, g, p, affine);
            system.insert(system.end(), part.begin(), part.end());
        }
        if (has_common_zero(PolyIdeal(lr.ring, system))) return true;
    }
    return false;
}

}  // namespace

bool linear_factor_exists(const MultiPoly& f, FormVars vars)
{
    vars = resolve(f, vars);
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != 3)
        throw std::invalid_argument("linear_factor_exists expects a nonzero homogeneous cubic");
    const LineRing lr = embed(f, vars, {"b", "c"});
    return any_chart_solvable(lr, {lr.image_of_f}, false);
}

bool square_linear_factor_exists(const MultiPoly& f, FormVars vars)
{
    vars = resolve(f, vars);
    if (f.is_zero()) return true;
    if (!f.is_homogeneous() || f.degree() < 2)
        throw std::invalid_argument("square_linear_factor_exists expects a homogeneous form of degree >= 2");
    const LineRing lr = embed(f, vars, {"b", "c"});
    // l = v_p + b v_q1 + c v_q2 squared divides f iff l divides f and d f / d v_p.
    for (int p = 0; p < 3; ++p) {
        std::vector<MultiPoly> system = vanishing_system(lr, lr.image_of_f, p, false);
        auto d = vanishing_system(lr, lr.image_of_f.derivative(lr.nparams + p), p, false);
        system.insert(system.end(), d.begin(), d.end());
        if (has_common_zero(PolyIdeal(lr.ring, system))) return true;
    }
    return false;
}

bool proper_component_through_origin(const MultiPoly& f, FormVars vars)
{
    vars = resolve(f, vars);
    if (f.is_zero()) throw std::invalid_argument("zero polynomial: caller decides");
    if (f.constant_term() != 0) throw std::invalid_argument("polynomial has a constant term");
    if (f.degree() > 3) throw std::invalid_argument("degree above 3");
    if (f.degree() <= 1) return false;
    const LineRing lr = embed(f, vars, {"a0", "b", "c"});
    return any_chart_solvable(lr, {lr.image_of_f}, true);
}

}  // namespace dvc

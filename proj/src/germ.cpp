#include "dvc/germ.hpp"

#include "dvc/parse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dvc {

namespace {

bool is_variable(const MultiPoly& p, int i)
{
    return p == MultiPoly::variable(p.vars(), i);
}

CurveFrame make_frame(const Jet& F, const std::vector<MultiPoly>& curve)
{
    const VarList& vars = F.vars();
    const int n = vars.size();
    const int order = F.order();
    // Try every choice of the along-variable and every assignment of generators
    // to the remaining slots; prefer the one closest to the identity.
    int best_cost = -1;
    std::vector<MultiPoly> best;
    std::vector<int> best_normal;
    int best_along = -1;
    for (int w = 0; w < n; ++w) {
        std::vector<int> slots;
        for (int i = 0; i < n; ++i)
            if (i != w) slots.push_back(i);
        std::sort(slots.begin(), slots.end());
        do {
            std::vector<MultiPoly> images(n, MultiPoly(vars));
            images[w] = MultiPoly::variable(vars, w);
            for (int k = 0; k < n - 1; ++k) images[slots[k]] = curve[k];
            int cost = 0;
            for (int i = 0; i < n; ++i)
                if (!is_variable(images[i], i)) ++cost;
            if (best_cost >= 0 && cost >= best_cost) continue;
            try {
                CoordinateChange probe(vars, images);
            } catch (const std::invalid_argument&) {
                continue;
            }
            best_cost = cost;
            best = images;
            best_normal = slots;
            best_along = w;
        } while (std::next_permutation(slots.begin(), slots.end()));
    }
    if (best_cost < 0) throw std::invalid_argument("curve is not smooth: generators have dependent linear parts");
    const CoordinateChange forward(vars, best);
    CurveFrame fr{apply_change(F, forward.inverse(order), order), forward.inverse(order), best_normal, best_along};
    return fr;
}

}  // namespace

Germ::Germ(const MultiPoly& F, std::vector<MultiPoly> curve, int order)
    : F_(F, order), curve_(std::move(curve)), frame_{Jet(MultiPoly(F.vars()), 1), CoordinateChange::identity(F.vars()), {}, -1}
{
    const int n = F.nvars();
    if (n < 2) throw std::invalid_argument("germ needs at least two variables");
    if (static_cast<int>(curve_.size()) != n - 1)
        throw std::invalid_argument("a curve in " + std::to_string(n) + " variables needs " + std::to_string(n - 1) +
                                    " generators");
    for (const auto& g : curve_) {
        if (!(g.vars() == F.vars())) throw std::invalid_argument("curve generator over different variables");
        if (g.constant_term() != 0) throw std::invalid_argument("curve does not pass through the origin");
    }
    if (F.constant_term() != 0) throw std::invalid_argument("hypersurface does not pass through the origin");
    frame_ = make_frame(F_, curve_);
    MultiPoly on_curve = frame_.F.poly();
    for (int v : frame_.normal) on_curve = on_curve.evaluate(v, 0);
    if (!on_curve.is_zero()) throw std::invalid_argument("the curve does not lie on the hypersurface");
}

bool Germ::curve_is_coordinate() const
{
    return frame_.change.is_identity();
}

Germ parse_germ(const std::string& equation, const std::vector<std::string>& curve, const VarList& vars, int order)
{
    std::vector<MultiPoly> gens;
    for (const auto& c : curve) gens.push_back(parse_poly(c, vars));
    return Germ(parse_poly(equation, vars), std::move(gens), order);
}

}  // namespace dvc

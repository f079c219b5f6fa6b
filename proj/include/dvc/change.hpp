#pragma once

#include "dvc/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dvc {

class CoordinateChange {
public:
    // images[i] is the polynomial substituted for variable i.  The images must have
    // no constant term and an invertible linear part.
    CoordinateChange(VarList vars, std::vector<MultiPoly> images);

    static CoordinateChange identity(const VarList& vars);
    // Identity except for the listed substitutions.
    static CoordinateChange substitution(const VarList& vars,
                                         const std::vector<std::pair<int, MultiPoly>>& subs);

    const VarList& vars() const { return vars_; }
    const std::vector<MultiPoly>& images() const { return images_; }
    bool is_identity() const;

    // Composite that acts like applying *this first and then next.
    CoordinateChange then(const CoordinateChange& next, int order) const;
    // Inverse up to the given jet order.
    CoordinateChange inverse(int order) const;
    CoordinateChange truncated(int order) const;

    std::vector<std::pair<std::string, std::string>> describe() const;

private:
    VarList vars_;
    std::vector<MultiPoly> images_;
};

// p(images), truncated at order.
Jet apply_change(const MultiPoly& p, const CoordinateChange& c, int order);
inline Jet apply_change(const Jet& p, const CoordinateChange& c, int order)
{
    return apply_change(p.poly(), c, std::min(order, p.order()));
}

// Substitute arbitrary images for the variables of p (images may live in another ring).
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int order);

// Rational matrix inverse; throws std::domain_error when singular.
std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m);

}  // namespace dvc

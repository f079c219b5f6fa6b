#pragma once
// Random germs in the shapes each normal-form reduction accepts.

#include "dvc/germ.hpp"
#include "dvc/normal_form.hpp"
#include "dvc/parse.hpp"

#include <random>
#include <string>
#include <vector>

namespace samples {

struct Sample {
    dvc::MultiPoly F;
    std::vector<std::string> curve;
};

inline int small(std::mt19937& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// Random polynomial in x, y, z, t with total degree in [lo, hi]; `keep` filters exponents.
template <class Keep>
dvc::MultiPoly random_tail(std::mt19937& rng, int terms, int lo, int hi, Keep keep)
{
    const dvc::VarList v = dvc::default_vars();
    dvc::MultiPoly p(v);
    for (int k = 0; k < terms; ++k) {
        const int deg = small(rng, lo, hi);
        dvc::Exponent e;
        int left = deg;
        for (int i = 0; i < 3; ++i) {
            const int a = small(rng, 0, left);
            e.set(i, a);
            left -= a;
        }
        e.set(3, left);
        if (keep(e)) p.add_term(e, dvc::Rational(small(rng, -3, 3)));
    }
    return p;
}

inline dvc::MultiPoly random_unit(std::mt19937& rng)
{
    return dvc::MultiPoly(dvc::default_vars(), dvc::Rational(1)) +
           random_tail(rng, 3, 1, 2, [](dvc::Exponent) { return true; });
}

inline dvc::MultiPoly P(const std::string& s)
{
    return dvc::parse_poly(s);
}

inline Sample random_germ(dvc::FormTag tag, int n, std::mt19937& rng)
{
    using dvc::FormTag;
    const dvc::MultiPoly t = P("t");
    const int X = 0, Y = 1, Z = 2, T = 3;
    auto pure_z = [&](dvc::Exponent e, int k) { return e[X] == 0 && e[Y] == 0 && e[T] == 0 && e[Z] == k; };
    dvc::MultiPoly base(dvc::default_vars()), phi(dvc::default_vars());
    std::vector<std::string> curve;
    const dvc::Rational c(small(rng, 1, 3));
    switch (tag) {
    case FormTag::D_FDl:
    case FormTag::D_FDl_n5plus: {
        base = P("x^2+y^2*z") + P("z").pow(n - 1) * c;
        if (n == 4)
            phi = random_tail(rng, 6, 2, 5, [](dvc::Exponent) { return true; });
        else
            phi = random_tail(rng, 6, 3, 6, [](dvc::Exponent) { return true; });
        if (n >= 5 && rng() % 2 == 0) {
            const dvc::Rational a3(small(rng, -2, 2));
            phi += P("y*z") * a3 + P("z*t") * dvc::Rational(a3 * a3 / 4);
        }
        curve = {"x", "z", "t"};
        break;
    }
    case FormTag::D_FDr_even: {
        const int m = n / 2;
        base = P("x^2+y^2*z") + P("y") * P("z").pow(m) * c;
        phi = random_tail(rng, 7, 2, 6, [&](dvc::Exponent e) {
            for (int k = 0; k < m; ++k)
                if (pure_z(e, k)) return false;
            return true;
        });
        curve = {"x", "y", "t"};
        break;
    }
    case FormTag::D_FDr_odd_a:
    case FormTag::D_FDr_odd_b: {
        const int m = (n - 1) / 2;
        base = P("x^2+y^2*z") + P("x") * P("z").pow(m) * c;
        phi = random_tail(rng, 7, 2, 6, [&](dvc::Exponent e) {
            for (int k = 0; k <= m; ++k)
                if (pure_z(e, k)) return false;
            return true;
        });
        curve = {"x", "y", "t"};
        break;
    }
    case FormTag::A3_middle: {
        base = P("x^2+2*x*z^2") + P("y^2") * c;
        phi = random_tail(rng, 7, 1, 5, [&](dvc::Exponent e) { return !pure_z(e, 1); });
        curve = {"x", "y", "t"};
        break;
    }
    }
    return {random_unit(rng) * (base + t * phi), curve};
}

}  // namespace samples

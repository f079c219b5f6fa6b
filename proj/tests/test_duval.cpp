#include "dvc/change.hpp"
#include "dvc/duval.hpp"
#include "dvc/parse.hpp"

#include <doctest.h>

#include <random>

using namespace dvc;

namespace {

const VarList xyz{"x", "y", "z"};

MultiPoly P(const std::string& s)
{
    return parse_poly(s, xyz);
}

std::string pw(const std::string& v, int k)
{
    return v + "^" + std::to_string(k);
}

DuValType classify(const std::string& s, int N = 12)
{
    return classify_duval(Jet(P(s), N), N);
}

}  // namespace

TEST_CASE("table rows")
{
    for (int n = 1; n <= 10; ++n) CHECK(classify(pw("z", n + 1) + "-x*y") == DuValType::A(n));
    for (int n = 4; n <= 10; ++n) CHECK(classify("x^2+y^2*z-" + pw("z", n - 1)) == DuValType::D(n));
    CHECK(classify("x^2+y^3-z^4") == DuValType::E(6));
    CHECK(classify("x^2+y^3+y*z^3") == DuValType::E(7));
    CHECK(classify("x^2+y^3+z^5") == DuValType::E(8));
}

TEST_CASE("surface examples")
{
    const VarList uvw = surface_vars();
    CHECK(classify_duval(Jet(parse_poly("v*w-u^5", uvw), 12), 12) == DuValType::A(4));
    CHECK(classify_duval(Jet(parse_poly("u^2+v^2*w+w^5", uvw), 12), 12) == DuValType::D(6));
    CHECK(classify_duval(Jet(parse_poly("u^2+v^2+w^2", uvw), 12), 12) == DuValType::A(1));
    CHECK(classify("x+y^2") == DuValType::smooth());
    CHECK(classify("x^3+y^3+z^3") == DuValType::not_duval());
    CHECK(classify("x^2+y^3+z^7") == DuValType::not_duval());
    // Non-isolated: no jet decides it.
    CHECK(classify("x^2").family == DuValType::Family::Undetermined);
}

TEST_CASE("sections through a curve on x^2+y^3+z^3+y*t^6 are not Du Val")
{
    // x = a y + b z on x^2 + y^3 + z^3 + y t^6, written in (y, z, t).
    const VarList yzt{"y", "z", "t"};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, -1}, {2, 5}, {-4, 3}}) {
        const std::string l = "(" + std::to_string(a) + "*y+" + std::to_string(b) + "*z)";
        const MultiPoly g = parse_poly(l + "^2+y^3+z^3+y*t^6", yzt);
        CHECK(classify_duval(Jet(g, 12), 12) == DuValType::not_duval());
    }
}

TEST_CASE("undetermined at low order")
{
    const auto r = classify_duval_report(Jet(P("x^2+y^2+z^14"), 12), 12);
    CHECK(r.type.family == DuValType::Family::Undetermined);
    CHECK_FALSE(r.order_sufficient);
    CHECK(classify("x^2+y^2+z^14", 14) == DuValType::A(13));
    CHECK(classify("x^2+y^2*z+z^12", 10).family == DuValType::Family::Undetermined);
}

TEST_CASE("labels round trip")
{
    for (const auto& t : {DuValType::A(3), DuValType::D(7), DuValType::E(6), DuValType::smooth(), DuValType::not_duval()})
        CHECK(DuValType::from_label(t.label()) == t);
}

TEST_CASE("invariance under coordinate changes and units")
{
    std::mt19937 rng(19);
    const std::vector<std::pair<std::string, DuValType>> rows{
        {"z^4-x*y", DuValType::A(3)},         {"x^2+y^2*z-z^4", DuValType::D(5)},
        {"x^2+y^2*z-z^5", DuValType::D(6)},   {"x^2+y^3-z^4", DuValType::E(6)},
        {"x^2+y^3+y*z^3", DuValType::E(7)},   {"x^2+y^2+z^6", DuValType::A(5)},
        {"x^2+y^2*z+z^3", DuValType::D(4)},
    };
    auto r = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
    for (const auto& [eq, type] : rows) {
        for (int k = 0; k < 4; ++k) {
            std::vector<MultiPoly> im;
            for (int i = 0; i < 3; ++i) {
                MultiPoly p = MultiPoly::variable(xyz, i);
                for (int j = 0; j < 3; ++j)
                    if (j != i) p += MultiPoly::variable(xyz, j) * r();
                im.push_back(p);
            }
            CoordinateChange c = CoordinateChange::identity(xyz);
            try {
                c = CoordinateChange(xyz, im);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const MultiPoly unit = MultiPoly(xyz, Rational(1)) + MultiPoly::variable(xyz, 0) * r() +
                                   MultiPoly::variable(xyz, 2) * r();
            const Jet g = Jet(unit, 12) * apply_change(P(eq), c, 12);
            CHECK_MESSAGE(classify_duval(g, 12) == type, eq);
        }
    }
}

TEST_CASE("binary cubic patterns")
{
    const VarList vw{"v", "w"};
    CHECK(binary_cubic_pattern(parse_poly("v^3+w^3", vw), 0, 1) == CubicPattern::ThreeDistinct);
    CHECK(binary_cubic_pattern(parse_poly("v^2*w", vw), 0, 1) == CubicPattern::DoubleAndSimple);
    CHECK(binary_cubic_pattern(parse_poly("(v+2*w)^3", vw), 0, 1) == CubicPattern::Triple);
    CHECK(binary_cubic_pattern(parse_poly("0", vw), 0, 1) == CubicPattern::Zero);
    const auto lines = binary_cubic_lines(parse_poly("(v-w)^2*(v+3*w)", vw), 0, 1);
    CHECK(lines.pattern == CubicPattern::DoubleAndSimple);
    CHECK(lines.repeated.coeff(Exponent::unit(0)) * -1 == lines.repeated.coeff(Exponent::unit(1)));
    CHECK(lines.simple.coeff(Exponent::unit(0)) * 3 == lines.simple.coeff(Exponent::unit(1)));
}

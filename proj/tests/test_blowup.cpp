#include "dvc/blowup.hpp"
#include "dvc/cycles.hpp"
#include "dvc/parse.hpp"

#include <doctest.h>

using namespace dvc;

namespace {

Germ germ(const std::string& eq, std::vector<std::string> curve, int N = 12)
{
    return parse_germ(eq, curve, default_vars(), N);
}

std::string pw(const std::string& v, int k)
{
    return v + "^" + std::to_string(k);
}

int surface_d(const std::string& g, std::vector<std::string> curve)
{
    return surface_blowup(parse_germ(g, curve, VarList{"x", "y", "z"}, 14)).decomposition.d;
}

}  // namespace

TEST_CASE("chart identity")
{
    const Blowup b = blowup_curve(germ("x^2+y^2*z+2*y*z^3+t^3", {"x", "y", "t"}));
    for (const auto& c : b.charts) {
        const MultiPoly e = MultiPoly::variable(c.strict.vars(), c.chart);
        CHECK(c.strict * e.pow(c.multiplicity) == c.total);
        CHECK(c.multiplicity == 1);
    }
}

TEST_CASE("d along FD_r and FD_l normal forms")
{
    for (int m = 3; m <= 5; ++m) {
        const Blowup b = blowup_curve(germ("x^2+y^2*z+2*y*" + pw("z", m) + "+t*(t^2+y*z)", {"x", "y", "t"}));
        CHECK(b.decomposition.d == m);
        CHECK(b.decomposition.e2_present());
    }
    const Blowup l = blowup_curve(germ("x^2+y^2*z+z^5+t*(y^3+t^3)", {"x", "z", "t"}));
    CHECK(l.decomposition.d == 2);
}

TEST_CASE("smooth ambient has no E2")
{
    const Blowup b = blowup_curve(germ("x", {"x", "y", "z"}));
    CHECK(b.decomposition.d == 0);
    CHECK_FALSE(b.decomposition.e2_present());
}

TEST_CASE("chart of a germ without Du Val sections")
{
    const Blowup b = blowup_curve(germ("x^2+y^3+z^3+y*t^6", {"x", "y", "z"}));
    CHECK(b.chart_for("z").strict == parse_poly("x^2*z+y^3*z^2+z^2+y*t^6"));
}

TEST_CASE("surface blow-ups against the cycle solver")
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; 2 * k <= n + 1; ++k) {
            const int d = surface_d(pw("z", n + 1) + "-x*y", {"x-" + pw("z", k), "y-" + pw("z", n + 1 - k)});
            CHECK(d == k);
            CHECK(select_edge(DynkinGraph(DuValType::A(n)), k).d == d);
        }
    for (int n = 4; n <= 9; ++n) CHECK(surface_d("x^2+y^2*z-" + pw("z", n - 1), {"x", "z"}) == 2);
    for (int n = 3; n <= 5; ++n) CHECK(surface_d("x^2+y^2*z-" + pw("z", 2 * n - 1), {"x", "y-" + pw("z", n - 1)}) == n);
    for (int n = 2; n <= 5; ++n) CHECK(surface_d("x^2+y^2*z-" + pw("z", 2 * n), {"x-" + pw("z", n), "y"}) == n);
}

TEST_CASE("singular locus along L")
{
    // Even D along FD_r: finitely many singular points on L.
    const Blowup even = blowup_curve(germ("x^2+y^2*z+2*y*z^3+t^3", {"x", "y", "t"}));
    const ChartDivisors& de = even.divisors_for("t");
    REQUIRE(de.L);
    CHECK(singular_locus_along(even.chart_for("t").strict, *de.L).verdict != SingularLocusReport::Verdict::PositiveDimensional);

    // Odd D along FD_r: singular along L.
    const Blowup odd = blowup_curve(germ("x^2+y^2*z+2*x*z^3+t^4", {"x", "y", "t"}));
    const ChartDivisors& dd = odd.divisors_for("t");
    REQUIRE(dd.L);
    CHECK(singular_locus_along(odd.chart_for("t").strict, *dd.L).verdict == SingularLocusReport::Verdict::PositiveDimensional);

    const VarList v = default_vars();
    const PolyIdeal axis(v, {parse_poly("x"), parse_poly("y"), parse_poly("z")});
    CHECK(singular_locus_along(parse_poly("x+y^2"), axis).verdict == SingularLocusReport::Verdict::Empty);
    CHECK_THROWS(singular_locus_along(parse_poly("x+t"), axis));
}

TEST_CASE("qfactorialize")
{
    const int t = 3;
    const auto m3 = qfactorialize(blowup_curve(germ("x^2+y^2*z+2*y*z^3+t^3", {"x", "y", "t"})), t);
    CHECK(m3.along_C.verdict != SingularLocusReport::Verdict::PositiveDimensional);
    const auto m5 = qfactorialize(blowup_curve(germ("x^2+y^2*z+2*y*z^3+t^5", {"x", "y", "t"})), t);
    CHECK(m5.along_C.verdict == SingularLocusReport::Verdict::PositiveDimensional);
    const auto fdl = qfactorialize(blowup_curve(germ("x^2+y^2*z+z^4+t^4", {"x", "z", "t"})), t);
    CHECK(fdl.along_C.verdict == SingularLocusReport::Verdict::PositiveDimensional);
    CHECK_THROWS_AS(qfactorialize(blowup_curve(germ("x^2+y^2*z+2*x*z^3+t^4", {"x", "y", "t"})), t), UnsupportedRegime);
}

TEST_CASE("multiplicity_drop")
{
    CHECK(multiplicity_drop(germ("x^3+y^3+z^3+x*t^2", {"x", "y", "z"}), parse_poly("t")) == 2);
    CHECK(multiplicity_drop(germ("x^2+y^2*z+2*y*z^3+t^3", {"x", "y", "t"}), parse_poly("z")) == 1);
}

#include "dvc/duval.hpp"
#include "dvc/normal_form.hpp"

#include "germ_samples.hpp"

#include <doctest.h>

using namespace dvc;

namespace {

Germ germ(const std::string& eq, std::vector<std::string> curve, int N = 12)
{
    return parse_germ(eq, curve, default_vars(), N);
}

MultiPoly P(const std::string& s)
{
    return parse_poly(s);
}

bool has_monomial(const Jet& F, const std::string& m)
{
    return F.poly().coeff(P(m).terms().begin()->first) != 0;
}

}  // namespace

TEST_CASE("square test on q2")
{
    const VarList xyz{"x", "y", "z"};
    CHECK(square_test_q2(parse_poly("y^2", xyz)));
    CHECK_FALSE(square_test_q2(parse_poly("x*y", xyz)));
    CHECK(square_test_q2(parse_poly("y^2+2*y*z+z^2", xyz)));
    CHECK_FALSE(square_test_q2(parse_poly("x^2", xyz)));
}

TEST_CASE("general section A test")
{
    CHECK(is_general_section_A(germ("x^2+y^2+z*t", {"x", "y", "z"})));
    CHECK_FALSE(is_general_section_A(germ("x^2+y^3+z^3+y*t^6", {"x", "y", "z"})));
    CHECK_FALSE(is_general_section_A(germ("x^2+y^2*z+z^3+t^5", {"x", "z", "t"})));
}

TEST_CASE("FD_l with phi_2 = 0")
{
    const Germ g = germ("x^2+y^2*z+z^4+t*(y^3+z^2*t)", {"x", "z", "t"});
    const NormalFormResult r = normalize(g, FormTag::D_FDl);
    CHECK(r.tag == FormTag::D_FDl_n5plus);
    CHECK(r.n == 5);
    CHECK(certificate_holds(g.F().poly(), r));
    CHECK(excluded_violations(r).empty());
    for (const char* m : {"t^3", "z^2*t", "y*z*t", "y*t^2", "z*t^2"}) CHECK_FALSE(has_monomial(r.F_normal, m));
}

TEST_CASE("FD_l rejects a D4 section")
{
    CHECK_THROWS_AS(normalize(germ("x^2+y^2*z+z^4+t^3", {"x", "z", "t"}), FormTag::D_FDl_n5plus), WrongStratum);
    CHECK_THROWS_AS(normalize(germ("x^2+y^2*z+z^4+t*y", {"x", "z", "t"}), FormTag::D_FDl), WrongStratum);
}

TEST_CASE("FD_r even")
{
    const Germ g = germ("x^2+y^2*z+2*y*z^3+t*z^5", {"x", "y", "t"});
    const NormalFormResult r = normalize(g, FormTag::D_FDr_even);
    CHECK(r.n == 6);
    CHECK(certificate_holds(g.F().poly(), r));
    CHECK(excluded_violations(r).empty());
    for (int k = 1; k <= 11; ++k) CHECK(r.F_normal.poly().coeff(Exponent::unit(3) + Exponent::unit(2, k)) == 0);

    CHECK_THROWS_AS(normalize(germ("x^2+y^2*z+2*y*z^3+t*z^2", {"x", "y", "t"}), FormTag::D_FDr_even), WrongStratum);
}

TEST_CASE("FD_r odd variants")
{
    const Germ g = germ("x^2+y^2*z+2*x*z^2+t*(z^4+y*z*t+y^2*t)", {"x", "y", "t"});
    const NormalFormResult a = normalize(g, FormTag::D_FDr_odd_a);
    CHECK(a.n == 5);
    CHECK(certificate_holds(g.F().poly(), a));
    CHECK(excluded_violations(a).empty());
    const NormalFormResult b = normalize(g, FormTag::D_FDr_odd_b);
    CHECK(certificate_holds(g.F().poly(), b));
    CHECK(excluded_violations(b).empty());
    CHECK_FALSE(has_monomial(b.F_normal, "y^2*t"));
}

TEST_CASE("A3 middle")
{
    const Germ s = germ("x*y-z^4", {"x-z^2", "y-z^2", "t"});
    const NormalFormResult r = normalize_A3_middle(s);
    CHECK(r.F_normal.poly() == P("x^2-y^2+2*x*z^2"));
    CHECK(certificate_holds(s.F().poly(), r));
    REQUIRE(r.f_le3);
    CHECK(*r.f_le3 == P("2*x*z^2"));

    const Germ tt = germ("x^2+y^2+2*x*z^2+t*t", {"x", "y", "t"});
    const NormalFormResult q = normalize_A3_middle(tt);
    CHECK(*q.f_le3 == P("2*x*z^2+t^2"));
    CHECK(q.change.is_identity());

    CHECK_THROWS_AS(normalize_A3_middle(germ("x^2+y^2+2*x*z^2+t*z", {"x", "y", "t"})), WrongStratum);
}

TEST_CASE("idempotence")
{
    const Germ g = germ("x^2+y^2*z+z^4+t^4", {"x", "z", "t"});
    const NormalFormResult r = normalize(g, FormTag::D_FDl);
    CHECK(r.change.is_identity());
    CHECK(r.F_normal.poly() == g.F().poly());

    const Germ h = germ("x^2+y^2*z+2*y*z^3+t^3", {"x", "y", "t"});
    const NormalFormResult once = normalize(h, FormTag::D_FDr_even);
    const Germ again(once.F_normal.poly(), h.curve(), 12);
    const NormalFormResult twice = normalize(again, FormTag::D_FDr_even);
    CHECK(twice.change.is_identity());
    CHECK(twice.F_normal == once.F_normal);
}

TEST_CASE("random germs keep their certificates")
{
    std::mt19937 rng(2024);
    const std::vector<std::pair<FormTag, int>> strata{{FormTag::D_FDl, 4},       {FormTag::D_FDl_n5plus, 6},
                                                      {FormTag::D_FDr_even, 8},  {FormTag::D_FDr_odd_a, 7},
                                                      {FormTag::D_FDr_odd_b, 7}, {FormTag::A3_middle, 3}};
    for (const auto& [tag, n] : strata)
        for (int k = 0; k < 8; ++k) {
            const samples::Sample s = samples::random_germ(tag, n, rng);
            const Germ g(s.F, {P(s.curve[0]), P(s.curve[1]), P(s.curve[2])}, 12);
            const NormalFormResult r = normalize(g, tag);
            CHECK_MESSAGE(certificate_holds(g.F().poly(), r), s.F.to_string());
            CHECK_MESSAGE(excluded_violations(r).empty(), s.F.to_string());
            CHECK(r.n == n);
            if (tag != FormTag::A3_middle) {
                // The t = 0 section keeps its type.
                const VarList xyz{"x", "y", "z"};
                auto section = [&](const MultiPoly& F) {
                    return classify_duval(Jet(F.evaluate(3, 0).remap(xyz, {0, 1, 2, -1}), 12), 12);
                };
                CHECK(section(g.F().poly()) == section(r.F_normal.poly()));
            }
        }
}

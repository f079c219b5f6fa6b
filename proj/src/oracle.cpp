#include "dvc/oracle.hpp"

#include "dvc/ideal_ops.hpp"
#include "dvc/normal_form.hpp"

#include <climits>
#include <random>

namespace dvc {

namespace {

// Variables of the germ other than `drop`, and the index map into them.
VarList without(const VarList& v, int drop, std::vector<int>& map)
{
    std::vector<std::string> names;
    map.assign(v.size(), -1);
    for (int i = 0; i < v.size(); ++i)
        if (i != drop) {
            map[i] = static_cast<int>(names.size());
            names.push_back(v[i]);
        }
    return VarList(names);
}

std::string type_position(const SectionSample& s)
{
    std::string out = s.type.label();
    if (s.position) out += " " + s.position->label();
    return out;
}

bool three_fold(const Germ& g)
{
    return g.vars().size() == 4 && g.frame().normal.size() == 3;
}

}  // namespace

int GenericityOrder::rank(const DuValType& t)
{
    using F = DuValType::Family;
    switch (t.family) {
    case F::Smooth: return 0;
    case F::A: return t.index;
    case F::D: return 1000 + t.index;
    case F::E: return 2000 + t.index;
    case F::NotDuVal: return 3000;
    case F::Undetermined: return 4000;
    }
    return 4000;
}

CurvePosition tangent_position(const Jet& section, int along)
{
    const MultiPoly& f = section.poly();
    const MultiPoly q = f.homogeneous_part(2);
    MultiPoly l(f.vars());
    for (int v = 0; v < f.nvars() && l.is_zero(); ++v) l = q.derivative(v);
    if (l.is_zero() || l.coeff(Exponent::unit(along)) != 0)
        throw std::logic_error("tangent test needs a rank one quadratic part containing the curve tangent");
    int p = -1, r = -1;
    for (int v = 0; v < f.nvars(); ++v)
        if (v != along) (p < 0 ? p : r) = v;
    const Rational a = l.coeff(Exponent::unit(p)), b = l.coeff(Exponent::unit(r));
    std::vector<MultiPoly> im;
    for (int v = 0; v < f.nvars(); ++v) im.push_back(MultiPoly::variable(f.vars(), v));
    im[p] = MultiPoly::variable(f.vars(), p) * b;
    im[r] = MultiPoly::variable(f.vars(), p) * Rational(-a);
    const MultiPoly c = substitute(f.homogeneous_part(3), im, 3);
    const CubicLines lines = binary_cubic_lines(c, p, along);
    auto is_tangent = [&](const MultiPoly& factor) {
        return !factor.is_zero() && factor.coeff(Exponent::unit(along)) == 0;
    };
    if (lines.pattern == CubicPattern::DoubleAndSimple) {
        if (is_tangent(lines.repeated)) return CurvePosition{CurvePosition::Kind::FDr, 0};
        if (is_tangent(lines.simple)) return CurvePosition{CurvePosition::Kind::FDl, 0};
    }
    return CurvePosition{CurvePosition::Kind::Ambiguous, 0};
}

SectionSample sample_section(const Germ& g, const std::vector<long>& coefficients)
{
    const CurveFrame& fr = g.frame();
    const int m = static_cast<int>(fr.normal.size());
    if (static_cast<int>(coefficients.size()) != m) throw std::invalid_argument("one coefficient per curve generator");
    int j = -1;
    for (int k = 0; k < m && j < 0; ++k)
        if (coefficients[k] != 0) j = k;
    if (j < 0) throw std::invalid_argument("zero hyperplane");

    std::vector<int> map;
    const VarList S = without(g.vars(), fr.normal[j], map);
    std::vector<MultiPoly> im(g.vars().size(), MultiPoly(S));
    MultiPoly elim(S);
    for (int i = 0; i < g.vars().size(); ++i)
        if (map[i] >= 0) im[i] = MultiPoly::variable(S, map[i]);
    for (int k = 0; k < m; ++k)
        if (k != j) elim -= MultiPoly::variable(S, map[fr.normal[k]]) * Rational(Rational(coefficients[k]) / coefficients[j]);
    im[fr.normal[j]] = elim;

    SectionSample s{coefficients, MultiPoly(g.vars()), Jet(substitute(fr.F.poly(), im, g.order()), g.order()), {}, map[fr.along],
                    DuValType::undetermined(g.order()), false, std::nullopt, 0};
    for (int k = 0; k < m; ++k) {
        s.hyperplane += g.curve()[k] * Rational(coefficients[k]);
        if (k != j) s.section_curve.push_back(MultiPoly::variable(S, map[fr.normal[k]]));
    }
    // Low jets first: most sections are determined well below the germ's order.
    DuValReport rep = classify_duval_report(s.section, std::min(6, g.order()));
    for (int k = 8; !rep.order_sufficient && rep.order < g.order(); k += 2)
        rep = classify_duval_report(s.section, std::min(k, g.order()));
    s.type = rep.type;
    s.order_sufficient = rep.order_sufficient;
    if (!s.type.is_duval()) return s;
    try {
        s.d = surface_blowup(Germ(s.section.poly(), s.section_curve, g.order())).decomposition.d;
    } catch (const std::invalid_argument&) {
        return s;
    }
    if (s.type.family == DuValType::Family::E) return s;
    try {
        s.position = position_from_d(s.type, s.d);
    } catch (const std::exception&) {
        return s;
    }
    if (s.position->kind == CurvePosition::Kind::Ambiguous) s.position = tangent_position(s.section, s.along);
    return s;
}

SectionSearch find_general_section(const Germ& g, const SamplingBudget& budget)
{
    if (!three_fold(g)) throw std::invalid_argument("sections are sampled on threefold germs");
    SectionSearch out;
    out.square_test_allows_A = is_general_section_A(g);
    std::mt19937 rng(1729);
    auto generic = [&] {
        std::vector<long> c(3);
        for (auto& x : c)
            do x = static_cast<long>(rng() % 19) - 9;
            while (x == 0);
        return c;
    };
    int best_rank = INT_MAX, previous = -1;
    bool stable = false;
    for (int round = 0; round < budget.max_rounds && !stable; ++round) {
        std::vector<std::vector<long>> batch;
        if (round == 0)
            for (int k = 2; k >= 0; --k) {
                std::vector<long> e(3, 0);
                e[k] = 1;
                batch.push_back(e);
            }
        while (static_cast<int>(batch.size()) < budget.per_round + (round == 0 ? 3 : 0)) batch.push_back(generic());
        int round_min = INT_MAX;
        for (const auto& c : batch) {
            SectionSample s = sample_section(g, c);
            const int r = GenericityOrder::rank(s.type);
            round_min = std::min(round_min, r);
            if (r < best_rank) {
                best_rank = r;
                out.best = s;
            }
            out.samples.push_back(std::move(s));
        }
        out.rounds = round + 1;
        stable = round > 0 && round_min == previous;
        previous = round_min;
    }
    if (!stable) {
        out.status = SectionSearch::Status::Inconclusive;
        out.note = "no stable minimum after " + std::to_string(out.rounds) + " rounds";
        return out;
    }
    const DuValType& t = out.best->type;
    if (t.family == DuValType::Family::Undetermined) {
        out.status = SectionSearch::Status::Inconclusive;
        out.note = "jet order " + std::to_string(g.order()) + " does not determine the sections";
    } else if (t.family == DuValType::Family::NotDuVal) {
        bool undetermined = false;
        for (const auto& s : out.samples) undetermined |= s.type.family == DuValType::Family::Undetermined;
        if (undetermined) {
            out.status = SectionSearch::Status::Inconclusive;
            out.note = "some sections are undetermined at this jet order";
        } else if (out.square_test_allows_A) {
            out.status = SectionSearch::Status::Inconclusive;
            out.note = "the square test admits an A section that no sample found";
        } else {
            out.status = SectionSearch::Status::NoDuValSection;
            out.note = "every sample is not Du Val and the square test excludes A sections";
        }
    } else if (t.family == DuValType::Family::Smooth) {
        throw std::invalid_argument("the threefold is smooth at the origin");
    } else {
        out.status = SectionSearch::Status::Found;
        out.note = "general section " + type_position(*out.best);
    }
    return out;
}

std::optional<TangentCubic> cubic_on_tangent_hyperplane(const Jet& F)
{
    const MultiPoly& f = F.poly();
    const MultiPoly q = f.homogeneous_part(2);
    MultiPoly l(f.vars());
    for (int v = 0; v < f.nvars() && l.is_zero(); ++v) l = q.derivative(v);
    if (l.is_zero()) return std::nullopt;
    // Rank one: q is a multiple of l^2.
    const MultiPoly l2 = l * l;
    Exponent lead = l2.terms().begin()->first;
    const MultiPoly residue = q - l2 * Rational(q.coeff(lead) / l2.coeff(lead));
    if (!residue.is_zero()) return std::nullopt;
    int pivot = -1;
    for (int v = 0; v < f.nvars() && pivot < 0; ++v)
        if (l.coeff(Exponent::unit(v)) != 0) pivot = v;
    std::vector<MultiPoly> im;
    for (int v = 0; v < f.nvars(); ++v) im.push_back(MultiPoly::variable(f.vars(), v));
    im[pivot] = MultiPoly::variable(f.vars(), pivot) - l * Rational(1 / l.coeff(Exponent::unit(pivot)));
    TangentCubic out{substitute(f.homogeneous_part(3), im, 3), {}};
    for (int v = 0; v < f.nvars(); ++v)
        if (v != pivot) out.vars.push_back(v);
    return out;
}

bool d4_section_exists(const Germ& g)
{
    const auto c = cubic_on_tangent_hyperplane(g.F());
    if (!c) throw WrongStratum("the quadratic part does not have rank one");
    if (c->f3.is_zero()) return false;
    return !square_linear_factor_exists(c->f3, c->vars);
}

std::string LiftedConstraint::label() const
{
    if (position == CurvePosition::Kind::FDl) return "D_m FD_l with m <= " + std::to_string(max_n.value_or(0));
    return "D_even FD_r";
}

LiftedConstraint lift_special_section(const SectionSample& special)
{
    if (special.type.family != DuValType::Family::D || special.type.index < 5)
        throw std::invalid_argument("lifting needs a special section D_n with n >= 5");
    if (!special.position) throw std::invalid_argument("the special section has no known position");
    const int n = special.type.index;
    if (special.position->kind == CurvePosition::Kind::FDl) return {CurvePosition::Kind::FDl, n, false};
    if (special.position->kind == CurvePosition::Kind::FDr && n % 2 == 0)
        return {CurvePosition::Kind::FDr, std::nullopt, true};
    throw std::invalid_argument("lifting covers FD_l and even FD_r special sections only");
}

std::string ChartVerdict::label() const
{
    switch (regime) {
    case Regime::Terminal: return "terminal-regime";
    case Regime::CanonicalOnly: return "canonical-only-regime";
    case Regime::Unsupported: return "unsupported";
    }
    return "?";
}

ChartVerdict verify_by_charts(const Germ& g, const std::optional<SectionSample>& hint, const GroebnerBudget& budget)
{
    ChartVerdict out;
    std::optional<SectionSample> found = hint;
    if (!found) {
        const SectionSearch search = find_general_section(g);
        if (search.status == SectionSearch::Status::Inconclusive) throw Inconclusive(search.note);
        if (search.status != SectionSearch::Status::Found) {
            out.note = "no Du Val section";
            return out;
        }
        found = search.best;
    }
    const SectionSample& s = *found;
    out.stratum = type_position(s);
    const auto pos = s.position ? s.position->kind : CurvePosition::Kind::Ambiguous;
    const bool d = s.type.family == DuValType::Family::D;
    FormTag tag;
    std::vector<std::string> curve;
    if (d && (s.type.index == 4 || pos == CurvePosition::Kind::FDl)) {
        tag = FormTag::D_FDl;
        curve = {"x", "z", "t"};
    } else if (d && pos == CurvePosition::Kind::FDr && s.type.index % 2 == 0) {
        tag = FormTag::D_FDr_even;
        curve = {"x", "y", "t"};
    } else {
        out.note = "no chart computation for " + out.stratum;
        return out;
    }
    try {
        const NormalFormResult nf = normalize(g, tag);
        std::vector<MultiPoly> gens;
        for (const auto& c : curve) gens.push_back(MultiPoly::variable(g.vars(), g.vars().index_of(c)));
        const Blowup b = blowup_curve(Germ(nf.F_normal.poly(), gens, g.order()));
        out.charts = qfactorialize(b, g.vars().index_of("t"), budget);
    } catch (const WrongStratum& e) {
        out.note = e.what();
        return out;
    } catch (const UnsupportedRegime& e) {
        out.note = e.what();
        return out;
    }
    switch (out.charts->along_C.verdict) {
    case SingularLocusReport::Verdict::PositiveDimensional:
        out.regime = ChartVerdict::Regime::CanonicalOnly;
        out.note = "Z is singular along C";
        break;
    case SingularLocusReport::Verdict::Undecided: throw BudgetExceeded("singular locus of Z along C");
    default:
        out.regime = ChartVerdict::Regime::Terminal;
        out.note = "Z has isolated singularities along C";
    }
    return out;
}

std::string ContractionVerdict::label() const
{
    switch (kind) {
    case Kind::NoDuValSection: return "NoDuValSection";
    case Kind::CanonicalOnly: return "CanonicalOnly";
    case Kind::Terminal: return "Terminal";
    case Kind::UndeterminedByPaper: return "UndeterminedByPaper";
    }
    return "?";
}

ContractionVerdict decide_contraction(const Germ& g, const SamplingBudget& sampling, const GroebnerBudget& budget)
{
    if (g.F().poly().ord() != 2) throw std::invalid_argument("the germ must have multiplicity 2");
    const SectionSearch search = find_general_section(g, sampling);
    if (search.status == SectionSearch::Status::Inconclusive) throw Inconclusive(search.note);

    ContractionVerdict out;
    out.evidence.push_back(search.note);
    if (search.status == SectionSearch::Status::NoDuValSection) {
        out.kind = ContractionVerdict::Kind::NoDuValSection;
        out.stratum = "no Du Val section";
        out.evidence.push_back("square test: no A section through the curve");
        out.evidence.push_back(std::to_string(search.samples.size()) + " sampled sections, all not Du Val");
        return out;
    }
    const SectionSample& s = *search.best;
    out.section = s;
    out.stratum = type_position(s);
    const int n = s.type.index;
    auto undetermined = [&](const std::string& why) {
        out.kind = ContractionVerdict::Kind::UndeterminedByPaper;
        out.evidence.push_back(why);
        return out;
    };
    auto terminal = [&](TerminalPayload p) {
        out.kind = ContractionVerdict::Kind::Terminal;
        out.terminal = p;
    };

    if (s.type.family == DuValType::Family::A) {
        if (!s.position) throw Inconclusive("position of the curve on the A section");
        const int k = s.position->k;
        if (k == 1 || n <= 2) {
            terminal({n + 1, 2 * n, std::nullopt, "cA", 2 * n});
            out.evidence.push_back("edge position");
            return out;
        }
        if (n != 3) return undetermined("A" + std::to_string(n) + " with the curve at position " + std::to_string(k));
        std::optional<NormalFormResult> nf_try;
        try {
            nf_try = normalize_A3_middle(g);
        } catch (const WrongStratum& e) {
            throw Inconclusive(std::string("A3 middle normal form not reached: ") + e.what());
        }
        const NormalFormResult& nf = *nf_try;
        const MultiPoly& f = *nf.f_le3;
        const VarList& v = g.vars();
        const FormVars xzt{v.index_of("x"), v.index_of("z"), v.index_of("t")};
        out.evidence.push_back("f<=3 = " + (f.is_zero() ? std::string("0") : f.to_string()));
        if (f.is_zero() || proper_component_through_origin(f, xzt)) {
            out.kind = ContractionVerdict::Kind::CanonicalOnly;
            out.evidence.push_back("f<=3 has a proper component through the origin");
        } else {
            terminal({2, 2, std::nullopt, "cA", 6});
            out.evidence.push_back("f<=3 has no proper component through the origin");
        }
        return out;
    }
    if (s.type.family == DuValType::Family::E) return undetermined(s.type.label() + " sections are not treated");
    if (s.type.family != DuValType::Family::D) throw std::logic_error("unexpected section type");

    const auto pos = s.position ? s.position->kind : CurvePosition::Kind::Ambiguous;
    std::string point_type;
    if (n == 4 || pos == CurvePosition::Kind::D4Symmetric) {
        point_type = "cA_x";
    } else if (pos == CurvePosition::Kind::FDl) {
        if (!d4_section_exists(g)) {
            out.kind = ContractionVerdict::Kind::CanonicalOnly;
            out.evidence.push_back("no D4 section: f3 has a square linear factor");
        } else {
            point_type = "cA_x";
            out.evidence.push_back("a D4 section exists");
        }
    } else if (pos == CurvePosition::Kind::FDr && n % 2 == 0) {
        point_type = "cD";
    } else if (pos == CurvePosition::Kind::FDr) {
        return undetermined("odd D with the curve at FD_r");
    } else {
        throw Inconclusive("position of the curve on the D section");
    }

    if (!point_type.empty()) {
        const auto c = cubic_on_tangent_hyperplane(g.F());
        if (!c) throw std::logic_error("D section without a rank one quadratic part");
        const bool irreducible = !c->f3.is_zero() && !linear_factor_exists(c->f3, c->vars);
        out.evidence.push_back("f3 = " + (c->f3.is_zero() ? std::string("0") : c->f3.to_string()) +
                               (irreducible ? " (irreducible)" : " (reducible or 0)"));
        if (irreducible)
            terminal({2, 2, 1, point_type, 2});
        else
            out.kind = ContractionVerdict::Kind::CanonicalOnly;
    }

    const ChartVerdict cv = verify_by_charts(g, s, budget);
    out.cross_check.criterion = out.kind == ContractionVerdict::Kind::Terminal ? "terminal" : "canonical-only";
    out.cross_check.chart = cv.label();
    out.cross_check.ran = cv.regime != ChartVerdict::Regime::Unsupported;
    if (!out.cross_check.ran) {
        out.evidence.push_back("chart check unavailable: " + cv.note);
        return out;
    }
    out.cross_check.agree = (cv.regime == ChartVerdict::Regime::Terminal) == (out.kind == ContractionVerdict::Kind::Terminal);
    if (!out.cross_check.agree)
        throw CrossCheckFailure("criterion says " + out.cross_check.criterion + ", charts say " + cv.label() + " (" +
                                cv.note + ")");
    out.evidence.push_back("charts: " + cv.note);
    return out;
}

GeneratorCheck check_generator_degrees(const Germ& g, int bound, int d_max, const GroebnerBudget& budget)
{
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const PolyIdeal I(g.vars(), g.curve());
    const MultiPoly F = g.F().poly();
    std::vector<PolyIdeal> S(d_max + 1);
    GeneratorCheck out;
    for (int d = 1; d <= d_max; ++d) {
        S[d] = symbolic_power(I, d, F, budget);
        if (d <= bound) continue;
        PolyIdeal lower(g.vars(), {F});
        for (int i = 1; 2 * i <= d; ++i) lower = ideal_sum(lower, ideal_product(S[i], S[d - i]));
        out.checked.push_back(d);
        if (!ideal_subset(S[d], lower, budget)) {
            out.holds = false;
            out.failed_degree = d;
            return out;
        }
    }
    return out;
}

}  // namespace dvc

#include "dvc/blowup.hpp"
#include "dvc/cycles.hpp"
#include "dvc/duval.hpp"
#include "dvc/germ.hpp"
#include "dvc/normal_form.hpp"
#include "dvc/oracle.hpp"
#include "dvc/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace dvc;

namespace {

enum Exit { kDecided = 0, kError = 1, kInconclusive = 2 };

struct Options {
    std::string eq;
    std::vector<std::string> curve;
    int order = 12;
    bool no_evidence = false;
    int per_round = 6;
    int rounds = 4;
    std::size_t max_basis = 4000;
    std::string type;
    std::string meeting;
    std::string form;
    int bound = 2;
    int d_max = 4;
};

int default_order()
{
    if (const char* env = std::getenv("DVC_JET_ORDER")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 12;
}

json ideal_json(const PolyIdeal& I)
{
    json a = json::array();
    for (const auto& g : I.gens()) a.push_back(g.to_string());
    return a;
}

json sample_json(const SectionSample& s)
{
    json j;
    j["coefficients"] = s.coefficients;
    j["hyperplane"] = s.hyperplane.to_string();
    j["section"] = s.section.poly().to_string();
    j["type"] = s.type.label();
    j["order_sufficient"] = s.order_sufficient;
    j["position"] = s.position ? json(s.position->label()) : json(nullptr);
    j["d"] = s.d;
    return j;
}

json change_json(const CoordinateChange& c)
{
    json j = json::object();
    for (const auto& [v, image] : c.describe()) j[v] = image;
    return j;
}

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {}

    json input(const std::string& command, const VarList& vars) const
    {
        json j;
        j["command"] = command;
        if (!o_.eq.empty()) j["equation"] = parse_poly(o_.eq, vars).to_string();
        if (!o_.curve.empty()) {
            json c = json::array();
            for (const auto& g : o_.curve) c.push_back(parse_poly(g, vars).to_string());
            j["curve"] = c;
        }
        if (!o_.type.empty()) j["type"] = o_.type;
        if (!o_.meeting.empty()) j["meeting"] = o_.meeting;
        j["jet_order"] = o_.order;
        return j;
    }

    Germ germ() const
    {
        if (o_.curve.size() != 3) throw std::invalid_argument("a threefold job needs exactly three curve generators");
        return parse_germ(o_.eq, o_.curve, default_vars(), o_.order);
    }

    GroebnerBudget groebner_budget() const
    {
        GroebnerBudget b;
        b.max_basis = o_.max_basis;
        return b;
    }

    SamplingBudget sampling() const { return {o_.per_round, o_.rounds}; }

    int classify(json& out) const
    {
        const DuValReport r = classify_duval_report(Jet(parse_poly(o_.eq, surface_vars()), o_.order), o_.order);
        out["verdict"] = r.type.label();
        out["order_sufficient"] = r.order_sufficient;
        if (!o_.no_evidence) {
            out["evidence"]["quadratic_rank"] = r.quadratic_rank;
            out["evidence"]["residual"] = r.residual.to_string();
        }
        return r.order_sufficient ? kDecided : kInconclusive;
    }

    int section(json& out) const
    {
        const SectionSearch s = find_general_section(germ(), sampling());
        const char* status[] = {"Found", "NoDuValSection", "Inconclusive"};
        out["verdict"] = status[static_cast<int>(s.status)];
        out["section"] = s.best ? sample_json(*s.best) : json(nullptr);
        out["rounds"] = s.rounds;
        if (!o_.no_evidence) {
            out["evidence"]["note"] = s.note;
            out["evidence"]["square_test_allows_A"] = s.square_test_allows_A;
            json a = json::array();
            for (const auto& x : s.samples) a.push_back(sample_json(x));
            out["evidence"]["samples"] = a;
        }
        return s.status == SectionSearch::Status::Inconclusive ? kInconclusive : kDecided;
    }

    int blowup(json& out) const
    {
        const Germ g = germ();
        const Blowup b = blowup_curve(g);
        out["verdict"]["d"] = b.decomposition.d;
        out["frame"] = change_json(g.frame().change);
        json charts = json::array();
        for (std::size_t k = 0; k < b.charts.size(); ++k) {
            const BlowupChart& c = b.charts[k];
            const ChartDivisors& div = b.decomposition.charts[k];
            json j;
            j["chart"] = g.vars()[c.chart];
            j["substitutions"] = c.substitutions;
            j["strict"] = c.strict.to_string();
            j["E1"] = ideal_json(div.E1);
            j["E2"] = div.E2 ? ideal_json(*div.E2) : json(nullptr);
            if (div.L) {
                j["L"] = ideal_json(*div.L);
                j["singular_along_L"] = singular_locus_along(c.strict, *div.L, groebner_budget()).label();
            }
            charts.push_back(j);
        }
        out["charts"] = charts;
        return kDecided;
    }

    int cycle(json& out) const
    {
        const DuValType t = DuValType::from_label(o_.type);
        if (o_.meeting.size() < 2 || o_.meeting[0] != 'E') throw std::invalid_argument("meeting vertex must be E<k>");
        const int meeting = std::stoi(o_.meeting.substr(1));
        const DynkinGraph g(t);
        const CycleSolution s = select_edge(g, meeting);
        out["verdict"]["d"] = rational_to_string(s.d);
        out["verdict"]["E"] = "E" + std::to_string(s.E);
        json c = json::array();
        for (const auto& a : s.coefficients) c.push_back(rational_to_string(a));
        out["verdict"]["coefficients"] = c;
        out["verdict"]["integral"] = s.integral;
        try {
            out["verdict"]["position"] = position_from_d(t, static_cast<int>(s.d.get_num().get_si())).label();
        } catch (const std::exception&) {
            out["verdict"]["position"] = nullptr;
        }
        return kDecided;
    }

    int normal_form(json& out) const
    {
        static const std::vector<std::pair<std::string, FormTag>> tags{
            {"D_FDl", FormTag::D_FDl},           {"D_FDl_n5plus", FormTag::D_FDl_n5plus},
            {"D_FDr_even", FormTag::D_FDr_even}, {"D_FDr_odd_a", FormTag::D_FDr_odd_a},
            {"D_FDr_odd_b", FormTag::D_FDr_odd_b}, {"A3_middle", FormTag::A3_middle}};
        auto it = std::find_if(tags.begin(), tags.end(), [&](const auto& p) { return p.first == o_.form; });
        if (it == tags.end()) throw std::invalid_argument("unknown form " + o_.form);
        const Germ g = germ();
        const NormalFormResult r = normalize(g, it->second);
        out["verdict"]["form"] = form_tag_name(r.tag);
        out["verdict"]["n"] = r.n;
        out["verdict"]["normal_form"] = r.F_normal.poly().to_string();
        if (r.f_le3) out["verdict"]["f_le3"] = r.f_le3->to_string();
        out["certificate"]["change"] = change_json(r.change);
        out["certificate"]["unit"] = r.unit.poly().to_string();
        out["certificate"]["holds"] = certificate_holds(g.F().poly(), r);
        out["certificate"]["excluded_violations"] = excluded_violations(r);
        return kDecided;
    }

    int contract(json& out) const
    {
        const ContractionVerdict v = decide_contraction(germ(), sampling(), groebner_budget());
        out["verdict"]["kind"] = v.label();
        out["verdict"]["stratum"] = v.stratum;
        if (v.terminal) {
            json t;
            if (v.terminal->index_min == v.terminal->index_max)
                t["index"] = v.terminal->index_min;
            else
                t["index"] = json::array({v.terminal->index_min, v.terminal->index_max});
            t["points"] = v.terminal->point_type;
            t["point_count"] = v.terminal->point_count ? json(*v.terminal->point_count) : json(nullptr);
            t["generator_bound"] = v.terminal->generator_bound;
            out["verdict"]["terminal"] = t;
        }
        out["cross_check"]["ran"] = v.cross_check.ran;
        out["cross_check"]["criterion"] = v.cross_check.criterion;
        out["cross_check"]["chart"] = v.cross_check.chart;
        out["cross_check"]["agree"] = v.cross_check.agree;
        if (!o_.no_evidence) {
            out["evidence"]["notes"] = v.evidence;
            out["evidence"]["section"] = v.section ? sample_json(*v.section) : json(nullptr);
        }
        return kDecided;
    }

    int verify(json& out) const
    {
        const ChartVerdict v = verify_by_charts(germ(), std::nullopt, groebner_budget());
        out["verdict"] = v.label();
        out["stratum"] = v.stratum;
        out["note"] = v.note;
        if (v.charts && !o_.no_evidence) {
            out["evidence"]["Z"] = v.charts->Z.to_string();
            out["evidence"]["C"] = ideal_json(v.charts->C);
            out["evidence"]["along_L"] = v.charts->along_L.label();
            out["evidence"]["along_C"] = v.charts->along_C.label();
        }
        return kDecided;
    }

    int sympow(json& out) const
    {
        const GeneratorCheck c = check_generator_degrees(germ(), o_.bound, o_.d_max, groebner_budget());
        out["verdict"]["generated"] = c.holds;
        out["verdict"]["bound"] = o_.bound;
        out["verdict"]["d_max"] = o_.d_max;
        out["verdict"]["failed_degree"] = c.holds ? json(nullptr) : json(c.failed_degree);
        out["checked_degrees"] = c.checked;
        return kDecided;
    }

private:
    const Options& o_;
};

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    o.order = default_order();
    CLI::App app{"Divisorial contractions to curves through Du Val sections"};
    app.require_subcommand(1);
    app.add_option("--order", o.order, "jet order (default $DVC_JET_ORDER or 12)")->check(CLI::PositiveNumber);
    app.add_flag("--no-evidence", o.no_evidence, "omit evidence trails");
    app.add_option("--samples", o.per_round, "hyperplanes per sampling round")->check(CLI::PositiveNumber);
    app.add_option("--rounds", o.rounds, "maximum sampling rounds")->check(CLI::PositiveNumber);
    app.add_option("--max-basis", o.max_basis, "Groebner basis size budget")->check(CLI::PositiveNumber);

    auto threefold = [&](CLI::App* sub) {
        sub->add_option("--eq", o.eq, "equation in x, y, z, t")->required();
        sub->add_option("--curve", o.curve, "curve generators, comma separated")->required()->delimiter(',');
    };
    auto* classify = app.add_subcommand("classify", "Du Val type of a surface germ in u, v, w");
    classify->add_option("--eq", o.eq, "equation in u, v, w")->required();
    auto* section = app.add_subcommand("section", "general hyperplane section through the curve");
    auto* blowup = app.add_subcommand("blowup", "charts of the blow-up of the curve");
    auto* cycle = app.add_subcommand("cycle", "exceptional cycle of a curve meeting a Du Val graph");
    cycle->add_option("--type", o.type, "A<n> or D<n>")->required();
    cycle->add_option("--meeting", o.meeting, "vertex met by the curve, E<k>")->required();
    auto* nf = app.add_subcommand("normal-form", "coordinate change to a normal form");
    nf->add_option("--form", o.form, "D_FDl, D_FDl_n5plus, D_FDr_even, D_FDr_odd_a, D_FDr_odd_b, A3_middle")
        ->required();
    auto* contract = app.add_subcommand("contract", "terminal contraction verdict");
    auto* verify = app.add_subcommand("verify", "chart computation of the contraction regime");
    auto* sympow = app.add_subcommand("sympow", "generator degrees of the symbolic Rees algebra");
    sympow->add_option("--bound", o.bound, "claimed generator degree bound")->check(CLI::PositiveNumber);
    sympow->add_option("--dmax", o.d_max, "highest degree checked")->check(CLI::PositiveNumber);
    for (auto* sub : {section, blowup, nf, contract, verify, sympow}) threefold(sub);
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kDecided : kError;
    }

    const Runner run(o);
    json out;
    out["schema"] = 1;
    int code = kError;
    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        out["input"] = run.input(cmd, cmd == "classify" ? surface_vars() : default_vars());
        if (cmd == "classify") code = run.classify(out);
        else if (cmd == "section") code = run.section(out);
        else if (cmd == "blowup") code = run.blowup(out);
        else if (cmd == "cycle") code = run.cycle(out);
        else if (cmd == "normal-form") code = run.normal_form(out);
        else if (cmd == "contract") code = run.contract(out);
        else if (cmd == "verify") code = run.verify(out);
        else code = run.sympow(out);
        out["budgets"] = {{"samples_per_round", o.per_round}, {"rounds", o.rounds}, {"max_basis", o.max_basis}};
    } catch (const Inconclusive& e) {
        std::cerr << e.what() << "\n";
        return kInconclusive;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    std::cout << out.dump(2) << "\n";
    return code;
}

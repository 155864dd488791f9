#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "teamlogic/bisim.hpp"
#include "teamlogic/incompat.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/oracle.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/synthesis.hpp"
#include "teamlogic/transforms.hpp"

namespace tl = teamlogic;

namespace {

// exit 0: affirmative/success. exit 1: negative verdict (witness
// printed). exit 2: usage/parse error. exit 3: bounds exceeded.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBounds = 3;

struct Options {
    std::string logic;
    std::string vars;
    std::string team;
    std::string model_path;
    std::string model_b_path;
    std::uint64_t seed = 0;
    int depth = 3;
    int max_worlds = 3;
    int k = 1;
    std::vector<std::string> formulas;
    std::string property;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

tl::LogicProfile profile_of(const Options& o) {
    auto p = tl::parse_profile(o.logic);
    if (!p) throw UsageError("unknown logic '" + o.logic + "'");
    return *p;
}

tl::Vocabulary vars_of(const Options& o) {
    if (o.vars.empty()) throw UsageError("--vars is required here");
    return tl::Vocabulary::parse(o.vars);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open model file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

tl::ParsedModel load_model(const Options& o, const std::string& path) {
    tl::Vocabulary hint;
    if (!o.vars.empty()) hint = tl::Vocabulary::parse(o.vars);
    tl::ParsedModel pm = tl::parse_model(slurp(path), hint);
    if (!o.team.empty()) {
        pm.team = tl::parse_world_set(o.team, pm.model);
        pm.has_team = true;
    }
    return pm;
}

std::string modal_team_literal(const tl::KripkeModel& m, tl::WorldSet s) {
    return "{" + tl::print_world_set(m, s) + "}";
}

tl::Formula parse_formula(const Options& o, const std::string& text, tl::LogicProfile p) {
    (void)o;
    return tl::parse(text, p);
}

int cmd_eval(const Options& o, bool anti_primary) {
    tl::LogicProfile p = profile_of(o);
    bool sup, anti;
    if (!o.model_path.empty()) {
        tl::ParsedModel pm = load_model(o, o.model_path);
        tl::Formula f = parse_formula(o, o.formulas.at(0), p);
        sup = tl::supports(pm.model, pm.team, f, p);
        anti = tl::has_dual_negation(p) ? tl::antisupports(pm.model, pm.team, f, p) : false;
    } else {
        tl::Vocabulary x = vars_of(o);
        if (o.team.empty()) throw UsageError("--team is required here");
        tl::Team s = tl::parse_team(o.team, x);
        tl::Formula f = parse_formula(o, o.formulas.at(0), p);
        sup = tl::supports(x, s, f, p);
        if (anti_primary && !tl::has_dual_negation(p))
            throw UsageError("anti-support is undefined in " + tl::profile_name(p));
        anti = tl::has_dual_negation(p) ? tl::antisupports(x, s, f, p) : false;
    }
    bool primary = anti_primary ? anti : sup;
    if (anti_primary)
        std::cout << (anti ? "anti-supported" : (sup ? "supported" : "neither")) << "\n";
    else
        std::cout << (sup ? "supported" : (anti ? "anti-supported" : "neither")) << "\n";
    return primary ? kOk : kNegative;
}

int cmd_denote(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Formula f = parse_formula(o, o.formulas.at(0), p);
    if (!o.model_path.empty()) {
        tl::ParsedModel pm = load_model(o, o.model_path);
        tl::TeamProperty prop = tl::property_on_model(pm.model, f, p);
        std::cout << "teams: " << prop.size() << "\n";
        for (auto t : prop.members()) std::cout << modal_team_literal(pm.model, t) << "\n";
    } else {
        tl::Vocabulary x = vars_of(o);
        tl::TeamProperty prop = tl::property_of(f, x, p);
        std::cout << "teams: " << prop.size() << "\n";
        for (auto t : prop.members()) std::cout << tl::print_team(tl::Team{t}, x) << "\n";
    }
    return kOk;
}

int cmd_ground(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Formula f = parse_formula(o, o.formulas.at(0), p);
    if (!o.model_path.empty()) {
        tl::ParsedModel pm = load_model(o, o.model_path);
        std::cout << "ground: " << modal_team_literal(pm.model, tl::ground_team_on_model(pm.model, f, p))
                  << "\n";
    } else {
        tl::Vocabulary x = vars_of(o);
        std::cout << "ground: " << tl::print_team(tl::ground_team(f, x, p), x) << "\n";
    }
    return kOk;
}

int cmd_closure(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Formula f = parse_formula(o, o.formulas.at(0), p);
    tl::ClosureFlags c;
    if (!o.model_path.empty()) {
        tl::ParsedModel pm = load_model(o, o.model_path);
        c = tl::check_closure(tl::property_on_model(pm.model, f, p));
    } else {
        c = tl::check_closure(tl::property_of(f, vars_of(o), p));
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "closure: downward=" << yn(c.downward_closed) << " convex=" << yn(c.convex)
              << " union=" << yn(c.union_closed) << " empty=" << yn(c.empty_team)
              << " flat=" << yn(c.flat) << "\n";
    return kOk;
}

int cmd_classify(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Vocabulary x = vars_of(o);
    tl::Formula f0 = parse_formula(o, o.formulas.at(0), p);
    tl::Formula f1 = parse_formula(o, o.formulas.at(1), p);
    tl::IncompatibilityVerdict v = tl::classify_pair(f0, f1, x, p);
    std::cout << "verdict: " << tl::verdict_line(v) << "\n";
    return kOk;
}

int cmd_implgraph(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Vocabulary x = vars_of(o);
    tl::Formula f0 = parse_formula(o, o.formulas.at(0), p);
    tl::Formula f1 = parse_formula(o, o.formulas.at(1), p);
    tl::IncompatibilityVerdict v = tl::classify_pair(f0, f1, x, p);
    tl::ClosureFlags c0 = tl::check_closure(tl::property_of(f0, x, p));
    tl::ClosureFlags c1 = tl::check_closure(tl::property_of(f1, x, p));
    auto violations = tl::check_implication_graph(v, c0, c1);
    if (violations.empty()) {
        std::cout << "violations: none\n";
        return kOk;
    }
    std::cout << "violations:";
    for (const auto& e : violations) std::cout << ' ' << e << ';';
    std::cout << "\n";
    return kNegative;
}

int cmd_transform(const Options& o, tl::Formula (*op)(const tl::Formula&)) {
    tl::LogicProfile p = profile_of(o);
    tl::Formula f = parse_formula(o, o.formulas.at(0), p);
    std::cout << tl::print(op(f)) << "\n";
    return kOk;
}

int cmd_hintikka(const Options& o) {
    if (!o.model_path.empty()) {
        tl::ParsedModel pm = load_model(o, o.model_path);
        tl::Vocabulary x = o.vars.empty() ? pm.model.vocab : tl::Vocabulary::parse(o.vars);
        std::cout << tl::print(tl::hintikka_team(pm.model, pm.team, x, o.k)) << "\n";
        return kOk;
    }
    tl::Vocabulary x = vars_of(o);
    if (o.team.empty()) throw UsageError("--team is required here");
    std::cout << tl::print(tl::prop_char_team(tl::parse_team(o.team, x), x)) << "\n";
    return kOk;
}

int cmd_bisim(const Options& o) {
    if (o.model_path.empty() || o.model_b_path.empty())
        throw UsageError("bisim needs --model and --model-b");
    tl::ParsedModel a = tl::parse_model(slurp(o.model_path));
    tl::ParsedModel b = tl::parse_model(slurp(o.model_b_path));
    tl::Vocabulary x = o.vars.empty() ? a.model.vocab : tl::Vocabulary::parse(o.vars);
    bool r = tl::team_bisim_k(a.model, a.team, b.model, b.team, x, o.k);
    std::cout << (r ? "bisimilar" : "not-bisimilar") << "\n";
    return r ? kOk : kNegative;
}

std::vector<tl::Team> parse_property_literal(const std::string& text, const tl::Vocabulary& x) {
    std::vector<tl::Team> teams;
    std::string cur;
    int depth_braces = 0;
    for (char c : text) {
        if (c == '{') ++depth_braces;
        if (c == '}') --depth_braces;
        if ((c == ' ' || c == ';') && depth_braces == 0) {
            if (!cur.empty()) teams.push_back(tl::parse_team(cur, x));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) teams.push_back(tl::parse_team(cur, x));
    return teams;
}

int cmd_synth(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Vocabulary x = vars_of(o);
    tl::TeamProperty prop(x.valuation_count());
    for (tl::Team t : parse_property_literal(o.property, x)) prop.set(t.bits);
    tl::Formula f = tl::synthesize_from_property(prop, x, p);
    std::cout << "theta: " << tl::print(f) << "\n";
    std::cout << "certificate: ok\n";
    return kOk;
}

int cmd_burgess(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Formula phi = parse_formula(o, o.formulas.at(0), p);
    tl::Formula psi = parse_formula(o, o.formulas.at(1), p);
    tl::SynthesisResult r;
    switch (p) {
        case tl::LogicProfile::PLNE_GD: r = tl::burgess_plne_gd(phi, psi); break;
        case tl::LogicProfile::PLNE: r = tl::burgess_plne(phi, psi); break;
        case tl::LogicProfile::HS: r = tl::burgess_hs(phi, psi); break;
        case tl::LogicProfile::PLNEStar_GD: r = tl::burgess_nestar(phi, psi); break;
        case tl::LogicProfile::PLDep: r = tl::burgess_pldep(phi, psi); break;
        case tl::LogicProfile::BSML:
        case tl::LogicProfile::BSMLI: r = tl::burgess_modal(phi, psi, p); break;
        default:
            throw UsageError("no burgess construction for " + tl::profile_name(p) +
                             " (use plnegd, plne, hs, nestar, pldep, bsml, bsmli)");
    }
    std::cout << "theta: " << tl::print(r.theta) << "\n";
    std::cout << "certificate: " << (r.certified() ? "ok" : "failed") << "\n";
    if (tl::is_modal(p)) std::cout << "bounds: " << r.bounds << "\n";
    return r.certified() ? kOk : kNegative;
}

int cmd_equiv(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Formula f = parse_formula(o, o.formulas.at(0), p);
    tl::Formula g = parse_formula(o, o.formulas.at(1), p);
    if (tl::is_modal(p)) {
        tl::Vocabulary x = o.vars.empty() ? tl::Vocabulary{} : tl::Vocabulary::parse(o.vars);
        tl::OracleVerdict v = tl::modal_equivalent_bounded(f, g, o.max_worlds, x, p);
        if (v.result) {
            std::cout << "equivalent\n";
            std::cout << "bounds: " << v.bounds << "\n";
            return kOk;
        }
        std::cout << "not-equivalent\n";
        std::cout << "witness: " << modal_team_literal(*v.model_witness, v.model_witness_team)
                  << "\n";
        std::cout << tl::print_model(*v.model_witness, v.model_witness_team, true);
        return kNegative;
    }
    tl::Vocabulary x = vars_of(o);
    tl::OracleVerdict v = tl::equivalent(f, g, x, p);
    if (v.result) {
        std::cout << "equivalent\n";
        return kOk;
    }
    std::cout << "not-equivalent\n";
    std::cout << "witness: " << tl::print_team(*v.team_witness, x) << "\n";
    return kNegative;
}

int cmd_random(const Options& o) {
    tl::LogicProfile p = profile_of(o);
    tl::Vocabulary x = vars_of(o);
    std::cout << tl::print(tl::random_formula(p, x, o.depth, o.seed)) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilateral team-semantics toolkit"};
    app.require_subcommand(1);

    Options o;
    std::string cmd_name;
    struct Spec {
        const char* name;
        const char* help;
        int n_formulas;
        bool wants_property;
    };
    const std::vector<Spec> specs = {
        {"eval", "support verdict for a formula on a team", 1, false},
        {"anti", "anti-support verdict for a formula on a team", 1, false},
        {"denote", "all supporting teams of a formula", 1, false},
        {"ground", "ground team of a formula", 1, false},
        {"closure", "closure flags of a formula's denotation", 1, false},
        {"classify", "incompatibility verdict for a formula pair", 2, false},
        {"implgraph", "implication-graph check for a formula pair", 2, false},
        {"nnf", "negation normal form", 1, false},
        {"flatten", "classical flattening", 1, false},
        {"etnorm", "empty-team normalization", 1, false},
        {"hintikka", "characteristic formula of a team", 0, false},
        {"bisim", "k-bisimilarity of two pointed team models", 0, false},
        {"synth", "synthesize a formula from a team property", 0, true},
        {"burgess", "synthesize theta with theta == phi and neg theta == psi", 2, false},
        {"equiv", "oracle equivalence of two formulas", 2, false},
        {"random", "seeded random formula", 0, false},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--logic", o.logic, "logic profile")->required();
        sub->add_option("--vars", o.vars, "vocabulary, e.g. p,q");
        sub->add_option("--team", o.team, "team literal {10,01} or world list");
        sub->add_option("--model", o.model_path, "model file")->excludes(sub->get_option("--vars"));
        sub->add_option("--model-b", o.model_b_path, "second model file");
        sub->add_option("--seed", o.seed, "rng seed");
        sub->add_option("--depth", o.depth, "formula depth");
        sub->add_option("--max-worlds", o.max_worlds, "bounded model size");
        sub->add_option("--k", o.k, "bisimulation depth");
        if (spec.wants_property)
            sub->add_option("property", o.property, "team property, e.g. \"{} {1}\"")->required();
        if (spec.n_formulas >= 1) sub->add_option("formula", o.formulas, "formula(s)")
            ->required()->expected(spec.n_formulas);
        sub->callback([&cmd_name, name = std::string(spec.name)] { cmd_name = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (cmd_name == "eval") return cmd_eval(o, false);
        if (cmd_name == "anti") return cmd_eval(o, true);
        if (cmd_name == "denote") return cmd_denote(o);
        if (cmd_name == "ground") return cmd_ground(o);
        if (cmd_name == "closure") return cmd_closure(o);
        if (cmd_name == "classify") return cmd_classify(o);
        if (cmd_name == "implgraph") return cmd_implgraph(o);
        if (cmd_name == "nnf") return cmd_transform(o, tl::nnf);
        if (cmd_name == "flatten") return cmd_transform(o, tl::flatten);
        if (cmd_name == "etnorm") return cmd_transform(o, tl::empty_team_normalize);
        if (cmd_name == "hintikka") return cmd_hintikka(o);
        if (cmd_name == "bisim") return cmd_bisim(o);
        if (cmd_name == "synth") return cmd_synth(o);
        if (cmd_name == "burgess") return cmd_burgess(o);
        if (cmd_name == "equiv") return cmd_equiv(o);
        if (cmd_name == "random") return cmd_random(o);
        std::cerr << "error: unknown subcommand\n";
        return kUsage;
    } catch (const tl::RefusalError& e) {
        std::cerr << "error: " << e.what();
        if (!e.witness.empty()) std::cerr << " (witness: " << e.witness << ")";
        std::cerr << "\n";
        return kNegative;
    } catch (const tl::BoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBounds;
    } catch (const tl::ParseError& e) {
        std::cerr << "error: syntax error at position " << e.position << ": " << e.what() << "\n";
        return kUsage;
    } catch (const tl::ProfileViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

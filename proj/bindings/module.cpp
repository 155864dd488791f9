#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teamlogic/bisim.hpp"
#include "teamlogic/incompat.hpp"
#include "teamlogic/oracle.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/synthesis.hpp"
#include "teamlogic/transforms.hpp"

namespace py = pybind11;
namespace tl = teamlogic;

namespace {

tl::LogicProfile profile_arg(const std::string& name) {
    auto p = tl::parse_profile(name);
    if (!p) throw py::value_error("unknown logic '" + name + "'");
    return *p;
}

tl::Vocabulary vocab_arg(const std::string& vars) { return tl::Vocabulary::parse(vars); }

std::string normalize(const std::string& logic, const std::string& text) {
    return tl::print(tl::parse(text, profile_arg(logic)));
}

bool py_supports(const std::string& logic, const std::string& vars, const std::string& team,
                 const std::string& formula) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    return tl::supports(x, tl::parse_team(team, x), tl::parse(formula, p), p);
}

bool py_antisupports(const std::string& logic, const std::string& vars, const std::string& team,
                     const std::string& formula) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    return tl::antisupports(x, tl::parse_team(team, x), tl::parse(formula, p), p);
}

std::vector<std::string> py_denote(const std::string& logic, const std::string& vars,
                                   const std::string& formula) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    std::vector<std::string> out;
    for (auto t : tl::property_of(tl::parse(formula, p), x, p).members())
        out.push_back(tl::print_team(tl::Team{t}, x));
    return out;
}

std::string py_ground(const std::string& logic, const std::string& vars,
                      const std::string& formula) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    return tl::print_team(tl::ground_team(tl::parse(formula, p), x, p), x);
}

py::dict py_closure(const std::string& logic, const std::string& vars,
                    const std::string& formula) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    tl::ClosureFlags c = tl::check_closure(tl::property_of(tl::parse(formula, p), x, p));
    py::dict d;
    d["downward_closed"] = c.downward_closed;
    d["convex"] = c.convex;
    d["union_closed"] = c.union_closed;
    d["empty_team"] = c.empty_team;
    d["flat"] = c.flat;
    return d;
}

py::dict py_classify(const std::string& logic, const std::string& vars, const std::string& f0,
                     const std::string& f1) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    tl::IncompatibilityVerdict v =
        tl::classify_pair(tl::parse(f0, p), tl::parse(f1, p), x, p);
    py::dict d;
    d["bot_i"] = v.bot_i;
    d["ground_i"] = v.ground_i;
    d["strongbot_i"] = v.strongbot_i;
    d["ne_i"] = v.ne_i;
    d["world_i"] = v.world_i;
    d["team_i"] = v.team_i;
    d["flat_i"] = v.flat_i;
    d["d_i_1_of_0"] = v.d_i_1_of_0;
    d["d_i_0_of_1"] = v.d_i_0_of_1;
    d["e_d_i"] = v.e_d_i;
    d["ground_complementary"] = v.ground_complementary;
    d["ground_complementary_mod_bot"] = v.ground_complementary_mod_bot;
    return d;
}

py::dict py_burgess(const std::string& logic, const std::string& phi, const std::string& psi) {
    auto p = profile_arg(logic);
    tl::Formula f = tl::parse(phi, p);
    tl::Formula g = tl::parse(psi, p);
    tl::SynthesisResult r;
    switch (p) {
        case tl::LogicProfile::PLNE_GD: r = tl::burgess_plne_gd(f, g); break;
        case tl::LogicProfile::PLNE: r = tl::burgess_plne(f, g); break;
        case tl::LogicProfile::HS: r = tl::burgess_hs(f, g); break;
        case tl::LogicProfile::PLNEStar_GD: r = tl::burgess_nestar(f, g); break;
        case tl::LogicProfile::PLDep: r = tl::burgess_pldep(f, g); break;
        case tl::LogicProfile::BSML:
        case tl::LogicProfile::BSMLI: r = tl::burgess_modal(f, g, p); break;
        default:
            throw py::value_error("no burgess construction for " + tl::profile_name(p));
    }
    py::dict d;
    d["theta"] = tl::print(r.theta);
    d["cert_support"] = r.cert_support;
    d["cert_dual"] = r.cert_dual;
    d["bounds"] = r.bounds;
    return d;
}

std::string py_transform(const std::string& logic, const std::string& formula,
                         tl::Formula (*op)(const tl::Formula&)) {
    return tl::print(op(tl::parse(formula, profile_arg(logic))));
}

py::dict py_equivalent(const std::string& logic, const std::string& vars, const std::string& f,
                       const std::string& g) {
    auto p = profile_arg(logic);
    auto x = vocab_arg(vars);
    tl::OracleVerdict v = tl::equivalent(tl::parse(f, p), tl::parse(g, p), x, p);
    py::dict d;
    d["result"] = v.result;
    if (v.team_witness) d["witness"] = tl::print_team(*v.team_witness, x);
    return d;
}

std::string py_random(const std::string& logic, const std::string& vars, int depth,
                      std::uint64_t seed) {
    return tl::print(tl::random_formula(profile_arg(logic), vocab_arg(vars), depth, seed));
}

}  // namespace

PYBIND11_MODULE(_teamlogic, m) {
    m.doc() = "bilateral team-semantics toolkit";

    py::register_exception<tl::RefusalError>(m, "RefusalError");
    py::register_exception<tl::BoundsError>(m, "BoundsError");
    py::register_exception<tl::ProfileViolation>(m, "ProfileViolation");
    py::register_exception<tl::ParseError>(m, "FormulaParseError");

    m.def("normalize", &normalize, py::arg("logic"), py::arg("formula"),
          "parse and reprint a formula, validating it against the logic");
    m.def("supports", &py_supports, py::arg("logic"), py::arg("vars"), py::arg("team"),
          py::arg("formula"));
    m.def("antisupports", &py_antisupports, py::arg("logic"), py::arg("vars"), py::arg("team"),
          py::arg("formula"));
    m.def("denote", &py_denote, py::arg("logic"), py::arg("vars"), py::arg("formula"),
          "all supporting teams, as team literals");
    m.def("ground", &py_ground, py::arg("logic"), py::arg("vars"), py::arg("formula"));
    m.def("closure", &py_closure, py::arg("logic"), py::arg("vars"), py::arg("formula"));
    m.def("classify", &py_classify, py::arg("logic"), py::arg("vars"), py::arg("f0"),
          py::arg("f1"));
    m.def("burgess", &py_burgess, py::arg("logic"), py::arg("phi"), py::arg("psi"));
    m.def("nnf", [](const std::string& l, const std::string& f) { return py_transform(l, f, tl::nnf); },
          py::arg("logic"), py::arg("formula"));
    m.def("flatten",
          [](const std::string& l, const std::string& f) { return py_transform(l, f, tl::flatten); },
          py::arg("logic"), py::arg("formula"));
    m.def("etnorm",
          [](const std::string& l, const std::string& f) {
              return py_transform(l, f, tl::empty_team_normalize);
          },
          py::arg("logic"), py::arg("formula"));
    m.def("equivalent", &py_equivalent, py::arg("logic"), py::arg("vars"), py::arg("f"),
          py::arg("g"));
    m.def("random_formula", &py_random, py::arg("logic"), py::arg("vars"), py::arg("depth"),
          py::arg("seed"));
}

#include <set>

#include "doctest.h"
#include "teamlogic/formula.hpp"
#include "teamlogic/oracle.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/transforms.hpp"

using namespace teamlogic;

namespace {

const std::vector<LogicProfile> kAllProfiles = {
    LogicProfile::PL,   LogicProfile::PLsim,   LogicProfile::InqB,        LogicProfile::HS,
    LogicProfile::PLNE, LogicProfile::PLNE_GD, LogicProfile::PLNEStar_GD, LogicProfile::PLDep,
    LogicProfile::ML,   LogicProfile::BSML,    LogicProfile::BSMLI};

}  // namespace

TEST_CASE("parse: spec examples") {
    Formula f = parse("neg (p | (q & NE))", LogicProfile::BSML);
    CHECK(equal(f, dneg(lor(atom("p"), land(atom("q"), ne())))));

    Formula g = parse("dep(p,q; r)", LogicProfile::PLDep);
    CHECK(equal(g, dep({"p", "q"}, "r")));

    CHECK_THROWS_AS(parse("bneg neg (bneg p)", LogicProfile::PLsim), ProfileViolation);
}

TEST_CASE("parse: sugar expansion") {
    CHECK(equal(parse("top", LogicProfile::PL), dneg(bot())));
    CHECK(equal(parse("botbar", LogicProfile::PLNE), land(bot(), ne())));
    CHECK(equal(parse("botbar", LogicProfile::PLNEStar_GD), botbar_star()));
    CHECK(equal(parse("box p", LogicProfile::ML), dneg(dia(dneg(atom("p"))))));
    CHECK(equal(parse("con(q)", LogicProfile::PLDep), dep({}, "q")));
}

TEST_CASE("parse: precedence and associativity") {
    // & over | over gor over ->
    CHECK(print(parse("p | q & r", LogicProfile::PL)) == "(p | (q & r))");
    CHECK(print(parse("p gor q | r", LogicProfile::PLNE_GD)) == "(p gor (q | r))");
    CHECK(print(parse("p -> q -> r", LogicProfile::InqB)) == "(p -> (q -> r))");
    CHECK(print(parse("neg p & q", LogicProfile::PL)) == "(neg p & q)");
    // '&' and '|' map to the hs connectives in the hs profile
    Formula f = parse("p & q | r", LogicProfile::HS);
    CHECK(f->kind == Kind::HSOr);
    CHECK(f->left->kind == Kind::HSAnd);
}

TEST_CASE("parse: errors carry positions; profile violations are checked") {
    CHECK_THROWS_AS(parse("p &", LogicProfile::PL), ParseError);
    CHECK_THROWS_AS(parse("(p | q", LogicProfile::PL), ParseError);
    CHECK_THROWS_AS(parse("p q", LogicProfile::PL), ParseError);
    CHECK_THROWS_AS(parse("dep(p,p; q)", LogicProfile::PLDep), ParseError);
    try {
        parse("p & & q", LogicProfile::PL);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(parse("NE", LogicProfile::PL), ProfileViolation);
    CHECK_THROWS_AS(parse("dia p", LogicProfile::PLNE), ProfileViolation);
    CHECK_THROWS_AS(parse("con(q)", LogicProfile::PL), ProfileViolation);
    CHECK_THROWS_AS(parse("neg p", LogicProfile::InqB), ProfileViolation);
    CHECK_THROWS_AS(parse("p hand q", LogicProfile::PL), ProfileViolation);
    // reserved words cannot be atoms
    CHECK_THROWS_AS(parse("Ne", LogicProfile::PLNE), ParseError);
}

TEST_CASE("print: spec examples") {
    CHECK(print(dneg(bot())) == "neg bot");
    CHECK(print(land(bot(), ne())) == "(bot & NE)");
    CHECK(print(dep({}, "q")) == "con(q)");
    CHECK(print(dep({"q", "p"}, "r")) == "dep(p,q; r)");  // antecedents sorted
    CHECK(print(hdia(atom("p"))) == "hdia p");
}

TEST_CASE("round-trip: parse(print(f)) == f for 1000 random formulas per profile") {
    Vocabulary x({"p", "q"});
    for (LogicProfile p : kAllProfiles) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            Formula f = random_formula(p, x, 4, seed);
            CAPTURE(profile_name(p));
            CAPTURE(print(f));
            REQUIRE(equal(parse(print(f), p), f));
        }
    }
}

TEST_CASE("props and modal depth") {
    CHECK(modal_depth(ne()) == 0);
    CHECK(modal_depth(dia(atom("p"))) == 1);
    CHECK(modal_depth(gor(dia(atom("p")), dia(dia(atom("q"))))) == 2);
    Formula f = parse("(dep(p; q) & r)", LogicProfile::PLDep);
    CHECK(props(f) == std::set<std::string>{"p", "q", "r"});
}

TEST_CASE("nnf: spec examples") {
    CHECK(print(nnf(parse("neg (p | q)", LogicProfile::PL))) == "(neg p & neg q)");
    CHECK(print(nnf(parse("neg neg p", LogicProfile::PL))) == "p");
    // neg dia phi stays in box form: neg over dia with the child
    // normalized (neg dia p is its own normal form).
    CHECK(print(nnf(parse("neg dia p", LogicProfile::ML))) == "neg dia p");
    CHECK(print(nnf(parse("neg dia neg p", LogicProfile::ML))) == "neg dia neg p");
    CHECK(print(nnf(parse("neg (p gor q)", LogicProfile::BSMLI))) == "(neg p & neg q)");
    CHECK_THROWS_AS(nnf(parse("p -> q", LogicProfile::InqB)), SemanticsError);
    CHECK_THROWS_AS(nnf(parse("p hand q", LogicProfile::HS)), SemanticsError);
}

namespace {

// In nnf output every neg dominates an atom or a dia node.
bool nnf_shape_ok(const Formula& f) {
    if (is_atom(f->kind)) return true;
    if (f->kind == Kind::DualNeg)
        return (is_atom(f->left->kind) ||
                (f->left->kind == Kind::Dia && nnf_shape_ok(f->left->left)));
    if (is_unary(f->kind)) return nnf_shape_ok(f->left);
    return nnf_shape_ok(f->left) && nnf_shape_ok(f->right);
}

}  // namespace

TEST_CASE("nnf: preserves the support denotation; bi-equivalent when no neg scopes a gor") {
    Vocabulary x({"p", "q"});
    for (LogicProfile p : {LogicProfile::PLNE, LogicProfile::PLNE_GD, LogicProfile::PLDep,
                           LogicProfile::PLNEStar_GD}) {
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            Formula f = random_formula(p, x, 4, seed);
            Formula g = nnf(f);
            CAPTURE(profile_name(p));
            CAPTURE(print(f));
            REQUIRE(nnf_shape_ok(g));
            REQUIRE(equivalent(f, g, x, p).result);
            // the neg(gor) rewrite trades the dual's gor for a splitting
            // or; gor-free inputs normalize bi-equivalently
            if (!contains_kind(f, Kind::GlobalOr)) REQUIRE(bi_equivalent(f, g, x, p).result);
        }
    }
}

TEST_CASE("nnf: bi-equivalent on bounded models for bsml") {
    Vocabulary x({"p"});
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Formula f = random_formula(LogicProfile::BSML, x, 3, seed);
        Formula g = nnf(f);
        CAPTURE(print(f));
        REQUIRE(nnf_shape_ok(g));
        REQUIRE(modal_equivalent_bounded(f, g, 3, x, LogicProfile::BSML).result);
        REQUIRE(modal_equivalent_bounded(dneg(f), dneg(g), 3, x, LogicProfile::BSML).result);
    }
}

TEST_CASE("flatten: spec examples") {
    CHECK(print(flatten(parse("(p & NE)", LogicProfile::PLNE))) == "(p & neg bot)");
    CHECK(print(flatten(parse("con(q)", LogicProfile::PLDep))) == "neg bot");
    CHECK(print(flatten(parse("p", LogicProfile::PL))) == "p");
    CHECK_THROWS_AS(flatten(parse("p gor q", LogicProfile::PLNE_GD)), SemanticsError);
}

TEST_CASE("flatten: commutes with nnf up to equivalence") {
    Vocabulary x({"p", "q"});
    for (LogicProfile p : {LogicProfile::PLNE, LogicProfile::PLDep}) {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            Formula f = random_formula(p, x, 4, seed);
            REQUIRE(equivalent(flatten(f), flatten(nnf(f)), x, LogicProfile::PL).result);
        }
    }
}

TEST_CASE("empty_team_normalize: spec examples and laws") {
    CHECK(print(empty_team_normalize(parse("neg NE", LogicProfile::PLNE))) == "bot");
    CHECK(print(empty_team_normalize(parse("p", LogicProfile::PLNE))) == "p");

    Vocabulary x({"p", "q"});
    for (LogicProfile p : {LogicProfile::PLNE, LogicProfile::PLNE_GD,
                           LogicProfile::PLNEStar_GD}) {
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            Formula f = random_formula(p, x, 4, seed);
            Formula g = empty_team_normalize(f);
            CAPTURE(profile_name(p));
            CAPTURE(print(f));
            // g == f, and neg g has the empty team property.
            REQUIRE(equivalent(f, g, x, p).result);
            REQUIRE(oracle_supports(x, Team{0}, dneg(g), p));
        }
    }
}

TEST_CASE("empty_team_normalize: modal variant on bounded models") {
    Vocabulary x({"p"});
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Formula f = random_formula(LogicProfile::BSML, x, 3, seed);
        Formula g = empty_team_normalize(f);
        REQUIRE(modal_equivalent_bounded(f, g, 3, x, LogicProfile::BSML).result);
        for (const auto& m : enumerate_models(3, x))
            REQUIRE(oracle_property_on_model(m, dneg(g), LogicProfile::BSML).contains(0));
    }
}

TEST_CASE("empty_team_normalize: NE* identities hold (oracle, |X| <= 2)") {
    // botbar* ==(+-) botbar and NE*(-) ==(+-) NE compare a nestar formula
    // with a plne formula, so the denotation pairs are computed in the
    // respective profiles and compared as properties.
    Vocabulary x({"p", "q"});
    auto star = LogicProfile::PLNEStar_GD;
    auto plain = LogicProfile::PLNE;
    CHECK(oracle_property(botbar_star(), x, star) == oracle_property(botbar(), x, plain));
    CHECK(oracle_property(dneg(botbar_star()), x, star) ==
          oracle_property(dneg(botbar()), x, plain));
    CHECK(oracle_property(nestar_minus(), x, star) == oracle_property(ne(), x, plain));
    CHECK(oracle_property(dneg(nestar_minus()), x, star) ==
          oracle_property(dneg(ne()), x, plain));
    // NE* itself is not bilaterally NE: its dual holds on every nonempty
    // team rather than only on the empty one.
    CHECK(!(oracle_property(dneg(nestar()), x, star) == oracle_property(dneg(ne()), x, plain)));
}

TEST_CASE("replacement in positive contexts (oracle-checked)") {
    Vocabulary x({"p", "q"});
    auto prof = LogicProfile::PLNE;
    // phi == psi with distinct duals: bot == neg NE but neg bot != NE.
    Formula phi = bot();
    Formula psi = dneg(ne());
    REQUIRE(equivalent(phi, psi, x, prof).result);
    REQUIRE(!equivalent(dneg(phi), dneg(psi), x, prof).result);

    int even_contexts = 0;
    for (std::uint64_t seed = 1000; seed < 1400; ++seed) {
        Formula chi = random_formula(prof, x, 3, seed);
        // count the negation depth of each p occurrence; the context is
        // positive when every occurrence sits under an even number of negs
        struct Walk {
            bool all_even = true, has_p = false;
            void run(const Formula& f, int negs) {
                if (f->kind == Kind::PropAtom && f->name == "p") {
                    has_p = true;
                    if (negs % 2) all_even = false;
                    return;
                }
                if (is_atom(f->kind)) return;
                int d = negs + (f->kind == Kind::DualNeg ? 1 : 0);
                run(f->left, d);
                if (is_binary(f->kind)) run(f->right, d);
            }
        } w;
        w.run(chi, 0);
        if (!w.has_p || !w.all_even) continue;
        ++even_contexts;
        struct Subst {
            static Formula run(const Formula& f, const Formula& repl) {
                if (f->kind == Kind::PropAtom && f->name == "p") return repl;
                if (is_atom(f->kind)) return f;
                if (is_unary(f->kind)) {
                    Formula c = run(f->left, repl);
                    switch (f->kind) {
                        case Kind::DualNeg: return dneg(c);
                        case Kind::BoolNeg: return bneg(c);
                        case Kind::Dia: return dia(c);
                        default: return hdia(c);
                    }
                }
                Formula l = run(f->left, repl), r = run(f->right, repl);
                switch (f->kind) {
                    case Kind::And: return land(l, r);
                    case Kind::Or: return lor(l, r);
                    case Kind::GlobalOr: return gor(l, r);
                    case Kind::HSAnd: return hand(l, r);
                    case Kind::HSOr: return hor(l, r);
                    default: return implies(l, r);
                }
            }
        };
        CAPTURE(print(chi));
        REQUIRE(equivalent(Subst::run(chi, phi), Subst::run(chi, psi), x, prof).result);
    }
    CHECK(even_contexts >= 50);
}

TEST_CASE("profile validation matrix") {
    CHECK(validate(ne(), LogicProfile::BSML) == std::nullopt);
    CHECK(validate(ne(), LogicProfile::ML) != std::nullopt);
    CHECK(validate(nestar(), LogicProfile::PLNE) != std::nullopt);
    CHECK(validate(gor(atom("p"), atom("q")), LogicProfile::BSML) != std::nullopt);
    CHECK(validate(gor(atom("p"), atom("q")), LogicProfile::BSMLI) == std::nullopt);
    CHECK(validate(bneg(dneg(atom("p"))), LogicProfile::PLsim) == std::nullopt);
    CHECK(validate(dneg(bneg(atom("p"))), LogicProfile::PLsim) != std::nullopt);
    CHECK(validate(implies(atom("p"), atom("q")), LogicProfile::InqB) == std::nullopt);
    CHECK(validate(dneg(atom("p")), LogicProfile::InqB) != std::nullopt);
}

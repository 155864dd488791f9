#include "teamlogic/synthesis.hpp"

#include <algorithm>
#include <set>

#include "teamlogic/bisim.hpp"
#include "teamlogic/incompat.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/transforms.hpp"

namespace teamlogic {

namespace {

constexpr int kModalBoundWorlds = 3;

Vocabulary joint_vocabulary(const Formula& phi, const Formula& psi) {
    std::set<std::string> names = props(phi);
    auto more = props(psi);
    names.insert(more.begin(), more.end());
    return Vocabulary(std::vector<std::string>(names.begin(), names.end()));
}

std::string val_bits(Valuation v, const Vocabulary& x) {
    std::string s;
    for (int i = 0; i < x.size(); ++i) s.push_back(((v >> i) & 1) ? '1' : '0');
    return s.empty() ? std::string("()") : s;
}

SynthesisResult certify_exact(Formula theta, const Formula& phi, const Formula& psi,
                              const Vocabulary& x, LogicProfile profile) {
    SynthesisResult r;
    r.cert_support = equivalent(theta, phi, x, profile).result;
    r.cert_dual = equivalent(dneg(theta), psi, x, profile).result;
    r.theta = std::move(theta);
    r.vocab = x;
    r.bounds = "exact over all teams, |X|=" + std::to_string(x.size());
    return r;
}

}  // namespace

Formula separate_classical(const Formula& phi, const Formula& psi, const Vocabulary& x,
                           LogicProfile profile) {
    if (!is_modal(profile)) {
        Team gphi = Team{oracle_property(phi, x, profile).ground()};
        Team gpsi = Team{oracle_property(psi, x, profile).ground()};
        if (!team_intersect(gphi, gpsi).empty()) {
            Valuation w = static_cast<Valuation>(
                __builtin_ctzll(team_intersect(gphi, gpsi).bits));
            throw RefusalError("phi and psi are not ground-incompatible", val_bits(w, x));
        }
        // gamma := chi^X_{|phi|_X}; phi |= gamma since every supporting
        // team sits inside the ground team, and psi |= neg gamma since
        // supporting teams of psi avoid it.
        return prop_char_team(gphi, x);
    }

    if (x.size() > 2) throw BoundsError("modal separation bound: |X| <= 2");
    int k = std::min(modal_depth(phi), 1);
    // Representative worlds of the bounded ground class of phi,
    // deduplicated by k-bisimulation type; gamma is the disjunction of
    // their Hintikka formulas.
    struct Rep { const KripkeModel* m; int w; };
    std::vector<Rep> reps;
    std::vector<Formula> disjuncts;
    std::set<std::string> seen;
    const auto& models = enumerate_models(kModalBoundWorlds, x);
    for (const auto& m : models) {
        WorldSet g = oracle_property_on_model(m, phi, profile).ground();
        for (int w = 0; w < m.n_worlds; ++w) {
            if (!((g >> w) & 1)) continue;
            bool dup = false;
            for (const auto& r : reps)
                if (world_bisim_k(*r.m, r.w, m, w, x, k)) { dup = true; break; }
            if (dup) continue;
            reps.push_back({&m, w});
            Formula chi = hintikka_world(m, w, x, k);
            if (seen.insert(print(chi)).second) disjuncts.push_back(chi);
        }
    }
    // Bounded ground-incompatibility check against psi.
    for (const auto& m : models) {
        WorldSet gphi = oracle_property_on_model(m, phi, profile).ground();
        WorldSet gpsi = oracle_property_on_model(m, psi, profile).ground();
        if (gphi & gpsi) {
            int w = __builtin_ctz(gphi & gpsi);
            throw RefusalError("phi and psi are not ground-incompatible within bounds",
                               "world w" + std::to_string(w + 1) + " of an enumerated model");
        }
    }
    return fold_or(disjuncts);
}

SynthesisResult burgess_modal(const Formula& phi, const Formula& psi, LogicProfile profile) {
    if (profile != LogicProfile::BSML && profile != LogicProfile::BSMLI)
        throw SemanticsError("burgess_modal runs in bsml or bsmli");
    Vocabulary x = joint_vocabulary(phi, psi);
    Formula theta0 = dia(lor(botbar(), dneg(botbar())));
    Formula phi0 = lor(empty_team_normalize(phi), theta0);
    Formula psi0 = lor(empty_team_normalize(psi), theta0);
    Formula gamma = separate_classical(phi0, psi0, x, profile);
    Formula theta = lor(land(phi0, gamma), dneg(psi0));

    SynthesisResult r;
    r.theta = theta;
    r.vocab = x;
    OracleVerdict a = modal_equivalent_bounded(theta, phi, kModalBoundWorlds, x, profile);
    OracleVerdict b = modal_equivalent_bounded(dneg(theta), psi, kModalBoundWorlds, x, profile);
    r.cert_support = a.result;
    r.cert_dual = b.result;
    r.bounds = a.bounds;
    return r;
}

SynthesisResult burgess_plne_gd(const Formula& phi, const Formula& psi) {
    constexpr auto profile = LogicProfile::PLNE_GD;
    Vocabulary x = joint_vocabulary(phi, psi);
    if (x.size() > 3) throw BoundsError("burgess bound: |X| <= 3");
    // gamma's construction re-checks ground-incompatibility and refuses
    // with the witnessing world.
    Formula gamma = separate_classical(phi, psi, x, profile);
    Formula phi_sbot = lor(dneg(phi), botbar());
    Formula psi_sbot = lor(dneg(psi), botbar());
    Formula theta = dneg(gor(phi_sbot, dneg(gor(psi_sbot, gamma))));
    return certify_exact(std::move(theta), phi, psi, x, profile);
}

Formula delta_formula(const TeamProperty& p, const Vocabulary& x, bool nestar_mode) {
    auto teams = p.members();
    // Raw tuple product; an empty team in p kills every tuple.
    double product = 1;
    for (auto t : teams) product *= __builtin_popcount(t);
    if (product > 1e6) throw BoundsError("delta tuple product exceeds 10^6");

    Formula nonempty_atom = nestar_mode ? nestar() : ne();
    std::vector<Formula> conjuncts;
    if (product >= 1 && !teams.empty()) {
        std::set<std::uint32_t> seen_sets;
        std::vector<int> choice(teams.size(), 0);
        std::vector<std::vector<int>> worlds_of(teams.size());
        for (std::size_t i = 0; i < teams.size(); ++i)
            for (int w = 0; w < x.valuation_count(); ++w)
                if ((teams[i] >> w) & 1) worlds_of[i].push_back(w);
        while (true) {
            std::uint32_t tuple_set = 0;
            for (std::size_t i = 0; i < teams.size(); ++i)
                tuple_set |= 1u << worlds_of[i][choice[i]];
            if (seen_sets.insert(tuple_set).second) {
                std::vector<Formula> chis;
                for (int w = 0; w < x.valuation_count(); ++w)
                    if ((tuple_set >> w) & 1)
                        chis.push_back(prop_char_val(static_cast<Valuation>(w), x));
                conjuncts.push_back(lor(land(fold_or(chis), nonempty_atom), top()));
            }
            std::size_t i = 0;
            while (i < teams.size() && ++choice[i] == static_cast<int>(worlds_of[i].size())) {
                choice[i] = 0;
                ++i;
            }
            if (i == teams.size()) break;
        }
    }
    return fold_and(conjuncts);
}

SynthesisResult burgess_plne(const Formula& phi, const Formula& psi) {
    constexpr auto profile = LogicProfile::PLNE;
    Vocabulary x = joint_vocabulary(phi, psi);
    if (x.size() > 3) throw BoundsError("burgess bound: |X| <= 3");
    TeamProperty p = oracle_property(phi, x, profile);
    TeamProperty q = oracle_property(psi, x, profile);

    if (q.empty())
        return certify_exact(land(phi, dneg(botbar())), phi, psi, x, profile);
    if (p.empty())
        return certify_exact(dneg(land(psi, dneg(botbar()))), phi, psi, x, profile);

    std::uint32_t all = p.universe_mask();
    if ((p.ground() | q.ground()) != all || (p.ground() & q.ground()) != 0) {
        std::uint32_t bad = (p.ground() & q.ground()) ? (p.ground() & q.ground())
                                                      : (all & ~(p.ground() | q.ground()));
        Valuation w = static_cast<Valuation>(__builtin_ctz(bad));
        throw RefusalError("phi and psi are not ground-complementary modulo botbar",
                           val_bits(w, x));
    }

    std::vector<Formula> chis;
    for (auto t : p.members()) chis.push_back(prop_char_team(Team{t}, x));
    Formula theta = lor(land(fold_or(chis), delta_formula(p, x)), dneg(delta_formula(q, x)));
    return certify_exact(std::move(theta), phi, psi, x, profile);
}

SynthesisResult burgess_hs(const Formula& phi, const Formula& psi) {
    constexpr auto profile = LogicProfile::HS;
    Vocabulary x = joint_vocabulary(phi, psi);
    if (x.size() > 3) throw BoundsError("burgess bound: |X| <= 3");
    TeamProperty p = oracle_property(phi, x, profile);
    TeamProperty q = oracle_property(psi, x, profile);
    IncompatibilityVerdict verdict = classify_property_pair(p, q);

    Formula theta;
    if (verdict.d_i_1_of_0)       // psi is a D-I of phi
        theta = hand(phi, top());
    else if (verdict.d_i_0_of_1)  // phi is a D-I of psi
        theta = dneg(hand(psi, top()));
    else
        throw RefusalError("phi and psi are not down-set incompatible on either side", "");
    return certify_exact(std::move(theta), phi, psi, x, profile);
}

SynthesisResult burgess_nestar(const Formula& phi, const Formula& psi) {
    constexpr auto profile = LogicProfile::PLNEStar_GD;
    Vocabulary x = joint_vocabulary(phi, psi);
    if (x.size() > 2) throw BoundsError("burgess bound for nestar certificates: |X| <= 2");
    Formula phi_star = empty_team_normalize(phi);
    Formula psi_star = empty_team_normalize(psi);
    Formula ne_or_bot = gor(nestar(), bot());
    Formula phi_top = dneg(gor(dneg(phi_star), dneg(ne_or_bot)));
    Formula psi_top = dneg(gor(dneg(psi_star), dneg(ne_or_bot)));
    Formula theta = gor(phi_top, lor(botbar_star(), dneg(psi_top)));
    return certify_exact(std::move(theta), phi, psi, x, profile);
}

Formula gamma_n(const Vocabulary& x, int n) {
    if (n < 0) throw SemanticsError("gamma_n needs n >= 0");
    if (n == 0) return bot();
    std::vector<Formula> cons;
    for (const auto& p : x.names()) cons.push_back(con(p));
    Formula g1 = fold_and(cons);
    if (n == 1) return g1;
    std::vector<Formula> copies(static_cast<std::size_t>(n), g1);
    return fold_or(copies);
}

Formula xi_formula(Team s, const Vocabulary& x) {
    if (s.empty()) throw SemanticsError("xi_formula is defined for nonempty teams");
    Team complement{full_team(x).bits & ~s.bits};
    return lor(gamma_n(x, s.size() - 1), prop_char_team(complement, x));
}

namespace {

std::vector<Formula> xi_conjuncts(const TeamProperty& p, const Vocabulary& x,
                                  bool only_larger_than_one) {
    std::vector<Formula> out;
    for (std::uint32_t s = 0; s < p.team_count(); ++s) {
        if (p.contains(s)) continue;
        int size = __builtin_popcount(s);
        if (size == 0) continue;  // the empty team is never a xi index (ETP)
        if (only_larger_than_one && size <= 1) continue;
        out.push_back(xi_formula(Team{s}, x));
    }
    return out;
}

}  // namespace

SynthesisResult burgess_pldep(const Formula& phi, const Formula& psi) {
    constexpr auto profile = LogicProfile::PLDep;
    Vocabulary x = joint_vocabulary(phi, psi);
    if (x.size() > 2) throw BoundsError("burgess bound for pldep: |X| <= 2");
    TeamProperty p = oracle_property(phi, x, profile);
    TeamProperty q = oracle_property(psi, x, profile);
    std::uint32_t all = p.universe_mask();
    if ((p.ground() | q.ground()) != all || (p.ground() & q.ground()) != 0) {
        std::uint32_t bad = (p.ground() & q.ground()) ? (p.ground() & q.ground())
                                                      : (all & ~(p.ground() | q.ground()));
        Valuation w = static_cast<Valuation>(__builtin_ctz(bad));
        throw RefusalError("phi and psi are not ground-complementary", val_bits(w, x));
    }
    Formula theta = lor(fold_and(xi_conjuncts(p, x, false)),
                        dneg(fold_and(xi_conjuncts(q, x, true))));
    return certify_exact(std::move(theta), phi, psi, x, profile);
}

namespace {

// Theta_t: supported by exactly the team t (chi_t pins s inside t, the
// conjuncts pin every member of t into s).
Formula exact_team_formula(Team t, const Vocabulary& x, bool nestar_mode) {
    Formula nonempty_atom = nestar_mode ? nestar() : ne();
    std::vector<Formula> parts{prop_char_team(t, x)};
    for (int w = 0; w < x.valuation_count(); ++w)
        if (t.contains(static_cast<Valuation>(w)))
            parts.push_back(lor(land(prop_char_val(static_cast<Valuation>(w), x), nonempty_atom),
                                top()));
    return fold_and(parts);
}

void require_flag(bool ok, const char* flag) {
    if (!ok) throw RefusalError(std::string("property is not ") + flag, "");
}

}  // namespace

Formula synthesize_from_property(const TeamProperty& p, const Vocabulary& x,
                                 LogicProfile profile) {
    if (p.universe_points() != x.valuation_count())
        throw SemanticsError("property universe does not match the vocabulary");
    ClosureFlags c = check_closure(p);
    Formula out;
    switch (profile) {
        case LogicProfile::PL:
            require_flag(c.downward_closed, "downward-closed");
            require_flag(c.union_closed, "union-closed");
            require_flag(c.empty_team, "empty-team");
            out = prop_char_team(Team{p.ground()}, x);
            break;
        case LogicProfile::PLNE: {
            require_flag(c.convex, "convex");
            require_flag(c.union_closed, "union-closed");
            if (p.empty()) {
                out = botbar();
                break;
            }
            std::vector<Formula> chis;
            for (auto t : p.members()) chis.push_back(prop_char_team(Team{t}, x));
            out = land(fold_or(chis), delta_formula(p, x));
            break;
        }
        case LogicProfile::PLDep:
            require_flag(c.downward_closed, "downward-closed");
            require_flag(c.empty_team, "empty-team");
            out = fold_and(xi_conjuncts(p, x, false));
            break;
        case LogicProfile::PLNE_GD:
        case LogicProfile::PLNEStar_GD: {
            bool star = profile == LogicProfile::PLNEStar_GD;
            std::vector<Formula> parts;
            for (auto t : p.members()) parts.push_back(exact_team_formula(Team{t}, x, star));
            out = fold_gor(parts, star ? botbar_star() : botbar());
            break;
        }
        default:
            throw SemanticsError("synthesize_from_property supports pl, plne, pldep, plnegd, nestar");
    }
    if (!(oracle_property(out, x, profile) == p))
        throw std::logic_error("synthesize_from_property certificate failed");
    return out;
}

Formula dual_normal_form_plne(const TeamProperty& p, const TeamProperty& q,
                              const Vocabulary& x) {
    ClosureFlags cp = check_closure(p), cq = check_closure(q);
    require_flag(!p.empty(), "nonempty");
    require_flag(!q.empty(), "nonempty");
    require_flag(cp.convex && cq.convex, "convex");
    require_flag(cp.union_closed && cq.union_closed, "union-closed");
    std::uint32_t all = p.universe_mask();
    require_flag(q.ground() == (all & ~p.ground()), "ground-complementary-mod-sbot");
    std::vector<Formula> chis;
    for (auto t : p.members()) chis.push_back(prop_char_team(Team{t}, x));
    Formula out = lor(land(fold_or(chis), delta_formula(p, x)), dneg(delta_formula(q, x)));
    if (!(oracle_property(out, x, LogicProfile::PLNE) == p) ||
        !(oracle_property(dneg(out), x, LogicProfile::PLNE) == q))
        throw std::logic_error("plne dual normal form certificate failed");
    return out;
}

Formula dual_normal_form_pldep(const TeamProperty& p, const TeamProperty& q,
                               const Vocabulary& x) {
    ClosureFlags cp = check_closure(p), cq = check_closure(q);
    require_flag(cp.downward_closed && cq.downward_closed, "downward-closed");
    require_flag(cp.empty_team && cq.empty_team, "empty-team");
    std::uint32_t all = p.universe_mask();
    require_flag(q.ground() == (all & ~p.ground()), "ground-complementary");
    Formula out = lor(fold_and(xi_conjuncts(p, x, false)),
                      dneg(fold_and(xi_conjuncts(q, x, true))));
    if (!(oracle_property(out, x, LogicProfile::PLDep) == p) ||
        !(oracle_property(dneg(out), x, LogicProfile::PLDep) == q))
        throw std::logic_error("pldep dual normal form certificate failed");
    return out;
}

}  // namespace teamlogic

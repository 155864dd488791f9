#pragma once

#include <stdexcept>
#include <string>

#include "teamlogic/formula.hpp"
#include "teamlogic/oracle.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// Precondition failure with a concrete counterexample (a world of
// |phi0| cap |phi1|, a ground-complement gap, etc.).
struct RefusalError : std::runtime_error {
    RefusalError(const std::string& msg, std::string witness_text)
        : std::runtime_error(msg), witness(std::move(witness_text)) {}
    std::string witness;
};

struct SynthesisResult {
    Formula theta;
    bool cert_support = false;  // theta == phi
    bool cert_dual = false;     // neg theta == psi
    Vocabulary vocab;           // props(phi) cup props(psi)
    std::string bounds;         // certificate scope (exact / bounded models)

    bool certified() const { return cert_support && cert_dual; }
};

// Separation: for ground-incompatible phi, psi over the joint vocabulary,
// a classical formula gamma with phi |= gamma and psi |= neg gamma.
// Propositional profiles: exact, gamma = char formula of |phi|_X. Modal
// profiles: bounded (models <= 3 worlds, |X| <= 2, k = min(md(phi), 1)),
// gamma is a disjunction of world Hintikka formulas deduplicated by
// k-bisimulation type.
Formula separate_classical(const Formula& phi, const Formula& psi, const Vocabulary& x,
                           LogicProfile profile);

// theta := (phi0 & gamma) | neg psi0 with phi0 = etnorm(phi) | theta0,
// theta0 = dia(botbar | neg botbar). Certificates over bounded model
// enumeration (<= 3 worlds).
SynthesisResult burgess_modal(const Formula& phi, const Formula& psi, LogicProfile profile);

// theta := neg (phi_sbot gor neg (psi_sbot gor gamma)) with
// phi_sbot = neg phi | botbar. Exact; refuses non-G-I pairs with a
// witnessing world.
SynthesisResult burgess_plne_gd(const Formula& phi, const Formula& psi);

// theta := (Vee_{t in P} chi_t & delta_P) | neg delta_Q, with the
// psi == botbar / phi == botbar special branches first. Requires G-C
// modulo botbar; refuses with the failing ground-team element.
SynthesisResult burgess_plne(const Formula& phi, const Formula& psi);

// theta := phi hand top, or neg (psi hand top), by the satisfied D-I
// side. Requires E-D-I.
SynthesisResult burgess_hs(const Formula& phi, const Formula& psi);

// Total: no incompatibility precondition.
SynthesisResult burgess_nestar(const Formula& phi, const Formula& psi);

// theta := And_{s in ||top||\P} xi_s | neg And_{s in (||top||\Q)^{>1}} xi_s.
// Requires G-C; |X| <= 2 (formula size cap).
SynthesisResult burgess_pldep(const Formula& phi, const Formula& psi);

// delta^X_P: conjunction over tuples (w1 in t1, ..., wn in tn) of
// ((chi_w1 | ... | chi_wn) & NE) | top, deduplicated by tuple set; the
// raw tuple product is capped at 10^6. In nestar mode NE* stands in
// for NE.
Formula delta_formula(const TeamProperty& p, const Vocabulary& x, bool nestar_mode = false);

// gamma_0 = bot, gamma_1 = And_{p in X} con(p), gamma_n = Vee_n gamma_1;
// s |= gamma_n iff |s| <= n.
Formula gamma_n(const Vocabulary& x, int n);

// xi_s = gamma_{|s|-1} | chi_{|top|\s} for nonempty s; t |= xi_s iff
// s is not a subset of t.
Formula xi_formula(Team s, const Vocabulary& x);

// A formula whose denotation over x is exactly p, for the profile's
// closure class: pl (flat), plne (convex+union-closed; empty property
// realized by botbar), pldep (downward closed + empty team), plnegd /
// nestar (any property). Oracle-certified; throws RefusalError naming
// the violated flag.
Formula synthesize_from_property(const TeamProperty& p, const Vocabulary& x,
                                 LogicProfile profile);

// The displayed dual normal forms; both denotations certified.
Formula dual_normal_form_plne(const TeamProperty& p, const TeamProperty& q,
                              const Vocabulary& x);
Formula dual_normal_form_pldep(const TeamProperty& p, const TeamProperty& q,
                               const Vocabulary& x);

}  // namespace teamlogic

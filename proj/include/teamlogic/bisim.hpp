#pragma once

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// k-bisimulation with respect to x between pointed models; the models
// may be distinct (both must interpret every name in x).
bool world_bisim_k(const KripkeModel& ma, int wa, const KripkeModel& mb, int wb,
                   const Vocabulary& x, int k);

// Team version: forth/back over members using world_bisim_k.
bool team_bisim_k(const KripkeModel& ma, WorldSet sa, const KripkeModel& mb, WorldSet sb,
                  const Vocabulary& x, int k);

// k-th Hintikka (characteristic) formula of (m, w) over x; an ML formula
// of modal depth k. Syntactically identical children are deduplicated in
// the dia-conjunct and the box-disjunct.
Formula hintikka_world(const KripkeModel& m, int w, const Vocabulary& x, int k);

// Disjunction over members; bot for the empty team.
Formula hintikka_team(const KripkeModel& m, WorldSet s, const Vocabulary& x, int k);

// Propositional analogues: conjunction of literals over x, and the team
// characteristic formula with s' |= char(s) iff s' subset of s.
Formula prop_char_val(Valuation v, const Vocabulary& x);
Formula prop_char_team(Team s, const Vocabulary& x);

}  // namespace teamlogic

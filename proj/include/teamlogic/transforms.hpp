#pragma once

#include "teamlogic/formula.hpp"

namespace teamlogic {

// Negation normal form. Pushes neg through neg/&/|/gor by the dualities
// and through dia via box (neg dia phi == box neg phi, with box sugar
// collapsed so the result keeps neg only over atoms and dia nodes).
// Throws SemanticsError on InqB/HS connectives and on bneg under neg.
Formula nnf(const Formula& f);

// Vaananen-style flattening: NE and dependence atoms become top,
// everything else is homomorphic. PL/PLNE/PLDep node kinds only.
Formula flatten(const Formula& f);

// Lemma "phi' == phi and neg phi' has the empty team property": NNF with
// each genuine neg-NE literal replaced by bot. In the NE* variant,
// positive NE* becomes NE*- and neg-NE* becomes bot. The variant is
// chosen by whether f contains NE*.
Formula empty_team_normalize(const Formula& f);

}  // namespace teamlogic

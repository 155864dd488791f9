#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// A false verdict always carries a witness; a true modal verdict carries
// the bounds it was established under.
struct OracleVerdict {
    bool result = false;
    std::optional<Team> team_witness;                  // propositional counterexample
    std::shared_ptr<const KripkeModel> model_witness;  // modal counterexample
    WorldSet model_witness_team = 0;
    std::string bounds;

    explicit operator bool() const { return result; }
};

// Brute-force ground truth, independent of the memoized evaluator: each
// subformula's support/anti-support table over all teams is computed
// bottom-up, with the or/and splits re-derived by direct subset
// enumeration. |X| <= 4 for flat formulas; the split tables need
// |X| <= 3.
bool oracle_supports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile);
bool oracle_antisupports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile);
TeamProperty oracle_property(const Formula& f, const Vocabulary& x, LogicProfile profile);
TeamProperty oracle_property_on_model(const KripkeModel& m, const Formula& f,
                                      LogicProfile profile);

OracleVerdict entails(const Formula& f, const Formula& g, const Vocabulary& x,
                      LogicProfile profile);
OracleVerdict equivalent(const Formula& f, const Formula& g, const Vocabulary& x,
                         LogicProfile profile);
// equivalent plus equivalence of the dual negations.
OracleVerdict bi_equivalent(const Formula& f, const Formula& g, const Vocabulary& x,
                            LogicProfile profile);

// All Kripke models with 1..max_worlds worlds over x, up to isomorphism
// (canonical representatives under world relabeling). max_worlds <= 4,
// |x| <= 2.
const std::vector<KripkeModel>& enumerate_models(int max_worlds, const Vocabulary& x);

OracleVerdict modal_equivalent_bounded(const Formula& f, const Formula& g, int max_worlds,
                                       const Vocabulary& x, LogicProfile profile);

// Deterministic per seed; respects the profile grammar including the
// plsim restriction on bneg under neg. depth <= 6.
Formula random_formula(LogicProfile profile, const Vocabulary& x, int depth,
                       std::uint64_t seed);

// Single-point classical evaluators (third code path, used for the
// conservativity/flatness cross-checks). PL kinds only / ML kinds only.
bool classical_val_sat(const Vocabulary& x, Valuation v, const Formula& f);
bool standard_world_sat(const KripkeModel& m, int w, const Formula& f);

}  // namespace teamlogic

#pragma once

#include <string>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// One flag per Table-1 notion. d_i_1_of_0 is the table's orientation
// ("phi1 is a down-set incompatibility of phi0"); the unoriented D-I
// node of the implication graph is that flag.
struct IncompatibilityVerdict {
    bool bot_i = false;                // [s |= phi0 and s |= phi1] -> s empty
    bool ground_i = false;             // |phi0| and |phi1| disjoint
    bool strongbot_i = false;          // no shared team at all
    bool ne_i = false;                 // shared teams = exactly {empty}
    bool world_i = false;              // {w} |= phi0 iff {w} not|= phi1
    bool team_i = false;               // s |= phi0 iff s not|= phi1
    bool flat_i = false;               // world_i and both flat
    bool d_i_1_of_0 = false;           // phi1 is a D-I of phi0
    bool d_i_0_of_1 = false;           // phi0 is a D-I of phi1
    bool e_d_i = false;                // either side
    bool ground_complementary = false; // |phi_i| = |top| \ |phi_(1-i)|
    bool ground_complementary_mod_bot = false;
};

IncompatibilityVerdict classify_property_pair(const TeamProperty& p, const TeamProperty& q);

// Exhaustive decision over 2^X; |X| <= 3.
IncompatibilityVerdict classify_pair(const Formula& f0, const Formula& f1,
                                     const Vocabulary& x, LogicProfile profile);

// Returns the implication-graph edges whose antecedent holds for v but
// whose consequent fails; conditional edges fire only when the guarding
// closure flags hold for both formulas. Empty result = consistent.
std::vector<std::string> check_implication_graph(const IncompatibilityVerdict& v,
                                                 const ClosureFlags& c0,
                                                 const ClosureFlags& c1);

// Flag names in CLI order, e.g. "bot-I G-I ...".
std::string verdict_line(const IncompatibilityVerdict& v);

}  // namespace teamlogic

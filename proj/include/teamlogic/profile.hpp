#pragma once

#include <optional>
#include <string>

#include "teamlogic/formula.hpp"

namespace teamlogic {

enum class LogicProfile {
    PL,
    PLsim,        // PL + Boolean negation (bneg), bneg banned under neg
    InqB,         // support-only
    HS,           // down-set anti-support regime
    PLNE,         // PL + NE
    PLNE_GD,      // PL + NE + gor (propositional BSMLI)
    PLNEStar_GD,  // PL + NE* + gor
    PLDep,        // PL + dependence atoms
    ML,
    BSML,
    BSMLI,
};

enum class AntiSupportRegime {
    StandardBilateral,
    HsDownset,
    SupportOnly,
};

bool profile_allows(LogicProfile p, Kind k);
AntiSupportRegime regime_of(LogicProfile p);
bool is_modal(LogicProfile p);
bool has_dual_negation(LogicProfile p);

// Lowercase CLI names: pl plsim inqb hs plne plnegd nestar pldep ml bsml bsmli.
std::string profile_name(LogicProfile p);
std::optional<LogicProfile> parse_profile(const std::string& name);

// Checks every node kind against the profile, plus the PLsim rule that
// bneg may not occur in the scope of neg. Returns an error message, or
// nullopt when f is well-formed for p.
std::optional<std::string> validate(const Formula& f, LogicProfile p);

}  // namespace teamlogic

#include "teamlogic/profile.hpp"

namespace teamlogic {

bool profile_allows(LogicProfile p, Kind k) {
    switch (k) {
        case Kind::PropAtom:
        case Kind::Bot:
            return true;
        case Kind::And:
        case Kind::Or:
            return p != LogicProfile::InqB && p != LogicProfile::HS;
        case Kind::DualNeg:
            return p != LogicProfile::InqB;
        case Kind::BoolNeg:
            return p == LogicProfile::PLsim;
        case Kind::Implies:
            return p == LogicProfile::InqB;
        case Kind::GlobalOr:
            return p == LogicProfile::InqB || p == LogicProfile::PLNE_GD ||
                   p == LogicProfile::PLNEStar_GD || p == LogicProfile::BSMLI;
        case Kind::HSAnd:
        case Kind::HSOr:
        case Kind::HSDia:
            return p == LogicProfile::HS;
        case Kind::NE:
            return p == LogicProfile::PLNE || p == LogicProfile::PLNE_GD ||
                   p == LogicProfile::BSML || p == LogicProfile::BSMLI;
        case Kind::NEStar:
            return p == LogicProfile::PLNEStar_GD;
        case Kind::Dep:
            return p == LogicProfile::PLDep;
        case Kind::Dia:
            return is_modal(p);
    }
    return false;
}

AntiSupportRegime regime_of(LogicProfile p) {
    if (p == LogicProfile::HS) return AntiSupportRegime::HsDownset;
    if (p == LogicProfile::InqB) return AntiSupportRegime::SupportOnly;
    return AntiSupportRegime::StandardBilateral;
}

bool is_modal(LogicProfile p) {
    return p == LogicProfile::ML || p == LogicProfile::BSML || p == LogicProfile::BSMLI;
}

bool has_dual_negation(LogicProfile p) { return p != LogicProfile::InqB; }

std::string profile_name(LogicProfile p) {
    switch (p) {
        case LogicProfile::PL: return "pl";
        case LogicProfile::PLsim: return "plsim";
        case LogicProfile::InqB: return "inqb";
        case LogicProfile::HS: return "hs";
        case LogicProfile::PLNE: return "plne";
        case LogicProfile::PLNE_GD: return "plnegd";
        case LogicProfile::PLNEStar_GD: return "nestar";
        case LogicProfile::PLDep: return "pldep";
        case LogicProfile::ML: return "ml";
        case LogicProfile::BSML: return "bsml";
        case LogicProfile::BSMLI: return "bsmli";
    }
    return "?";
}

std::optional<LogicProfile> parse_profile(const std::string& name) {
    for (LogicProfile p : {LogicProfile::PL, LogicProfile::PLsim, LogicProfile::InqB,
                           LogicProfile::HS, LogicProfile::PLNE, LogicProfile::PLNE_GD,
                           LogicProfile::PLNEStar_GD, LogicProfile::PLDep, LogicProfile::ML,
                           LogicProfile::BSML, LogicProfile::BSMLI}) {
        if (profile_name(p) == name) return p;
    }
    return std::nullopt;
}

namespace {

const char* kind_word(Kind k) {
    switch (k) {
        case Kind::PropAtom: return "atom";
        case Kind::Bot: return "bot";
        case Kind::NE: return "NE";
        case Kind::NEStar: return "NEstar";
        case Kind::Dep: return "dep";
        case Kind::DualNeg: return "neg";
        case Kind::BoolNeg: return "bneg";
        case Kind::And: return "&";
        case Kind::Or: return "|";
        case Kind::GlobalOr: return "gor";
        case Kind::HSAnd: return "hand";
        case Kind::HSOr: return "hor";
        case Kind::Implies: return "->";
        case Kind::Dia: return "dia";
        case Kind::HSDia: return "hdia";
    }
    return "?";
}

std::optional<std::string> validate_rec(const Formula& f, LogicProfile p, bool under_dneg) {
    if (!profile_allows(p, f->kind))
        return std::string("connective '") + kind_word(f->kind) + "' is not part of " +
               profile_name(p);
    if (p == LogicProfile::PLsim && under_dneg && f->kind == Kind::BoolNeg)
        return std::string("bneg may not occur in the scope of neg in plsim");
    if (is_atom(f->kind)) return std::nullopt;
    bool d = under_dneg || f->kind == Kind::DualNeg;
    if (auto e = validate_rec(f->left, p, d)) return e;
    if (is_binary(f->kind))
        if (auto e = validate_rec(f->right, p, d)) return e;
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const Formula& f, LogicProfile p) {
    return validate_rec(f, p, false);
}

}  // namespace teamlogic

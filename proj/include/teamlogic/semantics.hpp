#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/profile.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

struct SemanticsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit set of teams over a universe of points (propositional
// valuations, or the worlds of one model). Membership is indexed by the
// team's bitmask.
class TeamProperty {
  public:
    TeamProperty() = default;
    explicit TeamProperty(int universe_points)
        : universe_points_(universe_points), member_(std::size_t{1} << universe_points, false) {
        if (universe_points < 0 || universe_points > 16)
            throw BoundsError("team property universe too large");
    }

    int universe_points() const { return universe_points_; }
    std::size_t team_count() const { return member_.size(); }

    bool contains(std::uint32_t team) const { return member_[team]; }
    void set(std::uint32_t team, bool value = true) { member_[team] = value; }

    std::size_t size() const;                 // number of member teams
    bool empty() const { return size() == 0; }
    std::vector<std::uint32_t> members() const;
    std::uint32_t ground() const;             // union of all member teams
    std::uint32_t universe_mask() const {
        return universe_points_ == 32 ? ~0u : ((1u << universe_points_) - 1);
    }

    friend bool operator==(const TeamProperty& a, const TeamProperty& b) {
        return a.universe_points_ == b.universe_points_ && a.member_ == b.member_;
    }

  private:
    int universe_points_ = 0;
    std::vector<bool> member_;
};

struct ClosureFlags {
    bool downward_closed = false;
    bool convex = false;
    bool union_closed = false;
    bool empty_team = false;
    bool flat = false;
};

// -- the bilateral evaluator --------------------------------------------

// Propositional profiles; props(f) must lie in x and f must be valid for
// the profile (throws SemanticsError otherwise).
bool supports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile);
bool antisupports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile);

// Modal profiles.
bool supports(const KripkeModel& m, WorldSet s, const Formula& f, LogicProfile profile);
bool antisupports(const KripkeModel& m, WorldSet s, const Formula& f, LogicProfile profile);

// -- denotations ---------------------------------------------------------

// ||f||_X over all 2^(2^|X|) teams; propositional profiles only, |X| <= 4.
TeamProperty property_of(const Formula& f, const Vocabulary& x, LogicProfile profile);
// ||neg f||_X.
TeamProperty dual_property_of(const Formula& f, const Vocabulary& x, LogicProfile profile);
// |f|_X, the union of all supporting teams.
Team ground_team(const Formula& f, const Vocabulary& x, LogicProfile profile);

// Per-model restriction of ||f||: all s on M with M,s |= f. |W| <= 10.
TeamProperty property_on_model(const KripkeModel& m, const Formula& f, LogicProfile profile);
TeamProperty dual_property_on_model(const KripkeModel& m, const Formula& f, LogicProfile profile);
WorldSet ground_team_on_model(const KripkeModel& m, const Formula& f, LogicProfile profile);

// Each flag decided by exhaustive quantification; flat is computed from
// its own definition and cross-checked against dc && uc && etp.
ClosureFlags check_closure(const TeamProperty& p);

}  // namespace teamlogic

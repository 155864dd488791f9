#include "teamlogic/incompat.hpp"

#include <sstream>

namespace teamlogic {

IncompatibilityVerdict classify_property_pair(const TeamProperty& p, const TeamProperty& q) {
    if (p.universe_points() != q.universe_points())
        throw SemanticsError("property pair over different universes");
    const int n = p.universe_points();
    const std::uint32_t n_teams = static_cast<std::uint32_t>(p.team_count());
    IncompatibilityVerdict v;

    bool shared_nonempty = false, shared_empty = p.contains(0) && q.contains(0);
    for (std::uint32_t s = 1; s < n_teams; ++s)
        if (p.contains(s) && q.contains(s)) { shared_nonempty = true; break; }
    v.strongbot_i = !shared_nonempty && !shared_empty;
    v.ne_i = !shared_nonempty && shared_empty;
    v.bot_i = v.strongbot_i || v.ne_i;

    std::uint32_t gp = p.ground(), gq = q.ground();
    std::uint32_t all = p.universe_mask();
    v.ground_i = (gp & gq) == 0;
    v.ground_complementary = (gp == (all & ~gq)) && (gq == (all & ~gp));
    v.ground_complementary_mod_bot = v.ground_complementary || p.empty() || q.empty();

    v.world_i = true;
    for (int w = 0; w < n; ++w)
        if (p.contains(1u << w) == q.contains(1u << w)) { v.world_i = false; break; }

    v.team_i = true;
    for (std::uint32_t s = 0; s < n_teams; ++s)
        if (p.contains(s) == q.contains(s)) { v.team_i = false; break; }

    ClosureFlags cp = check_closure(p), cq = check_closure(q);
    v.flat_i = v.world_i && cp.flat && cq.flat;

    // phi1 D-I of phi0: s in Q iff no nonempty subteam of s is in P.
    auto downset_incompat = [n_teams](const TeamProperty& p0, const TeamProperty& p1) {
        for (std::uint32_t s = 0; s < n_teams; ++s) {
            bool no_nonempty_sub = true;
            for (std::uint32_t t = s; t != 0; t = (t - 1) & s)
                if (p0.contains(t)) { no_nonempty_sub = false; break; }
            if (p1.contains(s) != no_nonempty_sub) return false;
        }
        return true;
    };
    v.d_i_1_of_0 = downset_incompat(p, q);
    v.d_i_0_of_1 = downset_incompat(q, p);
    v.e_d_i = v.d_i_1_of_0 || v.d_i_0_of_1;
    return v;
}

IncompatibilityVerdict classify_pair(const Formula& f0, const Formula& f1,
                                     const Vocabulary& x, LogicProfile profile) {
    if (x.size() > 3)
        throw BoundsError("classify_pair is exhaustive over 2^X; cap |X| <= 3");
    return classify_property_pair(property_of(f0, x, profile), property_of(f1, x, profile));
}

std::vector<std::string> check_implication_graph(const IncompatibilityVerdict& v,
                                                 const ClosureFlags& c0,
                                                 const ClosureFlags& c1) {
    std::vector<std::string> out;
    auto edge = [&out](bool from, bool to, const char* name) {
        if (from && !to) out.push_back(name);
    };
    // unconditional
    edge(v.flat_i, v.d_i_1_of_0, "F-I => D-I");
    edge(v.flat_i, v.ground_complementary, "F-I => G-C");
    edge(v.flat_i, v.ne_i, "F-I => NE-I");
    edge(v.d_i_1_of_0, v.e_d_i, "D-I => E-D-I");
    edge(v.e_d_i, v.world_i, "E-D-I => W-I");
    edge(v.e_d_i, v.bot_i, "E-D-I => bot-I");
    edge(v.ground_complementary, v.ground_complementary_mod_bot, "G-C => G-C-mod-sbot");
    edge(v.ground_complementary_mod_bot, v.ground_i, "G-C-mod-sbot => G-I");
    edge(v.ground_i, v.bot_i, "G-I => bot-I");
    edge(v.ne_i, v.bot_i, "NE-I => bot-I");
    edge(v.strongbot_i, v.bot_i, "sbot-I => bot-I");
    edge(v.team_i, v.strongbot_i, "T-I => sbot-I");
    // conditional on closure flags of both formulas
    if (c0.downward_closed && c1.downward_closed) {
        edge(v.bot_i, v.ground_i, "[dc] bot-I => G-I");
        edge(v.e_d_i, v.ground_complementary, "[dc] E-D-I => G-C");
        edge(v.ground_complementary, v.world_i, "[dc] G-C => W-I");
        edge(v.world_i, v.ground_complementary, "[dc] W-I => G-C");
    }
    if (c0.empty_team && c1.empty_team) {
        edge(v.bot_i, v.ne_i, "[et] bot-I => NE-I");
        edge(v.ground_complementary_mod_bot, v.ground_complementary, "[et] G-C-mod-sbot => G-C");
    }
    if (c0.convex && c1.convex) edge(v.ne_i, v.ground_i, "[cx] NE-I => G-I");
    // A uc+et gate alone would be unsound here: take
    // ||((p & NE) | (neg p & NE)) gor bot|| against ||top||: both union
    // closed with the empty team property and the pair is W-I, but the
    // first is not downward closed, hence not flat. The full gate is
    // flatness, under which W-I is F-I by definition.
    if (c0.downward_closed && c0.union_closed && c0.empty_team && c1.downward_closed &&
        c1.union_closed && c1.empty_team)
        edge(v.world_i, v.flat_i, "[dc,uc,et] W-I => F-I");
    return out;
}

std::string verdict_line(const IncompatibilityVerdict& v) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](bool b, const char* name) {
        if (!b) return;
        if (!first) os << ' ';
        first = false;
        os << name;
    };
    put(v.bot_i, "bot-I");
    put(v.ground_i, "G-I");
    put(v.strongbot_i, "sbot-I");
    put(v.ne_i, "NE-I");
    put(v.world_i, "W-I");
    put(v.team_i, "T-I");
    put(v.flat_i, "F-I");
    put(v.d_i_1_of_0, "D-I");
    put(v.d_i_0_of_1, "D-I-rev");
    put(v.e_d_i, "E-D-I");
    put(v.ground_complementary, "G-C");
    put(v.ground_complementary_mod_bot, "G-C-mod-sbot");
    if (first) os << "none";
    return os.str();
}

}  // namespace teamlogic

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "teamlogic/team.hpp"

namespace teamlogic {

inline constexpr int kMaxWorlds = 10;

// Worlds are indices 0..n-1; a modal team is a bitset over them.
using WorldSet = std::uint32_t;

struct KripkeModel {
    int n_worlds = 0;
    std::vector<WorldSet> successors;        // successors[w] = R[w]
    std::vector<std::string> world_names;    // for the text format
    Vocabulary vocab;
    std::vector<WorldSet> valuation;         // valuation[i] = worlds where names[i] holds

    WorldSet all_worlds() const {
        return n_worlds == 32 ? ~0u : ((1u << n_worlds) - 1);
    }
    bool world_sat(int w, int name_index) const {
        return (valuation[name_index] >> w) & 1;
    }
};

// R[s] = union of R[w] for w in s.
WorldSet r_image(const KripkeModel& m, WorldSet s);

// Line-oriented model text format:
//   worlds: w1 w2 ...
//   rel: w1->w2 w3->w1 ...
//   val p: w1 w2
//   team: w1 w2
// Unmentioned vocabulary names get an empty valuation; the team line is
// optional (empty team when absent). vocab_hint orders the vocabulary;
// when empty, the val lines define it in order of appearance.
struct ParsedModel {
    KripkeModel model;
    WorldSet team = 0;
    bool has_team = false;
};
ParsedModel parse_model(const std::string& text, const Vocabulary& vocab_hint = {});
std::string print_model(const KripkeModel& m, WorldSet team, bool with_team);

std::string print_world_set(const KripkeModel& m, WorldSet s);
WorldSet parse_world_set(const std::string& text, const KripkeModel& m);

// Disjoint union; worlds of b are shifted by a.n_worlds. Vocabularies
// must agree.
KripkeModel disjoint_union(const KripkeModel& a, const KripkeModel& b);

}  // namespace teamlogic

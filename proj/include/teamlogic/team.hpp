#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace teamlogic {

// Ordered proposition names; the ordering fixes the valuation encoding
// (bit i of a valuation index gives the truth value of names[i]).
class Vocabulary {
  public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> names);

    // "p,q" or "p q".
    static Vocabulary parse(const std::string& text);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 when absent
    int valuation_count() const { return 1 << size(); }

  private:
    std::vector<std::string> names_;
};

inline constexpr int kMaxVocabulary = 6;
inline constexpr int kMaxEnumerationVocabulary = 4;

using Valuation = std::uint32_t;  // index < 2^|X|

// Set of valuations over one vocabulary, as a bitset over valuation
// indices. The empty team is a legal value.
struct Team {
    std::uint64_t bits = 0;

    bool contains(Valuation v) const { return (bits >> v) & 1; }
    bool empty() const { return bits == 0; }
    int size() const { return __builtin_popcountll(bits); }
    bool subset_of(Team other) const { return (bits & ~other.bits) == 0; }

    friend bool operator==(Team a, Team b) { return a.bits == b.bits; }
    friend auto operator<=>(Team a, Team b) { return a.bits <=> b.bits; }
};

inline Team team_union(Team a, Team b) { return {a.bits | b.bits}; }
inline Team team_intersect(Team a, Team b) { return {a.bits & b.bits}; }
inline Team full_team(const Vocabulary& x) {
    return {x.size() == 0 ? 1ull : (x.valuation_count() == 64 ? ~0ull : (1ull << x.valuation_count()) - 1)};
}

// All 2^(2^|X|) teams, empty team first, ascending bitset order.
std::vector<Team> all_teams(const Vocabulary& x);

// Team literal over X=[p,q]: bitstrings in vocabulary order, e.g.
// "{10,01}"; the empty team is "{}".
std::string print_team(Team s, const Vocabulary& x);
Team parse_team(const std::string& text, const Vocabulary& x);

}  // namespace teamlogic

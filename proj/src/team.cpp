#include "teamlogic/team.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace teamlogic {

Vocabulary::Vocabulary(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("vocabulary: empty name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("vocabulary: duplicate name '" + n + "'");
    }
    if (size() > kMaxVocabulary)
        throw std::invalid_argument("vocabulary too large (cap " +
                                    std::to_string(kMaxVocabulary) + ")");
}

Vocabulary Vocabulary::parse(const std::string& text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) names.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) names.push_back(std::move(cur));
    return Vocabulary(std::move(names));
}

int Vocabulary::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::vector<Team> all_teams(const Vocabulary& x) {
    if (x.size() > kMaxEnumerationVocabulary)
        throw std::invalid_argument("vocabulary too large for team enumeration (cap " +
                                    std::to_string(kMaxEnumerationVocabulary) + ")");
    std::uint64_t n = 1ull << x.valuation_count();
    std::vector<Team> out;
    out.reserve(n);
    for (std::uint64_t m = 0; m < n; ++m) out.push_back({m});
    return out;
}

std::string print_team(Team s, const Vocabulary& x) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v = 0; v < x.valuation_count(); ++v) {
        if (!s.contains(static_cast<Valuation>(v))) continue;
        if (!first) os << ',';
        first = false;
        for (int i = 0; i < x.size(); ++i) os << (((v >> i) & 1) ? '1' : '0');
    }
    os << '}';
    return os.str();
}

Team parse_team(const std::string& text, const Vocabulary& x) {
    auto l = text.find('{');
    auto r = text.rfind('}');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("team literal must be braced, e.g. {10,01}");
    Team s;
    std::string inner = text.substr(l + 1, r - l - 1);
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (static_cast<int>(cur.size()) != x.size())
            throw std::invalid_argument("team literal entry '" + cur + "' has wrong width for " +
                                        std::to_string(x.size()) + " variables");
        Valuation v = 0;
        for (int i = 0; i < x.size(); ++i) {
            if (cur[i] == '1') v |= 1u << i;
            else if (cur[i] != '0')
                throw std::invalid_argument("team literal entries are bitstrings: '" + cur + "'");
        }
        s.bits |= 1ull << v;
        cur.clear();
    };
    for (char c : inner) {
        if (c == ',' || c == ' ') flush();
        else cur.push_back(c);
    }
    flush();
    return s;
}

}  // namespace teamlogic

#include "teamlogic/kripke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace teamlogic {

WorldSet r_image(const KripkeModel& m, WorldSet s) {
    WorldSet out = 0;
    for (int w = 0; w < m.n_worlds; ++w)
        if ((s >> w) & 1) out |= m.successors[w];
    return out;
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

int world_index(const KripkeModel& m, const std::string& name) {
    auto it = std::find(m.world_names.begin(), m.world_names.end(), name);
    if (it == m.world_names.end())
        throw std::invalid_argument("unknown world '" + name + "'");
    return static_cast<int>(it - m.world_names.begin());
}

}  // namespace

ParsedModel parse_model(const std::string& text, const Vocabulary& vocab_hint) {
    ParsedModel out;
    KripkeModel& m = out.model;
    std::vector<std::pair<std::string, std::vector<std::string>>> val_lines;
    std::vector<std::pair<std::string, std::string>> rel_pairs;
    std::vector<std::string> team_words;

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto colon = line.find(':');
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (colon == std::string::npos)
            throw std::invalid_argument("model line missing ':': " + line);
        std::string head = line.substr(0, colon);
        std::string rest = line.substr(colon + 1);
        auto head_words = split_words(head);
        if (head_words.empty()) throw std::invalid_argument("model line missing keyword");
        const std::string& kw = head_words[0];
        if (kw == "worlds") {
            m.world_names = split_words(rest);
        } else if (kw == "rel") {
            for (const auto& pair : split_words(rest)) {
                auto arrow = pair.find("->");
                if (arrow == std::string::npos)
                    throw std::invalid_argument("rel entries look like w1->w2: " + pair);
                rel_pairs.emplace_back(pair.substr(0, arrow), pair.substr(arrow + 2));
            }
        } else if (kw == "val") {
            if (head_words.size() != 2)
                throw std::invalid_argument("val lines look like 'val p: w1 w2'");
            val_lines.emplace_back(head_words[1], split_words(rest));
        } else if (kw == "team") {
            team_words = split_words(rest);
            out.has_team = true;
        } else {
            throw std::invalid_argument("unknown model keyword '" + kw + "'");
        }
    }

    m.n_worlds = static_cast<int>(m.world_names.size());
    if (m.n_worlds == 0) throw std::invalid_argument("model has no 'worlds:' line");
    if (m.n_worlds > kMaxWorlds)
        throw std::invalid_argument("model too large (cap " + std::to_string(kMaxWorlds) +
                                    " worlds)");
    for (std::size_t i = 0; i < m.world_names.size(); ++i)
        for (std::size_t j = i + 1; j < m.world_names.size(); ++j)
            if (m.world_names[i] == m.world_names[j])
                throw std::invalid_argument("duplicate world '" + m.world_names[i] + "'");

    std::vector<std::string> vocab_names = vocab_hint.names();
    for (const auto& [p, _] : val_lines)
        if (std::find(vocab_names.begin(), vocab_names.end(), p) == vocab_names.end())
            vocab_names.push_back(p);
    m.vocab = Vocabulary(vocab_names);

    m.successors.assign(m.n_worlds, 0);
    m.valuation.assign(m.vocab.size(), 0);
    for (const auto& [a, b] : rel_pairs)
        m.successors[world_index(m, a)] |= 1u << world_index(m, b);
    for (const auto& [p, worlds] : val_lines) {
        int pi = m.vocab.index_of(p);
        for (const auto& w : worlds) m.valuation[pi] |= 1u << world_index(m, w);
    }
    for (const auto& w : team_words) out.team |= 1u << world_index(m, w);
    return out;
}

std::string print_world_set(const KripkeModel& m, WorldSet s) {
    std::ostringstream os;
    bool first = true;
    for (int w = 0; w < m.n_worlds; ++w) {
        if (!((s >> w) & 1)) continue;
        if (!first) os << ' ';
        first = false;
        os << m.world_names[w];
    }
    return os.str();
}

WorldSet parse_world_set(const std::string& text, const KripkeModel& m) {
    WorldSet s = 0;
    for (const auto& w : split_words(text)) s |= 1u << world_index(m, w);
    return s;
}

std::string print_model(const KripkeModel& m, WorldSet team, bool with_team) {
    std::ostringstream os;
    os << "worlds:";
    for (const auto& w : m.world_names) os << ' ' << w;
    os << "\nrel:";
    for (int a = 0; a < m.n_worlds; ++a)
        for (int b = 0; b < m.n_worlds; ++b)
            if ((m.successors[a] >> b) & 1)
                os << ' ' << m.world_names[a] << "->" << m.world_names[b];
    os << '\n';
    for (int i = 0; i < m.vocab.size(); ++i) {
        os << "val " << m.vocab.names()[i] << ':';
        for (int w = 0; w < m.n_worlds; ++w)
            if ((m.valuation[i] >> w) & 1) os << ' ' << m.world_names[w];
        os << '\n';
    }
    if (with_team) os << "team: " << print_world_set(m, team) << '\n';
    return os.str();
}

KripkeModel disjoint_union(const KripkeModel& a, const KripkeModel& b) {
    if (a.vocab.names() != b.vocab.names())
        throw std::invalid_argument("disjoint_union: vocabularies differ");
    if (a.n_worlds + b.n_worlds > kMaxWorlds)
        throw std::invalid_argument("disjoint_union: too many worlds");
    KripkeModel m;
    m.n_worlds = a.n_worlds + b.n_worlds;
    m.vocab = a.vocab;
    m.successors = a.successors;
    for (WorldSet r : b.successors) m.successors.push_back(r << a.n_worlds);
    m.world_names = a.world_names;
    for (const auto& n : b.world_names) m.world_names.push_back(n + "'");
    m.valuation.resize(a.vocab.size());
    for (int i = 0; i < a.vocab.size(); ++i)
        m.valuation[i] = a.valuation[i] | (b.valuation[i] << a.n_worlds);
    return m;
}

}  // namespace teamlogic

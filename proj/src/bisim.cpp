#include "teamlogic/bisim.hpp"

#include <set>

#include "teamlogic/parser.hpp"
#include "teamlogic/semantics.hpp"

namespace teamlogic {

namespace {

bool atoms_agree(const KripkeModel& ma, int wa, const KripkeModel& mb, int wb,
                 const Vocabulary& x) {
    for (const auto& p : x.names()) {
        int ia = ma.vocab.index_of(p);
        int ib = mb.vocab.index_of(p);
        if (ia < 0 || ib < 0) throw SemanticsError("bisimulation vocabulary not in model");
        if (ma.world_sat(wa, ia) != mb.world_sat(wb, ib)) return false;
    }
    return true;
}

}  // namespace

bool world_bisim_k(const KripkeModel& ma, int wa, const KripkeModel& mb, int wb,
                   const Vocabulary& x, int k) {
    if (!atoms_agree(ma, wa, mb, wb, x)) return false;
    if (k == 0) return true;
    // forth
    for (int va = 0; va < ma.n_worlds; ++va) {
        if (!((ma.successors[wa] >> va) & 1)) continue;
        bool matched = false;
        for (int vb = 0; vb < mb.n_worlds && !matched; ++vb)
            if (((mb.successors[wb] >> vb) & 1) && world_bisim_k(ma, va, mb, vb, x, k - 1))
                matched = true;
        if (!matched) return false;
    }
    // back
    for (int vb = 0; vb < mb.n_worlds; ++vb) {
        if (!((mb.successors[wb] >> vb) & 1)) continue;
        bool matched = false;
        for (int va = 0; va < ma.n_worlds && !matched; ++va)
            if (((ma.successors[wa] >> va) & 1) && world_bisim_k(ma, va, mb, vb, x, k - 1))
                matched = true;
        if (!matched) return false;
    }
    return true;
}

bool team_bisim_k(const KripkeModel& ma, WorldSet sa, const KripkeModel& mb, WorldSet sb,
                  const Vocabulary& x, int k) {
    for (int wa = 0; wa < ma.n_worlds; ++wa) {
        if (!((sa >> wa) & 1)) continue;
        bool matched = false;
        for (int wb = 0; wb < mb.n_worlds && !matched; ++wb)
            if (((sb >> wb) & 1) && world_bisim_k(ma, wa, mb, wb, x, k)) matched = true;
        if (!matched) return false;
    }
    for (int wb = 0; wb < mb.n_worlds; ++wb) {
        if (!((sb >> wb) & 1)) continue;
        bool matched = false;
        for (int wa = 0; wa < ma.n_worlds && !matched; ++wa)
            if (((sa >> wa) & 1) && world_bisim_k(ma, wa, mb, wb, x, k)) matched = true;
        if (!matched) return false;
    }
    return true;
}

namespace {

void push_unique(std::vector<Formula>& fs, std::set<std::string>& seen, const Formula& f) {
    if (seen.insert(print(f)).second) fs.push_back(f);
}

}  // namespace

Formula hintikka_world(const KripkeModel& m, int w, const Vocabulary& x, int k) {
    // chi[u] at the current level; built bottom-up from level 0.
    std::vector<Formula> chi(m.n_worlds);
    for (int u = 0; u < m.n_worlds; ++u) {
        std::vector<Formula> lits;
        for (int i = 0; i < x.size(); ++i) {
            int mi = m.vocab.index_of(x.names()[i]);
            if (mi < 0) throw SemanticsError("hintikka vocabulary not in model");
            Formula a = atom(x.names()[i]);
            lits.push_back(m.world_sat(u, mi) ? a : dneg(a));
        }
        chi[u] = fold_and(lits);
    }
    for (int level = 1; level <= k; ++level) {
        std::vector<Formula> next(m.n_worlds);
        for (int u = 0; u < m.n_worlds; ++u) {
            std::vector<Formula> parts{chi[u]};
            std::vector<Formula> succ;
            std::set<std::string> seen;
            for (int v = 0; v < m.n_worlds; ++v)
                if ((m.successors[u] >> v) & 1) push_unique(succ, seen, chi[v]);
            for (const auto& c : succ) parts.push_back(dia(c));
            parts.push_back(box(fold_or(succ)));
            next[u] = fold_and(parts);
        }
        chi = std::move(next);
    }
    return chi[w];
}

Formula hintikka_team(const KripkeModel& m, WorldSet s, const Vocabulary& x, int k) {
    std::vector<Formula> parts;
    std::set<std::string> seen;
    for (int w = 0; w < m.n_worlds; ++w)
        if ((s >> w) & 1) push_unique(parts, seen, hintikka_world(m, w, x, k));
    return fold_or(parts);
}

Formula prop_char_val(Valuation v, const Vocabulary& x) {
    std::vector<Formula> lits;
    for (int i = 0; i < x.size(); ++i) {
        Formula a = atom(x.names()[i]);
        lits.push_back(((v >> i) & 1) ? a : dneg(a));
    }
    return fold_and(lits);
}

Formula prop_char_team(Team s, const Vocabulary& x) {
    std::vector<Formula> parts;
    for (int v = 0; v < x.valuation_count(); ++v)
        if (s.contains(static_cast<Valuation>(v)))
            parts.push_back(prop_char_val(static_cast<Valuation>(v), x));
    return fold_or(parts);
}

}  // namespace teamlogic

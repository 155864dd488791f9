#include "teamlogic/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace teamlogic {

namespace {

// Support/anti-support membership over every team of the universe.
// anti_valid is false below a connective without an anti-support clause
// (bneg, ->); consuming such a table is the caller's error.
struct Table {
    std::vector<std::uint8_t> sup, anti;
    bool anti_valid = true;
};

class TableBuilder {
  public:
    TableBuilder(const Vocabulary* x, const KripkeModel* m, LogicProfile profile)
        : x_(x), m_(m), profile_(profile), regime_(regime_of(profile)) {
        n_points_ = x_ ? x_->valuation_count() : m_->n_worlds;
        n_teams_ = std::size_t{1} << n_points_;
    }

    Table build(const Formula& f) {
        Table l, r;
        if (!is_atom(f->kind)) {
            l = build(f->left);
            if (is_binary(f->kind)) r = build(f->right);
        }
        Table t;
        t.sup.assign(n_teams_, 0);
        fill_support(f, l, r, t);
        if (regime_ != AntiSupportRegime::SupportOnly) fill_anti(f, l, r, t);
        return t;
    }

  private:
    std::uint64_t extension(const std::string& name) const {
        if (x_) {
            int i = x_->index_of(name);
            if (i < 0) throw SemanticsError("proposition '" + name + "' not in the vocabulary");
            std::uint64_t mask = 0;
            for (int v = 0; v < n_points_; ++v)
                if ((v >> i) & 1) mask |= 1ull << v;
            return mask;
        }
        int i = m_->vocab.index_of(name);
        if (i < 0) throw SemanticsError("proposition '" + name + "' not in the vocabulary");
        return m_->valuation[i];
    }

    void require_split_bounds() const {
        if (n_points_ > 8)
            throw BoundsError("universe too large for the oracle's direct split enumeration");
    }

    // exists t, u subsets of s with t|u == s and a[t] and b[u]: plain
    // double subset scan, no sharing with the evaluator's 3^|s| search.
    void cover_table(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                     std::vector<std::uint8_t>& out) const {
        require_split_bounds();
        for (std::uint64_t s = 0; s < n_teams_; ++s) {
            bool found = false;
            for (std::uint64_t t = s; !found; t = (t - 1) & s) {
                if (a[t]) {
                    for (std::uint64_t u = s; ; u = (u - 1) & s) {
                        if ((t | u) == s && b[u]) { found = true; break; }
                        if (u == 0) break;
                    }
                }
                if (t == 0) break;
            }
            out[s] = found;
        }
    }

    void fill_support(const Formula& f, const Table& l, const Table& r, Table& t) {
        switch (f->kind) {
            case Kind::PropAtom: {
                std::uint64_t e = extension(f->name);
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.sup[s] = (s & ~e) == 0;
                return;
            }
            case Kind::Bot:
                t.sup[0] = 1;
                return;
            case Kind::NE:
            case Kind::NEStar:
                for (std::uint64_t s = 1; s < n_teams_; ++s) t.sup[s] = 1;
                return;
            case Kind::Dep: {
                std::vector<std::uint64_t> ants;
                for (const auto& a : f->antecedents) ants.push_back(extension(a));
                std::uint64_t q = extension(f->name);
                for (std::uint64_t s = 0; s < n_teams_; ++s) {
                    bool ok = true;
                    for (int v = 0; v < n_points_ && ok; ++v) {
                        if (!((s >> v) & 1)) continue;
                        for (int w = v + 1; w < n_points_ && ok; ++w) {
                            if (!((s >> w) & 1)) continue;
                            bool agree = true;
                            for (auto am : ants)
                                if ((((am >> v) ^ (am >> w)) & 1) != 0) { agree = false; break; }
                            if (agree && ((((q >> v) ^ (q >> w)) & 1) != 0)) ok = false;
                        }
                    }
                    t.sup[s] = ok;
                }
                return;
            }
            case Kind::DualNeg:
                if (!l.anti_valid) throw SemanticsError("bneg/-> has no anti-support clause");
                t.sup = l.anti;
                return;
            case Kind::BoolNeg:
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.sup[s] = !l.sup[s];
                return;
            case Kind::And:
            case Kind::HSAnd:
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.sup[s] = l.sup[s] && r.sup[s];
                return;
            case Kind::Or:
            case Kind::HSOr:
                cover_table(l.sup, r.sup, t.sup);
                return;
            case Kind::GlobalOr:
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.sup[s] = l.sup[s] || r.sup[s];
                return;
            case Kind::Implies:
                for (std::uint64_t s = 0; s < n_teams_; ++s) {
                    bool ok = true;
                    for (std::uint64_t u = s;; u = (u - 1) & s) {
                        if (l.sup[u] && !r.sup[u]) { ok = false; break; }
                        if (u == 0) break;
                    }
                    t.sup[s] = ok;
                }
                return;
            case Kind::Dia:
                for (std::uint64_t s = 0; s < n_teams_; ++s) {
                    bool ok = true;
                    for (int w = 0; w < n_points_ && ok; ++w) {
                        if (!((s >> w) & 1)) continue;
                        std::uint64_t rs = m_->successors[w];
                        bool found = false;
                        for (std::uint64_t u = rs; u != 0; u = (u - 1) & rs)
                            if (l.sup[u]) { found = true; break; }
                        ok = found;
                    }
                    t.sup[s] = ok;
                }
                return;
            case Kind::HSDia:
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.sup[s] = !l.anti[s];
                return;
        }
    }

    void fill_anti(const Formula& f, const Table& l, const Table& r, Table& t) {
        t.anti.assign(n_teams_, 0);
        if (f->kind == Kind::DualNeg) {
            t.anti = l.sup;
            return;
        }
        if (regime_ == AntiSupportRegime::HsDownset) {
            // Universal clause from the formula's own support table.
            for (std::uint64_t s = 0; s < n_teams_; ++s) {
                bool ok = true;
                for (std::uint64_t u = s; u != 0; u = (u - 1) & s)
                    if (t.sup[u]) { ok = false; break; }
                t.anti[s] = ok;
            }
            return;
        }
        switch (f->kind) {
            case Kind::PropAtom: {
                std::uint64_t e = extension(f->name);
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.anti[s] = (s & e) == 0;
                return;
            }
            case Kind::Bot:
                for (std::uint64_t s = 0; s < n_teams_; ++s) t.anti[s] = 1;
                return;
            case Kind::NE:
                t.anti[0] = 1;
                return;
            case Kind::NEStar:
                for (std::uint64_t s = 1; s < n_teams_; ++s) t.anti[s] = 1;
                return;
            case Kind::Dep:
                t.anti[0] = 1;
                return;
            case Kind::And:
                if ((t.anti_valid = l.anti_valid && r.anti_valid))
                    cover_table(l.anti, r.anti, t.anti);
                return;
            case Kind::Or:
            case Kind::GlobalOr:
                if ((t.anti_valid = l.anti_valid && r.anti_valid))
                    for (std::uint64_t s = 0; s < n_teams_; ++s)
                        t.anti[s] = l.anti[s] && r.anti[s];
                return;
            case Kind::Dia:
                if ((t.anti_valid = l.anti_valid))
                    for (std::uint64_t s = 0; s < n_teams_; ++s) {
                        bool ok = true;
                        for (int w = 0; w < n_points_ && ok; ++w)
                            if (((s >> w) & 1) && !l.anti[m_->successors[w]]) ok = false;
                        t.anti[s] = ok;
                    }
                return;
            case Kind::BoolNeg:
            case Kind::Implies:
                t.anti_valid = false;
                return;
            default:
                throw SemanticsError("hand/hor/hdia anti-support requires the hs profile");
        }
    }

    const Vocabulary* x_;
    const KripkeModel* m_;
    LogicProfile profile_;
    AntiSupportRegime regime_;
    int n_points_ = 0;
    std::size_t n_teams_ = 0;
};

void oracle_check_prop(const Vocabulary& x, const Formula& f, LogicProfile profile) {
    if (is_modal(profile) && modal_depth(f) > 0)
        throw SemanticsError("oracle: formulas with dia need bounded model enumeration");
    if (x.size() > kMaxEnumerationVocabulary)
        throw BoundsError("oracle: vocabulary too large (cap " +
                          std::to_string(kMaxEnumerationVocabulary) + ")");
    if (auto err = validate(f, profile)) throw SemanticsError(*err);
}

std::string prop_bounds(const Vocabulary& x) {
    return "exhaustive over all teams, |X|=" + std::to_string(x.size());
}

}  // namespace

TeamProperty oracle_property(const Formula& f, const Vocabulary& x, LogicProfile profile) {
    oracle_check_prop(x, f, profile);
    Table t = TableBuilder(&x, nullptr, profile).build(f);
    TeamProperty p(x.valuation_count());
    for (std::uint32_t s = 0; s < p.team_count(); ++s)
        if (t.sup[s]) p.set(s);
    return p;
}

TeamProperty oracle_property_on_model(const KripkeModel& m, const Formula& f,
                                      LogicProfile profile) {
    if (!is_modal(profile)) throw SemanticsError("oracle: model evaluation needs a modal profile");
    if (auto err = validate(f, profile)) throw SemanticsError(*err);
    Table t = TableBuilder(nullptr, &m, profile).build(f);
    TeamProperty p(m.n_worlds);
    for (std::uint32_t s = 0; s < p.team_count(); ++s)
        if (t.sup[s]) p.set(s);
    return p;
}

bool oracle_supports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile) {
    oracle_check_prop(x, f, profile);
    return TableBuilder(&x, nullptr, profile).build(f).sup[s.bits];
}

bool oracle_antisupports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile) {
    oracle_check_prop(x, f, profile);
    if (regime_of(profile) == AntiSupportRegime::SupportOnly)
        throw SemanticsError("anti-support is undefined in " + profile_name(profile));
    Table t = TableBuilder(&x, nullptr, profile).build(f);
    if (!t.anti_valid) throw SemanticsError("bneg/-> has no anti-support clause");
    return t.anti[s.bits];
}

OracleVerdict entails(const Formula& f, const Formula& g, const Vocabulary& x,
                      LogicProfile profile) {
    TeamProperty pf = oracle_property(f, x, profile);
    TeamProperty pg = oracle_property(g, x, profile);
    OracleVerdict v;
    v.bounds = prop_bounds(x);
    for (std::uint32_t s = 0; s < pf.team_count(); ++s) {
        if (pf.contains(s) && !pg.contains(s)) {
            v.result = false;
            v.team_witness = Team{s};
            return v;
        }
    }
    v.result = true;
    return v;
}

OracleVerdict equivalent(const Formula& f, const Formula& g, const Vocabulary& x,
                         LogicProfile profile) {
    TeamProperty pf = oracle_property(f, x, profile);
    TeamProperty pg = oracle_property(g, x, profile);
    OracleVerdict v;
    v.bounds = prop_bounds(x);
    for (std::uint32_t s = 0; s < pf.team_count(); ++s) {
        if (pf.contains(s) != pg.contains(s)) {
            v.result = false;
            v.team_witness = Team{s};
            return v;
        }
    }
    v.result = true;
    return v;
}

OracleVerdict bi_equivalent(const Formula& f, const Formula& g, const Vocabulary& x,
                            LogicProfile profile) {
    OracleVerdict v = equivalent(f, g, x, profile);
    if (!v.result) return v;
    return equivalent(dneg(f), dneg(g), x, profile);
}

namespace {

// Lexicographic encoding of (R, V) used for canonical-form selection.
std::vector<std::uint32_t> encode_model(const KripkeModel& m, const std::vector<int>& perm) {
    std::vector<std::uint32_t> code;
    std::vector<int> inv(m.n_worlds);
    for (int w = 0; w < m.n_worlds; ++w) inv[perm[w]] = w;
    for (int w = 0; w < m.n_worlds; ++w) {
        std::uint32_t row = 0;
        WorldSet succ = m.successors[inv[w]];
        for (int v = 0; v < m.n_worlds; ++v)
            if ((succ >> inv[v]) & 1) row |= 1u << v;
        code.push_back(row);
    }
    for (const auto& val : m.valuation) {
        std::uint32_t row = 0;
        for (int v = 0; v < m.n_worlds; ++v)
            if ((val >> inv[v]) & 1) row |= 1u << v;
        code.push_back(row);
    }
    return code;
}

bool is_canonical(const KripkeModel& m) {
    std::vector<int> perm(m.n_worlds);
    for (int i = 0; i < m.n_worlds; ++i) perm[i] = i;
    auto self = encode_model(m, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (encode_model(m, perm) < self) return false;
    return true;
}

}  // namespace

const std::vector<KripkeModel>& enumerate_models(int max_worlds, const Vocabulary& x) {
    if (max_worlds < 1 || max_worlds > 4 || x.size() > 2)
        throw BoundsError("model enumeration bounds: max_worlds <= 4, |X| <= 2");
    static std::map<std::pair<int, std::vector<std::string>>, std::vector<KripkeModel>> cache;
    auto key = std::make_pair(max_worlds, x.names());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<KripkeModel> out;
    for (int n = 1; n <= max_worlds; ++n) {
        std::uint64_t rel_count = 1ull << (n * n);
        std::uint64_t val_count = 1ull << (n * x.size());
        for (std::uint64_t rel = 0; rel < rel_count; ++rel) {
            KripkeModel m;
            m.n_worlds = n;
            m.vocab = x;
            m.successors.assign(n, 0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if ((rel >> (a * n + b)) & 1) m.successors[a] |= 1u << b;
            for (std::uint64_t val = 0; val < val_count; ++val) {
                m.valuation.assign(x.size(), 0);
                for (int i = 0; i < x.size(); ++i)
                    m.valuation[i] = static_cast<WorldSet>((val >> (i * n)) & ((1u << n) - 1));
                if (!is_canonical(m)) continue;
                KripkeModel keep = m;
                keep.world_names.clear();
                for (int w = 0; w < n; ++w) keep.world_names.push_back("w" + std::to_string(w + 1));
                out.push_back(std::move(keep));
            }
        }
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

OracleVerdict modal_equivalent_bounded(const Formula& f, const Formula& g, int max_worlds,
                                       const Vocabulary& x, LogicProfile profile) {
    OracleVerdict v;
    v.bounds = "all models with <= " + std::to_string(max_worlds) + " worlds over |X|=" +
               std::to_string(x.size()) + ", up to isomorphism";
    for (const KripkeModel& m : enumerate_models(max_worlds, x)) {
        TeamProperty pf = oracle_property_on_model(m, f, profile);
        TeamProperty pg = oracle_property_on_model(m, g, profile);
        if (pf == pg) continue;
        for (std::uint32_t s = 0; s < pf.team_count(); ++s) {
            if (pf.contains(s) != pg.contains(s)) {
                v.result = false;
                v.model_witness = std::make_shared<KripkeModel>(m);
                v.model_witness_team = s;
                return v;
            }
        }
    }
    v.result = true;
    return v;
}

namespace {

struct Gen {
    std::mt19937_64 rng;
    const Vocabulary& x;
    LogicProfile profile;

    std::uint64_t pick(std::uint64_t n) { return rng() % n; }

    std::string pick_name() { return x.names()[pick(x.names().size())]; }

    Formula leaf() {
        std::vector<Kind> pool{Kind::Bot};
        if (x.size() > 0) pool.insert(pool.begin(), {Kind::PropAtom, Kind::PropAtom});
        if (profile_allows(profile, Kind::NE)) pool.push_back(Kind::NE);
        if (profile_allows(profile, Kind::NEStar)) pool.push_back(Kind::NEStar);
        if (profile_allows(profile, Kind::Dep) && x.size() > 0) pool.push_back(Kind::Dep);
        Kind k = pool[pick(pool.size())];
        switch (k) {
            case Kind::PropAtom: return atom(pick_name());
            case Kind::Bot: return bot();
            case Kind::NE: return ne();
            case Kind::NEStar: return nestar();
            default: {
                std::vector<std::string> ants;
                for (const auto& n : x.names())
                    if (pick(2)) ants.push_back(n);
                return dep(std::move(ants), pick_name());
            }
        }
    }

    Formula gen(int depth, bool under_dneg) {
        if (depth <= 0) return leaf();
        std::vector<Kind> pool;
        auto add = [&](Kind k, int w) { for (int i = 0; i < w; ++i) pool.push_back(k); };
        if (profile_allows(profile, Kind::DualNeg)) add(Kind::DualNeg, 2);
        if (profile_allows(profile, Kind::BoolNeg) && !under_dneg) add(Kind::BoolNeg, 2);
        if (profile_allows(profile, Kind::And)) add(Kind::And, 3);
        if (profile_allows(profile, Kind::Or)) add(Kind::Or, 3);
        if (profile_allows(profile, Kind::GlobalOr)) add(Kind::GlobalOr, 2);
        if (profile_allows(profile, Kind::HSAnd)) add(Kind::HSAnd, 3);
        if (profile_allows(profile, Kind::HSOr)) add(Kind::HSOr, 3);
        if (profile_allows(profile, Kind::Implies)) add(Kind::Implies, 3);
        if (profile_allows(profile, Kind::Dia)) add(Kind::Dia, 2);
        if (profile_allows(profile, Kind::HSDia)) add(Kind::HSDia, 2);
        add(Kind::PropAtom, 2);  // stands for "stop here with a leaf"
        Kind k = pool[pick(pool.size())];
        switch (k) {
            case Kind::PropAtom:
                return leaf();
            case Kind::DualNeg:
                return dneg(gen(depth - 1, true));
            case Kind::BoolNeg:
                return bneg(gen(depth - 1, under_dneg));
            case Kind::Dia:
                return dia(gen(depth - 1, under_dneg));
            case Kind::HSDia:
                return hdia(gen(depth - 1, under_dneg));
            case Kind::And:
                return land(gen(depth - 1, under_dneg), gen(depth - 1, under_dneg));
            case Kind::Or:
                return lor(gen(depth - 1, under_dneg), gen(depth - 1, under_dneg));
            case Kind::GlobalOr:
                return gor(gen(depth - 1, under_dneg), gen(depth - 1, under_dneg));
            case Kind::HSAnd:
                return hand(gen(depth - 1, under_dneg), gen(depth - 1, under_dneg));
            case Kind::HSOr:
                return hor(gen(depth - 1, under_dneg), gen(depth - 1, under_dneg));
            case Kind::Implies:
                return implies(gen(depth - 1, under_dneg), gen(depth - 1, under_dneg));
            default:
                return leaf();
        }
    }
};

}  // namespace

Formula random_formula(LogicProfile profile, const Vocabulary& x, int depth,
                       std::uint64_t seed) {
    if (depth > 6) throw BoundsError("random_formula depth cap is 6");
    Gen g{std::mt19937_64(seed), x, profile};
    return g.gen(depth, false);
}

bool classical_val_sat(const Vocabulary& x, Valuation v, const Formula& f) {
    switch (f->kind) {
        case Kind::PropAtom: {
            int i = x.index_of(f->name);
            if (i < 0) throw SemanticsError("proposition '" + f->name + "' not in vocabulary");
            return (v >> i) & 1;
        }
        case Kind::Bot: return false;
        case Kind::DualNeg: return !classical_val_sat(x, v, f->left);
        case Kind::And: return classical_val_sat(x, v, f->left) && classical_val_sat(x, v, f->right);
        case Kind::Or: return classical_val_sat(x, v, f->left) || classical_val_sat(x, v, f->right);
        default:
            throw SemanticsError("classical evaluation is defined for pl formulas only");
    }
}

bool standard_world_sat(const KripkeModel& m, int w, const Formula& f) {
    switch (f->kind) {
        case Kind::PropAtom: {
            int i = m.vocab.index_of(f->name);
            if (i < 0) throw SemanticsError("proposition '" + f->name + "' not in vocabulary");
            return m.world_sat(w, i);
        }
        case Kind::Bot: return false;
        case Kind::DualNeg: return !standard_world_sat(m, w, f->left);
        case Kind::And:
            return standard_world_sat(m, w, f->left) && standard_world_sat(m, w, f->right);
        case Kind::Or:
            return standard_world_sat(m, w, f->left) || standard_world_sat(m, w, f->right);
        case Kind::Dia: {
            for (int v = 0; v < m.n_worlds; ++v)
                if (((m.successors[w] >> v) & 1) && standard_world_sat(m, v, f->left)) return true;
            return false;
        }
        default:
            throw SemanticsError("standard evaluation is defined for ml formulas only");
    }
}

}  // namespace teamlogic

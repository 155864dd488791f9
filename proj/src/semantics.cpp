#include "teamlogic/semantics.hpp"

#include <unordered_map>

namespace teamlogic {

std::size_t TeamProperty::size() const {
    std::size_t n = 0;
    for (bool b : member_) n += b;
    return n;
}

std::vector<std::uint32_t> TeamProperty::members() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 0; t < member_.size(); ++t)
        if (member_[t]) out.push_back(t);
    return out;
}

std::uint32_t TeamProperty::ground() const {
    std::uint32_t g = 0;
    for (std::uint32_t t = 0; t < member_.size(); ++t)
        if (member_[t]) g |= t;
    return g;
}

namespace {

// One evaluation call; the memo table lives for the lifetime of the
// evaluator and is keyed by (node, team, relation). The vocabulary/model
// is fixed per evaluator.
class Evaluator {
  public:
    Evaluator(const Vocabulary* x, const KripkeModel* m, LogicProfile profile)
        : x_(x), m_(m), profile_(profile), regime_(regime_of(profile)) {
        if (x_) {
            for (int i = 0; i < x_->size(); ++i) {
                std::uint64_t mask = 0;
                for (int v = 0; v < x_->valuation_count(); ++v)
                    if ((v >> i) & 1) mask |= 1ull << v;
                atom_masks_.push_back(mask);
            }
            n_points_ = x_->valuation_count();
        } else {
            n_points_ = m_->n_worlds;
        }
    }

    bool eval(const Formula& f, std::uint64_t s, bool anti) {
        Key k{f.get(), s, anti};
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        bool r = anti ? eval_anti(f, s) : eval_support(f, s);
        memo_.emplace(k, r);
        return r;
    }

  private:
    bool point_sat(int point, const std::string& name) const {
        if (x_) {
            int i = x_->index_of(name);
            if (i < 0) throw SemanticsError("proposition '" + name + "' not in the vocabulary");
            return (point >> i) & 1;
        }
        int i = m_->vocab.index_of(name);
        if (i < 0) throw SemanticsError("proposition '" + name + "' not in the vocabulary");
        return m_->world_sat(point, i);
    }

    std::uint64_t atom_extension(const std::string& name) const {
        if (x_) {
            int i = x_->index_of(name);
            if (i < 0) throw SemanticsError("proposition '" + name + "' not in the vocabulary");
            return atom_masks_[i];
        }
        int i = m_->vocab.index_of(name);
        if (i < 0) throw SemanticsError("proposition '" + name + "' not in the vocabulary");
        return m_->valuation[i];
    }

    bool eval_support(const Formula& f, std::uint64_t s) {
        switch (f->kind) {
            case Kind::PropAtom:
                return (s & ~atom_extension(f->name)) == 0;
            case Kind::Bot:
                return s == 0;
            case Kind::NE:
            case Kind::NEStar:
                return s != 0;
            case Kind::Dep:
                return dep_holds(f, s);
            case Kind::DualNeg:
                return eval(f->left, s, true);
            case Kind::BoolNeg:
                return !eval(f->left, s, false);
            case Kind::And:
            case Kind::HSAnd:
                return eval(f->left, s, false) && eval(f->right, s, false);
            case Kind::Or:
            case Kind::HSOr:
                return exists_cover(f->left, f->right, s, false);
            case Kind::GlobalOr:
                return eval(f->left, s, false) || eval(f->right, s, false);
            case Kind::Implies: {
                for (std::uint64_t t = s;; t = (t - 1) & s) {
                    if (eval(f->left, t, false) && !eval(f->right, t, false)) return false;
                    if (t == 0) break;
                }
                return true;
            }
            case Kind::Dia: {
                for (int w = 0; w < n_points_; ++w) {
                    if (!((s >> w) & 1)) continue;
                    std::uint64_t r = m_->successors[w];
                    bool found = false;
                    for (std::uint64_t t = r; t != 0; t = (t - 1) & r) {
                        if (eval(f->left, t, false)) { found = true; break; }
                    }
                    if (!found) return false;
                }
                return true;
            }
            case Kind::HSDia:
                return !eval(f->left, s, true);
        }
        throw SemanticsError("unreachable");
    }

    bool eval_anti(const Formula& f, std::uint64_t s) {
        if (regime_ == AntiSupportRegime::SupportOnly)
            throw SemanticsError("anti-support is undefined in " + profile_name(profile_));
        if (f->kind == Kind::DualNeg) return eval(f->left, s, false);
        if (regime_ == AntiSupportRegime::HsDownset) {
            // s =| phi iff every subteam supporting phi is empty; the
            // loop covers exactly the nonempty subteams.
            for (std::uint64_t t = s; t != 0; t = (t - 1) & s)
                if (eval(f, t, false)) return false;
            return true;
        }
        switch (f->kind) {
            case Kind::PropAtom:
                return (s & atom_extension(f->name)) == 0;
            case Kind::Bot:
                return true;
            case Kind::NE:
                return s == 0;
            case Kind::NEStar:
                return s != 0;
            case Kind::Dep:
                return s == 0;
            case Kind::BoolNeg:
                throw SemanticsError("bneg has no anti-support clause");
            case Kind::Implies:
                throw SemanticsError("-> has no anti-support clause");
            case Kind::And:
                return exists_cover(f->left, f->right, s, true);
            case Kind::Or:
            case Kind::GlobalOr:
                return eval(f->left, s, true) && eval(f->right, s, true);
            case Kind::Dia: {
                for (int w = 0; w < n_points_; ++w)
                    if (((s >> w) & 1) && !eval(f->left, m_->successors[w], true)) return false;
                return true;
            }
            case Kind::HSAnd:
            case Kind::HSOr:
            case Kind::HSDia:
                throw SemanticsError("hand/hor/hdia anti-support requires the hs profile");
            case Kind::DualNeg:
                break;  // handled above
        }
        throw SemanticsError("unreachable");
    }

    // Exists t, u with t | u == s, rel(l, t), rel(r, u): the 3^|s| split
    // search (each element of s goes to t only, u only, or both).
    bool exists_cover(const Formula& l, const Formula& r, std::uint64_t s, bool anti) {
        for (std::uint64_t t = s;; t = (t - 1) & s) {
            if (eval(l, t, anti)) {
                std::uint64_t need = s & ~t;
                std::uint64_t opt = s & t;
                for (std::uint64_t extra = opt;; extra = (extra - 1) & opt) {
                    if (eval(r, need | extra, anti)) return true;
                    if (extra == 0) break;
                }
            }
            if (t == 0) break;
        }
        return false;
    }

    bool dep_holds(const Formula& f, std::uint64_t s) {
        std::vector<std::uint64_t> ant_masks;
        for (const auto& a : f->antecedents) ant_masks.push_back(atom_extension(a));
        std::uint64_t q_mask = atom_extension(f->name);
        // v, w agree on all antecedents -> they agree on the consequent.
        for (int v = 0; v < n_points_; ++v) {
            if (!((s >> v) & 1)) continue;
            for (int w = v + 1; w < n_points_; ++w) {
                if (!((s >> w) & 1)) continue;
                bool agree_ants = true;
                for (std::uint64_t am : ant_masks)
                    if ((((am >> v) ^ (am >> w)) & 1) != 0) { agree_ants = false; break; }
                if (agree_ants && ((((q_mask >> v) ^ (q_mask >> w)) & 1) != 0)) return false;
            }
        }
        return true;
    }

    struct Key {
        const FormulaNode* node;
        std::uint64_t team;
        bool anti;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = std::hash<const void*>()(k.node);
            h ^= std::hash<std::uint64_t>()(k.team) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h * 2 + (k.anti ? 1 : 0);
        }
    };

    const Vocabulary* x_;
    const KripkeModel* m_;
    LogicProfile profile_;
    AntiSupportRegime regime_;
    std::vector<std::uint64_t> atom_masks_;
    int n_points_ = 0;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

void check_prop_preconditions(const Vocabulary& x, const Formula& f, LogicProfile profile) {
    // A diamond-free formula of a modal profile is evaluated over
    // propositional teams exactly like its propositional fragment.
    if (is_modal(profile) && modal_depth(f) > 0)
        throw SemanticsError("formulas with dia need a model; pass one");
    if (auto err = validate(f, profile)) throw SemanticsError(*err);
    for (const auto& p : props(f))
        if (x.index_of(p) < 0)
            throw SemanticsError("proposition '" + p + "' not in the vocabulary");
}

void check_modal_preconditions(const KripkeModel& m, const Formula& f, LogicProfile profile) {
    if (!is_modal(profile))
        throw SemanticsError("model evaluation requires a modal profile (ml, bsml, bsmli)");
    if (auto err = validate(f, profile)) throw SemanticsError(*err);
    for (const auto& p : props(f))
        if (m.vocab.index_of(p) < 0)
            throw SemanticsError("proposition '" + p + "' not in the model vocabulary");
}

}  // namespace

bool supports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile) {
    check_prop_preconditions(x, f, profile);
    return Evaluator(&x, nullptr, profile).eval(f, s.bits, false);
}

bool antisupports(const Vocabulary& x, Team s, const Formula& f, LogicProfile profile) {
    check_prop_preconditions(x, f, profile);
    return Evaluator(&x, nullptr, profile).eval(f, s.bits, true);
}

bool supports(const KripkeModel& m, WorldSet s, const Formula& f, LogicProfile profile) {
    check_modal_preconditions(m, f, profile);
    return Evaluator(nullptr, &m, profile).eval(f, s, false);
}

bool antisupports(const KripkeModel& m, WorldSet s, const Formula& f, LogicProfile profile) {
    check_modal_preconditions(m, f, profile);
    return Evaluator(nullptr, &m, profile).eval(f, s, true);
}

TeamProperty property_of(const Formula& f, const Vocabulary& x, LogicProfile profile) {
    if (is_modal(profile) && modal_depth(f) > 0)
        throw SemanticsError(
            "the modal denotation is a proper class; use property_on_model instead");
    check_prop_preconditions(x, f, profile);
    if (x.size() > kMaxEnumerationVocabulary)
        throw BoundsError("vocabulary too large for denotation enumeration (cap " +
                          std::to_string(kMaxEnumerationVocabulary) + ")");
    Evaluator ev(&x, nullptr, profile);
    TeamProperty p(x.valuation_count());
    for (std::uint32_t t = 0; t < p.team_count(); ++t)
        if (ev.eval(f, t, false)) p.set(t);
    return p;
}

TeamProperty dual_property_of(const Formula& f, const Vocabulary& x, LogicProfile profile) {
    if (!has_dual_negation(profile))
        throw SemanticsError("no dual negation in " + profile_name(profile));
    return property_of(dneg(f), x, profile);
}

Team ground_team(const Formula& f, const Vocabulary& x, LogicProfile profile) {
    return Team{property_of(f, x, profile).ground()};
}

TeamProperty property_on_model(const KripkeModel& m, const Formula& f, LogicProfile profile) {
    check_modal_preconditions(m, f, profile);
    if (m.n_worlds > kMaxWorlds) throw BoundsError("model too large");
    Evaluator ev(nullptr, &m, profile);
    TeamProperty p(m.n_worlds);
    for (std::uint32_t t = 0; t < p.team_count(); ++t)
        if (ev.eval(f, t, false)) p.set(t);
    return p;
}

TeamProperty dual_property_on_model(const KripkeModel& m, const Formula& f,
                                    LogicProfile profile) {
    return property_on_model(m, dneg(f), profile);
}

WorldSet ground_team_on_model(const KripkeModel& m, const Formula& f, LogicProfile profile) {
    return property_on_model(m, f, profile).ground();
}

ClosureFlags check_closure(const TeamProperty& p) {
    ClosureFlags out;
    const std::uint32_t n_teams = static_cast<std::uint32_t>(p.team_count());

    out.empty_team = p.contains(0);

    out.downward_closed = true;
    for (std::uint32_t s = 0; s < n_teams && out.downward_closed; ++s) {
        if (!p.contains(s)) continue;
        for (std::uint32_t t = s;; t = (t - 1) & s) {
            if (!p.contains(t)) { out.downward_closed = false; break; }
            if (t == 0) break;
        }
    }

    // Convexity via the subset/superset reachability tables: a gap is a
    // non-member u with a member below and a member above it.
    {
        std::vector<bool> below(n_teams), above(n_teams);
        for (std::uint32_t u = 0; u < n_teams; ++u) {
            below[u] = p.contains(u);
            for (int b = 0; b < p.universe_points() && !below[u]; ++b)
                if (((u >> b) & 1) && below[u & ~(1u << b)]) below[u] = true;
        }
        for (std::uint32_t u = n_teams; u-- > 0;) {
            above[u] = p.contains(u);
            for (int b = 0; b < p.universe_points() && !above[u]; ++b)
                if (!((u >> b) & 1) && above[u | (1u << b)]) above[u] = true;
        }
        out.convex = true;
        for (std::uint32_t u = 0; u < n_teams; ++u)
            if (!p.contains(u) && below[u] && above[u]) { out.convex = false; break; }
    }

    // Closure under pairwise unions decides closure under arbitrary
    // nonempty unions (finite universe).
    {
        auto ms = p.members();
        out.union_closed = true;
        for (std::size_t i = 0; i < ms.size() && out.union_closed; ++i)
            for (std::size_t j = i; j < ms.size(); ++j)
                if (!p.contains(ms[i] | ms[j])) { out.union_closed = false; break; }
    }

    out.flat = true;
    for (std::uint32_t s = 0; s < n_teams; ++s) {
        bool pointwise = true;
        for (int w = 0; w < p.universe_points(); ++w)
            if (((s >> w) & 1) && !p.contains(1u << w)) { pointwise = false; break; }
        if (p.contains(s) != pointwise) { out.flat = false; break; }
    }

    if (out.flat != (out.downward_closed && out.union_closed && out.empty_team))
        throw std::logic_error("closure flag invariant violated: flat != dc && uc && etp");
    return out;
}

}  // namespace teamlogic

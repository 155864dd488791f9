#include "teamlogic/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace teamlogic {

namespace {

Formula make(Kind k, Formula l = nullptr, Formula r = nullptr) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = k;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

}  // namespace

Formula atom(std::string name) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = Kind::PropAtom;
    n->name = std::move(name);
    return n;
}

Formula bot() { return make(Kind::Bot); }
Formula ne() { return make(Kind::NE); }
Formula nestar() { return make(Kind::NEStar); }

Formula dep(std::vector<std::string> antecedents, std::string consequent) {
    std::sort(antecedents.begin(), antecedents.end());
    if (std::adjacent_find(antecedents.begin(), antecedents.end()) != antecedents.end())
        throw std::invalid_argument("dep: antecedent names must be pairwise distinct");
    auto n = std::make_shared<FormulaNode>();
    n->kind = Kind::Dep;
    n->antecedents = std::move(antecedents);
    n->name = std::move(consequent);
    return n;
}

Formula con(std::string consequent) { return dep({}, std::move(consequent)); }

Formula dneg(Formula f) { return make(Kind::DualNeg, std::move(f)); }
Formula bneg(Formula f) { return make(Kind::BoolNeg, std::move(f)); }
Formula land(Formula l, Formula r) { return make(Kind::And, std::move(l), std::move(r)); }
Formula lor(Formula l, Formula r) { return make(Kind::Or, std::move(l), std::move(r)); }
Formula gor(Formula l, Formula r) { return make(Kind::GlobalOr, std::move(l), std::move(r)); }
Formula hand(Formula l, Formula r) { return make(Kind::HSAnd, std::move(l), std::move(r)); }
Formula hor(Formula l, Formula r) { return make(Kind::HSOr, std::move(l), std::move(r)); }
Formula implies(Formula l, Formula r) { return make(Kind::Implies, std::move(l), std::move(r)); }
Formula dia(Formula f) { return make(Kind::Dia, std::move(f)); }
Formula hdia(Formula f) { return make(Kind::HSDia, std::move(f)); }

Formula top() { return dneg(bot()); }
Formula botbar() { return land(bot(), ne()); }

Formula botbar_star() { return dneg(lor(gor(nestar(), bot()), top())); }
Formula nestar_minus() { return dneg(gor(land(nestar(), botbar_star()), bot())); }

Formula box(Formula f) { return dneg(dia(dneg(std::move(f)))); }

namespace {

Formula fold_balanced(std::span<const Formula> fs, Formula (*op)(Formula, Formula)) {
    if (fs.size() == 1) return fs[0];
    std::size_t mid = fs.size() / 2;
    return op(fold_balanced(fs.first(mid), op), fold_balanced(fs.subspan(mid), op));
}

}  // namespace

Formula fold_and(std::span<const Formula> fs) {
    if (fs.empty()) return top();
    return fold_balanced(fs, land);
}

Formula fold_or(std::span<const Formula> fs) {
    if (fs.empty()) return bot();
    return fold_balanced(fs, lor);
}

Formula fold_gor(std::span<const Formula> fs, Formula unit) {
    if (fs.empty()) return unit;
    return fold_balanced(fs, gor);
}

bool is_unary(Kind k) {
    return k == Kind::DualNeg || k == Kind::BoolNeg || k == Kind::Dia || k == Kind::HSDia;
}

bool is_binary(Kind k) {
    switch (k) {
        case Kind::And:
        case Kind::Or:
        case Kind::GlobalOr:
        case Kind::HSAnd:
        case Kind::HSOr:
        case Kind::Implies:
            return true;
        default:
            return false;
    }
}

bool is_atom(Kind k) {
    switch (k) {
        case Kind::PropAtom:
        case Kind::Bot:
        case Kind::NE:
        case Kind::NEStar:
        case Kind::Dep:
            return true;
        default:
            return false;
    }
}

bool equal(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || a->antecedents != b->antecedents)
        return false;
    if (is_atom(a->kind)) return true;
    if (is_unary(a->kind)) return equal(a->left, b->left);
    return equal(a->left, b->left) && equal(a->right, b->right);
}

bool contains_kind(const Formula& f, Kind k) {
    if (f->kind == k) return true;
    if (is_atom(f->kind)) return false;
    if (is_unary(f->kind)) return contains_kind(f->left, k);
    return contains_kind(f->left, k) || contains_kind(f->right, k);
}

namespace {

void collect_props(const Formula& f, std::set<std::string>& out) {
    switch (f->kind) {
        case Kind::PropAtom:
            out.insert(f->name);
            return;
        case Kind::Dep:
            out.insert(f->antecedents.begin(), f->antecedents.end());
            out.insert(f->name);
            return;
        case Kind::Bot:
        case Kind::NE:
        case Kind::NEStar:
            return;
        default:
            collect_props(f->left, out);
            if (is_binary(f->kind)) collect_props(f->right, out);
            return;
    }
}

}  // namespace

std::set<std::string> props(const Formula& f) {
    std::set<std::string> out;
    collect_props(f, out);
    return out;
}

int modal_depth(const Formula& f) {
    if (is_atom(f->kind)) return 0;
    if (f->kind == Kind::Dia || f->kind == Kind::HSDia) return modal_depth(f->left) + 1;
    if (is_unary(f->kind)) return modal_depth(f->left);
    return std::max(modal_depth(f->left), modal_depth(f->right));
}

int depth(const Formula& f) {
    if (is_atom(f->kind)) return 0;
    if (is_unary(f->kind)) return depth(f->left) + 1;
    return std::max(depth(f->left), depth(f->right)) + 1;
}

std::size_t node_count(const Formula& f) {
    if (is_atom(f->kind)) return 1;
    if (is_unary(f->kind)) return node_count(f->left) + 1;
    return node_count(f->left) + node_count(f->right) + 1;
}

}  // namespace teamlogic

#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace teamlogic {

// Node kinds for every connective/atom of the in-scope logics.
// box(f) is sugar for neg dia neg f and never appears as a kind;
// likewise top = neg bot and botbar = (bot & NE).
enum class Kind {
    PropAtom,
    Bot,
    NE,
    NEStar,
    Dep,      // dep(p1,...,pn; q), n >= 0; con(q) == dep(;q)
    DualNeg,  // neg
    BoolNeg,  // bneg
    And,
    Or,
    GlobalOr,  // gor
    HSAnd,     // hand
    HSOr,      // hor
    Implies,   // ->
    Dia,       // dia
    HSDia,     // hdia
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

// Immutable tree; shared subterms are fine (values never mutate).
struct FormulaNode {
    Kind kind;
    std::string name;                      // PropAtom name / Dep consequent
    std::vector<std::string> antecedents;  // Dep only; sorted, distinct
    Formula left;                          // unary child or left operand
    Formula right;                         // right operand of binary kinds
};

// -- constructors ------------------------------------------------------

Formula atom(std::string name);
Formula bot();
Formula ne();
Formula nestar();
Formula dep(std::vector<std::string> antecedents, std::string consequent);
Formula con(std::string consequent);
Formula dneg(Formula f);
Formula bneg(Formula f);
Formula land(Formula l, Formula r);
Formula lor(Formula l, Formula r);
Formula gor(Formula l, Formula r);
Formula hand(Formula l, Formula r);
Formula hor(Formula l, Formula r);
Formula implies(Formula l, Formula r);
Formula dia(Formula f);
Formula hdia(Formula f);

// Sugar.
Formula top();                  // neg bot
Formula botbar();               // (bot & NE)
Formula botbar_star();          // neg ((NEstar gor bot) | top), the NE* strong contradiction
Formula nestar_minus();         // neg ((NEstar & botbar_star) gor bot)
Formula box(Formula f);         // neg dia neg f

// Balanced folds (operators are associative in both support and
// anti-support, so the bracketing is semantically irrelevant; balancing
// keeps recursion depth logarithmic for the synthesis constructions).
Formula fold_and(std::span<const Formula> fs);              // empty -> top
Formula fold_or(std::span<const Formula> fs);               // empty -> bot
Formula fold_gor(std::span<const Formula> fs, Formula unit);// empty -> unit

// -- queries -----------------------------------------------------------

bool is_unary(Kind k);
bool is_binary(Kind k);
bool is_atom(Kind k);  // PropAtom, Bot, NE, NEStar, Dep

bool equal(const Formula& a, const Formula& b);
bool contains_kind(const Formula& f, Kind k);

// P(f): set of proposition names (Dep contributes antecedents + consequent).
std::set<std::string> props(const Formula& f);

// md(f): md(NE) = 0, md(gor) = max of children, md(dia) = child + 1.
int modal_depth(const Formula& f);

int depth(const Formula& f);       // atoms have depth 0
std::size_t node_count(const Formula& f);

}  // namespace teamlogic

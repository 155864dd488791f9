#include "teamlogic/transforms.hpp"

#include "teamlogic/semantics.hpp"

namespace teamlogic {

namespace {

enum class NormMode { Nnf, EtnormNE, EtnormNEStar };

Formula positive(const Formula& f, NormMode mode);

// NNF of neg f. Negated atoms are the leaves; neg over dia stays as the
// box form (the box's inner negation is absorbed into the recursion, so
// a double negation never appears).
Formula negative(const Formula& f, NormMode mode) {
    switch (f->kind) {
        case Kind::PropAtom:
        case Kind::Bot:
        case Kind::Dep:
            return dneg(f);
        case Kind::NE:
            return mode == NormMode::Nnf ? dneg(f) : bot();
        case Kind::NEStar:
            // neg NE* is bilaterally NE* itself (both relations hold on
            // exactly the nonempty teams), so the normalized replacement
            // is NE*- just as in the positive case; bot would change the
            // support.
            return mode == NormMode::EtnormNEStar ? nestar_minus() : dneg(f);
        case Kind::DualNeg:
            return positive(f->left, mode);
        case Kind::And:
            return lor(negative(f->left, mode), negative(f->right, mode));
        case Kind::Or:
        case Kind::GlobalOr:
            return land(negative(f->left, mode), negative(f->right, mode));
        case Kind::Dia: {
            Formula c = negative(f->left, mode);
            // box c = neg dia neg c; collapse the inner neg when c is
            // itself negated.
            Formula inner = c->kind == Kind::DualNeg ? c->left : dneg(c);
            return dneg(dia(inner));
        }
        case Kind::BoolNeg:
            throw SemanticsError("bneg in the scope of neg has no normal form");
        case Kind::Implies:
        case Kind::HSAnd:
        case Kind::HSOr:
        case Kind::HSDia:
            throw SemanticsError("negation normal form is undefined for inqb/hs connectives");
    }
    throw SemanticsError("unreachable");
}

Formula positive(const Formula& f, NormMode mode) {
    switch (f->kind) {
        case Kind::PropAtom:
        case Kind::Bot:
        case Kind::Dep:
        case Kind::NE:
            return f;
        case Kind::NEStar:
            return mode == NormMode::EtnormNEStar ? nestar_minus() : f;
        case Kind::DualNeg:
            return negative(f->left, mode);
        case Kind::And:
            return land(positive(f->left, mode), positive(f->right, mode));
        case Kind::Or:
            return lor(positive(f->left, mode), positive(f->right, mode));
        case Kind::GlobalOr:
            return gor(positive(f->left, mode), positive(f->right, mode));
        case Kind::Dia:
            return dia(positive(f->left, mode));
        case Kind::BoolNeg:
            return bneg(positive(f->left, mode));
        case Kind::Implies:
        case Kind::HSAnd:
        case Kind::HSOr:
        case Kind::HSDia:
            throw SemanticsError("negation normal form is undefined for inqb/hs connectives");
    }
    throw SemanticsError("unreachable");
}

}  // namespace

Formula nnf(const Formula& f) { return positive(f, NormMode::Nnf); }

Formula empty_team_normalize(const Formula& f) {
    NormMode mode =
        contains_kind(f, Kind::NEStar) ? NormMode::EtnormNEStar : NormMode::EtnormNE;
    return positive(f, mode);
}

Formula flatten(const Formula& f) {
    switch (f->kind) {
        case Kind::PropAtom:
        case Kind::Bot:
            return f;
        case Kind::NE:
        case Kind::Dep:
            return top();
        case Kind::DualNeg:
            return dneg(flatten(f->left));
        case Kind::And:
            return land(flatten(f->left), flatten(f->right));
        case Kind::Or:
            return lor(flatten(f->left), flatten(f->right));
        default:
            throw SemanticsError("flattening is defined for plne and pldep formulas");
    }
}

}  // namespace teamlogic

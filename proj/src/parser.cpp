#include "teamlogic/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace teamlogic {

namespace {

enum class Tok {
    Atom, Bot, Top, Botbar, NE, NEStar,
    Neg, Bneg, Dia, Box, Hdia,
    Dep, Con,
    AndOp, OrOp, HandOp, HorOp, GorOp, Arrow,
    LParen, RParen, Comma, Semi,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;  // 1-based
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t pos = i + 1;
        if (c == '(') { out.push_back({Tok::LParen, "(", pos}); ++i; continue; }
        if (c == ')') { out.push_back({Tok::RParen, ")", pos}); ++i; continue; }
        if (c == ',') { out.push_back({Tok::Comma, ",", pos}); ++i; continue; }
        if (c == ';') { out.push_back({Tok::Semi, ";", pos}); ++i; continue; }
        if (c == '&') { out.push_back({Tok::AndOp, "&", pos}); ++i; continue; }
        if (c == '|') { out.push_back({Tok::OrOp, "|", pos}); ++i; continue; }
        if (c == '-') {
            if (i + 1 < s.size() && s[i + 1] == '>') {
                out.push_back({Tok::Arrow, "->", pos});
                i += 2;
                continue;
            }
            throw ParseError("expected '->'", pos);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && word_char(s[j])) ++j;
            std::string w = s.substr(i, j - i);
            i = j;
            Tok k;
            if (w == "bot") k = Tok::Bot;
            else if (w == "top") k = Tok::Top;
            else if (w == "botbar") k = Tok::Botbar;
            else if (w == "NE") k = Tok::NE;
            else if (w == "NEstar") k = Tok::NEStar;
            else if (w == "neg") k = Tok::Neg;
            else if (w == "bneg") k = Tok::Bneg;
            else if (w == "dia") k = Tok::Dia;
            else if (w == "box") k = Tok::Box;
            else if (w == "hdia") k = Tok::Hdia;
            else if (w == "dep") k = Tok::Dep;
            else if (w == "con") k = Tok::Con;
            else if (w == "and") k = Tok::AndOp;
            else if (w == "or") k = Tok::OrOp;
            else if (w == "hand") k = Tok::HandOp;
            else if (w == "hor") k = Tok::HorOp;
            else if (w == "gor") k = Tok::GorOp;
            else {
                if (!std::islower(static_cast<unsigned char>(w[0])))
                    throw ParseError("atom names start with a lowercase letter: '" + w + "'", pos);
                for (char wc : w)
                    if (std::isupper(static_cast<unsigned char>(wc)))
                        throw ParseError("atom names are lowercase: '" + w + "'", pos);
                out.push_back({Tok::Atom, w, pos});
                continue;
            }
            out.push_back({k, w, pos});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({Tok::End, "", s.size() + 1});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> toks, LogicProfile profile)
        : toks_(std::move(toks)), profile_(profile) {}

    Formula run() {
        Formula f = parse_arrow();
        expect(Tok::End, "end of input");
        return f;
    }

  private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }

    void expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + what + " before '" + peek().text + "'",
                             peek().pos);
        ++i_;
    }

    // -> is right-associative and binds loosest.
    Formula parse_arrow() {
        Formula l = parse_gor();
        if (peek().kind == Tok::Arrow) {
            next();
            return implies(std::move(l), parse_arrow());
        }
        return l;
    }

    Formula parse_gor() {
        Formula l = parse_or();
        while (peek().kind == Tok::GorOp) {
            next();
            l = gor(std::move(l), parse_or());
        }
        return l;
    }

    Formula parse_or() {
        Formula l = parse_and();
        while (peek().kind == Tok::OrOp || peek().kind == Tok::HorOp) {
            bool hs = peek().kind == Tok::HorOp || profile_ == LogicProfile::HS;
            next();
            Formula r = parse_and();
            l = hs ? hor(std::move(l), std::move(r)) : lor(std::move(l), std::move(r));
        }
        return l;
    }

    Formula parse_and() {
        Formula l = parse_unary();
        while (peek().kind == Tok::AndOp || peek().kind == Tok::HandOp) {
            bool hs = peek().kind == Tok::HandOp || profile_ == LogicProfile::HS;
            next();
            Formula r = parse_unary();
            l = hs ? hand(std::move(l), std::move(r)) : land(std::move(l), std::move(r));
        }
        return l;
    }

    Formula parse_unary() {
        switch (peek().kind) {
            case Tok::Neg: next(); return dneg(parse_unary());
            case Tok::Bneg: next(); return bneg(parse_unary());
            case Tok::Dia: next(); return dia(parse_unary());
            case Tok::Box: next(); return box(parse_unary());
            case Tok::Hdia: next(); return hdia(parse_unary());
            default: return parse_primary();
        }
    }

    Formula parse_primary() {
        Token t = next();
        switch (t.kind) {
            case Tok::Atom: return atom(t.text);
            case Tok::Bot: return bot();
            case Tok::Top: return top();
            case Tok::Botbar:
                return profile_ == LogicProfile::PLNEStar_GD ? botbar_star() : botbar();
            case Tok::NE: return ne();
            case Tok::NEStar: return nestar();
            case Tok::Con: {
                expect(Tok::LParen, "'('");
                std::string q = expect_name();
                expect(Tok::RParen, "')'");
                return con(q);
            }
            case Tok::Dep: {
                expect(Tok::LParen, "'('");
                std::vector<std::string> ants;
                if (peek().kind != Tok::Semi) {
                    ants.push_back(expect_name());
                    while (peek().kind == Tok::Comma) {
                        next();
                        ants.push_back(expect_name());
                    }
                }
                expect(Tok::Semi, "';'");
                std::string q = expect_name();
                expect(Tok::RParen, "')'");
                try {
                    return dep(std::move(ants), std::move(q));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), t.pos);
                }
            }
            case Tok::LParen: {
                Formula f = parse_arrow();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                throw ParseError("expected a formula before '" + t.text + "'", t.pos);
        }
    }

    std::string expect_name() {
        if (peek().kind != Tok::Atom)
            throw ParseError("expected a proposition name before '" + peek().text + "'",
                             peek().pos);
        return next().text;
    }

    std::vector<Token> toks_;
    LogicProfile profile_;
    std::size_t i_ = 0;
};

}  // namespace

Formula parse(const std::string& text, LogicProfile profile) {
    Formula f = Parser(lex(text), profile).run();
    if (auto err = validate(f, profile)) throw ProfileViolation(*err);
    return f;
}

namespace {

void print_rec(const Formula& f, std::ostream& os);

void print_child(const Formula& f, std::ostream& os) {
    // Binary nodes print their own parentheses.
    print_rec(f, os);
}

void print_binary(const Formula& f, const char* op, std::ostream& os) {
    os << '(';
    print_rec(f->left, os);
    os << ' ' << op << ' ';
    print_rec(f->right, os);
    os << ')';
}

void print_rec(const Formula& f, std::ostream& os) {
    switch (f->kind) {
        case Kind::PropAtom: os << f->name; return;
        case Kind::Bot: os << "bot"; return;
        case Kind::NE: os << "NE"; return;
        case Kind::NEStar: os << "NEstar"; return;
        case Kind::Dep:
            if (f->antecedents.empty()) {
                os << "con(" << f->name << ')';
            } else {
                os << "dep(";
                for (std::size_t i = 0; i < f->antecedents.size(); ++i) {
                    if (i) os << ',';
                    os << f->antecedents[i];
                }
                os << "; " << f->name << ')';
            }
            return;
        case Kind::DualNeg: os << "neg "; print_child(f->left, os); return;
        case Kind::BoolNeg: os << "bneg "; print_child(f->left, os); return;
        case Kind::Dia: os << "dia "; print_child(f->left, os); return;
        case Kind::HSDia: os << "hdia "; print_child(f->left, os); return;
        case Kind::And: print_binary(f, "&", os); return;
        case Kind::Or: print_binary(f, "|", os); return;
        case Kind::GlobalOr: print_binary(f, "gor", os); return;
        case Kind::HSAnd: print_binary(f, "hand", os); return;
        case Kind::HSOr: print_binary(f, "hor", os); return;
        case Kind::Implies: print_binary(f, "->", os); return;
    }
}

}  // namespace

std::string print(const Formula& f) {
    std::ostringstream os;
    print_rec(f, os);
    return os.str();
}

}  // namespace teamlogic

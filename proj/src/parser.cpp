#include "cedille/parser.hpp"

#include <cctype>
#include <ostream>
#include <map>
#include <utility>

namespace cedille {

namespace {

enum class Tok {
    Ident,
    KwLam,
    KwBigLam,
    KwAll,
    KwPi,
    KwIota,
    KwBeta,
    KwDelta,
    KwSigma,
    KwRho,
    KwPhi,
    Star,
    Hash,
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Comma,
    At,
    Colon,
    Equals,
    Minus,
    Tilde,
    Backslash,
    Dot,
    Proj1,
    Proj2,
    End,
};

std::string describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::KwLam: return "'lam'";
    case Tok::KwBigLam: return "'Lam'";
    case Tok::KwAll: return "'all'";
    case Tok::KwPi: return "'Pi'";
    case Tok::KwIota: return "'iota'";
    case Tok::KwBeta: return "'beta'";
    case Tok::KwDelta: return "'delta'";
    case Tok::KwSigma: return "'sigma'";
    case Tok::KwRho: return "'rho'";
    case Tok::KwPhi: return "'phi'";
    case Tok::Star: return "'*'";
    case Tok::Hash: return "'#'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::At: return "'@'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Minus: return "'-'";
    case Tok::Tilde: return "'~'";
    case Tok::Backslash: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::Proj1: return "'.1'";
    case Tok::Proj2: return "'.2'";
    case Tok::End: return "end of input";
    }
    return "?";
}

const std::map<std::string_view, Tok> kKeywordTokens = {
    {"lam", Tok::KwLam},     {"Lam", Tok::KwBigLam}, {"all", Tok::KwAll},
    {"Pi", Tok::KwPi},       {"iota", Tok::KwIota},  {"beta", Tok::KwBeta},
    {"delta", Tok::KwDelta}, {"sigma", Tok::KwSigma}, {"rho", Tok::KwRho},
    {"phi", Tok::KwPhi},
};

struct Token {
    Tok kind;
    std::string text;
    SourceLocation where;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            SourceLocation at = here();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", at});
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
                std::size_t start = pos_++;
                while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
                std::string word(src_.substr(start, pos_ - start));
                if (c == '$' && word.size() == 1)
                    throw ParseError(ErrorCode::ParseError, at, "'$' must be followed by a kind variable name");
                auto kw = kKeywordTokens.find(word);
                out.push_back({kw == kKeywordTokens.end() ? Tok::Ident : kw->second, std::move(word), at});
                continue;
            }
            if (c == '.') {
                ++pos_;
                if (pos_ < src_.size() && (src_[pos_] == '1' || src_[pos_] == '2')) {
                    out.push_back({src_[pos_] == '1' ? Tok::Proj1 : Tok::Proj2, std::string(".") + src_[pos_], at});
                    ++pos_;
                } else {
                    out.push_back({Tok::Dot, ".", at});
                }
                continue;
            }
            Tok kind;
            switch (c) {
            case '*': kind = Tok::Star; break;
            case '#': kind = Tok::Hash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBrack; break;
            case ']': kind = Tok::RBrack; break;
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case ',': kind = Tok::Comma; break;
            case '@': kind = Tok::At; break;
            case ':': kind = Tok::Colon; break;
            case '=': kind = Tok::Equals; break;
            case '-': kind = Tok::Minus; break;
            case '~': kind = Tok::Tilde; break;
            case '\\': kind = Tok::Backslash; break;
            default: {
                std::string shown = std::isprint(static_cast<unsigned char>(c))
                                        ? std::string("'") + c + "'"
                                        : "byte 0x" + hex(static_cast<unsigned char>(c));
                throw ParseError(ErrorCode::ParseError, at, "unexpected character " + shown);
            }
            }
            out.push_back({kind, std::string(1, c), at});
            ++pos_;
        }
    }

private:
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    static std::string hex(unsigned char c) {
        const char* digits = "0123456789abcdef";
        return {digits[c >> 4], digits[c & 15]};
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    SourceLocation here() {
        // Advance the line/column cursor lazily up to pos_.
        while (cursor_ < pos_) {
            if (src_[cursor_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++cursor_;
        }
        return {pos_, line_, col_};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t cursor_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src, bool unannotated_everywhere = false)
        : toks_(Lexer(src).run()), unannotated_(unannotated_everywhere ? 1 : 0) {}

    Term term() {
        Term t = expr();
        expect(Tok::End);
        return t;
    }

    SourceModule module(std::string source_name) {
        SourceModule m;
        m.source_name = std::move(source_name);
        std::map<Var, std::size_t> index;
        while (peek().kind != Tok::End) {
            const Token& name = expect(Tok::Ident);
            Var v(name.text);
            if (index.count(v))
                throw ParseError(ErrorCode::DuplicateDefinition, name.where,
                                 "'" + name.text + "' is already defined in this module");
            expect(Tok::Equals);
            Term def = expr();
            expect(Tok::Colon);
            Term ann = expr();
            expect(Tok::Dot);
            index.emplace(v, m.definitions.size());
            m.definitions.push_back({std::move(v), std::move(def), std::move(ann), name.where});
        }
        for (std::size_t i = 0; i < m.definitions.size(); ++i) {
            const GlobalDef& d = m.definitions[i];
            VarSet used = d.definiens.free_vars();
            used.insert(d.annotation.free_vars().begin(), d.annotation.free_vars().end());
            for (const Var& v : used) {
                auto it = index.find(v);
                if (it != index.end() && it->second >= i)
                    throw ParseError(ErrorCode::ForwardReference, d.location,
                                     "definition '" + d.name.name + "' refers to '" + v.name +
                                         "', which is not defined before it");
            }
        }
        return m;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }

    const Token& advance() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }

    const Token& expect(Tok kind) {
        if (peek().kind != kind) fail({describe(kind)});
        return advance();
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string msg = "unexpected " + (t.kind == Tok::End ? describe(t.kind) : "'" + t.text + "'") + ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
        throw ParseError(ErrorCode::ParseError, t.where, msg, std::move(expected));
    }

    Var binder(bool term_only, const char* what) {
        const Token& t = expect(Tok::Ident);
        Var v(t.text);
        if (term_only && v.category != VarCategory::Term)
            throw ParseError(ErrorCode::ParseError, t.where,
                             std::string(what) + " must bind a term variable, not '" + t.text + "'");
        return v;
    }

    bool let_ahead() const {
        return peek().kind == Tok::LBrack && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Equals;
    }

    Term pure_position(SourceLocation where, Term t, const char* what) {
        if (!is_pure(t))
            throw ParseError(ErrorCode::PurityViolation, where,
                             std::string(what) + " must be a pure term (term variables, application, \\x. p)");
        return t;
    }

    struct AllowUnannotated {
        explicit AllowUnannotated(int& depth) : depth_(depth) { ++depth_; }
        ~AllowUnannotated() { --depth_; }
        int& depth_;
    };

    Term expr() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::KwAll:
        case Tok::KwPi:
        case Tok::KwIota:
        case Tok::KwLam:
        case Tok::KwBigLam: {
            const Tok kind = advance().kind;
            Var x = binder(false, "");
            expect(Tok::Colon);
            Term dom = expr();
            expect(Tok::Dot);
            Term body = expr();
            switch (kind) {
            case Tok::KwAll: return Term::forall(std::move(x), std::move(dom), std::move(body));
            case Tok::KwPi: return Term::pi(std::move(x), std::move(dom), std::move(body));
            case Tok::KwIota: return Term::iota(std::move(x), std::move(dom), std::move(body));
            case Tok::KwLam: return Term::lambda(std::move(x), std::move(dom), std::move(body));
            default: return Term::erased_lambda(std::move(x), std::move(dom), std::move(body));
            }
        }
        case Tok::Backslash: {
            if (unannotated_ == 0)
                throw ParseError(ErrorCode::ParseError, t.where,
                                 "unannotated lambda is only allowed in equations and in the braces of beta and phi");
            advance();
            Var x = binder(true, "an unannotated lambda");
            expect(Tok::Dot);
            return Term::unannotated_lambda(std::move(x), expr());
        }
        case Tok::KwRho: {
            advance();
            Term proof = expr();
            expect(Tok::At);
            Var x = binder(true, "the guide of rho");
            expect(Tok::Dot);
            Term guide = app(false);
            expect(Tok::Minus);
            Term subject = expr();
            return Term::rho(std::move(proof), std::move(x), std::move(guide), std::move(subject));
        }
        default:
            break;
        }
        if (let_ahead()) {
            advance();
            Var x = binder(false, "");
            expect(Tok::Equals);
            Term def = expr();
            expect(Tok::Colon);
            Term ann = expr();
            expect(Tok::RBrack);
            expect(Tok::Minus);
            Term body = expr();
            return Term::let(std::move(x), std::move(def), std::move(ann), std::move(body));
        }
        return erased();
    }

    Term erased() {
        Term lhs = app(false);
        while (peek().kind == Tok::Minus) {
            advance();
            lhs = Term::erased_app(std::move(lhs), app(false));
        }
        return lhs;
    }

    bool starts_arg(bool stop_at_brace) const {
        switch (peek().kind) {
        case Tok::Ident:
        case Tok::Star:
        case Tok::Hash:
        case Tok::LParen:
        case Tok::KwPhi:
        case Tok::KwBeta:
        case Tok::KwDelta:
        case Tok::KwSigma:
            return true;
        case Tok::LBrack:
            return !let_ahead();
        case Tok::LBrace:
            return !stop_at_brace;
        default:
            return false;
        }
    }

    Term app(bool stop_at_brace) {
        Term f = prefix();
        while (starts_arg(stop_at_brace)) f = Term::app(std::move(f), prefix());
        return f;
    }

    Term prefix() {
        switch (peek().kind) {
        case Tok::KwBeta: {
            advance();
            SourceLocation at = peek().where;
            Term lhs;
            {
                AllowUnannotated guard(unannotated_);
                lhs = pure_position(at, postfix(), "the first component of beta");
            }
            expect(Tok::LBrace);
            AllowUnannotated guard(unannotated_);
            Term witness = expr();
            expect(Tok::RBrace);
            return Term::beta(std::move(lhs), std::move(witness));
        }
        case Tok::KwDelta: {
            advance();
            Term motive = postfix();
            return Term::delta(std::move(motive), postfix());
        }
        case Tok::KwSigma:
            advance();
            return Term::sigma(postfix());
        default:
            return postfix();
        }
    }

    Term postfix() {
        Term t = atom();
        for (;;) {
            if (peek().kind == Tok::Proj1) {
                advance();
                t = Term::proj1(std::move(t));
            } else if (peek().kind == Tok::Proj2) {
                advance();
                t = Term::proj2(std::move(t));
            } else {
                return t;
            }
        }
    }

    Term atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident:
            return Term::var(Var(advance().text));
        case Tok::Star:
            advance();
            return Term::star();
        case Tok::Hash:
            advance();
            return Term::box();
        case Tok::LParen: {
            advance();
            Term inner = expr();
            expect(Tok::RParen);
            return inner;
        }
        case Tok::LBrace: {
            advance();
            AllowUnannotated guard(unannotated_);
            SourceLocation at = peek().where;
            Term lhs = pure_position(at, expr(), "the left side of an equation");
            expect(Tok::Tilde);
            at = peek().where;
            Term rhs = pure_position(at, expr(), "the right side of an equation");
            expect(Tok::RBrace);
            return Term::eq(std::move(lhs), std::move(rhs));
        }
        case Tok::LBrack: {
            if (let_ahead())
                throw ParseError(ErrorCode::ParseError, t.where, "a let in argument position must be parenthesized");
            advance();
            Term first = expr();
            expect(Tok::Comma);
            Term second = expr();
            expect(Tok::At);
            Var x = binder(true, "the guide of an intersection");
            expect(Tok::Dot);
            Term guide = expr();
            expect(Tok::RBrack);
            return Term::intersect_intro(std::move(first), std::move(second), std::move(x), std::move(guide));
        }
        case Tok::KwPhi: {
            advance();
            Term proof = app(false);
            expect(Tok::Minus);
            Term subject = app(true);
            expect(Tok::LBrace);
            AllowUnannotated guard(unannotated_);
            Term erased_to = expr();
            expect(Tok::RBrace);
            return Term::phi(std::move(proof), std::move(subject), std::move(erased_to));
        }
        default:
            fail({"a term"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int unannotated_ = 0;
};

// Printer precedence levels, loosest first.
enum Level { kExpr = 0, kErased = 1, kApp = 2, kPrefix = 3, kPostfix = 4, kAtom = 5 };

int level_of(const Term& t) {
    switch (t.tag()) {
    case Tag::Var:
    case Tag::Star:
    case Tag::Box:
    case Tag::Eq:
    case Tag::IntersectIntro:
    case Tag::Phi:
        return kAtom;
    case Tag::Proj1:
    case Tag::Proj2:
        return kPostfix;
    case Tag::Beta:
    case Tag::Delta:
    case Tag::Sigma:
        return kPrefix;
    case Tag::App:
        return kApp;
    case Tag::ErasedApp:
        return kErased;
    default:
        return kExpr;
    }
}

void emit(const Term& t, int need, std::string& out, bool stop_at_brace = false);

std::string render(const Term& t, int need) {
    std::string s;
    emit(t, need, s);
    return s;
}

void emit_binder(const char* kw, const Term& t, std::string& out) {
    out += kw;
    out += ' ';
    out += t.var().name;
    out += " : ";
    emit(t.child(0), kExpr, out);
    out += " . ";
    emit(t.child(1), kExpr, out);
}

void emit(const Term& t, int need, std::string& out, bool stop_at_brace) {
    const bool paren = level_of(t) < need;
    if (paren) {
        out += '(';
        stop_at_brace = false;
    }
    switch (t.tag()) {
    case Tag::Var: out += t.var().name; break;
    case Tag::Star: out += '*'; break;
    case Tag::Box: out += '#'; break;
    case Tag::Proj1:
    case Tag::Proj2:
        emit(t.child(0), kPostfix, out);
        out += t.is(Tag::Proj1) ? ".1" : ".2";
        break;
    case Tag::Beta:
        out += "beta ";
        emit(t.child(0), kPostfix, out);
        out += " { ";
        emit(t.child(1), kExpr, out);
        out += " }";
        break;
    case Tag::Delta:
        out += "delta ";
        emit(t.child(0), kPostfix, out);
        out += ' ';
        emit(t.child(1), kPostfix, out);
        break;
    case Tag::Sigma:
        out += "sigma ";
        emit(t.child(0), kPostfix, out);
        break;
    case Tag::App: {
        emit(t.child(0), kApp, out, stop_at_brace);
        out += ' ';
        std::string arg = render(t.child(1), kPrefix);
        if (stop_at_brace && !arg.empty() && arg.front() == '{') arg = "(" + arg + ")";
        out += arg;
        break;
    }
    case Tag::ErasedApp:
        emit(t.child(0), kErased, out);
        out += " - ";
        emit(t.child(1), kApp, out);
        break;
    case Tag::Rho:
        out += "rho ";
        emit(t.child(0), kExpr, out);
        out += " @ " + t.var().name + " . ";
        emit(t.child(1), kApp, out);
        out += " - ";
        emit(t.child(2), kExpr, out);
        break;
    case Tag::Forall: emit_binder("all", t, out); break;
    case Tag::Pi: emit_binder("Pi", t, out); break;
    case Tag::Iota: emit_binder("iota", t, out); break;
    case Tag::Lambda: emit_binder("lam", t, out); break;
    case Tag::ErasedLambda: emit_binder("Lam", t, out); break;
    case Tag::UnannotatedLambda:
        out += '\\' + t.var().name + ". ";
        emit(t.child(0), kExpr, out);
        break;
    case Tag::IntersectIntro:
        out += "[ ";
        emit(t.child(0), kExpr, out);
        out += " , ";
        emit(t.child(1), kExpr, out);
        out += " @ " + t.var().name + " . ";
        emit(t.child(2), kExpr, out);
        out += " ]";
        break;
    case Tag::Phi:
        out += "phi ";
        emit(t.child(0), kApp, out);
        out += " - ";
        emit(t.child(1), kApp, out, true);
        out += " { ";
        emit(t.child(2), kExpr, out);
        out += " }";
        break;
    case Tag::Let:
        out += "[ " + t.var().name + " = ";
        emit(t.child(0), kExpr, out);
        out += " : ";
        emit(t.child(1), kExpr, out);
        out += " ] - ";
        emit(t.child(2), kExpr, out);
        break;
    case Tag::Eq:
        out += "{ ";
        emit(t.child(0), kExpr, out);
        out += " ~ ";
        emit(t.child(1), kExpr, out);
        out += " }";
        break;
    }
    if (paren) out += ')';
}

}  // namespace

const GlobalDef* SourceModule::find(std::string_view name) const {
    for (const GlobalDef& d : definitions)
        if (d.name.name == name) return &d;
    return nullptr;
}

Term parse_term(std::string_view input, TermSyntax syntax) {
    return Parser(input, syntax == TermSyntax::Erased).term();
}

SourceModule parse_module(std::string_view input, std::string source_name) {
    return Parser(input).module(std::move(source_name));
}

std::string print_term(const Term& t) {
    std::string out;
    emit(t, kExpr, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }

std::string to_string(const Term& t) { return print_term(t); }

}  // namespace cedille

#include "legcalc/dsl.hpp"

#include <cctype>
#include <set>

namespace legcalc {

namespace {

enum class Tok { Word, Int, Colon, Semi, LBrace, RBrace, Plus, Minus, End, Bad };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Bad: return "unexpected character '" + t.text + "'";
    default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        skip();
        Token t{Tok::End, {}, line_, col_};
        if (i_ >= s_.size()) return t;
        char c = s_[i_];
        auto take = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            advance();
            return t;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Word;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                t.text += s_[i_];
                advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                t.text += s_[i_];
                advance();
            }
            return t;
        }
        switch (c) {
        case ':': return take(Tok::Colon);
        case ';': return take(Tok::Semi);
        case '{': return take(Tok::LBrace);
        case '}': return take(Tok::RBrace);
        case '+': return take(Tok::Plus);
        case '-': return take(Tok::Minus);
        default: return take(Tok::Bad);
        }
    }

private:
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { cur_ = lex_.next(); }

    DslDocument document() {
        DslDocument doc;
        do doc.defs.push_back(definition());
        while (cur_.kind != Tok::End);
        return doc;
    }

private:
    [[noreturn]] void fail(const std::string& expected) { throw SyntaxError(cur_.line, cur_.col, expected, describe(cur_)); }

    Token expect(Tok k, const std::string& what) {
        if (cur_.kind != k) fail(what);
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    void keyword(const std::string& kw) {
        if (cur_.kind != Tok::Word || cur_.text != kw) fail("'" + kw + ":'");
        cur_ = lex_.next();
        expect(Tok::Colon, "':' after '" + kw + "'");
    }

    int integer(const std::string& what) {
        Token t = expect(Tok::Int, what);
        if (t.text.size() > 9) throw SyntaxError(t.line, t.col, "an integer below 10^9", "'" + t.text + "'");
        return std::stoi(t.text);
    }

    bool at_event() const {
        if (cur_.kind != Tok::Word || cur_.text.size() < 2) return false;
        char k = cur_.text[0];
        if (k != 'L' && k != 'R' && k != 'X') return false;
        for (std::size_t i = 1; i < cur_.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(cur_.text[i]))) return false;
        return true;
    }

    std::vector<MorseEvent> events(bool allow_empty) {
        keyword("events");
        std::vector<MorseEvent> out;
        while (at_event()) {
            if (cur_.text.size() > 10) fail("an event height below 10^9");
            int h = std::stoi(cur_.text.substr(1));
            char k = cur_.text[0];
            out.push_back(k == 'L' ? L(h) : k == 'R' ? R(h) : X(h));
            cur_ = lex_.next();
        }
        if (out.empty() && !allow_empty) fail("an event (L<n>, R<n> or X<n>)");
        expect(Tok::Semi, out.empty() ? "an event or ';'" : "an event or ';'");
        return out;
    }

    Definition definition() {
        Definition d;
        if (cur_.kind != Tok::Word || (cur_.text != "knot" && cur_.text != "pattern")) fail("'knot' or 'pattern'");
        d.kind = cur_.text == "knot" ? DefKind::Knot : DefKind::Pattern;
        cur_ = lex_.next();
        d.name = expect(Tok::Word, "a definition name").text;
        expect(Tok::LBrace, "'{'");
        if (d.kind == DefKind::Pattern) {
            keyword("strands");
            d.strands = integer("a strand count");
            expect(Tok::Semi, "';'");
            keyword("orient");
            while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
                d.orient.push_back(cur_.kind == Tok::Plus ? 1 : -1);
                cur_ = lex_.next();
            }
            if (d.orient.empty()) fail("'+' or '-'");
            expect(Tok::Semi, "'+', '-' or ';'");
            d.events = events(true);
        } else {
            d.events = events(false);
        }
        expect(Tok::RBrace, "'}'");
        return d;
    }

    Lexer lex_;
    Token cur_;
};

[[noreturn]] void invalid(const Definition& d, const Error& e) {
    std::string what = (d.kind == DefKind::Knot ? "knot '" : "pattern '") + d.name + "': " + e.what();
    std::vector<Violation> vs = e.violations();
    if (vs.empty()) vs.push_back({e.code(), -1, 0, e.what()});
    throw Error(ErrorCode::ValidationError, "ValidationError in " + what, std::move(vs));
}

} // namespace

SyntaxError::SyntaxError(int line, int col, std::string expected, std::string found)
    : Error(ErrorCode::SyntaxError,
            "SyntaxError at line " + std::to_string(line) + ", column " + std::to_string(col) + ": expected " +
                expected + ", found " + found),
      line_(line), col_(col), expected_(std::move(expected)) {}

const Definition* DslDocument::find(std::string_view name) const {
    for (const auto& d : defs)
        if (d.name == name) return &d;
    return nullptr;
}

DslDocument parse_syntax(std::string_view text) { return Parser(text).document(); }

DslDocument parse(std::string_view text) {
    DslDocument doc = parse_syntax(text);
    std::set<std::string> seen;
    for (const auto& d : doc.defs) {
        if (!seen.insert(d.name).second)
            throw Error(ErrorCode::DuplicateName, "DuplicateName: '" + d.name + "' is defined twice");
        try {
            if (d.kind == DefKind::Knot)
                to_front(d);
            else
                to_pattern(d);
        } catch (const Error& e) {
            invalid(d, e);
        }
    }
    return doc;
}

std::string serialize(const DslDocument& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.defs.size(); ++i) {
        const Definition& d = doc.defs[i];
        if (i > 0) out += "\n";
        out += (d.kind == DefKind::Knot ? "knot " : "pattern ") + d.name + " {\n";
        if (d.kind == DefKind::Pattern) {
            out += "  strands: " + std::to_string(d.strands) + ";\n  orient:";
            for (int o : d.orient) out += o > 0 ? " +" : " -";
            out += ";\n";
        }
        out += "  events:";
        for (const auto& e : d.events) out += " " + to_string(e);
        out += ";\n}\n";
    }
    return out;
}

FrontDiagram to_front(const Definition& d, std::vector<Tag> tags, bool reversed) {
    return FrontDiagram::make(d.events, std::move(tags), reversed);
}

PatternFront to_pattern(const Definition& d, std::vector<Tag> tags) {
    return PatternFront::make(d.strands, d.orient, d.events, std::move(tags), d.name);
}

Definition definition_of(const std::string& name, const FrontDiagram& f) {
    return {DefKind::Knot, sanitize_name(name), 0, {}, f.events()};
}

Definition definition_of(const PatternFront& p) {
    return {DefKind::Pattern, sanitize_name(p.name().empty() ? "pattern" : p.name()), p.seams(), p.seam_orient(),
            p.events()};
}

std::string sanitize_name(std::string_view name) {
    std::string out;
    for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), '_');
    return out;
}

} // namespace legcalc

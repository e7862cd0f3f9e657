#include "mhc/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace mhc {

namespace {

enum class TokenKind { integer, ident, plus, minus, star, caret, lparen, rparen, comma, eof };

struct Token {
    TokenKind kind;
    SourceLoc loc;
    std::string text;      // for ident
    long long value = 0;   // for integer
};

std::string describe(const Token& tok) {
    switch (tok.kind) {
        case TokenKind::integer:
            return "integer " + std::to_string(tok.value);
        case TokenKind::ident:
            return "'" + tok.text + "'";
        case TokenKind::plus:
            return "'+'";
        case TokenKind::minus:
            return "'-'";
        case TokenKind::star:
            return "'*'";
        case TokenKind::caret:
            return "'^'";
        case TokenKind::lparen:
            return "'('";
        case TokenKind::rparen:
            return "')'";
        case TokenKind::comma:
            return "','";
        default:
            return "end of input";
    }
}

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    SourceLoc loc;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t j = 0; j < n; ++j, ++i) {
            if (text[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        SourceLoc start = loc;
        if (c >= '0' && c <= '9') {
            size_t end = i;
            while (end < text.size() && text[end] >= '0' && text[end] <= '9')
                ++end;
            long long value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, value);
            if (ec != std::errc{} || ptr != text.data() + end)
                throw ParseError(start, "integer literal does not fit in a signed 64-bit value");
            advance(end - i);
            out.push_back({TokenKind::integer, start, {}, value});
            continue;
        }
        if (ident_start(c)) {
            size_t end = i;
            while (end < text.size() && ident_char(text[end]))
                ++end;
            std::string name(text.substr(i, end - i));
            advance(end - i);
            out.push_back({TokenKind::ident, start, std::move(name), 0});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+':
                kind = TokenKind::plus;
                break;
            case '-':
                kind = TokenKind::minus;
                break;
            case '*':
                kind = TokenKind::star;
                break;
            case '^':
                kind = TokenKind::caret;
                break;
            case '(':
                kind = TokenKind::lparen;
                break;
            case ')':
                kind = TokenKind::rparen;
                break;
            case ',':
                kind = TokenKind::comma;
                break;
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
        advance(1);
        out.push_back({kind, start, {}, 0});
    }
    out.push_back({TokenKind::eof, loc, {}, 0});
    return out;
}

// Identifier classification: reserved variety keywords, P<digits>, or a
// plain reference resolved later against the registry.
bool projective_name(const std::string& name, int& n_out, SourceLoc loc) {
    if (name.size() < 2 || name[0] != 'P')
        return false;
    for (size_t j = 1; j < name.size(); ++j)
        if (name[j] < '0' || name[j] > '9')
            return false;
    int n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec != std::errc{})
        throw ParseError(loc, "projective space dimension in '" + name +
                                  "' out of supported range");
    n_out = n;
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    RingExpr parse() {
        RingExpr expr = parse_expr();
        if (peek().kind != TokenKind::eof)
            fail("'+', '-', '*' or end of input");
        return expr;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    bool accept(TokenKind kind) {
        if (peek().kind != kind)
            return false;
        ++pos_;
        return true;
    }
    Token expect(TokenKind kind, const char* expected) {
        if (peek().kind != kind)
            fail(expected);
        return next();
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(peek().loc, "expected " + expected + ", got " + describe(peek()));
    }

    int expect_small_int(const char* what, long long max_value) {
        Token tok = expect(TokenKind::integer, "integer");
        if (tok.value > max_value)
            throw ParseError(tok.loc, std::string(what) + " " + std::to_string(tok.value) +
                                          " out of supported range");
        return static_cast<int>(tok.value);
    }

    RingExpr parse_expr() {
        SourceLoc loc = peek().loc;
        RingExpr lhs;
        if (accept(TokenKind::minus)) {
            RingExpr operand = parse_term();
            lhs = RingExpr{RingExpr::Negate{std::make_shared<RingExpr>(std::move(operand))}, loc};
        } else {
            lhs = parse_term();
        }
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            char op = next().kind == TokenKind::plus ? '+' : '-';
            RingExpr rhs = parse_term();
            lhs = RingExpr{RingExpr::Binary{op, std::make_shared<RingExpr>(std::move(lhs)),
                                            std::make_shared<RingExpr>(std::move(rhs))},
                           loc};
        }
        return lhs;
    }

    RingExpr parse_term() {
        SourceLoc loc = peek().loc;
        RingExpr lhs = parse_factor();
        while (accept(TokenKind::star)) {
            RingExpr rhs = parse_factor();
            lhs = RingExpr{RingExpr::Binary{'*', std::make_shared<RingExpr>(std::move(lhs)),
                                            std::make_shared<RingExpr>(std::move(rhs))},
                           loc};
        }
        return lhs;
    }

    RingExpr parse_factor() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::integer: {
                Token lit = next();
                return RingExpr{RingExpr::IntLit{lit.value}, lit.loc};
            }
            case TokenKind::lparen: {
                Token open = next();
                RingExpr inner = parse_expr();
                expect(TokenKind::rparen, "')'");
                inner.loc = open.loc;
                return inner;
            }
            case TokenKind::ident: {
                if (tok.text == "L")
                    return parse_lefschetz();
                VarietyExpr atom = parse_atom();
                SourceLoc loc = atom.loc;
                return RingExpr{RingExpr::Variety{std::move(atom)}, loc};
            }
            default:
                fail("integer, 'L', a variety, or '('");
        }
    }

    RingExpr parse_lefschetz() {
        Token name = next();  // 'L'
        long long power = 1;
        if (accept(TokenKind::caret)) {
            bool negative = accept(TokenKind::minus);
            Token exponent = expect(TokenKind::integer, "integer exponent");
            power = negative ? -exponent.value : exponent.value;
        }
        return RingExpr{RingExpr::Lefschetz{power}, name.loc};
    }

    VarietyExpr parse_atom() {
        Token tok = expect(TokenKind::ident,
                           "'point', 'curve', 'blowup', 'prod', P<n> or a table name");
        const std::string& name = tok.text;
        if (name == "point")
            return VarietyExpr{VarietyExpr::Point{}, tok.loc};
        if (name == "curve") {
            expect(TokenKind::lparen, "'('");
            int genus = expect_small_int("curve genus", 1'000'000'000);
            expect(TokenKind::rparen, "')'");
            return VarietyExpr{VarietyExpr::Curve{genus}, tok.loc};
        }
        if (name == "blowup") {
            expect(TokenKind::lparen, "'('");
            VarietyExpr ambient = parse_atom();
            expect(TokenKind::comma, "','");
            VarietyExpr center = parse_atom();
            expect(TokenKind::comma, "','");
            int codim = expect_small_int("codimension", 100'000);
            expect(TokenKind::rparen, "')'");
            return VarietyExpr{
                VarietyExpr::Blowup{std::make_shared<VarietyExpr>(std::move(ambient)),
                                    std::make_shared<VarietyExpr>(std::move(center)), codim},
                tok.loc};
        }
        if (name == "prod") {
            expect(TokenKind::lparen, "'('");
            VarietyExpr left = parse_atom();
            expect(TokenKind::comma, "','");
            VarietyExpr right = parse_atom();
            expect(TokenKind::rparen, "')'");
            return VarietyExpr{
                VarietyExpr::Prod{std::make_shared<VarietyExpr>(std::move(left)),
                                  std::make_shared<VarietyExpr>(std::move(right))},
                tok.loc};
        }
        int n = 0;
        if (projective_name(name, n, tok.loc)) {
            if (n > 100'000)
                throw ParseError(tok.loc, "projective space dimension " + std::to_string(n) +
                                              " out of supported range");
            return VarietyExpr{VarietyExpr::ProjSpace{n}, tok.loc};
        }
        return VarietyExpr{VarietyExpr::Ref{name}, tok.loc};
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace

RingExpr parse_expression(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace mhc

#include "mhv/seed_parser.hpp"

#include "mhv/errors.hpp"

#include <cctype>

namespace mhv {

namespace {

enum class Tok { Num, Dee, Aitch, W, T, LParen, RParen, Caret, Star, Plus, Minus, Slash, Tensor, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Tok::Num, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        // '(x)' is one token; a bare '(' opens a generator argument
        if (c == '(' && i_ + 2 < s_.size() && s_[i_ + 1] == 'x' && s_[i_ + 2] == ')') {
            cur_ = {Tok::Tensor, "(x)", start};
            i_ += 3;
            return;
        }
        ++i_;
        switch (c) {
            case 'd': cur_ = {Tok::Dee, "d", start}; return;
            case 'h': cur_ = {Tok::Aitch, "h", start}; return;
            case 'w': cur_ = {Tok::W, "w", start}; return;
            case 't': cur_ = {Tok::T, "t", start}; return;
            case '(': cur_ = {Tok::LParen, "(", start}; return;
            case ')': cur_ = {Tok::RParen, ")", start}; return;
            case '^': cur_ = {Tok::Caret, "^", start}; return;
            case '*': cur_ = {Tok::Star, "*", start}; return;
            case '+': cur_ = {Tok::Plus, "+", start}; return;
            case '-': cur_ = {Tok::Minus, "-", start}; return;
            case '/': cur_ = {Tok::Slash, "/", start}; return;
            default:
                fail("ParseError", "unexpected character '" + std::string(1, c) + "' at position " +
                                       std::to_string(start));
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

[[noreturn]] void expected(const char* what, const Token& got) {
    fail("ParseError", std::string("expected ") + what + " at position " + std::to_string(got.pos) +
                           (got.kind == Tok::End ? " (end of input)" : ", got '" + got.text + "'"));
}

class Parser {
public:
    Parser(const std::string& text, ModulePtr module)
        : lex_(text), module_(std::move(module)) {}

    Vector parse() {
        Vector v = parse_expr();
        if (lex_.peek().kind != Tok::End) expected("end of input", lex_.peek());
        return v;
    }

private:
    Scalar parse_rational(bool allow_sign) {
        bool neg = false;
        if (allow_sign && lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Tok::Num) expected("a number", lex_.peek());
        std::string num = lex_.take().text;
        std::string den = "1";
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            if (lex_.peek().kind != Tok::Num) expected("a denominator", lex_.peek());
            den = lex_.take().text;
        }
        Scalar s = Scalar::parse(num + "/" + den);
        return neg ? -s : s;
    }

    long long parse_nat() {
        if (lex_.peek().kind != Tok::Num) expected("an exponent", lex_.peek());
        return std::stoll(lex_.take().text);
    }

    Generator parse_generator() {
        Token head = lex_.take(); // Dee or Aitch
        if (lex_.peek().kind != Tok::LParen) expected("'('", lex_.peek());
        Token open = lex_.take();
        Scalar idx = parse_rational(true);
        if (lex_.peek().kind != Tok::RParen) expected("')'", lex_.peek());
        lex_.take();
        Scalar twice = idx * Scalar(2);
        if (!twice.is_integer())
            fail("ParseError", "index " + idx.str() + " at position " + std::to_string(open.pos) +
                                   " is not an integer or half-integer");
        long long t = std::stoll(twice.str());
        if (head.kind == Tok::Dee) {
            if (t % 2 != 0)
                fail("ParseError", "d-index must be an integer, got " + idx.str());
            return Generator::d(t / 2);
        }
        if (t % 2 == 0)
            fail("ParseError", "h-index must be a strict half-integer, got " + idx.str());
        return Generator::h_twice(t);
    }

    // One basis term: coefficient and key parts. Returns the scaled key
    // contribution for the module `mod`.
    Vector parse_chunk(const ModulePtr& mod, bool negate) {
        Scalar coeff = negate ? Scalar(-1) : Scalar(1);
        PBWMonomial mono;
        bool saw_w = false;
        long long t_exp = -1;

        bool first = true;
        while (true) {
            const Token& tok = lex_.peek();
            if (!first) {
                if (tok.kind != Tok::Star) break;
                lex_.take();
            }
            first = false;
            switch (lex_.peek().kind) {
                case Tok::Num:
                    coeff *= parse_rational(false);
                    break;
                case Tok::Minus:
                    coeff *= parse_rational(true);
                    break;
                case Tok::Dee:
                case Tok::Aitch: {
                    Token at = lex_.peek();
                    if (saw_w)
                        fail("KeyError", "generator after 'w' at position " + std::to_string(at.pos));
                    Generator g = parse_generator();
                    int exp = 1;
                    if (lex_.peek().kind == Tok::Caret) {
                        lex_.take();
                        exp = static_cast<int>(parse_nat());
                        if (exp < 1) fail("ParseError", "exponent must be >= 1");
                    }
                    if (!mono.factors.empty() && mono.factors.back().first == g)
                        mono.factors.back().second += exp;
                    else
                        mono.factors.push_back({g, exp});
                    break;
                }
                case Tok::W: {
                    Token at = lex_.take();
                    if (saw_w) fail("ParseError", "duplicate 'w' at position " + std::to_string(at.pos));
                    saw_w = true;
                    break;
                }
                case Tok::T: {
                    Token at = lex_.take();
                    long long e = 1;
                    if (lex_.peek().kind == Tok::Caret) {
                        lex_.take();
                        e = parse_nat();
                    }
                    if (t_exp < 0) t_exp = 0;
                    t_exp += e;
                    if (saw_w || !mono.factors.empty())
                        fail("KeyError", "'t' cannot be mixed with monomial factors at position " +
                                             std::to_string(at.pos));
                    break;
                }
                default:
                    expected("a factor", lex_.peek());
            }
        }

        Vector out(mod);
        if (coeff.is_zero()) return out;

        if (saw_w && t_exp >= 0)
            fail("KeyError", "a term cannot contain both 'w' and 't'");
        BasisKey key = BasisKey::mono_key(PBWMonomial::identity());
        if (saw_w) {
            key = BasisKey::mono_key(mono);
        } else if (t_exp >= 0) {
            key = BasisKey::poly(t_exp);
        } else if (mono.is_identity()) {
            // pure scalar: the constant polynomial in a polynomial module
            key = BasisKey::poly(0);
        } else {
            fail("KeyError", "monomial without the vacuum symbol 'w'");
        }
        if (!mod->valid_key(key))
            fail("KeyError", "'" + key.str() + "' is not a basis key of " + mod->name());
        out.add(key, coeff);
        return out;
    }

    // chunk ((x) chunk)*, matched against the tensor structure of mod.
    Vector parse_term(const ModulePtr& mod, bool negate) {
        if (lex_.peek().kind == Tok::Tensor) expected("a factor", lex_.peek());
        if (mod->kind() == ModuleKind::Tensor) {
            const auto& tm = static_cast<const TensorModule&>(*mod);
            Vector left = parse_chunk(tm.left(), negate);
            if (left.is_zero() && lex_.peek().kind != Tok::Tensor) return Vector(mod);
            if (lex_.peek().kind != Tok::Tensor) expected("'(x)'", lex_.peek());
            lex_.take();
            Vector right = parse_term(tm.right(), false);
            Vector out(mod);
            for (const auto& [kl, cl] : left.coords())
                for (const auto& [kr, cr] : right.coords())
                    out.add(BasisKey::pair(kl, kr), cl * cr);
            // zero coefficient on either side collapses the term
            return out;
        }
        return parse_chunk(mod, negate);
    }

    Vector parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Vector acc = parse_term(module_, negate);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            acc += parse_term(module_, minus);
        }
        return acc;
    }

    Lexer lex_;
    ModulePtr module_;
};

} // namespace

Vector parse_seed(const std::string& text, const ModulePtr& module) {
    if (!module) fail("BadModule", "parse_seed needs a module");
    return Parser(text, module).parse();
}

std::string render_vector(const Vector& v) { return v.str(); }

} // namespace mhv

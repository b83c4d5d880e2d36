#include <cctype>
#include <sstream>

#include "weylfact/expr.hpp"

namespace weylfact {

namespace {

std::string expected_message(std::size_t offset, const std::set<std::string>& expected, const std::string& found) {
    std::ostringstream os;
    os << "parse error at offset " << offset << ": expected ";
    bool first = true;
    for (const auto& e : expected) {
        os << (first ? "" : ", ") << e;
        first = false;
    }
    os << "; found " << found;
    return os.str();
}

constexpr unsigned max_exponent = 4096;

class Parser {
public:
    Parser(std::string_view text, std::string symbols) : text_(text), symbols_(std::move(symbols)) {}

    DerivationExpr parse_all() {
        DerivationExpr e = expr();
        skip_ws();
        if (pos_ < text_.size()) {
            fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        }
        return e;
    }

private:
    using K = DerivationExpr::Kind;

    std::string_view text_;
    std::string symbols_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(std::set<std::string> expected) {
        skip_ws();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), found);
    }

    std::set<std::string> base_starts() const {
        std::set<std::string> s{"number", "'('"};
        for (char c : symbols_) s.insert(std::string("'") + c + "'");
        return s;
    }

    DerivationExpr expr() {
        DerivationExpr e;
        if (peek() == '-') {
            ++pos_;
            e = DerivationExpr::negate(term());
        } else {
            e = term();
        }
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                e = DerivationExpr::binary(K::Add, std::move(e), term());
            } else if (c == '-') {
                ++pos_;
                e = DerivationExpr::binary(K::Sub, std::move(e), term());
            } else {
                return e;
            }
        }
    }

    DerivationExpr term() {
        DerivationExpr e = factor();
        while (peek() == '*') {
            ++pos_;
            e = DerivationExpr::binary(K::Mul, std::move(e), factor());
        }
        return e;
    }

    DerivationExpr factor() {
        DerivationExpr b = base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            std::string digits = read_digits();
            if (digits.empty()) fail({"unsigned integer"});
            unsigned long v = 0;
            for (char d : digits) {
                v = v * 10 + static_cast<unsigned long>(d - '0');
                if (v > max_exponent) {
                    throw ParseError(start, {"exponent <= " + std::to_string(max_exponent)}, digits);
                }
            }
            return DerivationExpr::power(std::move(b), static_cast<unsigned>(v));
        }
        return b;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    DerivationExpr base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            DerivationExpr e = expr();
            if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'", "'^'"});
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(read_digits(), 10);
            Integer den(1);
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t start = pos_;
                std::string digits = read_digits();
                if (digits.empty()) fail({"positive integer"});
                den = Integer(digits, 10);
                if (den == 0) throw ParseError(start, {"positive integer"}, "'0'");
            }
            return DerivationExpr::number(Rational(num, den));
        }
        if (c != '\0' && symbols_.find(c) != std::string::npos) {
            ++pos_;
            switch (c) {
                case 't':
                    return DerivationExpr::symbol(K::T);
                case 'D':
                    return DerivationExpr::symbol(K::D);
                default:
                    return DerivationExpr::symbol(K::E);
            }
        }
        fail(base_starts());
    }
};

bool is_sum(const DerivationExpr& e) {
    using K = DerivationExpr::Kind;
    return e.kind == K::Add || e.kind == K::Sub || e.kind == K::Neg;
}

void print_into(std::ostringstream& os, const DerivationExpr& e);

void print_wrapped(std::ostringstream& os, const DerivationExpr& e, bool wrap) {
    if (wrap) os << "(";
    print_into(os, e);
    if (wrap) os << ")";
}

void print_into(std::ostringstream& os, const DerivationExpr& e) {
    using K = DerivationExpr::Kind;
    switch (e.kind) {
        case K::Number:
            if (e.value.sign() < 0) {
                os << "(-" << e.value.abs().to_string() << ")";
            } else {
                os << e.value.to_string();
            }
            return;
        case K::T:
            os << "t";
            return;
        case K::D:
            os << "D";
            return;
        case K::E:
            os << "E";
            return;
        case K::Add:
        case K::Sub:
            print_into(os, e.children[0]);
            os << (e.kind == K::Add ? " + " : " - ");
            print_wrapped(os, e.children[1], is_sum(e.children[1]));
            return;
        case K::Neg:
            os << "-";
            print_wrapped(os, e.children[0], is_sum(e.children[0]));
            return;
        case K::Mul:
            print_wrapped(os, e.children[0], is_sum(e.children[0]));
            os << "*";
            print_wrapped(os, e.children[1], is_sum(e.children[1]) || e.children[1].kind == K::Mul);
            return;
        case K::Pow: {
            const auto& b = e.children[0];
            bool atom = b.kind == K::T || b.kind == K::D || b.kind == K::E ||
                        (b.kind == K::Number && b.value.sign() >= 0);
            print_wrapped(os, b, !atom);
            os << "^" << e.exponent;
            return;
        }
    }
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& found)
    : std::runtime_error(expected_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

DerivationExpr parse_operator(std::string_view text) {
    return Parser(text, "tDE").parse_all();
}

UniPoly parse_polynomial(std::string_view text) {
    // 'l' is read as the E symbol; a single commuting variable needs no reordering.
    const CoeffMap m = laurent_expand(Parser(text, "l").parse_all());
    std::vector<Rational> c(static_cast<std::size_t>(std::max(max_i(m), 0)) + 1);
    for (const auto& [pt, v] : m) {
        c[static_cast<std::size_t>(pt.i)] = v;
    }
    return UniPoly(std::move(c));
}

std::string print_expr(const DerivationExpr& e) {
    std::ostringstream os;
    print_into(os, e);
    return os.str();
}

}  // namespace weylfact

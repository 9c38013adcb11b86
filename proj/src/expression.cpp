#include "admissible/expression.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>

namespace admissible {

namespace {

template <typename Value>
class Parser {
  public:
    using Resolver = std::function<std::optional<Value>(char)>;

    Parser(std::string_view text, Resolver resolve) : text_(text), resolve_(std::move(resolve)) {}

    Value parse() {
        Value v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    Value term() {
        Value v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                Value d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v * d.inverse();
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (accept('-')) return Value(-1) * unary();
        return power();
    }

    Value power() {
        Value base = atom();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip_space();
        const Integer e = integer();
        if (!e.fits_slong_p() || abs(e) > 10000) fail("exponent too large");
        long k = e.get_si();
        if (negative) {
            if (base.is_zero()) fail("division by zero");
            k = -k;
        }
        return base.pow(k);
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Value atom() {
        if (accept('(')) {
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return Value(CyclotomicNumber(Rational(integer())));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail("unknown identifier");
            if (auto v = resolve_(c)) return *v;
            --pos_;
            fail(std::string("unknown variable '") + c + "'");
        }
        fail("unexpected character");
    }

    std::string_view text_;
    Resolver resolve_;
    std::size_t pos_ = 0;
};

// Adapter giving UnivariateRational the ring interface the parser expects.
struct UniValue {
    UnivariateRational r;
    UniValue(UnivariateRational v) : r(std::move(v)) {}
    UniValue(long c) : r(UnivariatePolynomial(c)) {}
    UniValue(const CyclotomicNumber& c) : r(UnivariatePolynomial(c)) {}
    bool is_zero() const { return r.is_zero(); }
    UniValue inverse() const { return r.inverse(); }
    UniValue pow(long e) const { return r.pow(e); }
    friend UniValue operator+(const UniValue& a, const UniValue& b) { return a.r + b.r; }
    friend UniValue operator-(const UniValue& a, const UniValue& b) {
        return a.r + UnivariateRational(-b.r.numerator(), b.r.denominator());
    }
    friend UniValue operator*(const UniValue& a, const UniValue& b) { return a.r * b.r; }
};

}  // namespace

RationalFunction2 parse_rational_function(std::string_view text, unsigned zeta_order) {
    Parser<RationalFunction2> parser(text, [zeta_order](char c) -> std::optional<RationalFunction2> {
        if (c == 'f') return RationalFunction2::f();
        if (c == 't') return RationalFunction2::t();
        if (c == 'z' && zeta_order > 0) return RationalFunction2(CyclotomicNumber::root_of_unity(zeta_order));
        return std::nullopt;
    });
    return parser.parse();
}

BivariatePolynomial parse_polynomial(std::string_view text, unsigned zeta_order) {
    RationalFunction2 r = parse_rational_function(text, zeta_order);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial: \"" + std::string(text) + "\"");
    return r.numerator();
}

UnivariateRational parse_univariate(std::string_view text, unsigned zeta_order) {
    Parser<UniValue> parser(text, [zeta_order](char c) -> std::optional<UniValue> {
        if (c == 'x') return UniValue(UnivariateRational(UnivariatePolynomial::x()));
        if (c == 'z' && zeta_order > 0) return UniValue(CyclotomicNumber::root_of_unity(zeta_order));
        return std::nullopt;
    });
    return parser.parse().r;
}

}  // namespace admissible

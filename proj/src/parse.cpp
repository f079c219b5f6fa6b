#include "dvc/parse.hpp"

#include <cctype>

namespace dvc {

namespace {

class Parser {
public:
    Parser(std::string_view s, const VarList& vars) : s_(s), vars_(vars) {}

    MultiPoly run()
    {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division by a non-constant or zero", at);
                acc *= Rational(1 / d.constant_term());
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = primary();
        if (eat('^')) {
            skip();
            const std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected integer exponent", at);
            std::size_t e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<std::size_t>(s_[pos_] - '0');
                if (e > static_cast<std::size_t>(kMaxExponent)) throw ParseError("exponent too large", at);
                ++pos_;
            }
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    MultiPoly primary()
    {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly(vars_, Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            const int idx = vars_.index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return MultiPoly::variable(vars_, idx);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarList& vars)
{
    return Parser(text, vars).run();
}

}  // namespace dvc

#ifndef ASYMPROD_EXPRESSION_HPP
#define ASYMPROD_EXPRESSION_HPP

#include <string>

#include "asymprod/catalog.hpp"
#include "asymprod/function_spec.hpp"

namespace asymprod {

// Tiny combinator grammar over catalog names:
//   expr := name | add(expr,expr) | mul(expr,expr) | scale(exprC,exprS) | deriv(exprS)
inline FunctionSpec resolve_expression(const std::string& text) {
    struct Parser {
        const std::string& s;
        std::size_t pos = 0;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }

        bool consume(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        std::string ident() {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("expression: expected a name at position " +
                                            std::to_string(start) + " in '" + s + "'");
            return s.substr(start, pos - start);
        }

        FunctionSpec expr() {
            const std::string name = ident();
            if (consume('(')) {
                if (name == "deriv") {
                    FunctionSpec arg = expr();
                    expect(')');
                    return derivative_of_S(arg);
                }
                FunctionSpec lhs = expr();
                expect(',');
                FunctionSpec rhs = expr();
                expect(')');
                if (name == "add") return combine_add(lhs, rhs);
                if (name == "mul") return combine_mul(lhs, rhs);
                if (name == "scale") return scale_module(lhs, rhs);
                throw std::invalid_argument("expression: unknown combinator '" + name + "'");
            }
            const FunctionSpec* f = find_function(name);
            if (!f) throw std::invalid_argument("expression: unknown function '" + name + "'");
            return *f;
        }

        void expect(char c) {
            if (!consume(c))
                throw std::invalid_argument(std::string("expression: expected '") + c +
                                            "' at position " + std::to_string(pos) + " in '" +
                                            s + "'");
        }

        FunctionSpec parse() {
            FunctionSpec f = expr();
            skip_ws();
            if (pos != s.size())
                throw std::invalid_argument("expression: trailing input at position " +
                                            std::to_string(pos) + " in '" + s + "'");
            return f;
        }
    };
    return Parser{text}.parse();
}

}  // namespace asymprod

#endif

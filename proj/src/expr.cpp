#include "uqsl2/expr.hpp"

#include <cctype>

namespace uqsl2::expr {

const std::vector<std::string>& element_atoms() {
    static const std::vector<std::string> atoms = {"Lambda", "nu_x", "nu_y", "nu_z", "x", "y", "z",
                                                   "X",      "Z",    "A",    "e",    "f", "k"};
    return atoms;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& atoms) : text_(text), atoms_(atoms) {}

    NodePtr run() {
        NodePtr n = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return n;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static NodePtr binary(Kind kind, std::size_t pos, NodePtr lhs, NodePtr rhs) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->pos = pos;
        n->scalar = lhs->scalar && rhs->scalar;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    NodePtr parse_expr() {
        NodePtr lhs;
        const char c = peek();
        if (c == '+' || c == '-') {
            const std::size_t at = pos_++;
            NodePtr operand = parse_term();
            if (c == '-') {
                auto n = std::make_shared<Node>();
                n->kind = Kind::Neg;
                n->pos = at;
                n->scalar = operand->scalar;
                n->lhs = std::move(operand);
                lhs = n;
            } else {
                lhs = std::move(operand);
            }
        } else {
            lhs = parse_term();
        }
        while (true) {
            const char op = peek();
            if (op != '+' && op != '-') return lhs;
            const std::size_t at = pos_++;
            NodePtr rhs = parse_term();
            lhs = binary(op == '+' ? Kind::Add : Kind::Sub, at, std::move(lhs), std::move(rhs));
        }
    }

    bool starts_base(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (true) {
            const char op = peek();
            if (op == '*' || op == '/') {
                const std::size_t at = pos_++;
                NodePtr rhs = parse_factor();
                lhs = binary(op == '*' ? Kind::Mul : Kind::Div, at, std::move(lhs), std::move(rhs));
            } else if (op != '\0' && starts_base(op)) {
                const std::size_t at = pos_;
                NodePtr rhs = parse_factor();
                lhs = binary(Kind::Mul, at, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_factor() {
        NodePtr base = parse_base();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", start);
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) throw ParseError("exponent too large", start);
        auto n = std::make_shared<Node>();
        n->kind = Kind::Pow;
        n->pos = at;
        n->exponent = std::stoi(digits) * (negative ? -1 : 1);
        n->scalar = base->scalar;
        n->lhs = std::move(base);
        return n;
    }

    NodePtr parse_base() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            auto n = std::make_shared<Node>();
            n->kind = Kind::Integer;
            n->pos = at;
            n->value = Integer(std::string(text_.substr(at, pos_ - at)));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<Node>();
            n->kind = Kind::Symbol;
            n->pos = at;
            for (const auto& atom : atoms_) {
                if (text_.substr(at, atom.size()) == atom) {
                    n->name = atom;
                    n->scalar = false;
                    pos_ += atom.size();
                    return n;
                }
            }
            if (c == 'q' || c == 'a') {
                n->name = std::string(1, c);
                ++pos_;
                return n;
            }
            throw ParseError(std::string("unknown symbol '") + c + "'", at);
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const std::vector<std::string>& atoms_;
    std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view text, const std::vector<std::string>& atoms) {
    return Parser(text, atoms).run();
}

RationalFunction eval_scalar(const Node& node) {
    switch (node.kind) {
        case Kind::Integer:
            return RationalFunction(node.value);
        case Kind::Symbol:
            if (node.name == "q") return RationalFunction::q();
            if (node.name == "a") return RationalFunction::a();
            throw ParseError("'" + node.name + "' is not a scalar", node.pos);
        case Kind::Add:
            return eval_scalar(*node.lhs) + eval_scalar(*node.rhs);
        case Kind::Sub:
            return eval_scalar(*node.lhs) - eval_scalar(*node.rhs);
        case Kind::Mul:
            return eval_scalar(*node.lhs) * eval_scalar(*node.rhs);
        case Kind::Div: {
            const RationalFunction divisor = eval_scalar(*node.rhs);
            if (divisor.is_zero()) throw DivisionByZero();
            return eval_scalar(*node.lhs) / divisor;
        }
        case Kind::Neg:
            return -eval_scalar(*node.lhs);
        case Kind::Pow: {
            const RationalFunction base = eval_scalar(*node.lhs);
            if (node.exponent < 0 && base.is_zero()) throw DivisionByZero();
            return base.pow(node.exponent);
        }
    }
    throw ParseError("malformed expression", node.pos);
}

}  // namespace uqsl2::expr

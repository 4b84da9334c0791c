#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uqsl2/error.hpp"
#include "uqsl2/rational.hpp"

namespace uqsl2::expr {

enum class Kind { Integer, Symbol, Add, Sub, Mul, Div, Neg, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind = Kind::Integer;
    std::size_t pos = 0;
    Integer value;     // Integer
    std::string name;  // Symbol
    int exponent = 0;  // Pow
    NodePtr lhs;
    NodePtr rhs;
    bool scalar = true;  // no atoms besides q and a
};

// Atom names recognized by the element grammar, multi-letter ones first.
const std::vector<std::string>& element_atoms();

// Parses with the given atom vocabulary (q and a are always known).
NodePtr parse(std::string_view text, const std::vector<std::string>& atoms);

inline NodePtr parse_scalar_expr(std::string_view text) { return parse(text, {}); }
inline NodePtr parse_element_expr(std::string_view text) { return parse(text, element_atoms()); }

// Requires node.scalar.
RationalFunction eval_scalar(const Node& node);

/// Evaluates a parsed expression against a backend providing:
///   Value one(); Value scalar(const RF&); Value atom(name, power, pos);
///   Value add(a, b); Value sub(a, b); Value mul(a, b);
///   Value scale(const RF&, a); Value neg(a).
/// Negative powers reach `atom` unchanged; the backend decides legality.
template <class Backend>
auto evaluate(const Node& node, Backend& backend) -> decltype(backend.one()) {
    if (node.scalar) return backend.scalar(eval_scalar(node));
    switch (node.kind) {
        case Kind::Symbol:
            return backend.atom(node.name, 1, node.pos);
        case Kind::Add:
            return backend.add(evaluate(*node.lhs, backend), evaluate(*node.rhs, backend));
        case Kind::Sub:
            return backend.sub(evaluate(*node.lhs, backend), evaluate(*node.rhs, backend));
        case Kind::Neg:
            return backend.neg(evaluate(*node.lhs, backend));
        case Kind::Mul:
            if (node.lhs->scalar) return backend.scale(eval_scalar(*node.lhs), evaluate(*node.rhs, backend));
            if (node.rhs->scalar) return backend.scale(eval_scalar(*node.rhs), evaluate(*node.lhs, backend));
            return backend.mul(evaluate(*node.lhs, backend), evaluate(*node.rhs, backend));
        case Kind::Div:
            if (!node.rhs->scalar) throw ParseError("division by a non-scalar expression", node.rhs->pos);
            {
                const RationalFunction divisor = eval_scalar(*node.rhs);
                if (divisor.is_zero()) throw DivisionByZero();
                return backend.scale(divisor.inv(), evaluate(*node.lhs, backend));
            }
        case Kind::Pow: {
            if (node.lhs->kind == Kind::Symbol) return backend.atom(node.lhs->name, node.exponent, node.lhs->pos);
            if (node.exponent < 0) throw ParseError("negative power of a non-scalar expression", node.pos);
            auto base = evaluate(*node.lhs, backend);
            auto result = backend.one();
            for (int i = 0; i < node.exponent; ++i) result = backend.mul(std::move(result), base);
            return result;
        }
        case Kind::Integer:
            break;
    }
    return backend.scalar(eval_scalar(node));
}

}  // namespace uqsl2::expr

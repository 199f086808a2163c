#pragma once
#include <optional>
#include <string>
#include <string_view>

#include "covops/weyl.hpp"

// Plain-text formats with exact round-trip guarantees.
//
// Polynomial: terms in descending graded-lex order joined by " + ";
// each term "coeff" or "coeff * var^e * var * ..." (exponent 1 omitted,
// coefficient always written, rationals as p or p/q). Zero is "0".
//
// Operator file:
//   covops-operator v1
//   universe <standard|homogeneous> m <int>
//   kind <token>                       (H, D, B, E, F, omega, ...)
//   k <int>                            (present for iterated brackets)
//   form <operator|bidifferential>
//   params <symbolic|none>             or: params lambda <rat> mu <rat>
//                                      or: params s <rat> t <rat>
//   scalar-dropped <token>
//   terms <count>
//   <coeff-poly> || <dx multi-index> || <dy multi-index>   (one line per term,
//       ascending graded-lex on the joint multi-index, entries space-separated)

namespace covops {

std::string poly_to_string(const Polynomial& p, const VarUniverse& u);
Polynomial poly_parse(std::string_view text, const VarUniverse& u);

struct OperatorMeta {
    std::string kind;                 // H, D, B, E, F, omega, ...
    std::optional<int> k;             // iterated bracket depth
    bool symbolic = true;             // parameters left symbolic?
    bool lambda_mu = false;           // specialized params named lambda/mu (D, B) vs s/t
    std::optional<Rational> s_val, t_val;
    std::string scalar_dropped = "none";
};

std::string operator_to_string(const DiffOperator& op, const OperatorMeta& meta);
std::string operator_to_string(const BiDiffOperator& op, const OperatorMeta& meta);

struct ParsedOperator {
    OperatorMeta meta;
    bool bidifferential = false;
    std::optional<DiffOperator> op;
    std::optional<BiDiffOperator> biop;
    const VarUniverse& universe() const;
};

ParsedOperator operator_parse(std::string_view text);

} // namespace covops

#pragma once

#include <string>

#include "knv/psdop.hpp"

namespace knv {

// Expression grammar:
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" signed-integer)?
//   base   := integer | symbol | "(" expr ")" | "d(" expr ("," uint)? ")"
//   symbol := "u" uint? | "w" uint "_" uint | "p0".."p4"
//           | "P"|"Pu"|"Puu"|"Puuu"|"Puuuu" | "alpha"|"beta"|"gamma"
// "u" is u0; "d(e,k)" is the k-fold total derivative; P and its aliases
// expand to their p0..p4 polynomial forms at parse time. The leading unary
// minus is a convenience extension so formatted output always re-parses.
RingElem parse(const std::string& text);

// Operator literal: sum of local terms "(c)*D^k" and tails "(p) Dinv (q)";
// "D" without an exponent means D^1, and "*" around Dinv is optional.
WnlOp parse_operator(const std::string& text);

// Canonical serialization; parse(format(e)) == e and
// parse_operator(format(op)) matches op tail-for-tail.
std::string format(const RingElem& e);
std::string format(const LocalOp& op);
std::string format(const WnlOp& op);

}  // namespace knv

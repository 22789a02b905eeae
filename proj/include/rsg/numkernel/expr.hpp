#pragma once

#include "rsg/numkernel/complex.hpp"

#include <string>

namespace rsg {

// Evaluates arithmetic such as "1/2+600i", "30/sqrt(pi)" or "-2 + 600*i".
// Grammar: numbers, the constants pi and i, sqrt/exp/log, + - * / ^ and
// parentheses. A number directly followed by a name or "(" multiplies it.
// Throws DomainError on malformed input.
template <typename Real>
Complex<Real> evaluate_expression(const std::string& text);

// evaluate_expression with a zero imaginary part required.
template <typename Real>
Real evaluate_real_expression(const std::string& text);

} // namespace rsg

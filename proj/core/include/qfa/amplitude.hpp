#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace qfa {

using Complex = std::complex<double>;

/// Evaluates an amplitude expression.
///
/// Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('-' | '+') unary | primary
///     primary := number | 'i' | 'pi' | func '(' expr ')' | '(' expr ')'
///     func    := 'sqrt' | 'exp'
///
/// `sqrt` of a negative real yields the principal complex root.
/// Throws ParseError on malformed input and on division by zero.
Complex parse_amplitude(std::string_view expr);

/// Renders a value as decimal text that parse_amplitude reads back to within
/// 1e-12 (17 significant digits). Purely real values print without an
/// imaginary part; integers print without a fraction.
std::string format_amplitude(Complex value);

}  // namespace qfa

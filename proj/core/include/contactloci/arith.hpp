#pragma once

#include <gmpxx.h>

#include <string>

namespace contactloci {

// Exact arithmetic is delegated to GMP. Int carries arbitrary-precision
// integers; Rat is always stored canonically (lowest terms, positive
// denominator), which the helpers below enforce on construction.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms with den > 0. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// Parses "123", "-4/6" (canonicalized) etc.
Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

std::string to_string(const Int& value);
/// "num" when the denominator is 1, otherwise "num/den".
std::string to_string(const Rat& value);

/// Binomial coefficient with the zero convention: the usual value for
/// 0 <= b <= a and 0 for every other integer pair, so the closed-form
/// summations can be evaluated verbatim.
Int binom(long a, long b);

/// k! for k >= 0.
Int factorial(long k);

}  // namespace contactloci

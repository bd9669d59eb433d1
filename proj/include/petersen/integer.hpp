#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace petersen {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

inline std::string to_decimal(const Rational& value) {
    return value.get_den() == 1 ? value.get_num().get_str(10) : value.get_str(10);
}

inline Integer parse_integer(const std::string& text) { return Integer(text, 10); }

}  // namespace petersen

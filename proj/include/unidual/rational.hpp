#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace unidual {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;

// Accepts "p", "-p", "p/q"; surrounding blanks are ignored.
Q parse_rational(std::string_view text);

// Comma separated list of rationals; an empty string gives an empty list.
Vec parse_rational_list(std::string_view text);

std::string to_string(const Q& q);
std::string to_string(const Vec& v);

Q dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Q& s, const Vec& v);
bool is_zero(const Vec& v);

}  // namespace unidual

#pragma once

#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace addsparse {

using Rational = boost::rational<std::int64_t>;

/// Parses `p/q`, an integer, or a finite decimal expansion such as `0.25`.
inline Rational parse_fraction(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> std::int64_t {
    if (s.empty()) fail();
    bool negative = false;
    std::size_t pos = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) fail();
    std::int64_t value = 0;
    for (; pos < s.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
      if (value > (INT64_MAX - 9) / 10) throw std::out_of_range("fraction component too large");
      value = value * 10 + (s[pos] - '0');
    }
    return negative ? -value : value;
  };

  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), true);
    std::int64_t den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17) fail();
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    std::int64_t w = whole.empty() ? 0 : parse_int(whole, false);
    std::int64_t f = parse_int(frac, false);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(w) + Rational(f, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, true));
}

/// Always `p/q`, with the sign on the numerator.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace addsparse

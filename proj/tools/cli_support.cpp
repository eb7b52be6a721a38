#include "cli_support.hpp"

#include <cctype>
#include <charconv>

namespace qhall::cli {

namespace {

long parse_long(const std::string& text) {
  long v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || text.find('/', slash + 1) != std::string::npos) {
      throw UsageError("not a rational: '" + text + "'");
    }
    if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }

  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = parse_long(s.substr(e + 1));
    s.resize(e);
  }
  std::string digits = s;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    exponent -= static_cast<long>(s.size() - dot - 1);
    if (dot == 0 && s.size() == 1) digits.clear();
  }
  if (!all_digits(digits)) throw UsageError("not a number: '" + text + "'");

  mpq_class value{mpz_class(digits, 10)};
  mpz_class scale;
  if (std::labs(exponent) > 4096) throw UsageError("exponent out of range: '" + text + "'");
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

IntRange parse_range(const std::string& text) {
  IntRange r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    r = {parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
  } else {
    r.first = r.last = parse_long(text);
  }
  if (r.first < 0) throw UsageError("quantum numbers are nonnegative: '" + text + "'");
  if (r.last < r.first) throw UsageError("empty range '" + text + "'");
  return r;
}

}  // namespace qhall::cli

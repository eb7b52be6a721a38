#include <doctest.h>

#include "cli_support.hpp"

using qhall::cli::parse_range;
using qhall::cli::parse_rational;
using qhall::cli::UsageError;

TEST_CASE("rational flags are parsed exactly") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == mpq_class(-3, 4));
  CHECK(parse_rational("6/8") == mpq_class(3, 4));
  CHECK(parse_rational("10.5") == mpq_class(21, 2));
  CHECK(parse_rational("0.1") == mpq_class(1, 10));
  CHECK(parse_rational("2.5e-3") == mpq_class(1, 400));
  CHECK(parse_rational("+1E2") == 100);
  CHECK(parse_rational("-.5") == mpq_class(-1, 2));
}

TEST_CASE("malformed rationals are usage errors") {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "3/4/5", "nan", "inf", "1e999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), UsageError);
  }
}

TEST_CASE("integer ranges") {
  auto single = parse_range("3");
  CHECK(single.first == 3);
  CHECK(single.last == 3);
  auto span = parse_range("0..4");
  CHECK(span.first == 0);
  CHECK(span.last == 4);
  for (const char* bad : {"", "4..0", "-1", "a..b", "1..", "..2", "1...3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_range(bad), UsageError);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "complex_arg.hpp"

using diskpoly::cli::parse_complex;
using C = std::complex<double>;

TEST_CASE("complex arguments") {
  CHECK(*parse_complex("0.3+0.4i") == C(0.3, 0.4));
  CHECK(*parse_complex("0.3-0.4i") == C(0.3, -0.4));
  CHECK(*parse_complex("-0.3-0.4i") == C(-0.3, -0.4));
  CHECK(*parse_complex("1.5") == C(1.5, 0));
  CHECK(*parse_complex("-2") == C(-2, 0));
  CHECK(*parse_complex("0.7i") == C(0, 0.7));
  CHECK(*parse_complex("-i") == C(0, -1));
  CHECK(*parse_complex("i") == C(0, 1));
  CHECK(*parse_complex("2+i") == C(2, 1));
  CHECK(*parse_complex("1e-3+2e-2i") == C(1e-3, 2e-2));
  CHECK(*parse_complex("1e+1-2E-1i") == C(10, -0.2));
  CHECK(*parse_complex(" 0.1 + 0.2i ") == C(0.1, 0.2));
}

TEST_CASE("malformed complex arguments") {
  for (const char* s : {"", "abc", "0.3+", "0.3+0.4", "0.3+0.4j", "1..2", "0.3+xi", "ii", "1e999"}) {
    CHECK_MESSAGE(!parse_complex(s), "input '" << s << "'");
  }
}

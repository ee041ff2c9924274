#ifndef DISKPOLY_TEST_SUPPORT_HPP
#define DISKPOLY_TEST_SUPPORT_HPP

#include "diskpoly/random_poly.hpp"

namespace diskpoly::testing {

using diskpoly::random_poly;

}  // namespace diskpoly::testing

#endif

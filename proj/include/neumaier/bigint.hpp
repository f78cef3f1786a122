#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace neumaier {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace neumaier

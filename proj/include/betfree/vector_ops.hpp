#pragma once

#include "betfree/types.hpp"

namespace betfree {

enum class Norm { L1, L2, Linf };

double norm(const Vec& v, Norm which);

// L1 and Linf are dual to each other, L2 is self-dual.
Norm dual_norm(Norm which);

const char* norm_name(Norm which);

}  // namespace betfree

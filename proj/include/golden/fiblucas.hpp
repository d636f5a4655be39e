#pragma once

#include "golden/rat.hpp"

#include <utility>

namespace golden {

// (F_k, F_{k+1}) by fast doubling:
//   F_{2j} = F_j (2 F_{j+1} - F_j),  F_{2j+1} = F_j^2 + F_{j+1}^2.
// O(log k) big-integer multiplications.
std::pair<Int, Int> fib_pair(unsigned long k);

// F_k for any integer k, with F_{-n} = (-1)^{n+1} F_n.
Int fib(long k);

// L_k = 2 F_{k+1} - F_k.
Int lucas(unsigned long k);

// True iff both Binet identities hold exactly in Q(sqrt5):
//   (phi + phi^{-1}) F_k = phi^k - (-phi^{-1})^k
//   L_k = phi^k + (-1)^k phi^{-k}
bool binet_check(long k);

}  // namespace golden

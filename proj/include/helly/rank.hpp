#ifndef HELLY_RANK_HPP
#define HELLY_RANK_HPP

#include <vector>

#include "helly/numeric.hpp"

namespace helly {

// Exact rank of an integer matrix via fraction-free (Bareiss) elimination.
// Runs on int64 with __int128 overflow guards and retries the whole matrix on
// GMP integers if any intermediate leaves the int64 range. Never rounds.
long long matrix_rank(const std::vector<std::vector<long long>>& m);

long long matrix_rank_gmp(std::vector<std::vector<Int>> m);

}  // namespace helly

#endif

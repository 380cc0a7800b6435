#include "helly/rank.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace helly {

namespace {

struct Int64Overflow {};

inline long long checked_update(long long aij, long long pivot, long long aik, long long akj,
                                long long prev) {
    // Bareiss step: (a_ij * pivot - a_ik * a_kj) / prev, division exact.
    __int128 t = static_cast<__int128>(aij) * pivot - static_cast<__int128>(aik) * akj;
    __int128 q = t / prev;
    if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
        throw Int64Overflow{};
    return static_cast<long long>(q);
}

long long rank_int64(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(m[rank], m[pivot_row]);
        const long long pivot = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const long long factor = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = checked_update(m[i][j], pivot, factor, m[rank][j], prev);
            m[i][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace

long long matrix_rank_gmp(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(m[rank], m[pivot_row]);
        const Int pivot = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Int factor = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = m[i][j] * pivot - factor * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<long long>(rank);
}

long long matrix_rank(const std::vector<std::vector<long long>>& m) {
    try {
        return rank_int64(m);
    } catch (const Int64Overflow&) {
        std::vector<std::vector<Int>> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            big[i].reserve(m[i].size());
            for (long long v : m[i]) big[i].emplace_back(static_cast<long>(v));
        }
        return matrix_rank_gmp(std::move(big));
    }
}

}  // namespace helly

#ifndef FACERING_LINALG_HPP
#define FACERING_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace facering {

/// Dense row-major matrix over a field; minimal support for the ranks
/// and determinants the verification paths need.
template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
std::size_t matrix_rank(Matrix<K> a)
{
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a.front().size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && is_zero(a[pivot][c])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        K piv_inv = inv(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (is_zero(a[r][c])) continue;
            K factor = a[r][c] * piv_inv;
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = a[r][j] - factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <class K>
K determinant(Matrix<K> a, const K& sample)
{
    std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    K det = one_like(sample);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(a[pivot][c])) ++pivot;
        if (pivot == n) return zero_like(sample);
        if (pivot != c) {
            std::swap(a[c], a[pivot]);
            det = -det;
        }
        det = det * a[c][c];
        K piv_inv = inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(a[r][c])) continue;
            K factor = a[r][c] * piv_inv;
            for (std::size_t j = c; j < n; ++j)
                a[r][j] = a[r][j] - factor * a[c][j];
        }
    }
    return det;
}

}  // namespace facering

#endif

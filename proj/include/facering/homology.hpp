#ifndef FACERING_HOMOLOGY_HPP
#define FACERING_HOMOLOGY_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "simplicial_complex.hpp"

namespace facering {

/// Ranks of reduced simplicial homology over F_p, indexed from degree
/// -1 (entry 0) to the dimension of the complex. Computed as
/// dim H_k = (#k-faces) - rank(boundary out of degree k)
///          - rank(boundary into degree k)
/// with dense elimination; needs the explicit face list.
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c,
                                                       std::int64_t p)
{
    if (c.is_void())
        throw std::invalid_argument("homology of the void complex");
    const auto& masks = c.face_masks();
    const std::size_t max_size = static_cast<std::size_t>(c.dimension()) + 1;

    std::vector<std::vector<std::uint64_t>> by_size(max_size + 1);
    for (auto m : masks)
        by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    // face_masks is sorted, so every by_size slice is sorted too.

    const Fp plus(1, p), minus(-1, p), zero(0, p);
    // ranks[s] = rank of the boundary map from s-vertex faces down to
    // (s-1)-vertex faces.
    std::vector<std::size_t> ranks(max_size + 2, 0);
    for (std::size_t s = 1; s <= max_size; ++s) {
        const auto& rows_faces = by_size[s - 1];
        const auto& col_faces = by_size[s];
        if (rows_faces.empty() || col_faces.empty()) continue;
        Matrix<Fp> b(rows_faces.size(), std::vector<Fp>(col_faces.size(), zero));
        for (std::size_t j = 0; j < col_faces.size(); ++j) {
            std::uint64_t m = col_faces[j];
            bool positive = true;
            for (std::uint64_t rest = m; rest != 0;) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                std::uint64_t sub = m ^ bit;
                auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                if (it == rows_faces.end() || *it != sub)
                    throw std::logic_error("face list not downward closed");
                std::size_t i = static_cast<std::size_t>(it - rows_faces.begin());
                b[i][j] = positive ? plus : minus;
                positive = !positive;
            }
        }
        ranks[s] = matrix_rank(std::move(b));
    }

    std::vector<std::size_t> h(max_size + 1, 0);
    for (std::size_t s = 0; s <= max_size; ++s)
        h[s] = by_size[s].size() - ranks[s] - ranks[s + 1];
    return h;
}

}  // namespace facering

#endif

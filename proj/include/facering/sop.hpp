#ifndef FACERING_SOP_HPP
#define FACERING_SOP_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "rng.hpp"
#include "simplicial_complex.hpp"

namespace facering {

inline constexpr std::size_t kDefaultSopBudget = 64;
inline constexpr std::size_t kDefaultRowCap = 12;

/// Coefficient matrix of a set of linear forms on the variables of a
/// complex: row i holds the coefficients of the i-th form, columns
/// follow the complex's ambient vertex order. Carries its modulus even
/// when empty.
class SopMatrix {
  public:
    SopMatrix(SimplicialComplex complex, std::size_t rows, std::vector<Fp> entries,
              std::int64_t modulus)
        : complex_(std::move(complex)), rows_(rows), entries_(std::move(entries)), p_(modulus)
    {
        if (entries_.size() != rows_ * cols())
            throw std::invalid_argument("entry count does not match the matrix shape");
        for (const auto& e : entries_)
            if (e.modulus() != p_) throw std::invalid_argument("mixed moduli in SOP matrix");
    }

    const SimplicialComplex& complex() const { return complex_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return complex_.ambient().size(); }
    std::int64_t modulus() const { return p_; }

    const Fp& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

    const std::vector<Fp>& entries() const { return entries_; }

    /// Square submatrix picked by row and column index lists.
    Matrix<Fp> submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<int>& col_idx) const
    {
        Matrix<Fp> m(row_idx.size(), std::vector<Fp>(col_idx.size(), Fp(0, p_)));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                m[i][j] = at(row_idx[i], static_cast<std::size_t>(col_idx[j]));
        return m;
    }

  private:
    SimplicialComplex complex_;
    std::size_t rows_;
    std::vector<Fp> entries_;
    std::int64_t p_;
};

namespace detail {

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& fn)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Stanley's criterion for a pure complex: the forms are a system of
/// parameters for the face ring exactly when every facet-indexed
/// maximal minor is nonsingular. The matrix must have dim+1 rows.
inline bool stanley_check(const SopMatrix& m)
{
    const auto& c = m.complex();
    if (c.is_void()) throw facering::error("stanley_check: void complex");
    if (!c.is_pure()) throw facering::error("stanley_check: complex is not pure");
    std::size_t d = static_cast<std::size_t>(c.dimension()) + 1;
    if (m.rows() != d)
        throw facering::error("stanley_check: expected " + std::to_string(d) +
                              " rows, got " + std::to_string(m.rows()));
    std::vector<std::size_t> all_rows(d);
    for (std::size_t i = 0; i < d; ++i) all_rows[i] = i;
    Fp sample(0, m.modulus());
    for (const auto& facet : c.facet_positions()) {
        if (is_zero(determinant(m.submatrix(all_rows, facet), sample))) return false;
    }
    return true;
}

/// Goodness: for every face of size b, every b-subset of rows gives a
/// nonzero b x b minor on the face's columns. Faces larger than the row
/// count fail outright. Row-subset enumeration is exponential and
/// refused beyond row_cap rows.
inline bool is_good(const SopMatrix& m, std::size_t row_cap = kDefaultRowCap)
{
    if (m.rows() > row_cap)
        throw cap_exceeded("is_good: " + std::to_string(m.rows()) +
                           " rows exceed the row-subset cap of " + std::to_string(row_cap));
    const auto& c = m.complex();
    Fp sample(0, m.modulus());
    for (std::uint64_t mask : c.face_masks()) {
        std::size_t b = static_cast<std::size_t>(std::popcount(mask));
        if (b == 0) continue;
        if (b > m.rows()) return false;
        std::vector<int> cols;
        for (std::size_t j = 0; j < c.ambient().size(); ++j)
            if (mask & (std::uint64_t{1} << j)) cols.push_back(static_cast<int>(j));
        bool ok = true;
        detail::for_each_subset(m.rows(), b, [&](const std::vector<std::size_t>& rows) {
            if (!ok) return;
            if (is_zero(determinant(m.submatrix(rows, cols), sample))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

namespace detail {

inline SopMatrix sample_good_sop(const SimplicialComplex& c, std::int64_t p, Rng& rng,
                                 std::size_t budget, std::size_t row_cap)
{
    if (c.is_void()) throw facering::error("find_good_sop: void complex");
    if (!c.is_pure()) throw facering::error("find_good_sop: complex is not pure");
    std::size_t d = static_cast<std::size_t>(c.dimension()) + 1;
    std::size_t n = c.ambient().size();
    for (std::size_t trial = 0; trial < budget; ++trial) {
        std::vector<Fp> entries;
        entries.reserve(d * n);
        for (std::size_t i = 0; i < d * n; ++i) entries.push_back(rng.field_element(p));
        SopMatrix m(c, d, std::move(entries), p);
        if (is_good(m, row_cap)) return m;
    }
    throw budget_exhausted("find_good_sop: no good matrix after " + std::to_string(budget) +
                           " samples; a larger field may be needed");
}

inline SopMatrix sample_extension(const SopMatrix& base, const SimplicialComplex& big,
                                  Rng& rng, std::size_t budget, std::size_t row_cap)
{
    const auto& small = base.complex();
    std::int64_t p = base.modulus();
    if (big.is_void()) throw facering::error("extend_good_sop: void complex");

    const auto& va = small.ambient();
    const auto& vb = big.ambient();
    if (va.size() > vb.size() || !std::equal(va.begin(), va.end(), vb.begin()))
        throw std::invalid_argument("extend_good_sop: ambient order of the big complex must "
                                    "extend the small one's as a prefix");
    if (!is_full_subcomplex(small, big))
        throw facering::error("extend_good_sop: the small complex is not a full subcomplex");
    if (!is_good(base, row_cap))
        throw std::invalid_argument("extend_good_sop: the base matrix is not good");

    std::size_t d = base.rows(), n = va.size();
    std::size_t e = static_cast<std::size_t>(big.dimension()) + 1;
    std::size_t np = vb.size();
    if (e < d) throw std::logic_error("dimension dropped along a subcomplex inclusion");

    for (std::size_t trial = 0; trial < budget; ++trial) {
        std::vector<Fp> entries;
        entries.reserve(e * np);
        for (std::size_t i = 0; i < e; ++i) {
            for (std::size_t j = 0; j < np; ++j) {
                // The top-left block is copied, everything else drawn
                // fresh each trial.
                if (i < d && j < n)
                    entries.push_back(base.at(i, j));
                else
                    entries.push_back(rng.field_element(p));
            }
        }
        SopMatrix m(big, e, std::move(entries), p);
        if (is_good(m, row_cap)) return m;
    }
    throw budget_exhausted("extend_good_sop: no good extension after " +
                           std::to_string(budget) +
                           " samples; a larger field may be needed");
}

}  // namespace detail

/// Random good matrix for a pure complex; deterministic in the seed.
inline SopMatrix find_good_sop(const SimplicialComplex& c, std::int64_t p, std::uint64_t seed,
                               std::size_t budget = kDefaultSopBudget,
                               std::size_t row_cap = kDefaultRowCap)
{
    Rng rng(seed);
    return detail::sample_good_sop(c, p, rng, budget, row_cap);
}

/// Extends a good matrix on a full subcomplex to a good matrix on the
/// bigger complex whose top-left block is the input, entry for entry.
inline SopMatrix extend_good_sop(const SopMatrix& base, const SimplicialComplex& big,
                                 std::uint64_t seed, std::size_t budget = kDefaultSopBudget,
                                 std::size_t row_cap = kDefaultRowCap)
{
    Rng rng(seed);
    return detail::sample_extension(base, big, rng, budget, row_cap);
}

/// Good matrices for an increasing chain of pure full subcomplexes,
/// each extending the previous one's block. Failures carry the
/// offending chain level (1-based).
inline std::vector<SopMatrix> compatible_chain(const std::vector<SimplicialComplex>& chain,
                                               std::int64_t p, std::uint64_t seed,
                                               std::size_t budget = kDefaultSopBudget,
                                               std::size_t row_cap = kDefaultRowCap)
{
    std::vector<SopMatrix> out;
    if (chain.empty()) return out;
    Rng rng(seed);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        try {
            if (i == 0)
                out.push_back(detail::sample_good_sop(chain[0], p, rng, budget, row_cap));
            else
                out.push_back(detail::sample_extension(out.back(), chain[i], rng, budget,
                                                       row_cap));
        } catch (const std::exception& e) {
            throw facering::error("chain level " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace facering

#endif

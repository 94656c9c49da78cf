#ifndef FACERING_VARINDEX_HPP
#define FACERING_VARINDEX_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace facering {

/// Which family of variables an index (or a monomial built from indices)
/// belongs to. Grid indices x[i,j] and line indices x[n] never mix inside
/// one monomial, polynomial, or ideal.
enum class VarFamily { none, grid, line };

/// Index of a single polynomial variable: either x[i,j] with i,j >= 1
/// (a grid variable) or x[n] with n >= 1 (a line variable).
///
/// The canonical order sorts grid indices by (row, col) and line indices
/// by position; it is the serialization order, not a term order.
class VarIndex {
  public:
    static VarIndex grid(std::int32_t row, std::int32_t col)
    {
        if (row < 1 || col < 1)
            throw std::invalid_argument("grid variable indices must be >= 1");
        return VarIndex(row, col);
    }

    static VarIndex line(std::int32_t n)
    {
        if (n < 1)
            throw std::invalid_argument("line variable index must be >= 1");
        return VarIndex(0, n);
    }

    VarFamily family() const { return row_ == 0 ? VarFamily::line : VarFamily::grid; }
    bool is_grid() const { return row_ != 0; }

    std::int32_t row() const
    {
        require_grid();
        return row_;
    }
    std::int32_t col() const
    {
        require_grid();
        return col_;
    }
    std::int32_t line_pos() const
    {
        if (is_grid()) throw std::logic_error("not a line variable");
        return col_;
    }

    // Line indices sort as (0, n), grid as (row, col); valid data never
    // compares across families through this order.
    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;

    std::string to_string() const
    {
        if (is_grid())
            return "x[" + std::to_string(row_) + "," + std::to_string(col_) + "]";
        return "x[" + std::to_string(col_) + "]";
    }

  private:
    VarIndex(std::int32_t r, std::int32_t c) : row_(r), col_(c) {}
    void require_grid() const
    {
        if (!is_grid()) throw std::logic_error("not a grid variable");
    }

    std::int32_t row_;  // 0 marks a line variable
    std::int32_t col_;
};

inline void require_compatible(VarFamily a, VarFamily b)
{
    if (a != VarFamily::none && b != VarFamily::none && a != b)
        throw std::invalid_argument("mixed variable families (grid vs line)");
}

}  // namespace facering

template <>
struct std::hash<facering::VarIndex> {
    std::size_t operator()(const facering::VarIndex& v) const noexcept
    {
        std::uint64_t key = v.is_grid()
            ? (static_cast<std::uint64_t>(v.row()) << 32) | static_cast<std::uint32_t>(v.col())
            : static_cast<std::uint64_t>(v.line_pos());
        key ^= key >> 33;
        key *= 0xff51afd7ed558ccdULL;
        key ^= key >> 33;
        return static_cast<std::size_t>(key);
    }
};

#endif

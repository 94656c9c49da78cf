#ifndef FACERING_TERM_ORDER_HPP
#define FACERING_TERM_ORDER_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "varindex.hpp"

namespace facering {

enum class Ordering { less, equal, greater };

inline std::string to_string(Ordering o)
{
    switch (o) {
        case Ordering::less: return "Less";
        case Ordering::equal: return "Equal";
        case Ordering::greater: return "Greater";
    }
    return "?";
}

/// A term order on monomials. Three kinds:
///
///  - infinite_lex: line variables ordered x[1] < x[2] < ...;
///  - antidiagonal: grid variables ordered along the diagonals
///    D_m = { x[i,j] : j - i = m } with D_0 < D_1 < D_{-1} < D_2 < D_{-2}
///    < ..., and x[i,j] < x[i+1,j+1] inside each diagonal (an order of
///    ordinal type omega^2);
///  - restriction: the same comparison confined to a finite variable
///    subset, rejecting monomials outside it.
///
/// Monomials are compared lexicographically at the largest variable
/// (in the variable order) whose exponents differ; the monomial with
/// the smaller exponent there is the smaller one. This satisfies
/// 1 <= m for all m and is multiplicative.
class TermOrder {
  public:
    enum class Kind { infinite_lex, antidiagonal, restriction };

    static TermOrder infinite_lex() { return TermOrder(Kind::infinite_lex); }
    static TermOrder antidiagonal() { return TermOrder(Kind::antidiagonal); }

    /// The parent order confined to vars; comparisons agree with the
    /// parent on monomials supported in vars.
    static TermOrder restriction(const TermOrder& parent, std::vector<VarIndex> vars)
    {
        TermOrder r(Kind::restriction);
        r.parent_ = std::make_shared<TermOrder>(parent);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        for (auto v : vars) {
            if (!parent.admits_var(v))
                throw std::invalid_argument("restriction variable outside parent scope");
        }
        r.vars_ = std::move(vars);
        return r;
    }

    Kind kind() const { return kind_; }

    /// Variable family of the root order (grid for antidiagonal, line
    /// for infinite lex).
    VarFamily family() const
    {
        return root().kind_ == Kind::antidiagonal ? VarFamily::grid : VarFamily::line;
    }

    const TermOrder& parent() const
    {
        if (kind_ != Kind::restriction) throw std::logic_error("order has no parent");
        return *parent_;
    }

    const std::vector<VarIndex>& restricted_variables() const
    {
        if (kind_ != Kind::restriction) throw std::logic_error("order is not a restriction");
        return vars_;
    }

    bool admits_var(VarIndex v) const
    {
        if (kind_ == Kind::restriction)
            return std::binary_search(vars_.begin(), vars_.end(), v) && parent_->admits_var(v);
        return v.family() == family();
    }

    bool admits(const Monomial& m) const
    {
        const auto& es = m.entries();
        return std::all_of(es.begin(), es.end(),
                           [&](const Monomial::Entry& en) { return admits_var(en.first); });
    }

    /// Position of a variable in the variable order; keys compare
    /// lexicographically and are injective within one family.
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    Key var_key(VarIndex v) const
    {
        if (!admits_var(v))
            throw std::invalid_argument("variable outside the order's scope: " + v.to_string());
        if (family() == VarFamily::line)
            return {static_cast<std::uint64_t>(v.line_pos()), 0};
        std::int64_t m = static_cast<std::int64_t>(v.col()) - v.row();
        std::uint64_t diag = m == 0 ? 0
                           : m > 0 ? static_cast<std::uint64_t>(2 * m - 1)
                                   : static_cast<std::uint64_t>(-2 * m);
        return {diag, static_cast<std::uint64_t>(v.row())};
    }

    bool var_less(VarIndex a, VarIndex b) const { return var_key(a) < var_key(b); }

    Ordering compare(const Monomial& a, const Monomial& b) const
    {
        require_admits(a);
        require_admits(b);
        struct Slot {
            Key key;
            Monomial::Exp ea, eb;
        };
        std::vector<Slot> slots;
        slots.reserve(a.entries().size() + b.entries().size());
        auto ia = a.entries().begin(), ib = b.entries().begin();
        const auto ae = a.entries().end(), be = b.entries().end();
        while (ia != ae && ib != be) {
            if (ia->first < ib->first) {
                slots.push_back({var_key(ia->first), ia->second, 0});
                ++ia;
            } else if (ib->first < ia->first) {
                slots.push_back({var_key(ib->first), 0, ib->second});
                ++ib;
            } else {
                slots.push_back({var_key(ia->first), ia->second, ib->second});
                ++ia, ++ib;
            }
        }
        for (; ia != ae; ++ia) slots.push_back({var_key(ia->first), ia->second, 0});
        for (; ib != be; ++ib) slots.push_back({var_key(ib->first), 0, ib->second});
        std::sort(slots.begin(), slots.end(),
                  [](const Slot& x, const Slot& y) { return x.key > y.key; });
        for (const auto& s : slots) {
            if (s.ea != s.eb) return s.ea < s.eb ? Ordering::less : Ordering::greater;
        }
        return Ordering::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const
    {
        return compare(a, b) == Ordering::less;
    }

  private:
    explicit TermOrder(Kind k) : kind_(k) {}

    const TermOrder& root() const
    {
        const TermOrder* t = this;
        while (t->kind_ == Kind::restriction) t = t->parent_.get();
        return *t;
    }

    void require_admits(const Monomial& m) const
    {
        if (!admits(m))
            throw std::invalid_argument("monomial outside the order's variable scope: " +
                                        m.to_string());
    }

    Kind kind_;
    std::shared_ptr<TermOrder> parent_;
    std::vector<VarIndex> vars_;
};

/// All grid variables of the top-left rows x cols block, canonically
/// sorted. The usual scope for restricted antidiagonal orders.
inline std::vector<VarIndex> grid_block_variables(int rows, int cols)
{
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative block size");
    std::vector<VarIndex> vs;
    vs.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) vs.push_back(VarIndex::grid(i, j));
    return vs;
}

/// Line variables x[1] .. x[n].
inline std::vector<VarIndex> line_variables(int n)
{
    if (n < 0) throw std::invalid_argument("negative variable count");
    std::vector<VarIndex> vs;
    vs.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) vs.push_back(VarIndex::line(i));
    return vs;
}

}  // namespace facering

#endif

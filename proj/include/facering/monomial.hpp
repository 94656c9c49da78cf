#ifndef FACERING_MONOMIAL_HPP
#define FACERING_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "varindex.hpp"

namespace facering {

/// A monomial in countably many variables: a finite map from variable
/// indices to positive exponents, stored sorted by canonical variable
/// order. The empty map is the monomial 1.
///
/// All variables of one monomial come from a single family (grid or
/// line); mixing families throws std::invalid_argument. Exponent
/// arithmetic is checked and throws std::overflow_error instead of
/// wrapping.
class Monomial {
  public:
    using Exp = std::uint64_t;
    using Entry = std::pair<VarIndex, Exp>;

    Monomial() = default;

    /// Builds a monomial from (variable, exponent) pairs. Zero exponents
    /// are dropped; repeated variables have their exponents added.
    explicit Monomial(std::vector<Entry> entries)
    {
        for (auto& [v, e] : entries) {
            if (e == 0) continue;
            push(v, e);
        }
        normalize();
    }

    Monomial(std::initializer_list<Entry> entries)
        : Monomial(std::vector<Entry>(entries))
    {
    }

    static Monomial one() { return Monomial(); }

    static Monomial variable(VarIndex v) { return Monomial({{v, 1}}); }

    /// Product of distinct variables, one per entry of vars.
    static Monomial squarefree(const std::vector<VarIndex>& vars)
    {
        std::vector<Entry> es;
        es.reserve(vars.size());
        for (auto v : vars) es.emplace_back(v, 1);
        return Monomial(std::move(es));
    }

    bool is_one() const { return entries_.empty(); }

    VarFamily family() const
    {
        return entries_.empty() ? VarFamily::none : entries_.front().first.family();
    }

    const std::vector<Entry>& entries() const { return entries_; }

    Exp degree(VarIndex v) const
    {
        auto it = find(v);
        return it == entries_.end() ? 0 : it->second;
    }

    Exp total_degree() const
    {
        Exp t = 0;
        for (const auto& [v, e] : entries_) t = checked_add(t, e);
        return t;
    }

    bool is_squarefree() const
    {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Entry& en) { return en.second == 1; });
    }

    std::vector<VarIndex> support() const
    {
        std::vector<VarIndex> s;
        s.reserve(entries_.size());
        for (const auto& [v, e] : entries_) s.push_back(v);
        return s;
    }

    /// Product of the support variables, each to the first power.
    Monomial radical() const
    {
        Monomial r;
        r.entries_ = entries_;
        for (auto& [v, e] : r.entries_) e = 1;
        return r;
    }

    /// True when this monomial divides m (entrywise exponent comparison).
    bool divides(const Monomial& m) const
    {
        auto it = m.entries_.begin();
        for (const auto& [v, e] : entries_) {
            while (it != m.entries_.end() && it->first < v) ++it;
            if (it == m.entries_.end() || it->first != v || it->second < e) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        require_compatible(a.family(), b.family());
        Monomial r;
        r.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() && ib != b.entries_.end()) {
            if (ia->first < ib->first)
                r.entries_.push_back(*ia++);
            else if (ib->first < ia->first)
                r.entries_.push_back(*ib++);
            else {
                r.entries_.emplace_back(ia->first, checked_add(ia->second, ib->second));
                ++ia, ++ib;
            }
        }
        r.entries_.insert(r.entries_.end(), ia, a.entries_.end());
        r.entries_.insert(r.entries_.end(), ib, b.entries_.end());
        return r;
    }

    /// Exact quotient this / d, or nullopt when d does not divide this.
    std::optional<Monomial> try_divide(const Monomial& d) const
    {
        if (!d.divides(*this)) return std::nullopt;
        Monomial r;
        auto id = d.entries_.begin();
        for (const auto& [v, e] : entries_) {
            Exp sub = 0;
            if (id != d.entries_.end() && id->first == v) sub = (id++)->second;
            if (e > sub) r.entries_.emplace_back(v, e - sub);
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        require_compatible(a.family(), b.family());
        Monomial r;
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() && ib != b.entries_.end()) {
            if (ia->first < ib->first)
                r.entries_.push_back(*ia++);
            else if (ib->first < ia->first)
                r.entries_.push_back(*ib++);
            else {
                r.entries_.emplace_back(ia->first, std::max(ia->second, ib->second));
                ++ia, ++ib;
            }
        }
        r.entries_.insert(r.entries_.end(), ia, a.entries_.end());
        r.entries_.insert(r.entries_.end(), ib, b.entries_.end());
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b)
    {
        require_compatible(a.family(), b.family());
        Monomial r;
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() && ib != b.entries_.end()) {
            if (ia->first < ib->first)
                ++ia;
            else if (ib->first < ia->first)
                ++ib;
            else {
                r.entries_.emplace_back(ia->first, std::min(ia->second, ib->second));
                ++ia, ++ib;
            }
        }
        return r;
    }

    // Canonical (variable-then-exponent lexicographic) order; used for
    // dedup and stable serialization, not as a term order.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const
    {
        if (entries_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : entries_) {
            if (!s.empty()) s += "*";
            s += v.to_string();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

  private:
    static Exp checked_add(Exp a, Exp b)
    {
        if (a > std::numeric_limits<Exp>::max() - b)
            throw std::overflow_error("monomial exponent overflow");
        return a + b;
    }

    std::vector<Entry>::const_iterator find(VarIndex v) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& en, VarIndex w) { return en.first < w; });
        return (it != entries_.end() && it->first == v) ? it : entries_.end();
    }

    void push(VarIndex v, Exp e)
    {
        require_compatible(family(), v.family());
        entries_.emplace_back(v, e);
    }

    void normalize()
    {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> merged;
        for (const auto& [v, e] : entries_) {
            if (!merged.empty() && merged.back().first == v)
                merged.back().second = checked_add(merged.back().second, e);
            else
                merged.emplace_back(v, e);
        }
        entries_ = std::move(merged);
    }

    std::vector<Entry> entries_;
};

/// Drops every generator strictly divisible by another one and removes
/// duplicates. The result is the unique minimal generating set of the
/// monomial ideal the input generates. Generators equal to 1 collapse
/// the whole list to {1}.
inline std::vector<Monomial> minimal_generators(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); }))
        return {Monomial::one()};
    // Scanning in increasing total degree guarantees a divisor is seen
    // before anything it divides.
    std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.total_degree() < b.total_degree();
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = std::any_of(out.begin(), out.end(),
                                     [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A monomial ideal presented by generators. The presented list is kept
/// as given (minus exact duplicates); the minimal generating set is
/// computed on first use and cached.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;

    explicit MonomialIdeal(std::vector<Monomial> gens)
    {
        VarFamily fam = VarFamily::none;
        for (const auto& g : gens) {
            require_compatible(fam, g.family());
            if (g.family() != VarFamily::none) fam = g.family();
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        generators_ = std::move(gens);
    }

    const std::vector<Monomial>& generators() const { return generators_; }

    const std::vector<Monomial>& minimal() const
    {
        if (!minimal_) minimal_ = minimal_generators(generators_);
        return *minimal_;
    }

    bool is_zero_ideal() const { return generators_.empty(); }

    bool is_unit_ideal() const
    {
        const auto& m = minimal();
        return m.size() == 1 && m.front().is_one();
    }

    /// Membership test for a monomial: some generator divides it.
    bool contains(const Monomial& m) const
    {
        const auto& g = minimal();
        return std::any_of(g.begin(), g.end(),
                           [&](const Monomial& h) { return h.divides(m); });
    }

    /// Ideal containment: every generator of other lies in this ideal.
    bool contains(const MonomialIdeal& other) const
    {
        const auto& g = other.minimal();
        return std::all_of(g.begin(), g.end(),
                           [&](const Monomial& m) { return contains(m); });
    }

    bool same_ideal(const MonomialIdeal& other) const
    {
        return minimal() == other.minimal();
    }

    /// True when every minimal generator is squarefree. The presented
    /// generators may carry higher powers as long as the minimal set
    /// does not.
    bool is_squarefree() const
    {
        const auto& g = minimal();
        return std::all_of(g.begin(), g.end(),
                           [](const Monomial& m) { return m.is_squarefree(); });
    }

    VarFamily family() const
    {
        for (const auto& g : generators_)
            if (g.family() != VarFamily::none) return g.family();
        return VarFamily::none;
    }

    /// Union of the supports of the presented generators, canonically
    /// sorted.
    std::vector<VarIndex> variables() const
    {
        std::vector<VarIndex> vs;
        for (const auto& g : generators_)
            for (const auto& [v, e] : g.entries()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

  private:
    std::vector<Monomial> generators_;
    mutable std::optional<std::vector<Monomial>> minimal_;
};

}  // namespace facering

#endif

#ifndef FACERING_POLYNOMIAL_HPP
#define FACERING_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "term_order.hpp"
#include "varindex.hpp"

namespace facering {

/// Exact multivariate polynomial over the field K. Terms are stored
/// sorted by canonical monomial order with nonzero coefficients only;
/// all monomials come from one variable family. K is Fp or Rational,
/// reached through the field adapter functions.
template <class K>
class Polynomial {
  public:
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;

    /// Collects terms, merging duplicates and dropping zeros.
    explicit Polynomial(std::vector<Term> terms)
    {
        std::map<Monomial, K> acc;
        for (auto& [m, c] : terms) {
            if (is_zero(c)) continue;
            auto [it, fresh] = acc.emplace(m, c);
            if (!fresh) it->second = it->second + c;
        }
        VarFamily fam = VarFamily::none;
        for (auto& [m, c] : acc) {
            if (is_zero(c)) continue;
            require_compatible(fam, m.family());
            if (m.family() != VarFamily::none) fam = m.family();
            terms_.emplace_back(m, c);
        }
    }

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(const K& c) { return Polynomial({{Monomial::one(), c}}); }

    static Polynomial term(const Monomial& m, const K& c) { return Polynomial({{m, c}}); }

    static Polynomial variable(VarIndex v, const K& sample)
    {
        return term(Monomial::variable(v), one_like(sample));
    }

    bool is_zero_poly() const { return terms_.empty(); }

    const std::vector<Term>& terms() const { return terms_; }

    std::size_t term_count() const { return terms_.size(); }

    VarFamily family() const
    {
        return terms_.empty() ? VarFamily::none : terms_.front().first.family();
    }

    K coefficient(const Monomial& m, const K& sample) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& q) { return t.first < q; });
        if (it != terms_.end() && it->first == m) return it->second;
        return zero_like(sample);
    }

    std::vector<VarIndex> support_variables() const
    {
        std::vector<VarIndex> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first)
                r.terms_.push_back(*ia++);
            else if (ib->first < ia->first)
                r.terms_.push_back(*ib++);
            else {
                K c = ia->second + ib->second;
                if (!is_zero(c)) r.terms_.emplace_back(ia->first, c);
                ++ia, ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        if (!a.terms_.empty() && !b.terms_.empty())
            require_compatible(a.family(), b.family());
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    /// Multiplication by a single term, the workhorse of division.
    Polynomial times_term(const Monomial& m, const K& c) const
    {
        Polynomial r;
        if (is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [u, a] : terms_) {
            K prod = a * c;
            if (!is_zero(prod)) r.terms_.emplace_back(u * m, prod);
        }
        // Multiplication by m is injective on monomials but does not
        // preserve the canonical sort, so re-sort; no merging needed.
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        for (const auto& [m, c] : b.terms_) r = r + a.times_term(m, c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.terms_ == b.terms_;
    }

    /// Value at a point; point maps each support variable to a field
    /// element (missing variables default to zero).
    K evaluate(const std::vector<std::pair<VarIndex, K>>& point, const K& sample) const
    {
        K total = zero_like(sample);
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (const auto& [var, e] : m.entries()) {
                K x = zero_like(sample);
                for (const auto& [w, val] : point)
                    if (w == var) {
                        x = val;
                        break;
                    }
                for (Monomial::Exp k = 0; k < e; ++k) v = v * x;
            }
            total = total + v;
        }
        return total;
    }

    /// Ring map killing every variable outside keep (sends it to zero):
    /// drops all terms whose support leaves keep. keep must be sorted.
    Polynomial project_onto(const std::vector<VarIndex>& keep) const
    {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            const auto& es = m.entries();
            bool inside = std::all_of(es.begin(), es.end(), [&](const Monomial::Entry& en) {
                return std::binary_search(keep.begin(), keep.end(), en.first);
            });
            if (inside) r.terms_.emplace_back(m, c);
        }
        return r;
    }

    /// Terms printed largest-first in canonical monomial order, with
    /// symmetric representatives over F_p.
    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = scalar_to_string(c);
            bool neg = !cs.empty() && cs.front() == '-';
            if (neg) cs.erase(cs.begin());
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (m.is_one())
                s += cs;
            else if (cs == "1")
                s += m.to_string();
            else
                s += cs + "*" + m.to_string();
        }
        return s;
    }

  private:
    std::vector<Term> terms_;
};

/// Leading (coefficient, monomial) pair under ord; throws on the zero
/// polynomial.
template <class K>
std::pair<K, Monomial> leading_term(const Polynomial<K>& f, const TermOrder& ord)
{
    if (f.is_zero_poly()) throw std::invalid_argument("leading term of the zero polynomial");
    const auto* best = &f.terms().front();
    for (const auto& t : f.terms()) {
        if (ord.compare(best->first, t.first) == Ordering::less) best = &t;
    }
    return {best->second, best->first};
}

template <class K>
Monomial leading_monomial(const Polynomial<K>& f, const TermOrder& ord)
{
    return leading_term(f, ord).second;
}

}  // namespace facering

#endif

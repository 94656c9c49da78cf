#ifndef FACERING_GROBNER_HPP
#define FACERING_GROBNER_HPP

#include <cassert>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "term_order.hpp"

namespace facering {

template <class K>
struct DivisionResult {
    std::vector<Polynomial<K>> quotients;  // one per divisor, same order
    Polynomial<K> remainder;
};

/// Division with remainder: f = sum quotients[i] * G[i] + remainder,
/// no monomial of the remainder divisible by any leading monomial of G.
///
/// Deterministic: the largest remaining monomial of the dividend is
/// processed first and the first divisor in list order wins. The
/// defining identity and both postconditions are asserted on every
/// call.
template <class K>
DivisionResult<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                         const TermOrder& ord)
{
    for (const auto& g : G)
        if (g.is_zero_poly()) throw std::invalid_argument("zero divisor in division");

    std::vector<std::pair<K, Monomial>> lead;
    lead.reserve(G.size());
    for (const auto& g : G) lead.push_back(leading_term(g, ord));

    DivisionResult<K> res;
    res.quotients.assign(G.size(), Polynomial<K>::zero());
    Polynomial<K> p = f;

    while (!p.is_zero_poly()) {
        auto [c, u] = leading_term(p, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            auto q = u.try_divide(lead[i].second);
            if (!q) continue;
            K factor = c * inv(lead[i].first);
            auto step = Polynomial<K>::term(*q, factor);
            res.quotients[i] = res.quotients[i] + step;
            p = p - G[i].times_term(*q, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            auto tail = Polynomial<K>::term(u, c);
            res.remainder = res.remainder + tail;
            p = p - tail;
        }
    }

#ifndef FACERING_SKIP_DIVISION_CHECKS
    {
        Polynomial<K> recombined = res.remainder;
        for (std::size_t i = 0; i < G.size(); ++i) recombined = recombined + res.quotients[i] * G[i];
        assert(recombined == f && "division identity violated");
        for (const auto& [m, c2] : res.remainder.terms()) {
            (void)c2;
            for (const auto& ld : lead)
                assert(!ld.second.divides(m) && "remainder monomial divisible by a leading monomial");
        }
        if (!f.is_zero_poly()) {
            Monomial ltf = leading_monomial(f, ord);
            for (std::size_t i = 0; i < G.size(); ++i) {
                if (res.quotients[i].is_zero_poly()) continue;
                Monomial top = leading_monomial(res.quotients[i] * G[i], ord);
                assert(ord.compare(top, ltf) != Ordering::greater &&
                       "quotient term exceeds the dividend's leading term");
            }
        }
    }
#endif
    return res;
}

/// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm(lm f, lm g).
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const TermOrder& ord)
{
    if (f.is_zero_poly() || g.is_zero_poly())
        throw std::invalid_argument("s-polynomial of a zero polynomial");
    auto [cf, mf] = leading_term(f, ord);
    auto [cg, mg] = leading_term(g, ord);
    Monomial L = lcm(mf, mg);
    auto uf = L.try_divide(mf), ug = L.try_divide(mg);
    return f.times_term(*uf, inv(cf)) - g.times_term(*ug, inv(cg));
}

/// Buchberger's criterion: every S-polynomial of a pair from G leaves
/// remainder zero on division by G. The plain all-pairs path is the
/// reference; skip_coprime_pairs enables the standard shortcut of
/// ignoring pairs whose leading monomials are coprime.
template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& G, const TermOrder& ord,
                       bool skip_coprime_pairs = false)
{
    for (const auto& g : G)
        if (g.is_zero_poly()) throw std::invalid_argument("zero polynomial in basis");
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (skip_coprime_pairs) {
                Monomial a = leading_monomial(G[i], ord), b = leading_monomial(G[j], ord);
                if (gcd(a, b).is_one()) continue;
            }
            auto s = s_polynomial(G[i], G[j], ord);
            if (s.is_zero_poly()) continue;
            if (!divide(s, G, ord).remainder.is_zero_poly()) return false;
        }
    }
    return true;
}

/// The ideal of leading monomials of G, minimalized. With check set,
/// refuses bases failing Buchberger's criterion, so the result is
/// guaranteed to be the full initial ideal of the ideal G generates.
template <class K>
MonomialIdeal initial_ideal(const std::vector<Polynomial<K>>& G, const TermOrder& ord,
                            bool check = true)
{
    if (check && !is_groebner_basis(G, ord))
        throw not_a_groebner_basis("initial_ideal: input is not a Groebner basis");
    std::vector<Monomial> lms;
    lms.reserve(G.size());
    for (const auto& g : G) lms.push_back(leading_monomial(g, ord));
    return MonomialIdeal(minimal_generators(std::move(lms)));
}

/// Buchberger completion: reduces S-polynomials and adjoins nonzero
/// remainders until closure. An oracle utility; the processed-pair
/// count is capped by pair_budget.
template <class K>
std::vector<Polynomial<K>> buchberger_completion(std::vector<Polynomial<K>> G,
                                                 const TermOrder& ord,
                                                 std::size_t pair_budget = 4096)
{
    std::erase_if(G, [](const Polynomial<K>& g) { return g.is_zero_poly(); });
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > pair_budget)
            throw budget_exhausted("buchberger completion exceeded pair budget of " +
                                   std::to_string(pair_budget));
        auto [i, j] = pairs.front();
        pairs.pop_front();
        auto s = s_polynomial(G[i], G[j], ord);
        if (s.is_zero_poly()) continue;
        auto r = divide(s, G, ord).remainder;
        if (r.is_zero_poly()) continue;
        G.push_back(r);
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
    return G;
}

/// Outcome of sampling-based checks on restricted orders; a passing
/// report has no counterexamples.
struct CompatibilityReport {
    std::size_t checked = 0;
    std::size_t skipped = 0;  // cases vacuous because the big leading term leaves the subset
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

/// Checks that a restricted order interacts with inclusion and
/// projection as expected, on the given sample polynomials:
///
///  - for f supported in the subset, the leading term does not change
///    when f is viewed in the big ring;
///  - for g whose big leading term is supported in the subset, killing
///    the outside variables commutes with taking leading terms.
///
/// Variables are globally indexed, so inclusion is the identity on
/// representations.
template <class K>
CompatibilityReport check_order_compatibility(const TermOrder& ord_small,
                                              const TermOrder& ord_big,
                                              const std::vector<VarIndex>& vars_small,
                                              const std::vector<Polynomial<K>>& small_samples,
                                              const std::vector<Polynomial<K>>& big_samples)
{
    std::vector<VarIndex> keep = vars_small;
    std::sort(keep.begin(), keep.end());
    CompatibilityReport rep;

    for (const auto& f : small_samples) {
        if (f.is_zero_poly()) continue;
        auto lt_small = leading_term(f, ord_small);
        auto lt_big = leading_term(f, ord_big);
        ++rep.checked;
        if (!(lt_small == lt_big))
            rep.counterexamples.push_back("inclusion changes leading term of " + f.to_string());
    }

    for (const auto& g : big_samples) {
        if (g.is_zero_poly()) continue;
        auto [c, m] = leading_term(g, ord_big);
        const auto& es = m.entries();
        bool lm_inside = std::all_of(es.begin(), es.end(), [&](const Monomial::Entry& en) {
            return std::binary_search(keep.begin(), keep.end(), en.first);
        });
        if (!lm_inside) {
            ++rep.skipped;
            continue;
        }
        // The projection keeps the big leading term, so it must also be
        // the leading term of the projected polynomial.
        auto pg = g.project_onto(keep);
        auto lt_pg = leading_term(pg, ord_small);
        ++rep.checked;
        if (!(lt_pg.first == c) || !(lt_pg.second == m))
            rep.counterexamples.push_back("projection changes leading term of " + g.to_string());
    }
    return rep;
}

/// Both sides of the union-of-initials identity at one truncation,
/// as minimal generating sets.
struct InitialUnionReport {
    std::vector<Monomial> union_then_initial;   // in(ideal generated by all levels)
    std::vector<Monomial> initials_then_union;  // ideal generated by per-level initials
    bool pass = false;
};

/// Verifies, at the top truncation, that the initial ideal of the union
/// of an ideal chain equals the union of the levelwise initial ideals.
/// Each level must come with a Groebner basis for its own restricted
/// order; levels failing Buchberger are rejected.
template <class K>
InitialUnionReport check_initial_union(const std::vector<std::vector<Polynomial<K>>>& level_bases,
                                       const std::vector<TermOrder>& level_orders,
                                       const TermOrder& big_order,
                                       std::size_t pair_budget = 65536)
{
    if (level_bases.size() != level_orders.size())
        throw std::invalid_argument("one order per level required");

    std::vector<Monomial> rhs;
    std::vector<Polynomial<K>> pooled;
    for (std::size_t n = 0; n < level_bases.size(); ++n) {
        const auto& Gn = level_bases[n];
        if (Gn.empty()) continue;
        if (!is_groebner_basis(Gn, level_orders[n]))
            throw not_a_groebner_basis("level " + std::to_string(n + 1) +
                                       " basis fails Buchberger's criterion");
        for (const auto& g : Gn) {
            rhs.push_back(leading_monomial(g, level_orders[n]));
            pooled.push_back(g);
        }
    }

    InitialUnionReport rep;
    rep.initials_then_union = minimal_generators(std::move(rhs));
    if (pooled.empty()) {
        rep.pass = true;
        return rep;
    }
    auto completed = buchberger_completion(std::move(pooled), big_order, pair_budget);
    rep.union_then_initial = initial_ideal(completed, big_order, false).minimal();
    rep.pass = rep.union_then_initial == rep.initials_then_union;
    return rep;
}

}  // namespace facering

#endif

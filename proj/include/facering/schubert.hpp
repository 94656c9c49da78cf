#ifndef FACERING_SCHUBERT_HPP
#define FACERING_SCHUBERT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cm.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grobner.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "simplicial_complex.hpp"
#include "term_order.hpp"
#include "varindex.hpp"

namespace facering {

/// An injection from {1..m} into {1..n}, written by its image list.
class PartialPermutation {
  public:
    PartialPermutation(std::vector<int> images, int width) : images_(std::move(images)), n_(width)
    {
        int mx = 0;
        for (int v : images_) {
            if (v < 1) throw std::invalid_argument("permutation images must be >= 1");
            mx = std::max(mx, v);
        }
        if (n_ < mx) throw std::invalid_argument("ambient width below the largest image");
        auto sorted = images_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("permutation images must be distinct");
        if (static_cast<int>(images_.size()) > n_)
            throw std::invalid_argument("domain larger than the ambient width");
    }

    static PartialPermutation from_images(std::vector<int> images)
    {
        int mx = 0;
        for (int v : images) mx = std::max(mx, v);
        return PartialPermutation(std::move(images), mx);
    }

    const std::vector<int>& images() const { return images_; }
    int domain_size() const { return static_cast<int>(images_.size()); }
    int width() const { return n_; }
    int image(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }

    std::string to_string() const
    {
        std::string s;
        for (int v : images_) {
            if (!s.empty()) s += " ";
            s += std::to_string(v);
        }
        return s;
    }

  private:
    std::vector<int> images_;
    int n_;
};

using RankMatrix = std::vector<std::vector<int>>;

/// r[i][j] counts the image points weakly northwest of (i+1, j+1):
/// #{ k <= i+1 : sigma(k) <= j+1 }.
inline RankMatrix rank_matrix(const PartialPermutation& s)
{
    int m = s.domain_size(), n = s.width();
    RankMatrix r(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            int count = 0;
            for (int k = 1; k <= i; ++k)
                if (s.image(k) <= j) ++count;
            r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = count;
        }
    return r;
}

/// A bijection of the natural numbers given either by its non-fixed
/// points or by the built-in even/odd swap rule
/// (1 -> 1, 2k -> 2k+1, 2k+1 -> 2k).
class InfinitePermutation {
  public:
    static InfinitePermutation identity() { return finitely_supported({}); }

    static InfinitePermutation finitely_supported(std::vector<std::pair<int, int>> pairs)
    {
        InfinitePermutation s;
        s.rule_even_ = false;
        std::erase_if(pairs, [](const auto& p) { return p.first == p.second; });
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> from, to;
        for (auto [a, b] : pairs) {
            if (a < 1 || b < 1)
                throw std::invalid_argument("permutation entries must be >= 1");
            from.push_back(a);
            to.push_back(b);
        }
        auto f = from;
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("repeated source in permutation spec");
        auto t = to;
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw std::invalid_argument("repeated target in permutation spec");
        if (f != t)
            throw std::invalid_argument("non-fixed points must permute among themselves");
        s.pairs_ = std::move(pairs);
        return s;
    }

    static InfinitePermutation rule_even()
    {
        InfinitePermutation s;
        s.rule_even_ = true;
        return s;
    }

    bool is_rule_even() const { return rule_even_; }

    int image(int i) const
    {
        if (i < 1) throw std::invalid_argument("permutation argument must be >= 1");
        if (rule_even_) {
            if (i == 1) return 1;
            return i % 2 == 0 ? i + 1 : i - 1;
        }
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(i, 0));
        if (it != pairs_.end() && it->first == i) return it->second;
        return i;
    }

    std::string to_string() const
    {
        if (rule_even_) return "rule-even";
        if (pairs_.empty()) return "identity";
        std::string s;
        for (auto [a, b] : pairs_) s += std::to_string(a) + "->" + std::to_string(b) + " ";
        s.pop_back();
        return s;
    }

  private:
    InfinitePermutation() = default;
    bool rule_even_ = false;
    std::vector<std::pair<int, int>> pairs_;  // sorted by source
};

/// Restriction to {1..m}, with ambient width max sigma({1..m}).
inline PartialPermutation truncate(const InfinitePermutation& s, int m)
{
    if (m < 1) throw std::invalid_argument("truncation level must be >= 1");
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(m));
    int mx = 0;
    for (int i = 1; i <= m; ++i) {
        images.push_back(s.image(i));
        mx = std::max(mx, images.back());
    }
    return PartialPermutation(std::move(images), mx);
}

/// Row and column index sets (1-based) of one minor of the variable
/// grid.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;
    friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

namespace detail {

template <class F>
void for_each_combination(int n, int k, F&& fn)
{
    if (k > n || k < 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        fn(static_cast<const std::vector<int>&>(idx));
        int i = k;
        while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - k + i) --i;
        if (i == 0) break;
        ++idx[static_cast<std::size_t>(i - 1)];
        for (int j = i; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

/// Minors demanded by the rank conditions: for every block corner
/// (k, l), all minors one larger than the rank bound, deduplicated and
/// ordered by size, then rows, then columns.
inline std::vector<MinorSpec> determinantal_minor_specs(const PartialPermutation& s)
{
    RankMatrix r = rank_matrix(s);
    std::vector<MinorSpec> specs;
    for (int k = 1; k <= s.domain_size(); ++k) {
        for (int l = 1; l <= s.width(); ++l) {
            int size = r[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] + 1;
            if (size > std::min(k, l)) continue;
            detail::for_each_combination(k, size, [&](const std::vector<int>& rows) {
                detail::for_each_combination(l, size, [&](const std::vector<int>& cols) {
                    specs.push_back({rows, cols});
                });
            });
        }
    }
    std::sort(specs.begin(), specs.end(), [](const MinorSpec& a, const MinorSpec& b) {
        if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
        return a < b;
    });
    specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
    return specs;
}

/// Determinant of the variable submatrix picked by spec, expanded with
/// the alternating-sign permutation sum.
template <class K>
Polynomial<K> minor_polynomial(const MinorSpec& spec, const K& sample)
{
    std::size_t k = spec.rows.size();
    if (k != spec.cols.size()) throw std::invalid_argument("minor must be square");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<typename Polynomial<K>::Term> terms;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::vector<Monomial::Entry> entries;
        entries.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            entries.emplace_back(
                VarIndex::grid(spec.rows[i], spec.cols[static_cast<std::size_t>(perm[i])]), 1);
        K c = from_int(sample, inversions % 2 == 0 ? 1 : -1);
        terms.emplace_back(Monomial(std::move(entries)), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial<K>(std::move(terms));
}

/// Generators of the Schubert determinantal ideal of s. With essential
/// set, a minor is dropped when an already kept minor's leading
/// monomial divides its own and it reduces to zero against the kept
/// list; the survivors still generate the same ideal with the same
/// initial ideal.
template <class K>
std::vector<Polynomial<K>> determinantal_ideal(const PartialPermutation& s, const K& sample,
                                               bool essential = false)
{
    auto specs = determinantal_minor_specs(s);
    std::vector<Polynomial<K>> gens;
    gens.reserve(specs.size());
    for (const auto& spec : specs) gens.push_back(minor_polynomial(spec, sample));
    if (!essential) return gens;

    TermOrder ord = TermOrder::antidiagonal();
    std::vector<Polynomial<K>> kept;
    for (const auto& g : gens) {
        Monomial lm = leading_monomial(g, ord);
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Polynomial<K>& h) {
            return leading_monomial(h, ord).divides(lm);
        });
        if (dominated && divide(g, kept, ord).remainder.is_zero_poly()) continue;
        kept.push_back(g);
    }
    return kept;
}

/// The squarefree monomial ideal of leading terms of the minors under
/// the antidiagonal order, minimalized. verify reruns Buchberger's
/// criterion on the minors over F_p; a failure would contradict the
/// fact that the minors are a Groebner basis and is reported as such.
inline MonomialIdeal antidiagonal_initial_ideal(const PartialPermutation& s, bool verify = false,
                                                std::int64_t p = kDefaultPrime)
{
    Fp sample(0, p);
    auto gens = determinantal_ideal(s, sample);
    TermOrder ord = TermOrder::restriction(
        TermOrder::antidiagonal(), grid_block_variables(s.domain_size(), s.width()));
    if (verify && !is_groebner_basis(gens, ord))
        throw not_a_groebner_basis("minors of the determinantal ideal fail Buchberger's "
                                   "criterion; this contradicts their known Groebner "
                                   "property and indicates an implementation bug");
    std::vector<Monomial> lms;
    lms.reserve(gens.size());
    for (const auto& g : gens) lms.push_back(leading_monomial(g, ord));
    return MonomialIdeal(minimal_generators(std::move(lms)));
}

/// All variables of the truncation's grid in canonical order.
inline std::vector<VarIndex> truncation_variables(const PartialPermutation& s)
{
    return grid_block_variables(s.domain_size(), s.width());
}

/// The complex of the antidiagonal initial ideal on the full variable
/// grid of the truncation. Falls back to facet form past the face cap.
inline SimplicialComplex initial_complex(const PartialPermutation& s,
                                         std::uint64_t face_cap = kDefaultFaceCap,
                                         std::int64_t p = kDefaultPrime)
{
    return complex_from_ideal(antidiagonal_initial_ideal(s, false, p), truncation_variables(s),
                              face_cap);
}

struct InclusionEntry {
    std::string direction;  // "include_up" or "project_down"
    std::string generator;
    std::string tag;  // "contained", "projected_to_zero", or "not_contained"
    bool ok = false;
};

struct InclusionReport {
    int m = 0;
    std::vector<InclusionEntry> entries;
    bool pass = true;
};

namespace detail {

/// Inclusion checks between consecutive truncation ideals, by division
/// against the given (Groebner) generator lists.
inline InclusionReport inclusion_report(const std::vector<Polynomial<Fp>>& small_gens,
                                        const std::vector<Polynomial<Fp>>& big_gens,
                                        const std::vector<VarIndex>& small_vars,
                                        const TermOrder& small_ord, const TermOrder& big_ord,
                                        int m)
{
    InclusionReport rep;
    rep.m = m;
    std::vector<VarIndex> keep = small_vars;
    std::sort(keep.begin(), keep.end());

    for (const auto& g : small_gens) {
        InclusionEntry e;
        e.direction = "include_up";
        e.generator = g.to_string();
        bool member = big_gens.empty()
                          ? g.is_zero_poly()
                          : divide(g, big_gens, big_ord).remainder.is_zero_poly();
        e.tag = member ? "contained" : "not_contained";
        e.ok = member;
        rep.pass = rep.pass && member;
        rep.entries.push_back(std::move(e));
    }

    for (const auto& g : big_gens) {
        InclusionEntry e;
        e.direction = "project_down";
        e.generator = g.to_string();
        auto pg = g.project_onto(keep);
        if (pg.is_zero_poly()) {
            e.tag = "projected_to_zero";
            e.ok = true;
        } else {
            bool member = small_gens.empty()
                              ? false
                              : divide(pg, small_gens, small_ord).remainder.is_zero_poly();
            e.tag = member ? "contained" : "not_contained";
            e.ok = member;
        }
        rep.pass = rep.pass && e.ok;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace detail

/// Checks both inclusions between the ideals of the m-th and (m+1)-st
/// truncations of s: generators push up into the bigger ideal, and
/// projections of the bigger generators land in the smaller ideal.
/// Membership is decided by division against the minor bases.
inline InclusionReport verify_inclusions(const InfinitePermutation& s, int m,
                                         std::int64_t p = kDefaultPrime,
                                         bool verify_bases = false)
{
    Fp sample(0, p);
    auto ps = truncate(s, m);
    auto pb = truncate(s, m + 1);
    auto gs = determinantal_ideal(ps, sample);
    auto gb = determinantal_ideal(pb, sample);
    auto vs = truncation_variables(ps);
    TermOrder os = TermOrder::restriction(TermOrder::antidiagonal(), vs);
    TermOrder ob = TermOrder::restriction(TermOrder::antidiagonal(), truncation_variables(pb));
    if (verify_bases) {
        if (!gs.empty() && !is_groebner_basis(gs, os))
            throw not_a_groebner_basis("level " + std::to_string(m));
        if (!gb.empty() && !is_groebner_basis(gb, ob))
            throw not_a_groebner_basis("level " + std::to_string(m + 1));
    }
    return detail::inclusion_report(gs, gb, vs, os, ob, m);
}

struct PipelineLevelReport {
    int m = 0;
    int width = 0;
    std::vector<int> images;
    std::size_t minor_count = 0;
    bool groebner_certified = false;
    std::vector<std::string> initial_generators;
    int dim = -1;
    std::int64_t face_count = -1;  // -1 when only facets are stored
    std::size_t facet_count = 0;
};

struct PipelineConfig {
    std::int64_t modulus = kDefaultPrime;
    std::uint64_t seed = 1;
    std::uint64_t face_cap = kDefaultFaceCap;
    std::size_t pair_budget = 65536;
    std::size_t sop_budget = kDefaultSopBudget;
    std::size_t row_cap = kDefaultRowCap;
};

struct PipelineReport {
    std::string permutation;
    int m_max = 0;
    PipelineConfig config;
    std::vector<PipelineLevelReport> levels;
    std::vector<InclusionReport> inclusions;
    struct UnionMember {
        std::string generator;
        int level = 0;  // smallest truncation whose ideal contains it
    };
    std::vector<UnionMember> union_membership;
    bool union_membership_pass = false;
    InitialUnionReport initial_union;
    ChainReport chain;
    bool overall = false;
};

/// Runs the full verification pipeline for the truncation tower of s
/// up to m_max: builds each determinantal ideal, certifies the minors
/// as a Groebner basis, forms initial ideals and complexes on a shared
/// prefix-ordered vertex list, then checks the stepwise inclusions,
/// the union identities at the top truncation, and the chain
/// hypotheses (fullness, purity, both Cohen-Macaulay certificates,
/// compatible good parameter matrices).
inline PipelineReport schubert_pipeline(const InfinitePermutation& s, int m_max,
                                        const PipelineConfig& cfg = {})
{
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    Fp sample(0, cfg.modulus);
    TermOrder anti = TermOrder::antidiagonal();

    PipelineReport rep;
    rep.permutation = s.to_string();
    rep.m_max = m_max;
    rep.config = cfg;

    std::vector<PartialPermutation> perms;
    std::vector<std::vector<Polynomial<Fp>>> bases;
    std::vector<TermOrder> orders;
    std::vector<SimplicialComplex> complexes;
    std::vector<VarIndex> ambient;

    for (int m = 1; m <= m_max; ++m) {
        PartialPermutation pm = truncate(s, m);
        auto gens = determinantal_ideal(pm, sample);
        TermOrder ord = TermOrder::restriction(anti, truncation_variables(pm));

        for (auto v : truncation_variables(pm))
            if (std::find(ambient.begin(), ambient.end(), v) == ambient.end())
                ambient.push_back(v);

        PipelineLevelReport lv;
        lv.m = m;
        lv.width = pm.width();
        lv.images = pm.images();
        lv.minor_count = gens.size();
        lv.groebner_certified = gens.empty() || is_groebner_basis(gens, ord);

        MonomialIdeal init = antidiagonal_initial_ideal(pm, false, cfg.modulus);
        for (const auto& g : init.minimal()) lv.initial_generators.push_back(g.to_string());

        SimplicialComplex c = complex_from_ideal(init, ambient, cfg.face_cap);
        lv.dim = c.is_void() ? -2 : c.dimension();
        lv.facet_count = c.facet_positions().size();
        if (c.has_explicit_faces()) lv.face_count = static_cast<std::int64_t>(c.face_count());

        rep.levels.push_back(std::move(lv));
        perms.push_back(std::move(pm));
        bases.push_back(std::move(gens));
        orders.push_back(std::move(ord));
        complexes.push_back(std::move(c));
    }

    for (int m = 1; m < m_max; ++m) {
        std::size_t i = static_cast<std::size_t>(m - 1);
        rep.inclusions.push_back(detail::inclusion_report(
            bases[i], bases[i + 1], truncation_variables(perms[i]), orders[i], orders[i + 1],
            m));
    }

    const auto& top_basis = bases.back();
    const auto& top_ord = orders.back();
    rep.union_membership_pass = true;
    for (const auto& g : top_basis) {
        PipelineReport::UnionMember um;
        um.generator = g.to_string();
        um.level = 0;
        for (int n = 1; n <= m_max; ++n) {
            const auto& bn = bases[static_cast<std::size_t>(n - 1)];
            if (bn.empty()) continue;
            if (divide(g, bn, top_ord).remainder.is_zero_poly()) {
                um.level = n;
                break;
            }
        }
        if (um.level == 0) rep.union_membership_pass = false;
        rep.union_membership.push_back(std::move(um));
    }

    rep.initial_union = check_initial_union(bases, orders, top_ord, cfg.pair_budget);

    rep.chain = verify_cm_chain(complexes, complexes.back(), cfg.modulus, cfg.seed,
                                cfg.sop_budget, cfg.row_cap);

    bool levels_ok = std::all_of(rep.levels.begin(), rep.levels.end(),
                                 [](const PipelineLevelReport& lv) {
                                     return lv.groebner_certified;
                                 });
    bool inclusions_ok = std::all_of(rep.inclusions.begin(), rep.inclusions.end(),
                                     [](const InclusionReport& ir) { return ir.pass; });
    rep.overall = levels_ok && inclusions_ok && rep.union_membership_pass &&
                  rep.initial_union.pass && rep.chain.overall;
    return rep;
}

}  // namespace facering

#endif

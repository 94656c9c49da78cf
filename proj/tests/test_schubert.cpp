#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "facering/facering.hpp"

using namespace facering;

namespace {

using QP = Polynomial<Rational>;

QP xg(int i, int j) { return QP::variable(VarIndex::grid(i, j), Rational(1)); }

Monomial antidiag_product(const MinorSpec& spec)
{
    std::vector<VarIndex> vs;
    std::size_t k = spec.rows.size();
    for (std::size_t i = 0; i < k; ++i)
        vs.push_back(VarIndex::grid(spec.rows[i], spec.cols[k - 1 - i]));
    return Monomial::squarefree(vs);
}

// Value of f at the 0/1 point of the permutation matrix: a term
// survives exactly when every variable sits on a (i, sigma(i)) cell.
Rational value_at_point(const QP& f, const PartialPermutation& s)
{
    std::set<std::pair<int, int>> ones;
    for (int k = 1; k <= s.domain_size(); ++k) ones.emplace(k, s.image(k));
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        bool alive = true;
        for (const auto& [v, e] : m.entries())
            if (!ones.count({v.row(), v.col()})) {
                alive = false;
                break;
            }
        if (alive) total += c;
    }
    return total;
}

PartialPermutation random_partial(Rng& rng)
{
    int n = 1 + static_cast<int>(rng.next_u64() % 6);
    int m = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.next_u64() % i]);
    pool.resize(static_cast<std::size_t>(m));
    return PartialPermutation(pool, n);
}

bool equal_up_to_sign(const QP& a, const QP& b)
{
    return a == b || a == QP::zero() - b;
}

std::set<std::pair<VarIndex, VarIndex>> complete_graph_minus(int rows, int cols,
                                                             VarIndex a, VarIndex b)
{
    auto vs = grid_block_variables(rows, cols);
    std::set<std::pair<VarIndex, VarIndex>> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace(vs[i], vs[j]);
    if (!(a < b)) std::swap(a, b);
    edges.erase({a, b});
    return edges;
}

}  // namespace

TEST_CASE("partial permutations validate their data")
{
    PartialPermutation s({2, 5, 3, 1}, 5);
    CHECK(s.domain_size() == 4);
    CHECK(s.width() == 5);
    CHECK(s.image(2) == 5);
    CHECK(s.to_string() == "2 5 3 1");
    CHECK(PartialPermutation::from_images({2, 5, 3, 1}).width() == 5);

    CHECK_THROWS_AS(PartialPermutation({1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(PartialPermutation({0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(PartialPermutation({5}, 4), std::invalid_argument);
}

TEST_CASE("infinite permutations and their truncations")
{
    auto id = InfinitePermutation::identity();
    CHECK(truncate(id, 3).images() == std::vector<int>{1, 2, 3});
    CHECK(truncate(id, 3).width() == 3);

    auto even = InfinitePermutation::rule_even();
    CHECK(even.image(1) == 1);
    CHECK(even.image(2) == 3);
    CHECK(even.image(3) == 2);
    CHECK(even.image(6) == 7);
    CHECK(truncate(even, 2).images() == std::vector<int>{1, 3});
    CHECK(truncate(even, 2).width() == 3);
    CHECK(truncate(even, 4).images() == std::vector<int>{1, 3, 2, 5});
    CHECK(truncate(even, 4).width() == 5);
    CHECK(truncate(even, 5).images() == std::vector<int>{1, 3, 2, 5, 4});
    CHECK(truncate(even, 5).width() == 5);

    auto swap12 = InfinitePermutation::finitely_supported({{1, 2}, {2, 1}});
    CHECK(swap12.image(1) == 2);
    CHECK(swap12.image(3) == 3);
    CHECK(truncate(swap12, 1).images() == std::vector<int>{2});
    CHECK(truncate(swap12, 1).width() == 2);

    CHECK_THROWS_AS(InfinitePermutation::finitely_supported({{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(InfinitePermutation::finitely_supported({{1, 2}, {3, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncate(id, 0), std::invalid_argument);
}

TEST_CASE("rank matrices count northwest image points")
{
    RankMatrix expected{{0, 1, 1, 1, 1}, {0, 1, 1, 1, 2}, {0, 1, 2, 2, 3}, {1, 2, 3, 3, 4}};
    CHECK(rank_matrix(PartialPermutation({2, 5, 3, 1}, 5)) == expected);

    auto idrank = rank_matrix(PartialPermutation({1, 2, 3}, 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(idrank[i][j] == std::min(i, j) + 1);

    CHECK(rank_matrix(PartialPermutation({2, 1}, 2)) == RankMatrix{{0, 1}, {1, 2}});
}

TEST_CASE("rank matrices: definitional recount and unit steps on random inputs")
{
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        auto s = random_partial(rng);
        auto r = rank_matrix(s);
        for (int i = 1; i <= s.domain_size(); ++i) {
            for (int j = 1; j <= s.width(); ++j) {
                int count = 0;
                for (int k = 1; k <= i; ++k)
                    if (s.image(k) <= j) ++count;
                REQUIRE(r[i - 1][j - 1] == count);
                int up = i > 1 ? r[i - 2][j - 1] : 0;
                int left = j > 1 ? r[i - 1][j - 2] : 0;
                REQUIRE(r[i - 1][j - 1] - up >= 0);
                REQUIRE(r[i - 1][j - 1] - up <= 1);
                REQUIRE(r[i - 1][j - 1] - left >= 0);
                REQUIRE(r[i - 1][j - 1] - left <= 1);
            }
        }
    }
}

TEST_CASE("minor enumeration is deduplicated and ordered")
{
    auto specs = determinantal_minor_specs(PartialPermutation({2, 5, 3, 1}, 5));
    REQUIRE(specs.size() == 16);
    std::map<std::size_t, int> by_size;
    for (const auto& sp : specs) ++by_size[sp.rows.size()];
    CHECK(by_size[1] == 3);
    CHECK(by_size[2] == 8);
    CHECK(by_size[3] == 4);
    CHECK(by_size[4] == 1);
    CHECK(specs.front().rows == std::vector<int>{1});
    CHECK(specs.front().cols == std::vector<int>{1});
    for (std::size_t i = 0; i + 1 < specs.size(); ++i) CHECK(specs[i] != specs[i + 1]);

    CHECK(determinantal_minor_specs(PartialPermutation({1, 2, 3}, 3)).empty());
}

TEST_CASE("minor polynomials expand with alternating signs")
{
    auto det2 = minor_polynomial(MinorSpec{{1, 2}, {1, 2}}, Rational(1));
    CHECK(det2 == xg(1, 1) * xg(2, 2) - xg(1, 2) * xg(2, 1));
    auto single = minor_polynomial(MinorSpec{{3}, {1}}, Rational(1));
    CHECK(single == xg(3, 1));
    CHECK_THROWS_AS(minor_polynomial(MinorSpec{{1, 2}, {1}}, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("pruned generator list matches the golden six up to sign")
{
    auto gens =
        determinantal_ideal(PartialPermutation({2, 5, 3, 1}, 5), Rational(1), true);
    std::vector<QP> expected{
        xg(1, 1),
        xg(2, 1),
        xg(3, 1),
        xg(1, 3) * xg(2, 2) - xg(1, 2) * xg(2, 3),
        xg(1, 4) * xg(2, 2) - xg(1, 2) * xg(2, 4),
        xg(1, 4) * xg(2, 3) - xg(1, 3) * xg(2, 4),
    };
    REQUIRE(gens.size() == expected.size());
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : gens) found = found || equal_up_to_sign(g, e);
        CHECK(found);
    }

    CHECK(determinantal_ideal(PartialPermutation({1, 2, 3}, 3), Rational(1)).empty());
    CHECK(determinantal_ideal(PartialPermutation({2, 5, 3, 1}, 5), Rational(1)).size() == 16);
}

TEST_CASE("even-rule ideals are the even-size top-left determinants")
{
    auto even = InfinitePermutation::rule_even();
    auto det_n = [](int n) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 1);
        return minor_polynomial(MinorSpec{idx, idx}, Rational(1));
    };

    CHECK(determinantal_ideal(truncate(even, 1), Rational(1)).empty());
    CHECK(determinantal_ideal(truncate(even, 2), Rational(1)) == std::vector<QP>{det_n(2)});
    CHECK(determinantal_ideal(truncate(even, 3), Rational(1)) == std::vector<QP>{det_n(2)});
    CHECK(determinantal_ideal(truncate(even, 4), Rational(1)) ==
          std::vector<QP>{det_n(2), det_n(4)});

    // Consecutive truncations at even m have identical generator lists.
    for (int m : {2, 4})
        CHECK(determinantal_ideal(truncate(even, m), Rational(1)) ==
              determinantal_ideal(truncate(even, m + 1), Rational(1)));
}

TEST_CASE("all generators vanish at the permutation matrix point")
{
    Rng rng(513);
    for (int t = 0; t < 200; ++t) {
        auto s = random_partial(rng);
        for (const auto& g : determinantal_ideal(s, Rational(1)))
            REQUIRE(value_at_point(g, s) == Rational(0));
    }
}

TEST_CASE("initial ideals under the antidiagonal order")
{
    auto init = antidiagonal_initial_ideal(PartialPermutation({2, 5, 3, 1}, 5));
    auto g = [](std::initializer_list<std::pair<int, int>> cells) {
        std::vector<VarIndex> vs;
        for (auto [i, j] : cells) vs.push_back(VarIndex::grid(i, j));
        return Monomial::squarefree(vs);
    };
    std::vector<Monomial> expected{g({{1, 1}}),         g({{2, 1}}),
                                   g({{3, 1}}),         g({{1, 3}, {2, 2}}),
                                   g({{1, 4}, {2, 2}}), g({{1, 4}, {2, 3}})};
    std::sort(expected.begin(), expected.end());
    CHECK(init.minimal() == expected);
    CHECK(init.is_squarefree());

    auto even = InfinitePermutation::rule_even();
    CHECK(antidiagonal_initial_ideal(truncate(even, 1)).minimal().empty());
    CHECK(antidiagonal_initial_ideal(truncate(even, 2)).minimal() ==
          std::vector<Monomial>{g({{1, 2}, {2, 1}})});
    CHECK(antidiagonal_initial_ideal(truncate(even, 3)).minimal() ==
          std::vector<Monomial>{g({{1, 2}, {2, 1}})});
    auto m4 = antidiagonal_initial_ideal(truncate(even, 4)).minimal();
    std::vector<Monomial> m4_expected{g({{1, 2}, {2, 1}}),
                                      g({{1, 4}, {2, 3}, {3, 2}, {4, 1}})};
    std::sort(m4_expected.begin(), m4_expected.end());
    CHECK(m4 == m4_expected);

    CHECK(antidiagonal_initial_ideal(PartialPermutation({1, 2}, 2)).minimal().empty());
}

TEST_CASE("minor generators certify as a Groebner basis")
{
    auto p2531 = PartialPermutation({2, 5, 3, 1}, 5);
    Fp sample(0, 32003);
    auto gens = determinantal_ideal(p2531, sample);
    TermOrder ord = TermOrder::restriction(TermOrder::antidiagonal(), truncation_variables(p2531));
    CHECK(is_groebner_basis(gens, ord));

    auto even = InfinitePermutation::rule_even();
    for (int m = 2; m <= 4; ++m) {
        auto pm = truncate(even, m);
        auto gm = determinantal_ideal(pm, sample);
        TermOrder om =
            TermOrder::restriction(TermOrder::antidiagonal(), truncation_variables(pm));
        CHECK(is_groebner_basis(gm, om));
    }

    CHECK_NOTHROW(antidiagonal_initial_ideal(p2531, true));
}

TEST_CASE("antidiagonal leading terms, exhaustively over the 6x6 grid")
{
    TermOrder ord = TermOrder::antidiagonal();
    std::size_t checked = 0;
    for (int k = 1; k <= 4; ++k) {
        detail::for_each_combination(6, k, [&](const std::vector<int>& rows) {
            detail::for_each_combination(6, k, [&](const std::vector<int>& cols) {
                MinorSpec spec{rows, cols};
                auto f = minor_polynomial(spec, Rational(1));
                REQUIRE(leading_monomial(f, ord) == antidiag_product(spec));
                ++checked;
            });
        });
    }
    CHECK(checked == 886);
}

TEST_CASE("initial complexes live on the truncation grid")
{
    auto full = initial_complex(PartialPermutation({1, 2, 3}, 3));
    CHECK(full.same_complex(SimplicialComplex::full_simplex(grid_block_variables(3, 3))));

    auto even = InfinitePermutation::rule_even();
    auto c2 = initial_complex(truncate(even, 2));
    CHECK(c2.ambient().size() == 6);
    CHECK(c2.vertex_set().size() == 6);
    CHECK(c2.face_count() == 48);
    auto edges2 = one_skeleton_edges(c2);
    std::set<std::pair<VarIndex, VarIndex>> got(edges2.begin(), edges2.end());
    CHECK(got == complete_graph_minus(2, 3, VarIndex::grid(1, 2), VarIndex::grid(2, 1)));

    auto c3 = initial_complex(truncate(even, 3));
    CHECK(c3.face_count() == 384);
    auto edges3 = one_skeleton_edges(c3);
    std::set<std::pair<VarIndex, VarIndex>> got3(edges3.begin(), edges3.end());
    CHECK(got3 == complete_graph_minus(3, 3, VarIndex::grid(1, 2), VarIndex::grid(2, 1)));

    auto c2531 = initial_complex(PartialPermutation({2, 5, 3, 1}, 5));
    CHECK(c2531.ambient().size() == 20);
    auto vset = c2531.vertex_set();
    CHECK(vset.size() == 17);
    for (auto v : {VarIndex::grid(1, 1), VarIndex::grid(2, 1), VarIndex::grid(3, 1)})
        CHECK(std::find(vset.begin(), vset.end(), v) == vset.end());
    CHECK(c2531.face_count() == 65536);
}

TEST_CASE("stepwise inclusion checks between consecutive truncations")
{
    auto even = InfinitePermutation::rule_even();
    auto rep = verify_inclusions(even, 2, 32003, true);
    CHECK(rep.pass);
    CHECK(rep.m == 2);
    REQUIRE(rep.entries.size() == 2);
    for (const auto& e : rep.entries) {
        CHECK(e.ok);
        CHECK(e.tag == "contained");
    }
    CHECK(rep.entries[0].direction == "include_up");
    CHECK(rep.entries[1].direction == "project_down");

    auto vac = verify_inclusions(InfinitePermutation::identity(), 3);
    CHECK(vac.pass);
    CHECK(vac.entries.empty());

    auto swap12 = InfinitePermutation::finitely_supported({{1, 2}, {2, 1}});
    auto srep = verify_inclusions(swap12, 1, 32003, true);
    CHECK(srep.pass);
    for (const auto& e : srep.entries) CHECK(e.ok);
}

TEST_CASE("full pipeline on the reference permutations")
{
    PipelineConfig cfg;
    cfg.seed = 1;

    auto even = schubert_pipeline(InfinitePermutation::rule_even(), 3, cfg);
    CHECK(even.overall);
    CHECK(even.m_max == 3);
    REQUIRE(even.levels.size() == 3);
    CHECK(even.levels[0].minor_count == 0);
    CHECK(even.levels[1].minor_count == 1);
    CHECK(even.levels[1].groebner_certified);
    CHECK(even.levels[1].initial_generators ==
          std::vector<std::string>{"x[1,2]*x[2,1]"});
    CHECK(even.levels[1].dim == 4);
    CHECK(even.levels[1].face_count == 48);
    CHECK(even.levels[2].face_count == 384);
    for (const auto& inc : even.inclusions) CHECK(inc.pass);
    CHECK(even.union_membership_pass);
    REQUIRE(even.union_membership.size() == 1);
    CHECK(even.union_membership[0].level == 2);
    CHECK(even.initial_union.pass);
    CHECK(even.chain.overall);
    CHECK(even.chain.sop_chain_ok);

    auto ident = schubert_pipeline(InfinitePermutation::identity(), 5, cfg);
    CHECK(ident.overall);
    for (const auto& lv : ident.levels) {
        CHECK(lv.minor_count == 0);
        CHECK(lv.initial_generators.empty());
    }
    // 16 grid variables fit the face budget; 25 do not.
    CHECK(ident.levels[3].face_count == 65536);
    CHECK(ident.levels[4].face_count == -1);
    CHECK(ident.chain.sop_chain_ok);
    CHECK_FALSE(ident.chain.sop_chain_note.empty());

    auto swapped =
        schubert_pipeline(InfinitePermutation::finitely_supported({{1, 2}, {2, 1}}), 3, cfg);
    CHECK(swapped.overall);
}

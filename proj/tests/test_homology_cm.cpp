#include <catch2/catch_amalgamated.hpp>

#include "facering/facering.hpp"

using namespace facering;

namespace {

std::vector<VarIndex> verts(int n) { return line_variables(n); }

SimplicialComplex two_points()
{
    return SimplicialComplex::from_facets(verts(2), {{VarIndex::line(1)}, {VarIndex::line(2)}});
}

SimplicialComplex path3()
{
    return SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)}});
}

SimplicialComplex triangle_boundary()
{
    return SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)},
         {VarIndex::line(1), VarIndex::line(3)}});
}

SimplicialComplex two_disjoint_edges()
{
    return SimplicialComplex::from_facets(
        verts(4),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(3), VarIndex::line(4)}});
}

SimplicialComplex tetra_boundary()
{
    std::vector<std::vector<VarIndex>> fs;
    for (int skip = 1; skip <= 4; ++skip) {
        std::vector<VarIndex> f;
        for (int v = 1; v <= 4; ++v)
            if (v != skip) f.push_back(VarIndex::line(v));
        fs.push_back(f);
    }
    return SimplicialComplex::from_facets(verts(4), fs);
}

SopMatrix sop(const SimplicialComplex& c, std::size_t rows,
              std::initializer_list<std::int64_t> entries, std::int64_t p)
{
    std::vector<Fp> es;
    for (auto v : entries) es.emplace_back(v, p);
    return SopMatrix(c, rows, std::move(es), p);
}

}  // namespace

TEST_CASE("reduced homology ranks of reference spaces")
{
    using R = std::vector<std::size_t>;
    // Entry 0 is degree -1.
    CHECK(reduced_homology_ranks(two_points(), 32003) == R{0, 1});
    CHECK(reduced_homology_ranks(triangle_boundary(), 32003) == R{0, 0, 1});
    CHECK(reduced_homology_ranks(SimplicialComplex::full_simplex(verts(3)), 32003) ==
          R{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(tetra_boundary(), 32003) == R{0, 0, 0, 1});
    CHECK(reduced_homology_ranks(SimplicialComplex::empty_complex(verts(2)), 32003) == R{1});
    CHECK(reduced_homology_ranks(path3(), 5) == R{0, 0, 0});
    CHECK_THROWS_AS(reduced_homology_ranks(SimplicialComplex::void_complex(verts(2)), 32003),
                    std::invalid_argument);
}

TEST_CASE("topological Cohen-Macaulay certificate on reference complexes")
{
    CHECK(reisner_cm(path3(), 32003));
    CHECK(reisner_cm(triangle_boundary(), 32003));
    CHECK(reisner_cm(two_points(), 32003));
    CHECK(reisner_cm(SimplicialComplex::full_simplex(verts(3)), 32003));
    CHECK(reisner_cm(SimplicialComplex::empty_complex(verts(2)), 32003));
    CHECK_FALSE(reisner_cm(two_disjoint_edges(), 32003));

    // Coning off a disconnected complex kills global homology but the
    // apex link still sees the disconnection, so the criterion fails.
    auto cone = SimplicialComplex::from_facets(
        verts(5),
        {{VarIndex::line(1), VarIndex::line(2), VarIndex::line(5)},
         {VarIndex::line(3), VarIndex::line(4), VarIndex::line(5)}});
    for (std::size_t r : reduced_homology_ranks(cone, 32003)) CHECK(r == 0);
    CHECK_FALSE(reisner_cm(cone, 32003));

    // A cone over a path keeps every link acyclic in low degrees.
    auto path_cone = SimplicialComplex::from_facets(
        verts(4), {{VarIndex::line(1), VarIndex::line(2), VarIndex::line(4)},
                   {VarIndex::line(2), VarIndex::line(3), VarIndex::line(4)}});
    CHECK(reisner_cm(path_cone, 32003));

    // One facet means a simplex; decided without the face list.
    auto big = SimplicialComplex::from_facets(verts(13), {verts(13)}, 16);
    REQUIRE_FALSE(big.has_explicit_faces());
    CHECK(reisner_cm(big, 32003));
}

TEST_CASE("parameter matrices: construction and the two pointwise tests")
{
    auto pts = two_points();
    auto good = sop(pts, 1, {1, 1}, 5);
    CHECK(stanley_check(good));
    CHECK(is_good(good));

    auto zero_col = sop(pts, 1, {1, 0}, 5);
    CHECK_FALSE(stanley_check(zero_col));
    CHECK_FALSE(is_good(zero_col));

    auto edge = SimplicialComplex::full_simplex(verts(2));
    auto ident = sop(edge, 2, {1, 0, 0, 1}, 5);
    CHECK(stanley_check(ident));
    // A zero entry kills goodness on the face {2} even though the full
    // facet minor is invertible.
    CHECK_FALSE(is_good(ident));

    auto ones = sop(edge, 2, {1, 1, 1, 1}, 5);
    CHECK_FALSE(stanley_check(ones));

    auto mixed = sop(edge, 2, {1, 1, 1, 2}, 5);
    CHECK(stanley_check(mixed));
    CHECK(is_good(mixed));

    CHECK_THROWS_AS(sop(pts, 1, {1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(stanley_check(sop(pts, 2, {1, 1, 1, 1}, 5)), facering::error);
    CHECK_THROWS_AS(is_good(sop(edge, 2, {1, 1, 1, 2}, 5), 1), cap_exceeded);
}

TEST_CASE("random search for good matrices is deterministic in the seed")
{
    auto c = path3();
    auto a = find_good_sop(c, 32003, 7);
    auto b = find_good_sop(c, 32003, 7);
    CHECK(a.rows() == 2);
    CHECK(is_good(a));
    REQUIRE(a.entries().size() == b.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) CHECK(a.entries()[i] == b.entries()[i]);

    // The three edges of the cycle need pairwise distinct second-row
    // values, impossible over F_2, so the budget must run out.
    CHECK_THROWS_AS(find_good_sop(triangle_boundary(), 2, 7, 64), budget_exhausted);
    CHECK_THROWS_AS(find_good_sop(SimplicialComplex::void_complex(verts(2)), 32003, 7),
                    facering::error);
    auto impure = SimplicialComplex::from_facets(
        verts(3), {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(3)}});
    CHECK_THROWS_AS(find_good_sop(impure, 32003, 7), facering::error);
}

TEST_CASE("extension keeps the base block entry for entry")
{
    auto small = SimplicialComplex::full_simplex(verts(2));
    auto big = SimplicialComplex::full_simplex(verts(3));
    auto base = find_good_sop(small, 32003, 3);
    auto ext = extend_good_sop(base, big, 4);
    CHECK(ext.rows() == 3);
    CHECK(is_good(ext));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(ext.at(i, j) == base.at(i, j));

    // The ambient order of the big complex must extend the small one.
    auto reordered = SimplicialComplex::full_simplex(
        {VarIndex::line(2), VarIndex::line(1), VarIndex::line(3)});
    CHECK_THROWS_AS(extend_good_sop(base, reordered, 4), std::invalid_argument);

    // The edge {1,2} of the base is missing from this complex.
    auto not_containing = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(3)}, {VarIndex::line(2), VarIndex::line(3)}});
    CHECK_THROWS_AS(extend_good_sop(base, not_containing, 4), facering::error);
}

TEST_CASE("compatible chains nest their blocks")
{
    std::vector<SimplicialComplex> chain{SimplicialComplex::full_simplex(verts(2)),
                                         SimplicialComplex::full_simplex(verts(3)),
                                         SimplicialComplex::full_simplex(verts(4))};
    auto ms = compatible_chain(chain, 32003, 11);
    REQUIRE(ms.size() == 3);
    for (std::size_t k = 0; k + 1 < ms.size(); ++k) {
        CHECK(is_good(ms[k]));
        for (std::size_t i = 0; i < ms[k].rows(); ++i)
            for (std::size_t j = 0; j < ms[k].cols(); ++j)
                CHECK(ms[k + 1].at(i, j) == ms[k].at(i, j));
    }

    std::vector<SimplicialComplex> bad{two_points(), SimplicialComplex::full_simplex(verts(3))};
    CHECK_THROWS_WITH(compatible_chain(bad, 32003, 11),
                      Catch::Matchers::ContainsSubstring("chain level 2"));
    CHECK(compatible_chain({}, 32003, 11).empty());
}

TEST_CASE("quotient dimensions certify the free basis")
{
    auto m = find_good_sop(path3(), 32003, 5);
    auto rep = sop_quotient_check(m, "path");
    CHECK(rep.pure);
    CHECK(rep.reisner_pass);
    CHECK(rep.sop_quotient_pass);
    CHECK(rep.complex_id == "path");
    CHECK(rep.hvector == std::vector<std::int64_t>{1, 1, 0});
    REQUIRE(rep.quotient_dims.size() >= 2);
    CHECK(rep.quotient_dims[0] == 1);
    CHECK(rep.quotient_dims[1] == 1);
    CHECK(rep.modulus == 32003);

    auto tb = triangle_boundary();
    auto rep2 = sop_quotient_check(find_good_sop(tb, 32003, 5), "cycle");
    CHECK(rep2.sop_quotient_pass);
    CHECK(rep2.hvector == std::vector<std::int64_t>{1, 1, 1});

    // Not a parameter system: Stanley's criterion is a precondition.
    auto edge = SimplicialComplex::full_simplex(verts(2));
    CHECK_THROWS_AS(sop_quotient_check(sop(edge, 2, {1, 1, 1, 1}, 5)), std::invalid_argument);
}

TEST_CASE("the two certificates fail together on a non Cohen-Macaulay complex")
{
    auto c = two_disjoint_edges();
    // A good matrix for the faces exists even though the complex is not
    // Cohen-Macaulay; the quotient then exceeds the h-vector.
    std::vector<Fp> es;
    Rng rng(3);
    SopMatrix m = [&] {
        for (int trial = 0;; ++trial) {
            REQUIRE(trial < 200);
            std::vector<Fp> entries;
            for (int i = 0; i < 8; ++i) entries.push_back(rng.field_element(32003));
            SopMatrix cand(c, 2, entries, 32003);
            if (is_good(cand)) return cand;
        }
    }();
    auto rep = sop_quotient_check(m, "two edges");
    CHECK(rep.pure);
    CHECK_FALSE(rep.reisner_pass);
    CHECK_FALSE(rep.sop_quotient_pass);
    CHECK(rep.hvector == std::vector<std::int64_t>{1, 2, -1});
}

TEST_CASE("chain verification: passing chain and diagnosed failures")
{
    std::vector<SimplicialComplex> chain{SimplicialComplex::full_simplex(verts(2)),
                                         SimplicialComplex::full_simplex(verts(3))};
    auto rep = verify_cm_chain(chain, chain.back(), 32003, 9);
    CHECK(rep.overall);
    CHECK(rep.union_equals_top);
    CHECK(rep.sop_chain_ok);
    REQUIRE(rep.levels.size() == 2);
    for (const auto& lv : rep.levels) CHECK(lv.pass());
    CHECK(rep.modulus == 32003);
    CHECK(rep.seed == 9);

    // Same vertices, missing edge: not a full subcomplex of the top.
    std::vector<SimplicialComplex> bad{two_points(), SimplicialComplex::full_simplex(verts(3))};
    auto brep = verify_cm_chain(bad, bad.back(), 32003, 9);
    CHECK_FALSE(brep.overall);
    CHECK_FALSE(brep.levels[0].full_in_top);

    // Union smaller than the top complex.
    auto top = SimplicialComplex::full_simplex(verts(3));
    std::vector<SimplicialComplex> low{SimplicialComplex::full_simplex(verts(2))};
    auto urep = verify_cm_chain(low, top, 32003, 9);
    CHECK_FALSE(urep.union_equals_top);
    CHECK_FALSE(urep.overall);

    // A level failing both Cohen-Macaulay certificates.
    std::vector<SimplicialComplex> ncm{two_disjoint_edges()};
    auto nrep = verify_cm_chain(ncm, ncm.back(), 32003, 9);
    CHECK_FALSE(nrep.overall);
    CHECK(nrep.levels[0].pure);
    CHECK_FALSE(nrep.levels[0].reisner_pass);
}

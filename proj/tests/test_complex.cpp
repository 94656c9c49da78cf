#include <catch2/catch_amalgamated.hpp>

#include "facering/facering.hpp"

using namespace facering;

namespace {

std::vector<VarIndex> verts(int n) { return line_variables(n); }

Monomial mono(std::initializer_list<int> lines)
{
    std::vector<VarIndex> vs;
    for (int n : lines) vs.push_back(VarIndex::line(n));
    return Monomial::squarefree(vs);
}

}  // namespace

TEST_CASE("minimal hitting sets are minimal and complete")
{
    using Sets = std::vector<std::vector<int>>;
    CHECK(minimal_hitting_sets({{1, 2}}) == Sets{{1}, {2}});
    CHECK(minimal_hitting_sets({{1, 2}, {2, 3}}) == Sets{{1, 3}, {2}});
    CHECK(minimal_hitting_sets({}) == Sets{{}});
    // An empty set cannot be hit.
    CHECK(minimal_hitting_sets({{1, 2}, {}}) == Sets{});
    CHECK(minimal_hitting_sets({{5}}) == Sets{{5}});
    CHECK(minimal_hitting_sets({{1}, {2}}) == Sets{{1, 2}});
}

TEST_CASE("facet normalization deduplicates and drops covered faces")
{
    auto c = SimplicialComplex::from_facets(
        verts(3), {{VarIndex::line(1)}, {VarIndex::line(1), VarIndex::line(2)},
                   {VarIndex::line(1), VarIndex::line(2)}});
    REQUIRE(c.facet_positions().size() == 1);
    CHECK(c.facet_positions()[0] == std::vector<int>{0, 1});
    CHECK(c.dimension() == 1);
    CHECK(c.face_count() == 4);
    CHECK(c.contains_face({VarIndex::line(2)}));
    CHECK_FALSE(c.contains_face({VarIndex::line(3)}));
    CHECK_FALSE(c.contains_face({VarIndex::line(1), VarIndex::line(3)}));
    CHECK(c.vertex_set() == std::vector<VarIndex>{VarIndex::line(1), VarIndex::line(2)});

    CHECK_THROWS_AS(
        SimplicialComplex::from_facets(verts(2), {{VarIndex::line(3)}}),
        std::invalid_argument);
}

TEST_CASE("void, empty, and full complexes are distinct")
{
    auto void_c = SimplicialComplex::void_complex(verts(2));
    CHECK(void_c.is_void());
    CHECK(void_c.face_count() == 0);
    CHECK_THROWS_AS(void_c.dimension(), std::logic_error);

    auto empty_c = SimplicialComplex::empty_complex(verts(2));
    CHECK_FALSE(empty_c.is_void());
    CHECK(empty_c.dimension() == -1);
    CHECK(empty_c.face_count() == 1);

    auto full = SimplicialComplex::full_simplex(verts(3));
    CHECK(full.dimension() == 2);
    CHECK(full.face_count() == 8);
    CHECK(full.is_pure());
    CHECK_FALSE(void_c.same_complex(empty_c));
    CHECK(full.same_complex(full));
}

TEST_CASE("ideal to complex: faces avoid the generators")
{
    MonomialIdeal ideal({mono({1, 2})});
    auto c = complex_from_ideal(ideal, verts(3));
    CHECK(c.face_count() == 6);
    CHECK(c.dimension() == 1);
    CHECK(c.facet_positions() == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
    CHECK(c.contains_face({VarIndex::line(1), VarIndex::line(3)}));
    CHECK_FALSE(c.contains_face({VarIndex::line(1), VarIndex::line(2)}));

    // Zero ideal: the full simplex. Unit ideal: the void complex.
    CHECK(complex_from_ideal(MonomialIdeal(), verts(3))
              .same_complex(SimplicialComplex::full_simplex(verts(3))));
    CHECK(complex_from_ideal(MonomialIdeal({Monomial::one()}), verts(3)).is_void());

    // All vertices excluded: only the empty face remains.
    MonomialIdeal allvars({mono({1}), mono({2})});
    CHECK(complex_from_ideal(allvars, verts(2)).dimension() == -1);

    CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal({Monomial({{VarIndex::line(1), 2}})}),
                                       verts(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(complex_from_ideal(ideal, verts(1)), std::invalid_argument);
}

TEST_CASE("complex to ideal: minimal non-faces")
{
    auto path = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)}});
    auto ideal = ideal_from_complex(path);
    CHECK(ideal.minimal() == std::vector<Monomial>{mono({1, 3})});

    CHECK(ideal_from_complex(SimplicialComplex::full_simplex(verts(3))).minimal().empty());
    CHECK(ideal_from_complex(SimplicialComplex::void_complex(verts(2))).minimal() ==
          std::vector<Monomial>{Monomial::one()});
    CHECK(ideal_from_complex(SimplicialComplex::empty_complex(verts(2))).minimal() ==
          std::vector<Monomial>{mono({1}), mono({2})});
}

TEST_CASE("the two directions are mutually inverse")
{
    std::vector<MonomialIdeal> ideals{
        MonomialIdeal({mono({1, 2}), mono({2, 3}), mono({3, 4})}),
        MonomialIdeal({mono({1}), mono({2, 3, 4})}),
        MonomialIdeal(),
        MonomialIdeal({Monomial::one()}),
    };
    for (const auto& i : ideals) {
        auto c = complex_from_ideal(i, verts(4));
        auto back = ideal_from_complex(c);
        CHECK(back.same_ideal(i));
        CHECK(complex_from_ideal(back, verts(4)).same_complex(c));
    }
}

TEST_CASE("face and h vectors")
{
    auto two_edges = SimplicialComplex::from_facets(
        verts(4),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(3), VarIndex::line(4)}});
    CHECK(f_vector(two_edges) == std::vector<std::uint64_t>{1, 4, 2});
    CHECK(h_vector(two_edges) == std::vector<std::int64_t>{1, 2, -1});

    auto triangle = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)},
         {VarIndex::line(1), VarIndex::line(3)}});
    CHECK(f_vector(triangle) == std::vector<std::uint64_t>{1, 3, 3});
    CHECK(h_vector(triangle) == std::vector<std::int64_t>{1, 1, 1});

    auto path = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)}});
    CHECK(h_vector(path) == std::vector<std::int64_t>{1, 1, 0});

    CHECK(f_vector(SimplicialComplex::void_complex(verts(2))).empty());
    CHECK(f_vector(SimplicialComplex::empty_complex(verts(2))) ==
          std::vector<std::uint64_t>{1});
}

TEST_CASE("links restrict to the cofaces")
{
    auto path = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)}});
    auto lk = link(path, {VarIndex::line(2)});
    CHECK(lk.facet_positions().size() == 2);
    CHECK(lk.dimension() == 0);
    CHECK(lk.contains_face({VarIndex::line(1)}));
    CHECK(lk.contains_face({VarIndex::line(3)}));

    CHECK(link(path, {}).same_complex(path));
    CHECK_THROWS_AS(link(path, {VarIndex::line(1), VarIndex::line(3)}), std::invalid_argument);
}

TEST_CASE("full subcomplex recognition")
{
    auto super = SimplicialComplex::full_simplex(verts(3));
    auto edge = SimplicialComplex::full_simplex(verts(2));
    CHECK(is_full_subcomplex(edge, super));

    // Same vertex pair, but missing the edge the big complex has.
    auto two_points = SimplicialComplex::from_facets(
        verts(2), {{VarIndex::line(1)}, {VarIndex::line(2)}});
    CHECK_FALSE(is_full_subcomplex(two_points, super));

    auto path = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)}});
    CHECK(is_full_subcomplex(path, path));
    // The path is a subcomplex of the simplex but not full: {1,3} is
    // missing while both vertices are present.
    CHECK_FALSE(is_full_subcomplex(path, super));
}

TEST_CASE("one skeleton edges and rendering")
{
    auto path = SimplicialComplex::from_facets(
        verts(3),
        {{VarIndex::line(1), VarIndex::line(2)}, {VarIndex::line(2), VarIndex::line(3)}});
    auto edges = one_skeleton_edges(path);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == std::make_pair(VarIndex::line(1), VarIndex::line(2)));
    CHECK(edges[1] == std::make_pair(VarIndex::line(2), VarIndex::line(3)));

    CHECK(one_skeleton_dot(path) ==
          "graph skeleton {\n"
          "  \"x[1]\";\n"
          "  \"x[2]\";\n"
          "  \"x[3]\";\n"
          "  \"x[1]\" -- \"x[2]\";\n"
          "  \"x[2]\" -- \"x[3]\";\n"
          "}\n");
}

TEST_CASE("face cap switches to facet-only storage")
{
    auto capped = SimplicialComplex::full_simplex(verts(3), 4);
    CHECK_FALSE(capped.has_explicit_faces());
    CHECK_THROWS_AS(capped.face_masks(), cap_exceeded);
    CHECK_THROWS_AS(f_vector(capped), cap_exceeded);
    // Facet-level data stays available.
    CHECK(capped.dimension() == 2);
    CHECK(capped.is_pure());
    CHECK(capped.contains_face({VarIndex::line(1), VarIndex::line(3)}));
    CHECK(ideal_from_complex(capped).minimal().empty());
}

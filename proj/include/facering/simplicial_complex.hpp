#ifndef FACERING_SIMPLICIAL_COMPLEX_HPP
#define FACERING_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "monomial.hpp"
#include "varindex.hpp"

namespace facering {

/// Above this many faces a complex is kept in facet form only;
/// operations needing the explicit face list refuse with cap_exceeded.
inline constexpr std::uint64_t kDefaultFaceCap = std::uint64_t{1} << 22;

/// All inclusion-minimal sets meeting every member of family. Elements
/// are sorted vectors of nonnegative indices. The empty family has the
/// empty set as its only minimal hitting set; a family containing the
/// empty set has none.
inline std::vector<std::vector<int>> minimal_hitting_sets(
    const std::vector<std::vector<int>>& family)
{
    auto is_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto minimalize = [&](std::vector<std::vector<int>> sets) {
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::stable_sort(sets.begin(), sets.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<std::vector<int>> out;
        for (auto& s : sets) {
            bool covered = std::any_of(out.begin(), out.end(),
                                       [&](const auto& t) { return is_subset(t, s); });
            if (!covered) out.push_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<std::vector<int>> hs = {{}};
    for (const auto& s : family) {
        std::vector<std::vector<int>> next;
        for (const auto& t : hs) {
            bool hits = std::any_of(s.begin(), s.end(), [&](int v) {
                return std::binary_search(t.begin(), t.end(), v);
            });
            if (hits) {
                next.push_back(t);
                continue;
            }
            for (int v : s) {
                auto u = t;
                u.insert(std::upper_bound(u.begin(), u.end(), v), v);
                next.push_back(std::move(u));
            }
        }
        hs = minimalize(std::move(next));
        if (hs.empty()) break;
    }
    return hs;
}

/// A finite simplicial complex on an ordered ambient vertex list.
/// Stored as the sorted family of facets (position vectors into the
/// ambient list); for small instances the full face list is also
/// materialized as sorted bitmasks over positions.
///
/// The ambient list may contain non-vertices: v with {v} not a face.
/// The void complex (no faces at all) is representable and distinct
/// from the complex whose only face is the empty set.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Builds the complex generated by the given faces: the facets are
    /// the inclusion-maximal ones. Every face must be a subset of
    /// ambient; an empty generator list gives the void complex.
    static SimplicialComplex from_facets(std::vector<VarIndex> ambient,
                                         const std::vector<std::vector<VarIndex>>& faces,
                                         std::uint64_t face_cap = kDefaultFaceCap)
    {
        SimplicialComplex c;
        c.set_ambient(std::move(ambient));
        std::vector<std::vector<int>> fs;
        fs.reserve(faces.size());
        for (const auto& f : faces) fs.push_back(c.to_positions(f));
        c.facets_ = normalize_facets(std::move(fs));
        c.face_cap_ = face_cap;
        c.try_materialize();
        return c;
    }

    static SimplicialComplex full_simplex(std::vector<VarIndex> ambient,
                                          std::uint64_t face_cap = kDefaultFaceCap)
    {
        auto all = ambient;
        return from_facets(std::move(ambient), {all}, face_cap);
    }

    /// The complex whose only face is the empty set.
    static SimplicialComplex empty_complex(std::vector<VarIndex> ambient,
                                           std::uint64_t face_cap = kDefaultFaceCap)
    {
        return from_facets(std::move(ambient), {std::vector<VarIndex>{}}, face_cap);
    }

    static SimplicialComplex void_complex(std::vector<VarIndex> ambient,
                                          std::uint64_t face_cap = kDefaultFaceCap)
    {
        return from_facets(std::move(ambient), {}, face_cap);
    }

    const std::vector<VarIndex>& ambient() const { return ambient_; }

    std::uint64_t face_cap() const { return face_cap_; }

    /// Position of v in the ambient list, or -1 when absent.
    int position_of(VarIndex v) const
    {
        auto it = std::lower_bound(pos_index_.begin(), pos_index_.end(), v,
                                   [](const auto& p, VarIndex w) { return p.first < w; });
        return (it != pos_index_.end() && it->first == v) ? it->second : -1;
    }

    bool is_void() const { return facets_.empty(); }

    const std::vector<std::vector<int>>& facet_positions() const { return facets_; }

    std::vector<std::vector<VarIndex>> facet_vertices() const
    {
        std::vector<std::vector<VarIndex>> out;
        out.reserve(facets_.size());
        for (const auto& f : facets_) out.push_back(to_names(f));
        return out;
    }

    /// Max face size minus one; -1 for the empty complex. Undefined on
    /// the void complex.
    int dimension() const
    {
        if (is_void()) throw std::logic_error("dimension of the void complex");
        std::size_t best = 0;
        for (const auto& f : facets_) best = std::max(best, f.size());
        return static_cast<int>(best) - 1;
    }

    bool is_pure() const
    {
        if (is_void()) throw std::logic_error("purity of the void complex");
        return std::all_of(facets_.begin(), facets_.end(), [&](const auto& f) {
            return f.size() == facets_.front().size();
        });
    }

    /// V of the complex: ambient vertices v with {v} a face, in ambient
    /// order.
    std::vector<VarIndex> vertex_set() const
    {
        std::vector<char> seen(ambient_.size(), 0);
        for (const auto& f : facets_)
            for (int p : f) seen[static_cast<std::size_t>(p)] = 1;
        std::vector<VarIndex> out;
        for (std::size_t i = 0; i < ambient_.size(); ++i)
            if (seen[i]) out.push_back(ambient_[i]);
        return out;
    }

    bool contains_face(const std::vector<VarIndex>& face) const
    {
        std::vector<int> pos;
        pos.reserve(face.size());
        for (auto v : face) {
            int p = position_of(v);
            if (p < 0) return false;
            pos.push_back(p);
        }
        std::sort(pos.begin(), pos.end());
        pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
        return contains_positions(pos);
    }

    bool contains_positions(const std::vector<int>& sorted_pos) const
    {
        if (faces_) {
            if (ambient_.size() > 63) throw std::logic_error("mask overflow");
            std::uint64_t m = 0;
            for (int p : sorted_pos) m |= std::uint64_t{1} << p;
            return std::binary_search(faces_->begin(), faces_->end(), m);
        }
        return std::any_of(facets_.begin(), facets_.end(), [&](const auto& f) {
            return std::includes(f.begin(), f.end(), sorted_pos.begin(), sorted_pos.end());
        });
    }

    bool has_explicit_faces() const { return faces_.has_value(); }

    /// Sorted bitmask list of all faces; refuses when only facets are
    /// stored.
    const std::vector<std::uint64_t>& face_masks() const
    {
        if (!faces_)
            throw cap_exceeded("operation needs the explicit face list; "
                               "the face cap of " + std::to_string(face_cap_) +
                               " was exceeded (facet form only)");
        return *faces_;
    }

    std::uint64_t face_count() const { return face_masks().size(); }

    std::vector<VarIndex> mask_to_names(std::uint64_t mask) const
    {
        std::vector<VarIndex> out;
        for (std::size_t i = 0; i < ambient_.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) out.push_back(ambient_[i]);
        return out;
    }

    /// Same ambient vertex set (as a set) and same face family,
    /// compared by vertex names.
    bool same_complex(const SimplicialComplex& other) const
    {
        auto va = ambient_, vb = other.ambient_;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        if (va != vb) return false;
        auto fa = facet_vertices(), fb = other.facet_vertices();
        for (auto& f : fa) std::sort(f.begin(), f.end());
        for (auto& f : fb) std::sort(f.begin(), f.end());
        std::sort(fa.begin(), fa.end());
        std::sort(fb.begin(), fb.end());
        return fa == fb;
    }

    std::vector<int> to_positions(const std::vector<VarIndex>& names) const
    {
        std::vector<int> pos;
        pos.reserve(names.size());
        for (auto v : names) {
            int p = position_of(v);
            if (p < 0)
                throw std::invalid_argument("face vertex not in the ambient list: " +
                                            v.to_string());
            pos.push_back(p);
        }
        std::sort(pos.begin(), pos.end());
        auto dup = std::adjacent_find(pos.begin(), pos.end());
        if (dup != pos.end()) throw std::invalid_argument("repeated vertex in a face");
        return pos;
    }

    std::vector<VarIndex> to_names(const std::vector<int>& pos) const
    {
        std::vector<VarIndex> out;
        out.reserve(pos.size());
        for (int p : pos) out.push_back(ambient_.at(static_cast<std::size_t>(p)));
        return out;
    }

    /// Factory used by the ideal-to-complex direction: facets plus an
    /// already enumerated face list (or none when the cap was hit).
    static SimplicialComplex from_parts(std::vector<VarIndex> ambient,
                                        std::vector<std::vector<int>> facet_positions,
                                        std::optional<std::vector<std::uint64_t>> faces,
                                        std::uint64_t face_cap)
    {
        SimplicialComplex c;
        c.set_ambient(std::move(ambient));
        c.facets_ = normalize_facets(std::move(facet_positions));
        c.faces_ = std::move(faces);
        c.face_cap_ = face_cap;
        return c;
    }

  private:
    void set_ambient(std::vector<VarIndex> ambient)
    {
        ambient_ = std::move(ambient);
        pos_index_.clear();
        pos_index_.reserve(ambient_.size());
        for (std::size_t i = 0; i < ambient_.size(); ++i)
            pos_index_.emplace_back(ambient_[i], static_cast<int>(i));
        std::sort(pos_index_.begin(), pos_index_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto dup = std::adjacent_find(pos_index_.begin(), pos_index_.end(),
                                      [](const auto& a, const auto& b) { return a.first == b.first; });
        if (dup != pos_index_.end())
            throw std::invalid_argument("repeated vertex in the ambient list");
    }

    static std::vector<std::vector<int>> normalize_facets(std::vector<std::vector<int>> fs)
    {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        std::stable_sort(fs.begin(), fs.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        std::vector<std::vector<int>> out;
        for (auto& f : fs) {
            bool covered = std::any_of(out.begin(), out.end(), [&](const auto& g) {
                return std::includes(g.begin(), g.end(), f.begin(), f.end());
            });
            if (!covered) out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void try_materialize()
    {
        faces_.reset();
        if (ambient_.size() > 63) return;
        // Submask enumeration costs sum(2^|F|); skip when that exceeds
        // a small multiple of the cap.
        std::uint64_t work = 0;
        for (const auto& f : facets_) {
            if (f.size() > 62) return;
            work += std::uint64_t{1} << f.size();
            if (work > 4 * face_cap_) return;
        }
        std::unordered_set<std::uint64_t> seen;
        for (const auto& f : facets_) {
            std::uint64_t m = 0;
            for (int p : f) m |= std::uint64_t{1} << p;
            std::uint64_t sub = m;
            while (true) {
                seen.insert(sub);
                if (seen.size() > face_cap_) return;
                if (sub == 0) break;
                sub = (sub - 1) & m;
            }
        }
        std::vector<std::uint64_t> faces(seen.begin(), seen.end());
        std::sort(faces.begin(), faces.end());
        faces_ = std::move(faces);
    }

    std::vector<VarIndex> ambient_;
    std::vector<std::pair<VarIndex, int>> pos_index_;
    std::vector<std::vector<int>> facets_;
    std::optional<std::vector<std::uint64_t>> faces_;
    std::uint64_t face_cap_ = kDefaultFaceCap;
};

/// The complex of the squarefree ideal I on the vertex list V: faces
/// are the subsets of V whose product monomial avoids I. Facets come
/// from minimal hitting sets of the generator supports; the explicit
/// face list is enumerated by backtracking while it fits the cap.
inline SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                            std::vector<VarIndex> vertices,
                                            std::uint64_t face_cap = kDefaultFaceCap)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("complex_from_ideal needs a squarefree ideal");

    SimplicialComplex probe = SimplicialComplex::void_complex(vertices, face_cap);
    const auto& gens = ideal.minimal();
    std::vector<std::vector<int>> supports;
    supports.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<int> s;
        for (const auto& [v, e] : g.entries()) {
            int p = probe.position_of(v);
            if (p < 0)
                throw std::invalid_argument("ideal generator uses a variable outside V: " +
                                            v.to_string());
            s.push_back(p);
        }
        std::sort(s.begin(), s.end());
        supports.push_back(std::move(s));
    }

    int n = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> facets;
    for (const auto& h : minimal_hitting_sets(supports)) {
        std::vector<int> f;
        for (int p = 0; p < n; ++p)
            if (!std::binary_search(h.begin(), h.end(), p)) f.push_back(p);
        facets.push_back(std::move(f));
    }

    std::optional<std::vector<std::uint64_t>> faces;
    if (n <= 63 && !facets.empty()) {
        std::vector<std::uint64_t> gen_masks;
        for (const auto& s : supports) {
            std::uint64_t m = 0;
            for (int p : s) m |= std::uint64_t{1} << p;
            gen_masks.push_back(m);
        }
        std::vector<std::uint64_t> out;
        bool capped = false;
        // Depth-first over vertices in ambient order; a branch extends
        // only while no generator support fits inside the new set.
        std::vector<std::pair<std::uint64_t, int>> stack = {{0, 0}};
        while (!stack.empty()) {
            auto [mask, next] = stack.back();
            stack.pop_back();
            if (next == 0) out.push_back(mask);
            for (int p = next; p < n; ++p) {
                std::uint64_t grown = mask | (std::uint64_t{1} << p);
                bool blocked = std::any_of(gen_masks.begin(), gen_masks.end(),
                                           [&](std::uint64_t g) {
                                               return (g & ~grown) == 0 &&
                                                      (g & (std::uint64_t{1} << p));
                                           });
                if (blocked) continue;
                out.push_back(grown);
                if (out.size() > face_cap) {
                    capped = true;
                    break;
                }
                stack.emplace_back(grown, p + 1);
            }
            if (capped) break;
        }
        if (!capped) {
            std::sort(out.begin(), out.end());
            faces = std::move(out);
        }
    } else if (facets.empty()) {
        faces = std::vector<std::uint64_t>{};
    }

    return SimplicialComplex::from_parts(std::move(vertices), std::move(facets),
                                         std::move(faces), face_cap);
}

/// The squarefree ideal of non-faces of the complex, presented by its
/// minimal generators (the minimal non-faces): the minimal hitting sets
/// of the facet complements.
inline MonomialIdeal ideal_from_complex(const SimplicialComplex& c)
{
    int n = static_cast<int>(c.ambient().size());
    std::vector<std::vector<int>> complements;
    for (const auto& f : c.facet_positions()) {
        std::vector<int> comp;
        for (int p = 0; p < n; ++p)
            if (!std::binary_search(f.begin(), f.end(), p)) comp.push_back(p);
        complements.push_back(std::move(comp));
    }
    std::vector<Monomial> gens;
    for (const auto& h : minimal_hitting_sets(complements))
        gens.push_back(Monomial::squarefree(c.to_names(h)));
    return MonomialIdeal(minimal_generators(std::move(gens)));
}

namespace detail {

/// Combinatorial route: every facet of sub is a face of super, and
/// every face of super with all vertices in sub's ambient set is a
/// face of sub (checked on facet intersections).
inline bool full_subcomplex_by_faces(const SimplicialComplex& sub, const SimplicialComplex& super)
{
    for (const auto& f : sub.facet_positions())
        if (!super.contains_face(sub.to_names(f))) return false;
    std::vector<VarIndex> amb = sub.ambient();
    std::sort(amb.begin(), amb.end());
    for (const auto& g : super.facet_positions()) {
        std::vector<VarIndex> trimmed;
        for (auto v : super.to_names(g))
            if (std::binary_search(amb.begin(), amb.end(), v)) trimmed.push_back(v);
        if (!sub.contains_face(trimmed)) return false;
    }
    return true;
}

/// Ideal route: the non-face ideal of sub pushes into that of super,
/// and killing the outside variables pulls super's non-face ideal back
/// into sub's.
inline bool full_subcomplex_by_ideals(const SimplicialComplex& sub, const SimplicialComplex& super)
{
    MonomialIdeal isub = ideal_from_complex(sub);
    MonomialIdeal isuper = ideal_from_complex(super);
    for (const auto& g : isub.minimal())
        if (!isuper.contains(g)) return false;
    std::vector<VarIndex> amb = sub.ambient();
    std::sort(amb.begin(), amb.end());
    for (const auto& g : isuper.minimal()) {
        const auto& es = g.entries();
        bool inside = std::all_of(es.begin(), es.end(), [&](const Monomial::Entry& en) {
            return std::binary_search(amb.begin(), amb.end(), en.first);
        });
        if (inside && !isub.contains(g)) return false;
    }
    return true;
}

}  // namespace detail

/// True when sub is a full subcomplex of super: sub is contained in
/// super and owns every face of super supported on sub's ambient
/// vertex set. Decided combinatorially and re-decided through the two
/// ideal containments; a disagreement is an internal error.
inline bool is_full_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super)
{
    for (auto v : sub.ambient())
        if (super.position_of(v) < 0)
            throw std::invalid_argument("subcomplex ambient vertex missing from the ambient "
                                        "complex: " + v.to_string());
    bool by_faces = detail::full_subcomplex_by_faces(sub, super);
    bool by_ideals = detail::full_subcomplex_by_ideals(sub, super);
    if (by_faces != by_ideals)
        throw std::logic_error("full-subcomplex routes disagree (face route " +
                               std::string(by_faces ? "yes" : "no") + ", ideal route " +
                               std::string(by_ideals ? "yes" : "no") + ")");
    return by_faces;
}

/// Link of a face: all faces disjoint from it whose union with it is a
/// face, on the ambient list V(complex) minus the face.
inline SimplicialComplex link(const SimplicialComplex& c, const std::vector<VarIndex>& face)
{
    if (!c.contains_face(face))
        throw std::invalid_argument("link of a set that is not a face");
    auto fpos = c.to_positions(face);
    std::vector<VarIndex> amb;
    for (auto v : c.vertex_set())
        if (std::find(face.begin(), face.end(), v) == face.end()) amb.push_back(v);
    std::vector<std::vector<VarIndex>> link_facets;
    for (const auto& g : c.facet_positions()) {
        if (!std::includes(g.begin(), g.end(), fpos.begin(), fpos.end())) continue;
        std::vector<int> rest;
        std::set_difference(g.begin(), g.end(), fpos.begin(), fpos.end(),
                            std::back_inserter(rest));
        link_facets.push_back(c.to_names(rest));
    }
    // A face always lies inside some facet, so link_facets is nonempty.
    return SimplicialComplex::from_facets(std::move(amb), link_facets, c.face_cap());
}

/// Face counts by size, starting at the empty face: entry k counts the
/// faces of k vertices. Requires the explicit face list.
inline std::vector<std::uint64_t> f_vector(const SimplicialComplex& c)
{
    if (c.is_void()) return {};
    const auto& masks = c.face_masks();
    std::vector<std::uint64_t> f(static_cast<std::size_t>(c.dimension()) + 2, 0);
    for (auto m : masks) f[static_cast<std::size_t>(std::popcount(m))] += 1;
    return f;
}

/// Binomial transform of the f-vector; entries may be negative for
/// complexes that are not Cohen-Macaulay.
inline std::vector<std::int64_t> h_vector(const SimplicialComplex& c)
{
    using boost::multiprecision::cpp_int;
    auto f = f_vector(c);
    if (f.empty()) return {};
    const int d = static_cast<int>(f.size()) - 1;
    auto binom = [](int n, int k) -> cpp_int {
        if (k < 0 || k > n) return 0;
        cpp_int r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) {
        cpp_int acc = 0;
        for (int i = 0; i <= j; ++i) {
            cpp_int term = binom(d - i, j - i) * cpp_int(f[static_cast<std::size_t>(i)]);
            acc += ((j - i) % 2 == 0) ? term : -term;
        }
        if (acc > std::numeric_limits<std::int64_t>::max() ||
            acc < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("h-vector entry out of range");
        h[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(acc);
    }
    return h;
}

/// Sorted edge list of the 1-skeleton, as vertex-name pairs ordered by
/// ambient position.
inline std::vector<std::pair<VarIndex, VarIndex>> one_skeleton_edges(const SimplicialComplex& c)
{
    std::set<std::pair<int, int>> edges;
    for (const auto& f : c.facet_positions())
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) edges.emplace(f[a], f[b]);
    std::vector<std::pair<VarIndex, VarIndex>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges)
        out.emplace_back(c.ambient()[static_cast<std::size_t>(a)],
                         c.ambient()[static_cast<std::size_t>(b)]);
    return out;
}

/// DOT rendering of the 1-skeleton: the vertices of the complex in
/// ambient order, then the edges sorted by position.
inline std::string one_skeleton_dot(const SimplicialComplex& c)
{
    std::string s = "graph skeleton {\n";
    for (auto v : c.vertex_set()) s += "  \"" + v.to_string() + "\";\n";
    for (const auto& [a, b] : one_skeleton_edges(c))
        s += "  \"" + a.to_string() + "\" -- \"" + b.to_string() + "\";\n";
    s += "}\n";
    return s;
}

}  // namespace facering

#endif

#ifndef FACERING_IO_HPP
#define FACERING_IO_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cm.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grobner.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "schubert.hpp"
#include "simplicial_complex.hpp"
#include "sop.hpp"
#include "varindex.hpp"

namespace facering {

using json = nlohmann::ordered_json;

/// Grid variables serialize as [row, col], line variables as a bare
/// index.
inline json var_to_json(const VarIndex& v)
{
    if (v.is_grid()) return json::array({v.row(), v.col()});
    return json(v.line_pos());
}

inline VarIndex var_from_json(const json& j)
{
    if (j.is_number_integer()) return VarIndex::line(j.get<std::int32_t>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return VarIndex::grid(j[0].get<std::int32_t>(), j[1].get<std::int32_t>());
    throw std::invalid_argument("variable must be an integer or a [row, col] pair");
}

inline json monomial_to_json(const Monomial& m)
{
    json out = json::array();
    for (const auto& [v, e] : m.entries()) out.push_back(json::array({var_to_json(v), e}));
    return out;
}

inline Monomial monomial_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("monomial must be an array of entries");
    std::vector<Monomial::Entry> entries;
    for (const auto& ent : j) {
        if (!ent.is_array() || ent.size() != 2 || !ent[1].is_number_integer())
            throw std::invalid_argument("monomial entry must be [variable, exponent]");
        entries.emplace_back(var_from_json(ent[0]), ent[1].get<std::uint64_t>());
    }
    return Monomial(std::move(entries));
}

inline json ideal_to_json(const MonomialIdeal& ideal)
{
    json out;
    out["squarefree"] = ideal.is_squarefree();
    out["generators"] = json::array();
    for (const auto& g : ideal.minimal()) out["generators"].push_back(monomial_to_json(g));
    out["pretty"] = json::array();
    for (const auto& g : ideal.minimal()) out["pretty"].push_back(g.to_string());
    return out;
}

inline MonomialIdeal ideal_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("generators"))
        throw std::invalid_argument("ideal must be an object with a generators array");
    std::vector<Monomial> gens;
    for (const auto& g : j["generators"]) gens.push_back(monomial_from_json(g));
    return MonomialIdeal(std::move(gens));
}

inline json complex_to_json(const SimplicialComplex& c)
{
    json out;
    out["vertices"] = json::array();
    for (const auto& v : c.ambient()) out["vertices"].push_back(var_to_json(v));
    out["facets"] = json::array();
    for (const auto& f : c.facet_vertices()) {
        json facet = json::array();
        for (const auto& v : f) facet.push_back(var_to_json(v));
        out["facets"].push_back(std::move(facet));
    }
    return out;
}

inline SimplicialComplex complex_from_json(const json& j,
                                           std::uint64_t face_cap = kDefaultFaceCap)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw std::invalid_argument("complex must be an object with vertices and facets");
    std::vector<VarIndex> ambient;
    for (const auto& v : j["vertices"]) ambient.push_back(var_from_json(v));
    std::vector<std::vector<VarIndex>> facets;
    for (const auto& f : j["facets"]) {
        std::vector<VarIndex> facet;
        for (const auto& v : f) facet.push_back(var_from_json(v));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(std::move(ambient), facets, face_cap);
}

/// Entries are symmetric representatives, row-major.
inline json sop_to_json(const SopMatrix& m)
{
    json out;
    out["modulus"] = m.modulus();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).symmetric_value());
        out["entries"].push_back(std::move(row));
    }
    out["complex"] = complex_to_json(m.complex());
    return out;
}

inline SopMatrix sop_from_json(const json& j, std::uint64_t face_cap = kDefaultFaceCap)
{
    if (!j.is_object() || !j.contains("modulus") || !j.contains("entries") ||
        !j.contains("complex"))
        throw std::invalid_argument("SOP matrix must carry modulus, entries, and complex");
    std::int64_t p = j["modulus"].get<std::int64_t>();
    SimplicialComplex c = complex_from_json(j["complex"], face_cap);
    std::vector<Fp> entries;
    std::size_t rows = 0;
    for (const auto& row : j["entries"]) {
        ++rows;
        if (row.size() != c.ambient().size())
            throw std::invalid_argument("SOP row width does not match the complex");
        for (const auto& e : row) entries.emplace_back(e.get<std::int64_t>(), p);
    }
    return SopMatrix(std::move(c), rows, std::move(entries), p);
}

inline json cm_report_to_json(const CmReport& r)
{
    json out;
    out["complex_id"] = r.complex_id;
    out["modulus"] = r.modulus;
    out["pure"] = r.pure;
    out["reisner_pass"] = r.reisner_pass;
    out["sop_quotient_pass"] = r.sop_quotient_pass;
    out["hvector"] = r.hvector;
    out["quotient_dims"] = r.quotient_dims;
    out["pass"] = r.reisner_pass && r.sop_quotient_pass;
    return out;
}

inline json chain_report_to_json(const ChainReport& r)
{
    json out;
    out["modulus"] = r.modulus;
    out["seed"] = r.seed;
    out["levels"] = json::array();
    for (const auto& lv : r.levels) {
        json l;
        l["level"] = lv.level;
        l["contained_in_next"] = lv.contained_in_next;
        l["full_in_next"] = lv.full_in_next;
        l["full_in_top"] = lv.full_in_top;
        l["pure"] = lv.pure;
        l["reisner_pass"] = lv.reisner_pass;
        l["sop_quotient_pass"] = lv.sop_quotient_pass;
        l["note"] = lv.note;
        l["pass"] = lv.pass();
        out["levels"].push_back(std::move(l));
    }
    out["union_equals_top"] = r.union_equals_top;
    out["sop_chain_ok"] = r.sop_chain_ok;
    out["sop_chain_note"] = r.sop_chain_note;
    out["overall"] = r.overall;
    return out;
}

inline json inclusion_report_to_json(const InclusionReport& r)
{
    json out;
    out["m"] = r.m;
    out["entries"] = json::array();
    for (const auto& e : r.entries) {
        json ent;
        ent["direction"] = e.direction;
        ent["generator"] = e.generator;
        ent["tag"] = e.tag;
        ent["ok"] = e.ok;
        out["entries"].push_back(std::move(ent));
    }
    out["pass"] = r.pass;
    return out;
}

inline json rank_to_json(const RankMatrix& r)
{
    json out = json::array();
    for (const auto& row : r) out.push_back(row);
    return out;
}

inline json pipeline_report_to_json(const PipelineReport& r)
{
    json out;
    out["permutation"] = r.permutation;
    out["m_max"] = r.m_max;
    json cfg;
    cfg["modulus"] = r.config.modulus;
    cfg["seed"] = r.config.seed;
    cfg["face_cap"] = r.config.face_cap;
    cfg["pair_budget"] = r.config.pair_budget;
    cfg["sop_budget"] = r.config.sop_budget;
    cfg["row_cap"] = r.config.row_cap;
    out["config"] = std::move(cfg);
    out["levels"] = json::array();
    for (const auto& lv : r.levels) {
        json l;
        l["m"] = lv.m;
        l["width"] = lv.width;
        l["images"] = lv.images;
        l["minor_count"] = lv.minor_count;
        l["groebner_certified"] = lv.groebner_certified;
        l["initial_generators"] = lv.initial_generators;
        l["dim"] = lv.dim;
        l["face_count"] = lv.face_count;
        l["facet_count"] = lv.facet_count;
        out["levels"].push_back(std::move(l));
    }
    out["inclusions"] = json::array();
    for (const auto& ir : r.inclusions) out["inclusions"].push_back(inclusion_report_to_json(ir));
    out["union_membership"] = json::array();
    for (const auto& um : r.union_membership) {
        json u;
        u["generator"] = um.generator;
        u["level"] = um.level;
        out["union_membership"].push_back(std::move(u));
    }
    out["union_membership_pass"] = r.union_membership_pass;
    json iu;
    iu["union_then_initial"] = json::array();
    for (const auto& m : r.initial_union.union_then_initial)
        iu["union_then_initial"].push_back(m.to_string());
    iu["initials_then_union"] = json::array();
    for (const auto& m : r.initial_union.initials_then_union)
        iu["initials_then_union"].push_back(m.to_string());
    iu["pass"] = r.initial_union.pass;
    out["initial_union"] = std::move(iu);
    out["chain"] = chain_report_to_json(r.chain);
    out["overall"] = r.overall;
    return out;
}

namespace detail {

class TextCursor {
  public:
    explicit TextCursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() const { return i_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[i_]; }
    bool eat(char c)
    {
        if (peek() != c) return false;
        ++i_;
        return true;
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::int64_t integer()
    {
        if (!at_digit()) throw std::invalid_argument(where("expected an integer"));
        std::int64_t v = 0;
        while (at_digit()) {
            v = v * 10 + (s_[i_] - '0');
            if (v < 0) throw std::overflow_error("integer literal out of range");
            ++i_;
        }
        return v;
    }

    VarIndex variable()
    {
        if (!eat('x') || !eat('['))
            throw std::invalid_argument(where("expected a variable like x[1,2] or x[3]"));
        skip_ws();
        std::int32_t a = static_cast<std::int32_t>(integer());
        skip_ws();
        if (eat(',')) {
            skip_ws();
            std::int32_t b = static_cast<std::int32_t>(integer());
            skip_ws();
            if (!eat(']')) throw std::invalid_argument(where("expected ]"));
            return VarIndex::grid(a, b);
        }
        if (!eat(']')) throw std::invalid_argument(where("expected ]"));
        return VarIndex::line(a);
    }

    std::string where(const std::string& what) const
    {
        return what + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"";
    }

  private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Parses the textual polynomial format: terms joined by + or -, each a
/// product of integer (or integer/integer) coefficients and variable
/// powers, e.g. "x[1,3]*x[2,2] - x[1,2]*x[2,3]" or "2*x[1]^3 - 1/2".
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const K& sample)
{
    detail::TextCursor c(text);
    c.skip_ws();
    if (c.done()) throw std::invalid_argument("empty polynomial text");
    Polynomial<K> out = Polynomial<K>::zero();
    bool first = true;
    while (!c.done()) {
        c.skip_ws();
        if (c.done()) break;
        int sign = 1;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument(c.where("expected + or - between terms"));
        }
        K coef = from_int(sample, sign);
        Monomial mono = Monomial::one();
        do {
            c.skip_ws();
            if (c.at_digit()) {
                K val = from_int(sample, c.integer());
                c.skip_ws();
                if (c.eat('/')) {
                    c.skip_ws();
                    std::int64_t den = c.integer();
                    if (den == 0) throw std::invalid_argument("zero denominator");
                    val = val * inv(from_int(sample, den));
                }
                coef = coef * val;
            } else if (c.peek() == 'x') {
                VarIndex v = c.variable();
                std::uint64_t e = 1;
                c.skip_ws();
                if (c.eat('^')) {
                    c.skip_ws();
                    e = static_cast<std::uint64_t>(c.integer());
                    if (e == 0) throw std::invalid_argument("exponent must be positive");
                }
                mono = mono * Monomial({{v, e}});
            } else {
                throw std::invalid_argument(c.where("expected a coefficient or variable"));
            }
            c.skip_ws();
        } while (c.eat('*'));
        out = out + Polynomial<K>::term(mono, coef);
        first = false;
    }
    return out;
}

}  // namespace facering

#endif

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "facering/facering.hpp"

using namespace facering;

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::stoull(v);
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// --field accepts a prime modulus or "Q" for the rationals.
struct FieldChoice {
    bool rational = false;
    std::int64_t p = kDefaultPrime;
};

FieldChoice parse_field(const std::string& s)
{
    FieldChoice f;
    if (s == "Q" || s == "q") {
        f.rational = true;
        return f;
    }
    try {
        f.p = std::stoll(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--field", "expected a prime or Q, got " + s);
    }
    if (!is_prime(f.p)) throw CLI::ValidationError("--field", s + " is not prime");
    return f;
}

std::int64_t require_prime_field(const FieldChoice& f, const std::string& who)
{
    if (f.rational)
        throw CLI::ValidationError("--field", who + " works over a prime field only");
    return f.p;
}

std::vector<int> parse_images(const std::string& s)
{
    std::istringstream in(s);
    std::vector<int> images;
    int v;
    while (in >> v) images.push_back(v);
    if (!in.eof()) throw std::invalid_argument("permutation must be a list of integers");
    if (images.empty()) throw std::invalid_argument("empty permutation");
    return images;
}

/// Infinite permutation spec: "identity", or a cycle list like
/// "(1 2)(3 4 5)".
InfinitePermutation parse_infinite(const std::string& spec)
{
    if (spec == "identity" || spec == "id" || spec == "()")
        return InfinitePermutation::identity();
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
    };
    skip_ws();
    while (i < spec.size()) {
        if (spec[i] != '(') throw std::invalid_argument("expected ( in cycle list");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < spec.size() && spec[i] == ')') {
                ++i;
                break;
            }
            std::size_t j = i;
            while (j < spec.size() &&
                   (std::isdigit(static_cast<unsigned char>(spec[j])) || spec[j] == ','))
                ++j;
            if (j == i) throw std::invalid_argument("expected an integer in cycle");
            std::string tok = spec.substr(i, j - i);
            std::erase(tok, ',');
            if (!tok.empty()) cyc.push_back(std::stoi(tok));
            i = j;
        }
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
            pairs.emplace_back(cyc[k], cyc[k + 1]);
        if (cyc.size() > 1) pairs.emplace_back(cyc.back(), cyc.front());
        skip_ws();
    }
    return InfinitePermutation::finitely_supported(std::move(pairs));
}

TermOrder parse_order(const std::string& s)
{
    if (s == "antidiag") return TermOrder::antidiagonal();
    if (s == "lex") return TermOrder::infinite_lex();
    throw CLI::ValidationError("--order", "expected antidiag or lex, got " + s);
}

struct Caps {
    std::uint64_t face_cap = env_u64("FACERING_FACE_CAP", kDefaultFaceCap);
    std::size_t pair_budget =
        static_cast<std::size_t>(env_u64("FACERING_PAIR_BUDGET", 65536));
    std::size_t sop_budget =
        static_cast<std::size_t>(env_u64("FACERING_SOP_BUDGET", kDefaultSopBudget));
    std::size_t row_cap = static_cast<std::size_t>(env_u64("FACERING_ROW_CAP", kDefaultRowCap));
};

void add_cap_flags(CLI::App* cmd, Caps& caps)
{
    cmd->add_option("--face-cap", caps.face_cap, "explicit face enumeration limit");
    cmd->add_option("--pair-budget", caps.pair_budget, "Buchberger pair limit");
    cmd->add_option("--sop-budget", caps.sop_budget, "parameter matrix sampling limit");
    cmd->add_option("--row-cap", caps.row_cap, "matrix row limit for goodness checks");
}

template <class K>
int run_groebner_check(const json& input, const K& sample, const std::string& field_name,
                       const TermOrder& ord, const std::string& order_name)
{
    if (!input.is_object() || !input.contains("generators"))
        throw std::invalid_argument("basis file must be an object with a generators array");
    std::vector<Polynomial<K>> basis;
    for (const auto& g : input["generators"])
        basis.push_back(parse_polynomial<K>(g.get<std::string>(), sample));
    bool ok = is_groebner_basis(basis, ord);
    json out;
    out["field"] = field_name;
    out["order"] = order_name;
    out["generator_count"] = basis.size();
    out["is_groebner"] = ok;
    emit(out);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stanley-Reisner complexes, Groebner bases, and determinantal ideals "
                 "of partial permutations, with Cohen-Macaulay verification pipelines"};
    app.require_subcommand(1);
    int rc = 0;

    Caps caps;
    std::string field_str = std::to_string(kDefaultPrime);
    std::uint64_t seed = 1;

    // sr: the squarefree-ideal / complex correspondence
    auto* sr = app.add_subcommand("sr", "squarefree monomial ideals and their complexes");
    sr->require_subcommand(1);
    {
        auto* fi = sr->add_subcommand("from-ideal", "complex of a squarefree monomial ideal");
        auto file = std::make_shared<std::string>();
        auto verts = std::make_shared<std::string>();
        fi->add_option("ideal", *file, "ideal JSON file")->required();
        fi->add_option("--vertices", *verts, "JSON array of ambient vertices");
        add_cap_flags(fi, caps);
        fi->callback([&rc, file, verts, &caps] {
            MonomialIdeal ideal = ideal_from_json(read_json_file(*file));
            std::vector<VarIndex> ambient;
            if (verts->empty()) {
                ambient = ideal.variables();
            } else {
                for (const auto& v : json::parse(*verts)) ambient.push_back(var_from_json(v));
            }
            emit(complex_to_json(complex_from_ideal(ideal, ambient, caps.face_cap)));
            rc = 0;
        });
    }
    {
        auto* ti = sr->add_subcommand("to-ideal", "squarefree ideal of a complex");
        auto file = std::make_shared<std::string>();
        ti->add_option("complex", *file, "complex JSON file")->required();
        add_cap_flags(ti, caps);
        ti->callback([&rc, file, &caps] {
            auto c = complex_from_json(read_json_file(*file), caps.face_cap);
            emit(ideal_to_json(ideal_from_complex(c)));
            rc = 0;
        });
    }

    // check-cm: both Cohen-Macaulay certificates on one complex
    {
        auto* cc = app.add_subcommand("check-cm", "run both Cohen-Macaulay certificates");
        auto file = std::make_shared<std::string>();
        cc->add_option("--complex", *file, "complex JSON file")->required();
        cc->add_option("--field", field_str, "prime modulus");
        cc->add_option("--seed", seed, "sampling seed");
        add_cap_flags(cc, caps);
        cc->callback([&rc, file, &field_str, &seed, &caps] {
            std::int64_t p = require_prime_field(parse_field(field_str), "check-cm");
            auto c = complex_from_json(read_json_file(*file), caps.face_cap);
            if (c.is_void()) throw std::invalid_argument("check-cm: void complex");
            CmReport rep;
            if (c.is_pure()) {
                auto m = find_good_sop(c, p, seed, caps.sop_budget, caps.row_cap);
                rep = sop_quotient_check(m, *file);
            } else {
                rep.complex_id = *file;
                rep.modulus = p;
                rep.pure = false;
                rep.reisner_pass = reisner_cm(c, p);
                rep.sop_quotient_pass = false;
                rep.hvector = h_vector(c);
            }
            emit(cm_report_to_json(rep));
            rc = (rep.pure && rep.reisner_pass && rep.sop_quotient_pass) ? 0 : 1;
        });
    }

    // verify-chain: full-subcomplex chain hypotheses
    {
        auto* vc = app.add_subcommand("verify-chain", "verify an increasing chain of complexes");
        auto file = std::make_shared<std::string>();
        vc->add_option("--chain", *file, "JSON file with {chain: [...], top: {...}?}")
            ->required();
        vc->add_option("--field", field_str, "prime modulus");
        vc->add_option("--seed", seed, "sampling seed");
        add_cap_flags(vc, caps);
        vc->callback([&rc, file, &field_str, &seed, &caps] {
            std::int64_t p = require_prime_field(parse_field(field_str), "verify-chain");
            json in = read_json_file(*file);
            if (!in.is_object() || !in.contains("chain"))
                throw std::invalid_argument("chain file must carry a chain array");
            std::vector<SimplicialComplex> chain;
            for (const auto& cj : in["chain"])
                chain.push_back(complex_from_json(cj, caps.face_cap));
            if (chain.empty()) throw std::invalid_argument("empty chain");
            SimplicialComplex top = in.contains("top")
                                        ? complex_from_json(in["top"], caps.face_cap)
                                        : chain.back();
            auto rep = verify_cm_chain(chain, top, p, seed, caps.sop_budget, caps.row_cap);
            emit(chain_report_to_json(rep));
            rc = rep.overall ? 0 : 1;
        });
    }

    // sop: good systems of parameters
    auto* sop = app.add_subcommand("sop", "good linear systems of parameters");
    sop->require_subcommand(1);
    {
        auto* sf = sop->add_subcommand("find", "sample a good matrix for a complex");
        auto file = std::make_shared<std::string>();
        sf->add_option("--complex", *file, "complex JSON file")->required();
        sf->add_option("--field", field_str, "prime modulus");
        sf->add_option("--seed", seed, "sampling seed");
        add_cap_flags(sf, caps);
        sf->callback([&rc, file, &field_str, &seed, &caps] {
            std::int64_t p = require_prime_field(parse_field(field_str), "sop find");
            auto c = complex_from_json(read_json_file(*file), caps.face_cap);
            emit(sop_to_json(find_good_sop(c, p, seed, caps.sop_budget, caps.row_cap)));
            rc = 0;
        });
    }
    {
        auto* se = sop->add_subcommand("extend", "extend a good matrix to a bigger complex");
        auto base_file = std::make_shared<std::string>();
        auto big_file = std::make_shared<std::string>();
        se->add_option("--base", *base_file, "SOP JSON file")->required();
        se->add_option("--complex", *big_file, "bigger complex JSON file")->required();
        se->add_option("--seed", seed, "sampling seed");
        add_cap_flags(se, caps);
        se->callback([&rc, base_file, big_file, &seed, &caps] {
            auto base = sop_from_json(read_json_file(*base_file), caps.face_cap);
            auto big = complex_from_json(read_json_file(*big_file), caps.face_cap);
            emit(sop_to_json(
                extend_good_sop(base, big, seed, caps.sop_budget, caps.row_cap)));
            rc = 0;
        });
    }

    // groebner: Buchberger certification
    {
        auto* gc = app.add_subcommand("groebner", "Groebner basis checks");
        gc->require_subcommand(1);
        auto* ck = gc->add_subcommand("check", "run Buchberger's criterion on a basis");
        auto file = std::make_shared<std::string>();
        auto order_str = std::make_shared<std::string>("antidiag");
        ck->add_option("--basis", *file, "JSON file with generators as text polynomials")
            ->required();
        ck->add_option("--field", field_str, "prime modulus or Q");
        ck->add_option("--order", *order_str, "antidiag or lex");
        ck->callback([&rc, file, order_str, &field_str] {
            FieldChoice f = parse_field(field_str);
            TermOrder ord = parse_order(*order_str);
            json in = read_json_file(*file);
            if (f.rational)
                rc = run_groebner_check<Rational>(in, Rational(0), "Q", ord, *order_str);
            else
                rc = run_groebner_check<Fp>(in, Fp(0, f.p), std::to_string(f.p), ord,
                                            *order_str);
        });
    }

    // schubert: determinantal ideals of partial permutations
    auto* sch = app.add_subcommand("schubert", "determinantal ideals of partial permutations");
    sch->require_subcommand(1);
    auto perm_str = std::make_shared<std::string>();
    {
        auto* rk = sch->add_subcommand("rank", "rank matrix of a partial permutation");
        auto as_json = std::make_shared<bool>(false);
        rk->add_option("perm", *perm_str, "image list, e.g. \"2 5 3 1\"")->required();
        rk->add_flag("--json", *as_json, "emit JSON instead of text rows");
        rk->callback([&rc, perm_str, as_json] {
            auto p = PartialPermutation::from_images(parse_images(*perm_str));
            auto r = rank_matrix(p);
            if (*as_json) {
                emit(rank_to_json(r));
            } else {
                for (const auto& row : r) {
                    std::string line;
                    for (int v : row) line += (line.empty() ? "" : " ") + std::to_string(v);
                    std::cout << line << "\n";
                }
            }
            rc = 0;
        });
    }
    {
        auto* id = sch->add_subcommand("ideal", "generators of the determinantal ideal");
        auto essential = std::make_shared<bool>(false);
        auto as_json = std::make_shared<bool>(false);
        id->add_option("perm", *perm_str, "image list")->required();
        id->add_flag("--essential", *essential, "prune redundant minors");
        id->add_flag("--json", *as_json, "emit JSON instead of one generator per line");
        id->add_option("--field", field_str, "prime modulus or Q");
        id->callback([&rc, perm_str, essential, as_json, &field_str] {
            auto p = PartialPermutation::from_images(parse_images(*perm_str));
            FieldChoice f = parse_field(field_str);
            std::vector<std::string> gens;
            if (f.rational)
                for (const auto& g : determinantal_ideal<Rational>(p, Rational(0), *essential))
                    gens.push_back(g.to_string());
            else
                for (const auto& g : determinantal_ideal<Fp>(p, Fp(0, f.p), *essential))
                    gens.push_back(g.to_string());
            if (*as_json) {
                json out;
                out["field"] = f.rational ? "Q" : std::to_string(f.p);
                out["essential"] = *essential;
                out["generators"] = gens;
                emit(out);
            } else {
                for (const auto& g : gens) std::cout << g << "\n";
            }
            rc = 0;
        });
    }
    {
        auto* in = sch->add_subcommand("initial", "antidiagonal initial ideal");
        auto verify = std::make_shared<bool>(false);
        in->add_option("perm", *perm_str, "image list")->required();
        in->add_flag("--verify", *verify, "certify the minors via Buchberger first");
        in->add_option("--field", field_str, "prime modulus for verification");
        in->callback([&rc, perm_str, verify, &field_str] {
            auto p = PartialPermutation::from_images(parse_images(*perm_str));
            std::int64_t q = require_prime_field(parse_field(field_str), "schubert initial");
            emit(ideal_to_json(antidiagonal_initial_ideal(p, *verify, q)));
            rc = 0;
        });
    }
    {
        auto* cx = sch->add_subcommand("complex", "complex of the antidiagonal initial ideal");
        auto dot = std::make_shared<bool>(false);
        cx->add_option("perm", *perm_str, "image list")->required();
        cx->add_flag("--dot", *dot, "emit the 1-skeleton in DOT format");
        add_cap_flags(cx, caps);
        cx->callback([&rc, perm_str, dot, &caps] {
            auto p = PartialPermutation::from_images(parse_images(*perm_str));
            auto c = initial_complex(p, caps.face_cap);
            if (*dot)
                std::cout << one_skeleton_dot(c);
            else
                emit(complex_to_json(c));
            rc = 0;
        });
    }

    // schubert pipeline / top-level alias: the full verification run
    auto rule = std::make_shared<std::string>();
    auto inf_perm = std::make_shared<std::string>();
    auto mmax = std::make_shared<int>(3);
    auto configure_pipeline = [&](CLI::App* pl) {
        auto* r = pl->add_option("--rule", *rule, "built-in family: even");
        auto* q = pl->add_option("--perm", *inf_perm, "cycle list or \"identity\"");
        r->excludes(q);
        pl->add_option("--mmax", *mmax, "largest truncation level")->required();
        pl->add_option("--seed", seed, "sampling seed");
        pl->add_option("--field", field_str, "prime modulus");
        add_cap_flags(pl, caps);
        pl->callback([&rc, rule, inf_perm, mmax, &seed, &field_str, &caps] {
            InfinitePermutation s = InfinitePermutation::identity();
            if (!rule->empty()) {
                if (*rule != "even")
                    throw CLI::ValidationError("--rule", "unknown rule " + *rule);
                s = InfinitePermutation::rule_even();
            } else if (!inf_perm->empty()) {
                s = parse_infinite(*inf_perm);
            } else {
                throw CLI::ValidationError("pipeline", "need --rule or --perm");
            }
            PipelineConfig cfg;
            cfg.modulus = require_prime_field(parse_field(field_str), "pipeline");
            cfg.seed = seed;
            cfg.face_cap = caps.face_cap;
            cfg.pair_budget = caps.pair_budget;
            cfg.sop_budget = caps.sop_budget;
            cfg.row_cap = caps.row_cap;
            auto rep = schubert_pipeline(s, *mmax, cfg);
            emit(pipeline_report_to_json(rep));
            rc = rep.overall ? 0 : 1;
        });
    };
    configure_pipeline(sch->add_subcommand("pipeline", "run the full verification tower"));
    configure_pipeline(
        app.add_subcommand("pipeline", "run the full verification tower (alias)"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 2;
    } catch (const budget_exhausted& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    } catch (const facering::error& e) {
        std::cerr << "verification: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

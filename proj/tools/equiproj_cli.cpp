// equiproj: construct polytopes and check equiprojectivity from the shell.
//
// Exit codes: 0 success / equiprojective, 1 negative verdict, 2 checker
// disagreement, 3 input or dimension error, 4 resource bound exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "equiproj/equiprojectivity.hpp"
#include "equiproj/errors.hpp"
#include "equiproj/families.hpp"
#include "equiproj/io.hpp"
#include "equiproj/lattice.hpp"
#include "equiproj/minkowski.hpp"
#include "equiproj/omatroid.hpp"

using namespace equiproj;

namespace {

enum Exit { kOk = 0, kNegative = 1, kDisagree = 2, kInputError = 3, kResource = 4 };

constexpr std::uint64_t kDefaultSeed = 1;

Json header(const std::string& command, std::optional<std::uint64_t> seed) {
    Json j;
    j["tool"] = "equiproj";
    j["version"] = kToolVersion;
    j["command"] = command;
    if (seed) j["seed"] = *seed;
    return j;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

void emit_json(const Json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

// "a,b,c;d,e,f;..." -> vectors.
std::vector<Vec3> parse_vector_list(const std::string& text) {
    std::vector<Vec3> out;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<Rat> c;
        std::stringstream cols(row);
        std::string item;
        while (std::getline(cols, item, ',')) {
            auto b = item.find_first_not_of(" \t");
            auto e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw ParseError("empty coordinate in \"" + text + "\"");
            c.push_back(parse_rat(item.substr(b, e - b + 1)));
        }
        if (c.size() != 3) throw ParseError("expected 3 coordinates per vector in \"" + text + "\"");
        out.emplace_back(c[0], c[1], c[2]);
    }
    if (out.empty()) throw ParseError("no vectors given");
    return out;
}

void require_3d(const Polytope3& p, const std::string& what) {
    if (p.dimension() != 3)
        throw PreconditionError(what + " is " + std::to_string(p.dimension()) +
                                "-dimensional; a 3-dimensional polytope is required");
}

std::string kappa_text(const Polytope3& p) {
    if (p.dimension() != 3) return "none (not 3-dimensional)";
    EquiprojectivityReport r = check_aggregated(p);
    return r.kappa ? std::to_string(*r.kappa) : "none (not equiprojective)";
}

void write_polytope(const Polytope3& p, const std::string& out) {
    emit(polytope_json(p), out);
    if (!out.empty()) std::cout << "wrote " << out << " (" << p.vertices().size() << " vertices)\n";
    std::cout << "predicted kappa: " << kappa_text(p) << '\n';
}

struct GenOptions {
    std::string out;
    std::string generators;
    int count = 0;
    int sides = 0;
    int k = 0;
    std::uint64_t seed = kDefaultSeed;
};

struct CheckOptions {
    std::string file;
    std::string method = "both";
    int oracle_samples = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

int run_check(const CheckOptions& o) {
    Polytope3 p = load_polytope(o.file);
    require_3d(p, o.file);
    Json j = header("check", o.oracle_samples > 0 ? std::optional(o.seed) : std::nullopt);
    j["input"] = o.file;
    j["vertices"] = p.vertices().size();

    std::vector<std::pair<std::string, bool>> verdicts;
    std::optional<int> kappa;
    if (o.method == "cone" || o.method == "both") {
        EquiprojectivityReport r = check_aggregated(p);
        j["cone"] = report_json(r);
        verdicts.emplace_back("cone", r.is_equiprojective);
        kappa = r.kappa;
    }
    if (o.method == "matching" || o.method == "both") {
        auto pairing = check_hasan_lubiw(p);
        Json m;
        m["is_equiprojective"] = pairing.has_value();
        if (pairing) m["pairs"] = pairing->pairs.size();
        j["matching"] = std::move(m);
        verdicts.emplace_back("matching", pairing.has_value());
    }
    if (o.oracle_samples > 0) {
        auto hist = shadow_histogram(p, o.oracle_samples, o.seed);
        Json h = Json::object();
        for (const auto& [count, freq] : hist) h[std::to_string(count)] = freq;
        j["oracle"] = {{"samples", o.oracle_samples}, {"histogram", h}};
        bool uniform = hist.size() == 1;
        verdicts.emplace_back("oracle", uniform);
        if (uniform && kappa && hist.begin()->first != *kappa) verdicts.emplace_back("oracle-kappa", false);
    }

    bool agree = true;
    for (const auto& v : verdicts) agree = agree && v.second == verdicts.front().second;
    bool positive = !verdicts.empty() && verdicts.front().second && agree;
    j["agreement"] = agree;
    j["is_equiprojective"] = positive;
    j["kappa"] = positive && kappa ? Json(*kappa) : Json(nullptr);
    emit_json(j, o.out);
    if (!agree) {
        std::cerr << "error: checkers disagree:";
        for (const auto& [name, v] : verdicts) std::cerr << ' ' << name << '=' << (v ? "yes" : "no");
        std::cerr << '\n';
        return kDisagree;
    }
    return positive ? kOk : kNegative;
}

struct SumOptions {
    std::string p, q, out, report;
};

int run_sum(const SumOptions& o) {
    Polytope3 p = load_polytope(o.p);
    Polytope3 q = load_polytope(o.q);
    SumVerdict v = sum_equiprojective(p, q);
    MinkowskiSum s = minkowski_sum(p, q);
    if (!o.out.empty()) write_text_file(o.out, polytope_json(s.sum));

    Json j = header("sum", std::nullopt);
    j["inputs"] = {o.p, o.q};
    j["certificate"] = certificate_json(v.certificate);
    j["predicate"] = v.equiprojective;
    int code = kOk;
    if (s.sum.dimension() != 3) {
        j["error"] = "sum is not 3-dimensional";
        emit_json(j, o.report);
        std::cerr << "error: the sum is " << s.sum.dimension() << "-dimensional\n";
        return kInputError;
    }
    EquiprojectivityReport direct = check_aggregated(s.sum);
    j["direct"] = report_json(direct);
    j["direct_kappa"] = direct.kappa ? Json(*direct.kappa) : Json(nullptr);
    if (v.equiprojective) {
        int predicted = kappa(p) + kappa(q) - v.certificate.lambda;
        j["predicted_kappa"] = predicted;
        if (!direct.kappa || *direct.kappa != predicted) {
            j["mismatch"] = true;
            code = kDisagree;
        }
    } else {
        j["predicted_kappa"] = nullptr;
        if (direct.is_equiprojective) {
            j["mismatch"] = true;
            code = kDisagree;
        } else {
            code = kNegative;
        }
    }
    emit_json(j, o.report);
    if (code == kDisagree) std::cerr << "error: predicted and direct results differ\n";
    return code;
}

struct ProjectOptions {
    std::string file, direction, out;
    int histogram = 0;
    std::uint64_t seed = kDefaultSeed;
};

int run_project(const ProjectOptions& o) {
    Polytope3 p = load_polytope(o.file);
    require_3d(p, o.file);
    if (o.direction.empty() == (o.histogram <= 0))
        throw PreconditionError("give exactly one of --direction or --histogram");
    if (!o.direction.empty()) {
        auto d = parse_vector_list(o.direction);
        if (d.size() != 1) throw ParseError("--direction takes a single vector");
        Json j = header("project", std::nullopt);
        j["direction"] = vec_json(d[0]);
        j["shadow_vertices"] = shadow_vertex_count(p, d[0]);
        emit_json(j, o.out);
        return kOk;
    }
    auto hist = shadow_histogram(p, o.histogram, o.seed);
    Json j = header("project", o.seed);
    j["samples"] = o.histogram;
    Json h = Json::object();
    for (const auto& [count, freq] : hist) h[std::to_string(count)] = freq;
    j["histogram"] = std::move(h);
    emit_json(j, o.out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equiprojectivity checks for 3-polytopes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::uint64_t env_seed = kDefaultSeed;
    if (const char* s = std::getenv("EQUIPROJ_SEED")) {
        try {
            env_seed = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "error: EQUIPROJ_SEED is not an unsigned integer\n";
            return kInputError;
        }
    }
    const std::string seed_help = "random seed (default: $EQUIPROJ_SEED, else 1)";

    // gen
    GenOptions gen;
    gen.seed = env_seed;
    auto* gen_cmd = app.add_subcommand("gen", "construct a polytope and write its vertex file");
    gen_cmd->require_subcommand(1);
    auto* gen_zono = gen_cmd->add_subcommand("zonotope", "zonotope from explicit or random generators");
    auto* gopt = gen_zono->add_option("--generators", gen.generators, "generators as \"a,b,c;d,e,f;...\"");
    auto* copt = gen_zono->add_option("--count", gen.count, "number of random generators (>= 3)")
                     ->check(CLI::Range(3, 1000));
    gopt->excludes(copt);
    gen_zono->add_option("--seed", gen.seed, seed_help);
    auto* gen_prism = gen_cmd->add_subcommand("prism", "prism over a convex m-gon");
    gen_prism->add_option("--sides", gen.sides, "number of polygon vertices (>= 3)")->required();
    auto* gen_odd = gen_cmd->add_subcommand("odd", "Z + t_Z with kappa = k (odd k >= 9)");
    gen_odd->add_option("--k", gen.k, "target shadow vertex count")->required();
    gen_odd->add_option("--seed", gen.seed, seed_help);
    auto* gen_simplex = gen_cmd->add_subcommand("simplex", "regular tetrahedron");
    for (auto* c : {gen_zono, gen_prism, gen_odd, gen_simplex})
        c->add_option("-o,--output", gen.out, "output file (default: stdout)");

    // check
    CheckOptions chk;
    chk.seed = env_seed;
    auto* check_cmd = app.add_subcommand("check", "decide equiprojectivity of a polytope file");
    check_cmd->add_option("file", chk.file, "polytope file")->required();
    check_cmd->add_option("--method", chk.method, "cone, matching or both")
        ->check(CLI::IsMember({"cone", "matching", "both"}))
        ->capture_default_str();
    check_cmd->add_option("--oracle-samples", chk.oracle_samples, "random shadows to sample (0 disables)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    check_cmd->add_option("--seed", chk.seed, seed_help);
    check_cmd->add_option("-o,--output", chk.out, "report file (default: stdout)");

    // sum
    SumOptions sum;
    auto* sum_cmd = app.add_subcommand("sum", "Minkowski sum with kappa prediction");
    sum_cmd->add_option("p", sum.p, "first summand file")->required();
    sum_cmd->add_option("q", sum.q, "second summand file")->required();
    sum_cmd->add_option("-o,--output", sum.out, "vertex file for the sum");
    sum_cmd->add_option("--report", sum.report, "report file (default: stdout)");

    // project
    ProjectOptions prj;
    prj.seed = env_seed;
    auto* project_cmd = app.add_subcommand("project", "shadow vertex counts");
    project_cmd->add_option("file", prj.file, "polytope file")->required();
    auto* dopt = project_cmd->add_option("--direction", prj.direction, "projection direction \"a,b,c\"");
    auto* hopt = project_cmd->add_option("--histogram", prj.histogram, "number of random admissible directions")
                     ->check(CLI::PositiveNumber);
    dopt->excludes(hopt);
    project_cmd->add_option("--seed", prj.seed, seed_help);
    project_cmd->add_option("-o,--output", prj.out, "report file (default: stdout)");

    // omatroid
    auto* om_cmd = app.add_subcommand("omatroid", "oriented matroids of generator sets");
    om_cmd->require_subcommand(1);
    std::string om_a, om_b, om_out;
    bool om_type = false;
    int census_n = 3, census_samples = 100;
    std::uint64_t census_seed = env_seed;
    auto* om_cov = om_cmd->add_subcommand("covectors", "list the covectors of a generator file");
    om_cov->add_option("file", om_a, "generator file")->required();
    auto* om_eq = om_cmd->add_subcommand("equiv", "oriented-matroid equivalence of two generator files");
    om_eq->add_option("a", om_a, "first generator file")->required();
    om_eq->add_option("b", om_b, "second generator file")->required();
    om_eq->add_flag("--type", om_type, "also allow sign flips (zonotope combinatorial type)");
    auto* om_census = om_cmd->add_subcommand("census", "count zonotope types among random generator sets");
    om_census->add_option("--n", census_n, "generators per set (3..5)")->check(CLI::Range(3, 5))->capture_default_str();
    om_census->add_option("--samples", census_samples, "number of random sets")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    om_census->add_option("--seed", census_seed, seed_help);
    for (auto* c : {om_cov, om_eq, om_census}) c->add_option("-o,--output", om_out, "report file (default: stdout)");

    // export
    std::string ex_file, ex_format = "off", ex_out;
    int ex_precision = kDefaultOffPrecision;
    auto* export_cmd = app.add_subcommand("export", "write a mesh or exact vertex file");
    export_cmd->add_option("file", ex_file, "polytope file")->required();
    export_cmd->add_option("--format", ex_format, "off or json")
        ->check(CLI::IsMember({"off", "json"}))
        ->capture_default_str();
    export_cmd->add_option("--precision", ex_precision, "significant digits in OFF output")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    export_cmd->add_option("-o,--output", ex_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*gen_cmd) {
            Polytope3 p;
            if (*gen_zono) {
                if (!gen.generators.empty()) {
                    p = zonotope(GeneratorSet::make(parse_vector_list(gen.generators)));
                } else if (gen.count > 0) {
                    std::mt19937_64 rng(gen.seed);
                    p = zonotope(random_generators(static_cast<std::size_t>(gen.count), rng));
                } else {
                    throw PreconditionError("gen zonotope needs --generators or --count");
                }
            } else if (*gen_prism) {
                if (gen.sides < 3) throw PreconditionError("--sides must be at least 3");
                p = prism(gen.sides);
            } else if (*gen_odd) {
                p = odd_equiprojective(gen.k, gen.seed);
            } else {
                p = regular_tetrahedron();
            }
            write_polytope(p, gen.out);
            return kOk;
        }
        if (*check_cmd) return run_check(chk);
        if (*sum_cmd) return run_sum(sum);
        if (*project_cmd) return run_project(prj);
        if (*om_cmd) {
            if (*om_cov) {
                Json j = header("omatroid covectors", std::nullopt);
                j["result"] = covectors_json(covectors(load_generators(om_a)));
                emit_json(j, om_out);
                return kOk;
            }
            if (*om_eq) {
                auto a = load_generators(om_a);
                auto b = load_generators(om_b);
                Json j = header("omatroid equiv", std::nullopt);
                j["mode"] = om_type ? "zonotope-type" : "oriented-matroid";
                bool eq = om_type ? zonotope_type_equal(GeneratorSet::make(a), GeneratorSet::make(b))
                                  : om_equivalent(a, b);
                j["equivalent"] = eq;
                emit_json(j, om_out);
                return eq ? kOk : kNegative;
            }
            Json j = header("omatroid census", census_seed);
            j["result"] = census_json(type_census(census_n, census_samples, census_seed));
            emit_json(j, om_out);
            return kOk;
        }
        if (*export_cmd) {
            Polytope3 p = load_polytope(ex_file);
            emit(ex_format == "off" ? to_off(p, ex_precision) : polytope_json(p), ex_out);
            return kOk;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const InadmissibleDirection& e) {
        std::cerr << "error: inadmissible direction: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

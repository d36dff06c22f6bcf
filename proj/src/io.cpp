#include "equiproj/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "equiproj/errors.hpp"

namespace equiproj {

namespace {

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rat parse_entry(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw ParseError("coordinates must be integers or rational strings, got " + j.dump());
}

std::vector<Vec3> parse_triples(const std::string& text, const char* key) {
    Json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
        throw ParseError(std::string("expected an object with a \"") + key + "\" array");
    std::vector<Vec3> out;
    for (const Json& row : doc[key]) {
        if (!row.is_array() || row.size() != 3) throw ParseError("each point must have exactly 3 coordinates");
        out.emplace_back(parse_entry(row[0]), parse_entry(row[1]), parse_entry(row[2]));
    }
    if (out.empty()) throw ParseError(std::string("\"") + key + "\" is empty");
    return out;
}

// Exact integer as a JSON number when it fits, otherwise as a string.
Json int_json(const Rat& r) {
    Int n = numerator(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return n.convert_to<long long>();
    return n.str();
}

Json ray_json(const Vec3& v) { return Json::array({int_json(v.x), int_json(v.y), int_json(v.z)}); }

Json incidence_json(const EdgeFacetIncidence& i) { return Json{{"edge", i.edge}, {"facet", i.facet}}; }

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("write failed for " + path);
}

std::vector<Vec3> parse_points(const std::string& json_text) { return parse_triples(json_text, "vertices"); }

Polytope3 parse_polytope(const std::string& json_text) { return hull3(parse_points(json_text)); }

Polytope3 load_polytope(const std::string& path) { return parse_polytope(read_text_file(path)); }

std::string polytope_json(const Polytope3& p) {
    std::string out = "{\n  \"vertices\": [";
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        const Vec3& v = p.vertex(i);
        out += i ? ",\n    " : "\n    ";
        out += "[\"" + format_rat(v.x) + "\", \"" + format_rat(v.y) + "\", \"" + format_rat(v.z) + "\"]";
    }
    out += "\n  ]\n}\n";
    return out;
}

std::vector<Vec3> parse_generators(const std::string& json_text) {
    std::vector<Vec3> g = parse_triples(json_text, "generators");
    for (const Vec3& v : g)
        if (!is_integral(v)) throw ParseError("generators must have integer coordinates");
    return g;
}

std::vector<Vec3> load_generators(const std::string& path) { return parse_generators(read_text_file(path)); }

std::string to_off(const Polytope3& p, int precision) {
    std::ostringstream os;
    os.precision(precision);
    const auto& cycles = p.facet_cycles();
    os << "OFF\n" << p.vertices().size() << ' ' << cycles.size() << ' ' << p.edges().size() << '\n';
    for (const Vec3& v : p.vertices())
        os << v.x.convert_to<double>() << ' ' << v.y.convert_to<double>() << ' ' << v.z.convert_to<double>() << '\n';
    for (const auto& c : cycles) {
        os << c.size();
        for (std::size_t v : c) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

Json vec_json(const Vec3& v) { return Json::array({format_rat(v.x), format_rat(v.y), format_rat(v.z)}); }

Json report_json(const EquiprojectivityReport& r) {
    Json j;
    j["is_equiprojective"] = r.is_equiprojective;
    j["kappa"] = r.kappa ? Json(*r.kappa) : Json(nullptr);
    Json dirs = Json::array();
    for (const auto& [u, c] : r.per_direction) dirs.push_back({{"direction", ray_json(u.dir())}, {"case", to_string(c)}});
    j["directions"] = std::move(dirs);
    if (r.pairing) {
        Json pairs = Json::array();
        for (const auto& [a, b] : r.pairing->pairs) pairs.push_back({incidence_json(a), incidence_json(b)});
        j["pairing"] = std::move(pairs);
    }
    return j;
}

Json certificate_json(const SumCertificate& c) {
    Json j;
    Json dirs = Json::array();
    for (const SharedDirection& s : c.shared_directions)
        dirs.push_back({{"direction", ray_json(s.direction.dir())},
                        {"case", to_string(s.tag)},
                        {"p_full_plane", s.p_full},
                        {"q_full_plane", s.q_full}});
    j["shared_directions"] = std::move(dirs);
    j["k"] = c.k_shared_count;
    j["k_prime"] = c.kprime_shared_count;
    j["lambda"] = c.lambda;
    j["sum_dimension"] = c.sum_dimension;
    return j;
}

Json covectors_json(const CovectorSet& c) {
    Json j;
    Json order = Json::array();
    for (const Vec3& v : c.ordering) order.push_back(ray_json(v));
    j["ordering"] = std::move(order);
    j["count"] = c.covectors.size();
    Json list = Json::array();
    for (const SignVector& s : c.covectors) {
        Json row = Json::array();
        for (std::int8_t e : s) row.push_back(static_cast<int>(e));
        list.push_back(std::move(row));
    }
    j["covectors"] = std::move(list);
    return j;
}

Json census_json(const CensusReport& c) {
    Json j;
    j["n"] = c.n;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["distinct_types"] = c.distinct_types;
    Json reps = Json::array();
    for (const auto& g : c.representatives) {
        Json set = Json::array();
        for (const Vec3& v : g) set.push_back(ray_json(v));
        reps.push_back(std::move(set));
    }
    j["representatives"] = std::move(reps);
    return j;
}

}  // namespace equiproj

#ifndef EQUIPROJ_IO_HPP
#define EQUIPROJ_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "equiproj/equiprojectivity.hpp"
#include "equiproj/minkowski.hpp"
#include "equiproj/omatroid.hpp"
#include "equiproj/polytope.hpp"

namespace equiproj {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kDefaultOffPrecision = 12;

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Points of a polytope file: {"vertices": [["p/q", "p/q", "p/q"], ...]}.
/// Entries may also be JSON integers. Throws ParseError on malformed input.
std::vector<Vec3> parse_points(const std::string& json_text);
/// Hull of the points of a polytope file.
Polytope3 parse_polytope(const std::string& json_text);
Polytope3 load_polytope(const std::string& path);

/// {"vertices": [...]} with exact rational strings, one vertex per line.
std::string polytope_json(const Polytope3& p);

/// Generator file: {"generators": [[a, b, c], ...]} with integer entries
/// (numbers or strings). Throws ParseError on non-integer entries.
std::vector<Vec3> parse_generators(const std::string& json_text);
std::vector<Vec3> load_generators(const std::string& path);

/// OFF mesh with decimal coordinates; facet cycles counterclockwise seen from
/// outside.
std::string to_off(const Polytope3& p, int precision = kDefaultOffPrecision);

Json vec_json(const Vec3& v);
Json report_json(const EquiprojectivityReport& r);
Json certificate_json(const SumCertificate& c);
Json covectors_json(const CovectorSet& c);
Json census_json(const CensusReport& c);

}  // namespace equiproj

#endif  // EQUIPROJ_IO_HPP

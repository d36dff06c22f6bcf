#ifndef EQUIPROJ_EQUIPROJECTIVITY_HPP
#define EQUIPROJ_EQUIPROJECTIVITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "equiproj/cones.hpp"
#include "equiproj/polytope.hpp"

namespace equiproj {

/// (edge, facet) with the edge on the boundary of the facet. Indices refer to
/// Polytope3::edges() and the facet numbering.
struct EdgeFacetIncidence {
    std::size_t edge = 0;
    std::size_t facet = 0;

    friend auto operator<=>(const EdgeFacetIncidence&, const EdgeFacetIncidence&) = default;
};

struct CompensationPairing {
    std::vector<std::pair<EdgeFacetIncidence, EdgeFacetIncidence>> pairs;
};

enum class DirectionCase { FullPlane, Partition, Fail };

struct EquiprojectivityReport {
    bool is_equiprojective = false;
    std::optional<int> kappa;
    std::vector<std::pair<EdgeDirection, DirectionCase>> per_direction;
    /// Explicit pairing built from the cone data when equiprojective.
    std::optional<CompensationPairing> pairing;
};

inline constexpr std::size_t kDefaultMatchingClassBudget = 64;
inline constexpr long long kDirectionBound = 1'000'000;

/// All edge-facet incidences of a 3-polytope, ordered by (edge, facet).
std::vector<EdgeFacetIncidence> incidences(const Polytope3& p);

/// Compensation predicate between two incidences. Throws PreconditionError
/// when both incidences are the same.
bool compensates(const Polytope3& p, const EdgeFacetIncidence& i1, const EdgeFacetIncidence& i2);

/// Searches for a partition of all edge-facet incidences into compensating
/// pairs. Incidences are grouped by edge direction and each group is matched
/// by backtracking. Throws ResourceLimit when a group exceeds
/// `max_class_size` incidences.
std::optional<CompensationPairing> check_hasan_lubiw(const Polytope3& p,
                                                     std::size_t max_class_size = kDefaultMatchingClassBudget);

/// Decides equiprojectivity from the aggregated cones at every edge
/// direction and fills kappa and an explicit compensating pairing when the
/// answer is positive. Throws PreconditionError unless p is 3-dimensional.
EquiprojectivityReport check_aggregated(const Polytope3& p);

/// The pairing read off the cone structure: two parallel edges of one facet
/// are paired together; a facet with a single edge along u is paired with
/// the opposite facet. Throws PreconditionError if some direction fails.
CompensationPairing pairing_from_cones(const Polytope3& p);

/// Every incidence used exactly once and every pair compensates.
bool is_valid_pairing(const Polytope3& p, const CompensationPairing& pairing);

/// Number of vertices of the orthogonal shadow of p along d, counted as the
/// edges whose two facet normals have opposite signs against d. Throws
/// InadmissibleDirection if d is orthogonal to some facet normal.
int shadow_vertex_count(const Polytope3& p, const Vec3& d);

/// Uniform integer vector in [-kDirectionBound, kDirectionBound]^3, resampled
/// until it is nonzero and admissible for p.
Vec3 random_admissible_direction(const Polytope3& p, std::mt19937_64& rng);

/// Shadow vertex count -> frequency over `samples` random admissible
/// directions.
std::map<int, int> shadow_histogram(const Polytope3& p, int samples, std::uint64_t seed);

/// k if every sampled shadow has k vertices, nothing otherwise.
std::optional<int> oracle_equiprojective(const Polytope3& p, int samples, std::uint64_t seed);

const char* to_string(DirectionCase c);

}  // namespace equiproj

#endif  // EQUIPROJ_EQUIPROJECTIVITY_HPP

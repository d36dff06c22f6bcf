#ifndef EQUIPROJ_OMATROID_HPP
#define EQUIPROJ_OMATROID_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "equiproj/minkowski.hpp"
#include "equiproj/rational.hpp"

namespace equiproj {

using SignVector = std::vector<std::int8_t>;

/// Covectors of an ordered vector configuration: every sign pattern
/// (sign(x_i . y))_i realized by a nonzero y.
struct CovectorSet {
    std::vector<Vec3> ordering;
    std::set<SignVector> covectors;
};

inline constexpr std::size_t kMaxCovectorVectors = 8;
inline constexpr std::size_t kMaxEquivalenceVectors = 6;

/// Covectors read off the normal fan of the configuration's zonotope: one
/// per face whose normal cone contains a nonzero vector. Throws
/// ResourceLimit beyond `max_size` vectors, PreconditionError on a zero
/// vector.
CovectorSet covectors(const std::vector<Vec3>& x, std::size_t max_size = kMaxCovectorVectors);

/// Some coordinate permutation carries covectors(x) onto covectors(y).
bool om_equivalent(const std::vector<Vec3>& x, const std::vector<Vec3>& y,
                   std::size_t max_size = kMaxEquivalenceVectors);

/// Zonotopes of g and h have the same combinatorial type: some sign flip of
/// h's generators is oriented-matroid equivalent to g.
bool zonotope_type_equal(const GeneratorSet& g, const GeneratorSet& h,
                         std::size_t max_size = kMaxEquivalenceVectors);

/// Number of faces whose normal cone is not {0}; equals |covectors(x)|.
std::size_t nontrivial_face_count(const Polytope3& p);

struct CensusReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    /// Distinct combinatorial types seen: a lower bound on their number.
    int distinct_types = 0;
    std::vector<std::vector<Vec3>> representatives;
};

inline constexpr long long kCensusBound = 3;

/// Samples spanning generator sets with n vectors in [-kCensusBound,
/// kCensusBound]^3 and counts the zonotope types among them. 3 <= n <= 5.
CensusReport type_census(int n, int samples, std::uint64_t seed);

}  // namespace equiproj

#endif  // EQUIPROJ_OMATROID_HPP

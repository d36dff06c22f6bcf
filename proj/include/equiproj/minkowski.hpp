#ifndef EQUIPROJ_MINKOWSKI_HPP
#define EQUIPROJ_MINKOWSKI_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "equiproj/cones.hpp"
#include "equiproj/polytope.hpp"

namespace equiproj {

/// Nonempty list of nonzero, pairwise non-collinear integer vectors.
class GeneratorSet {
public:
    /// Throws PreconditionError if the list violates the invariants.
    static GeneratorSet make(std::vector<Vec3> generators);

    const std::vector<Vec3>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    /// The generators span R^3.
    bool spans_space() const;
    /// Same set with generator i replaced by its negative wherever flips[i].
    GeneratorSet flipped(const std::vector<bool>& flips) const;

private:
    explicit GeneratorSet(std::vector<Vec3> g) : generators_(std::move(g)) {}
    std::vector<Vec3> generators_;
};

/// For each face of a Minkowski sum S = P + Q, the pair (face of P, face of Q)
/// whose sum it is, as face indices.
struct FaceDecomposition {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
};

struct MinkowskiSum {
    Polytope3 sum;
    FaceDecomposition decomposition;
};

/// Hull of all pairwise vertex sums. Each face F of the sum is decomposed by
/// evaluating a relative-interior point of N(F) on both summands; the result
/// is checked against the hull and a mismatch throws Error.
MinkowskiSum minkowski_sum(const Polytope3& p, const Polytope3& q);

/// Sum of the segments conv{0, g}.
Polytope3 zonotope(const GeneratorSet& g);

/// Sum of the segments conv{0, v} for arbitrary nonzero vectors (collinear
/// ones allowed); the underlying zonotope of a vector configuration.
Polytope3 segment_sum(const std::vector<Vec3>& vectors);

enum class SharedCase { OneFullPlane, ConesEqual, ConesOpposite, ContainedProper, Incompatible };

struct SharedDirection {
    EdgeDirection direction;
    SharedCase tag;
    bool p_full = false;
    bool q_full = false;
};

/// Classification of the edge directions shared by two summands.
///
/// Tags: ONE_FULL_PLANE when at least one cone is the full plane,
/// CONES_EQUAL / CONES_OPPOSITE when C_P = C_Q or C_P = -C_Q,
/// CONTAINED_PROPER when neither is full and one strictly contains the other,
/// INCOMPATIBLE otherwise. lambda = k + 2 k' where k' counts directions with
/// both cones full and k those where a non-full cone sits inside the other.
struct SumCertificate {
    std::vector<SharedDirection> shared_directions;
    int lambda = 0;
    int k_shared_count = 0;
    int kprime_shared_count = 0;
    /// Dimension of P + Q; the verdict only means equiprojectivity when 3.
    int sum_dimension = 0;
};

struct SumVerdict {
    bool equiprojective = false;
    SumCertificate certificate;
};

/// Decides whether P + Q is equiprojective from the cones of P and Q at their
/// shared edge directions. 3-dimensional summands are checked first and a
/// non-equiprojective one throws PreconditionError.
SumVerdict sum_equiprojective(const Polytope3& p, const Polytope3& q);

/// kappa(P) + kappa(Q) - lambda(P, Q). Throws PreconditionError when the sum
/// is not equiprojective.
int kappa_of_sum(const Polytope3& p, const Polytope3& q);

/// Conditions on a triangle t relative to a zonotope z: (a) no edge direction
/// of t lies in a plane spanned by two edge directions of z; (b) no edge
/// direction of z lies in the plane of t.
bool triangle_is_generic(const Polytope3& z, const Polytope3& triangle);

inline constexpr long long kTriangleBound = 1000;
inline constexpr std::size_t kDefaultTriangleRetries = 10'000;

/// Seeded rejection sampling of an integer triangle in
/// [-kTriangleBound, kTriangleBound]^3 satisfying triangle_is_generic.
Polytope3 generic_triangle(const Polytope3& z, std::uint64_t seed,
                           std::size_t retry_budget = kDefaultTriangleRetries);

inline constexpr long long kGeneratorBound = 50;

/// n pairwise non-collinear integer vectors in [-bound, bound]^3 spanning R^3.
GeneratorSet random_generators(std::size_t n, std::mt19937_64& rng, long long bound = kGeneratorBound);

struct OddConstruction {
    GeneratorSet generators;
    Polytope3 zonotope;
    Polytope3 triangle;
    MinkowskiSum sum;
};

/// Z + t_Z with Z a seeded random zonotope on (k - 3) / 2 generators.
/// Throws PreconditionError unless k is odd and at least 9.
OddConstruction odd_construction(int k, std::uint64_t seed);
Polytope3 odd_equiprojective(int k, std::uint64_t seed);

/// Projections of the faces of S = Z + t onto the summands: zeta to faces of
/// Z (first summand), tau to faces of t (second summand).
struct FaceSummandMaps {
    std::vector<std::size_t> tau;
    std::vector<std::size_t> zeta;
};

FaceSummandMaps face_summand_maps(const MinkowskiSum& s);

const char* to_string(SharedCase c);

}  // namespace equiproj

#endif  // EQUIPROJ_MINKOWSKI_HPP

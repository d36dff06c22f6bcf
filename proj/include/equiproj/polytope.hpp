#ifndef EQUIPROJ_POLYTOPE_HPP
#define EQUIPROJ_POLYTOPE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equiproj/rational.hpp"

namespace equiproj {

/// A nonempty face: sorted vertex indices plus its dimension.
struct Face {
    std::vector<std::size_t> vertices;
    int dim = 0;

    friend bool operator==(const Face&, const Face&) = default;
};

/// Edge endpoints as vertex indices, a < b.
struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Exact convex polytope in R^3 of any dimension 0..3, with its full face
/// lattice. Built by hull3; immutable afterwards.
///
/// Faces are stored sorted by (dimension, vertex set), so face i is vertex i
/// for i < vertex count and the last face is the polytope itself. Edges are
/// the 1-faces and facets the 2-faces, each indexed in that same order. For a
/// polygon the single 2-face is the polygon and serves as its only facet.
class Polytope3 {
public:
    Polytope3() = default;

    int dimension() const { return dim_; }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    const Vec3& vertex(std::size_t i) const { return vertices_[i]; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(std::size_t i) const { return faces_[i]; }
    std::size_t self_face() const { return faces_.size() - 1; }

    /// Face indices of all faces of dimension d (empty for d out of range).
    std::span<const std::size_t> faces_of_dim(int d) const;
    /// Number of faces per dimension 0..3.
    std::array<std::size_t, 4> f_vector() const;

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_face(std::size_t e) const { return by_dim_[1][e]; }
    std::size_t facet_face(std::size_t f) const { return by_dim_[2][f]; }
    std::size_t facet_count() const { return facet_cycles_.size(); }

    /// Vertex cycle of each facet, counterclockwise seen from the tip of its
    /// normal (outward for a 3-polytope).
    const std::vector<std::vector<std::size_t>>& facet_cycles() const { return facet_cycles_; }
    /// Primitive integer outward normals (3-polytope) or the canonical plane
    /// normal (polygon).
    const std::vector<Vec3>& facet_normals() const { return facet_normals_; }
    /// Facets incident to each edge: two for a 3-polytope, one for a polygon,
    /// none for a segment.
    const std::vector<std::vector<std::size_t>>& edge_facets() const { return edge_facets_; }
    /// Facets incident to each vertex.
    const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }
    /// Polygons only: primitive in-plane outward normal of each edge.
    const std::vector<Vec3>& edge_normals() const { return edge_normals_; }

    /// Index of the face with exactly this sorted vertex set.
    std::optional<std::size_t> find_face(const std::vector<std::size_t>& sorted_vertices) const;

    /// Arithmetic mean of the vertices of a face (a relative-interior point).
    Vec3 centroid(std::size_t face) const;

    /// Index of the face on which the linear functional y attains its maximum.
    /// The zero functional selects the polytope itself.
    std::size_t face_in_direction(const Vec3& y) const;

    friend Polytope3 hull3(std::span<const Vec3> points);

private:
    void index_faces();

    int dim_ = -1;
    std::vector<Vec3> vertices_;
    std::vector<Face> faces_;
    std::array<std::vector<std::size_t>, 4> by_dim_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> facet_cycles_;
    std::vector<Vec3> facet_normals_;
    std::vector<std::vector<std::size_t>> edge_facets_;
    std::vector<std::vector<std::size_t>> vertex_facets_;
    std::vector<Vec3> edge_normals_;
    std::map<std::vector<std::size_t>, std::size_t> face_lookup_;
};

/// Convex hull with full face lattice. Accepts any nonempty point list;
/// duplicates and non-extreme points are dropped, vertices come out in
/// lexicographic order. Throws PreconditionError on an empty list.
Polytope3 hull3(std::span<const Vec3> points);
inline Polytope3 hull3(const std::vector<Vec3>& points) {
    return hull3(std::span<const Vec3>(points.data(), points.size()));
}

/// Sign of det(b - a, c - a, d - a).
int orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Closed polyhedral cone: nonnegative combinations of rays plus the linear
/// span of the lineality vectors.
struct NormalCone {
    std::vector<Vec3> rays;
    std::vector<Vec3> lineality;

    /// A point in the relative interior: the sum of the rays, or a lineality
    /// vector when there are no rays. Zero only for the trivial cone {0}.
    Vec3 relint_witness() const;
};

/// Normal cone N_P(F) of the face with the given index.
NormalCone normal_cone(const Polytope3& p, std::size_t face);

/// Integer basis (b1, b2) of the plane orthogonal to a nonzero integer u:
/// b1 = u x a, b2 = u x b1, with a the standard basis vector minimizing
/// |u . a| (first one on ties). (u, b1, b2) is positively oriented.
std::pair<Vec3, Vec3> plane_basis(const Vec3& u);

}  // namespace equiproj

#endif  // EQUIPROJ_POLYTOPE_HPP

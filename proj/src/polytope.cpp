#include "equiproj/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "equiproj/errors.hpp"

namespace equiproj {

int orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return sign(det3(b - a, c - a, d - a));
}

std::pair<Vec3, Vec3> plane_basis(const Vec3& u) {
    static const Vec3 axes[3] = {ivec(1, 0, 0), ivec(0, 1, 0), ivec(0, 0, 1)};
    int best = 0;
    Rat best_abs = boost::multiprecision::abs(u.x);
    for (int i = 1; i < 3; ++i) {
        Rat a = boost::multiprecision::abs(u[i]);
        if (a < best_abs) {
            best_abs = a;
            best = i;
        }
    }
    Vec3 b1 = cross(u, axes[best]);
    Vec3 b2 = cross(u, b1);
    return {b1, b2};
}

namespace {

std::size_t affine_dimension(const std::vector<Vec3>& pts, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return 0;
    const Vec3& p0 = pts[idx[0]];
    std::optional<Vec3> d1;
    std::optional<Vec3> n;
    for (std::size_t k = 1; k < idx.size(); ++k) {
        Vec3 w = pts[idx[k]] - p0;
        if (!d1) {
            if (!w.is_zero()) d1 = w;
            continue;
        }
        if (!n) {
            Vec3 c = cross(*d1, w);
            if (!c.is_zero()) n = c;
            continue;
        }
        if (sign(dot(*n, w)) != 0) return 3;
    }
    if (n) return 2;
    if (d1) return 1;
    return 0;
}

// Counterclockwise cycle (seen from the tip of `normal`) of the strictly
// convex corners of coplanar points.
std::vector<std::size_t> convex_cycle(const std::vector<Vec3>& pts, std::vector<std::size_t> idx,
                                      const Vec3& normal) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (boost::multiprecision::abs(normal[i]) > boost::multiprecision::abs(normal[k])) k = i;
    const int u = (k + 1) % 3;
    const int v = (k + 2) % 3;
    auto less2 = [&](std::size_t a, std::size_t b) {
        if (pts[a][u] != pts[b][u]) return pts[a][u] < pts[b][u];
        return pts[a][v] < pts[b][v];
    };
    auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        Rat c = (pts[a][u] - pts[o][u]) * (pts[b][v] - pts[o][v]) -
                (pts[a][v] - pts[o][v]) * (pts[b][u] - pts[o][u]);
        return sign(c);
    };
    std::sort(idx.begin(), idx.end(), less2);
    if (idx.size() < 3) return idx;
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t m = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (m >= 2 && turn(hull[m - 2], hull[m - 1], idx[i]) <= 0) --m;
        hull[m++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, lower = m + 1; i-- > 0;) {
        while (m >= lower && turn(hull[m - 2], hull[m - 1], idx[i]) <= 0) --m;
        hull[m++] = idx[i];
    }
    hull.resize(m - 1);
    if (sign(normal[k]) < 0) std::reverse(hull.begin(), hull.end());
    return hull;
}

// Rotates the supporting plane through the line a + t*dir, which currently
// contains the in-plane direction `ref`, away from ref until it touches the
// point set again. Returns the index of a point on the new supporting plane
// that is off the old one.
std::size_t pivot(const std::vector<Vec3>& pts, const Vec3& a, const Vec3& dir, const Vec3& ref) {
    std::optional<std::size_t> best;
    int side = 0;
    for (std::size_t q = 0; q < pts.size(); ++q) {
        Vec3 w = pts[q] - a;
        int s = sign(det3(dir, ref, w));
        if (s == 0) continue;
        if (!best) {
            best = q;
            side = s;
            continue;
        }
        if (sign(det3(dir, pts[*best] - a, w)) == side) best = q;
    }
    if (!best) throw Error("hull3: pivot found no point off the supporting plane");
    return *best;
}

struct RawFacet {
    Vec3 normal;
    std::vector<std::size_t> cycle;
};

std::vector<RawFacet> wrap_hull(const std::vector<Vec3>& pts) {
    Vec3 interior(0, 0, 0);
    for (const Vec3& p : pts) interior += p;
    interior = Rat(1, static_cast<long long>(pts.size())) * interior;

    std::vector<RawFacet> facets;
    std::map<Vec3, std::size_t> by_normal;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
    std::deque<std::size_t> work;

    auto outward = [&](Vec3 n, const Vec3& on_plane) {
        if (sign(dot(n, interior - on_plane)) > 0) n = -n;
        return primitive(n);
    };
    auto add_facet = [&](const Vec3& n, const Vec3& on_plane) {
        if (by_normal.count(n)) return;
        Rat offset = dot(n, on_plane);
        std::vector<std::size_t> contact;
        for (std::size_t q = 0; q < pts.size(); ++q)
            if (dot(n, pts[q]) == offset) contact.push_back(q);
        RawFacet f{n, convex_cycle(pts, contact, n)};
        std::size_t id = facets.size();
        for (std::size_t i = 0; i < f.cycle.size(); ++i)
            owner[{f.cycle[i], f.cycle[(i + 1) % f.cycle.size()]}] = id;
        facets.push_back(std::move(f));
        by_normal.emplace(n, id);
        work.push_back(id);
    };

    // Initial facet: start from the supporting plane x = min x and pivot
    // until the contact set is two-dimensional.
    const Vec3& p0 = pts.front();
    const Vec3 n0 = ivec(-1, 0, 0);
    std::vector<std::size_t> s0;
    for (std::size_t q = 0; q < pts.size(); ++q)
        if (pts[q].x == p0.x) s0.push_back(q);
    std::size_t d0 = affine_dimension(pts, s0);
    if (d0 == 2) {
        add_facet(n0, p0);
    } else {
        Vec3 dir;
        Vec3 plane_n = n0;
        if (d0 == 1) {
            dir = pts[s0.back()] - p0;
        } else {
            dir = ivec(0, 1, 0);
            std::size_t c = pivot(pts, p0, dir, ivec(0, 0, 1));
            plane_n = outward(cross(dir, pts[c] - p0), p0);
            std::vector<std::size_t> s1;
            for (std::size_t q = 0; q < pts.size(); ++q)
                if (dot(plane_n, pts[q] - p0).is_zero()) s1.push_back(q);
            if (affine_dimension(pts, s1) == 2) {
                add_facet(plane_n, p0);
            } else {
                dir = pts[c] - p0;
            }
        }
        if (facets.empty()) {
            std::size_t c = pivot(pts, p0, dir, cross(plane_n, dir));
            add_facet(outward(cross(dir, pts[c] - p0), p0), p0);
        }
    }

    while (!work.empty()) {
        std::size_t id = work.front();
        work.pop_front();
        std::vector<std::size_t> cycle = facets[id].cycle;
        Vec3 center(0, 0, 0);
        for (std::size_t q : cycle) center += pts[q];
        center = Rat(1, static_cast<long long>(cycle.size())) * center;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            std::size_t a = cycle[i];
            std::size_t b = cycle[(i + 1) % cycle.size()];
            if (owner.count({b, a})) continue;
            Vec3 dir = pts[b] - pts[a];
            std::size_t c = pivot(pts, pts[a], dir, center - pts[a]);
            add_facet(outward(cross(dir, pts[c] - pts[a]), pts[a]), pts[a]);
            if (!owner.count({b, a})) throw Error("hull3: facet adjacency is inconsistent");
        }
    }
    return facets;
}

}  // namespace

std::span<const std::size_t> Polytope3::faces_of_dim(int d) const {
    if (d < 0 || d > 3) return {};
    return by_dim_[static_cast<std::size_t>(d)];
}

std::array<std::size_t, 4> Polytope3::f_vector() const {
    return {by_dim_[0].size(), by_dim_[1].size(), by_dim_[2].size(), by_dim_[3].size()};
}

std::optional<std::size_t> Polytope3::find_face(const std::vector<std::size_t>& sorted_vertices) const {
    auto it = face_lookup_.find(sorted_vertices);
    if (it == face_lookup_.end()) return std::nullopt;
    return it->second;
}

Vec3 Polytope3::centroid(std::size_t face) const {
    Vec3 c(0, 0, 0);
    const auto& vs = faces_[face].vertices;
    for (std::size_t v : vs) c += vertices_[v];
    return Rat(1, static_cast<long long>(vs.size())) * c;
}

std::size_t Polytope3::face_in_direction(const Vec3& y) const {
    if (y.is_zero()) return self_face();
    std::vector<std::size_t> best;
    Rat best_value;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Rat v = dot(y, vertices_[i]);
        if (best.empty() || v > best_value) {
            best_value = v;
            best.assign(1, i);
        } else if (v == best_value) {
            best.push_back(i);
        }
    }
    auto f = find_face(best);
    if (!f) throw Error("face_in_direction: maximizer set is not a face");
    return *f;
}

void Polytope3::index_faces() {
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    for (auto& v : by_dim_) v.clear();
    face_lookup_.clear();
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        by_dim_[static_cast<std::size_t>(faces_[i].dim)].push_back(i);
        face_lookup_.emplace(faces_[i].vertices, i);
    }
}

Polytope3 hull3(std::span<const Vec3> points) {
    if (points.empty()) throw PreconditionError("hull3: empty point set");
    std::vector<Vec3> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const std::size_t dim = affine_dimension(pts, all);

    Polytope3 p;
    p.dim_ = static_cast<int>(dim);

    if (dim == 0) {
        p.vertices_ = {pts.front()};
        p.faces_ = {Face{{0}, 0}};
        p.vertex_facets_.resize(1);
        p.index_faces();
        return p;
    }
    if (dim == 1) {
        p.vertices_ = {pts.front(), pts.back()};
        p.faces_ = {Face{{0}, 0}, Face{{1}, 0}, Face{{0, 1}, 1}};
        p.edges_ = {Edge{0, 1}};
        p.edge_facets_.resize(1);
        p.vertex_facets_.resize(2);
        p.index_faces();
        return p;
    }

    std::vector<std::vector<std::size_t>> cycles;
    std::vector<Vec3> normals;
    if (dim == 2) {
        Vec3 n;
        for (std::size_t i = 2; i < pts.size() && n.is_zero(); ++i)
            n = cross(pts[1] - pts[0], pts[i] - pts[0]);
        n = canonical_line(n);
        cycles.push_back(convex_cycle(pts, all, n));
        normals.push_back(n);
    } else {
        for (RawFacet& f : wrap_hull(pts)) {
            cycles.push_back(std::move(f.cycle));
            normals.push_back(std::move(f.normal));
        }
    }

    // Keep only the corner points, preserving lexicographic order.
    std::vector<std::size_t> used;
    for (const auto& c : cycles) used.insert(used.end(), c.begin(), c.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<std::size_t> remap(pts.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < used.size(); ++i) {
        remap[used[i]] = i;
        p.vertices_.push_back(pts[used[i]]);
    }
    for (auto& c : cycles)
        for (auto& v : c) v = remap[v];

    // Facets in order of their sorted vertex sets.
    std::vector<std::size_t> order(cycles.size());
    std::vector<std::vector<std::size_t>> sorted_sets(cycles.size());
    for (std::size_t f = 0; f < cycles.size(); ++f) {
        order[f] = f;
        sorted_sets[f] = cycles[f];
        std::sort(sorted_sets[f].begin(), sorted_sets[f].end());
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sorted_sets[a] < sorted_sets[b]; });

    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (std::size_t f : order) {
        p.facet_cycles_.push_back(cycles[f]);
        p.facet_normals_.push_back(normals[f]);
        const auto& c = cycles[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::size_t a = c[i];
            std::size_t b = c[(i + 1) % c.size()];
            edge_set.emplace(std::min(a, b), std::max(a, b));
        }
    }
    for (const auto& [a, b] : edge_set) p.edges_.push_back(Edge{a, b});

    for (std::size_t v = 0; v < p.vertices_.size(); ++v) p.faces_.push_back(Face{{v}, 0});
    for (const Edge& e : p.edges_) p.faces_.push_back(Face{{e.a, e.b}, 1});
    for (std::size_t f : order) p.faces_.push_back(Face{sorted_sets[f], 2});
    if (dim == 3) {
        std::vector<std::size_t> everything(p.vertices_.size());
        for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;
        p.faces_.push_back(Face{std::move(everything), 3});
    }
    p.index_faces();

    p.edge_facets_.assign(p.edges_.size(), {});
    p.vertex_facets_.assign(p.vertices_.size(), {});
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    for (std::size_t e = 0; e < p.edges_.size(); ++e) edge_index[{p.edges_[e].a, p.edges_[e].b}] = e;
    for (std::size_t f = 0; f < p.facet_cycles_.size(); ++f) {
        const auto& c = p.facet_cycles_[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::size_t a = c[i];
            std::size_t b = c[(i + 1) % c.size()];
            p.edge_facets_[edge_index.at({std::min(a, b), std::max(a, b)})].push_back(f);
            p.vertex_facets_[a].push_back(f);
        }
    }

    if (dim == 2) {
        const Vec3& n = p.facet_normals_[0];
        p.edge_normals_.resize(p.edges_.size());
        for (std::size_t e = 0; e < p.edges_.size(); ++e) {
            const Edge& ed = p.edges_[e];
            Vec3 o = cross(p.vertices_[ed.b] - p.vertices_[ed.a], n);
            // Any vertex off the edge lies on the inner side.
            for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
                int s = sign(dot(o, p.vertices_[v] - p.vertices_[ed.a]));
                if (s != 0) {
                    if (s > 0) o = -o;
                    break;
                }
            }
            p.edge_normals_[e] = primitive(o);
        }
    }
    return p;
}

Vec3 NormalCone::relint_witness() const {
    if (!rays.empty()) {
        Vec3 s(0, 0, 0);
        for (const Vec3& r : rays) s += r;
        return s;
    }
    if (!lineality.empty()) return lineality.front();
    return Vec3(0, 0, 0);
}

NormalCone normal_cone(const Polytope3& p, std::size_t face) {
    NormalCone cone;
    const Face& f = p.face(face);
    switch (p.dimension()) {
    case 0:
        cone.lineality = {ivec(1, 0, 0), ivec(0, 1, 0), ivec(0, 0, 1)};
        break;
    case 1: {
        Vec3 g = primitive(p.vertex(1) - p.vertex(0));
        auto [b1, b2] = plane_basis(g);
        cone.lineality = {primitive(b1), primitive(b2)};
        if (f.dim == 0) cone.rays.push_back(f.vertices[0] == 1 ? g : -g);
        break;
    }
    case 2: {
        cone.lineality = {p.facet_normals()[0]};
        for (std::size_t e = 0; e < p.edges().size(); ++e) {
            const Edge& ed = p.edges()[e];
            const std::array<std::size_t, 2> ends{ed.a, ed.b};
            bool contains = std::includes(ends.begin(), ends.end(), f.vertices.begin(), f.vertices.end());
            if (f.dim < 2 && contains) cone.rays.push_back(p.edge_normals()[e]);
        }
        break;
    }
    default: {
        if (f.dim == 3) break;
        for (std::size_t fc : p.vertex_facets()[f.vertices[0]]) {
            const Face& facet = p.face(p.facet_face(fc));
            if (std::includes(facet.vertices.begin(), facet.vertices.end(), f.vertices.begin(),
                              f.vertices.end()))
                cone.rays.push_back(p.facet_normals()[fc]);
        }
        break;
    }
    }
    return cone;
}

}  // namespace equiproj

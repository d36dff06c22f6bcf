#include "equiproj/cones.hpp"

#include <algorithm>
#include <set>

#include "equiproj/errors.hpp"

namespace equiproj {

namespace {

struct Planar {
    Rat x, y;
};

int half(const Planar& p) { return (sign(p.y) < 0 || (p.y.is_zero() && sign(p.x) < 0)) ? 1 : 0; }

// Strict counterclockwise angular order starting at the positive x axis.
bool angle_less(const Planar& a, const Planar& b) {
    int ha = half(a);
    int hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(a.x * b.y - a.y * b.x) > 0;
}

// Same, but measured from the direction `base`.
Planar relative_to(const Planar& base, const Planar& w) {
    return {base.x * w.x + base.y * w.y, base.x * w.y - base.y * w.x};
}

class CircleFrame {
public:
    explicit CircleFrame(const EdgeDirection& u) {
        auto [a, b] = plane_basis(u.dir());
        b1_ = std::move(a);
        b2_ = std::move(b);
    }
    Planar coords(const Vec3& w) const { return {dot(w, b1_), dot(w, b2_)}; }
    bool less(const Vec3& a, const Vec3& b) const { return angle_less(coords(a), coords(b)); }
    Rat cross2(const Vec3& a, const Vec3& b) const {
        Planar pa = coords(a);
        Planar pb = coords(b);
        return pa.x * pb.y - pa.y * pb.x;
    }

private:
    Vec3 b1_, b2_;
};

}  // namespace

EdgeDirection EdgeDirection::of(const Vec3& v) {
    if (v.is_zero()) throw PreconditionError("edge direction of the zero vector");
    return EdgeDirection(canonical_line(v));
}

std::pair<Rat, Rat> plane_coordinates(const EdgeDirection& u, const Vec3& w) {
    Planar p = CircleFrame(u).coords(w);
    return {p.x, p.y};
}

std::vector<Arc> AggregatedCone::complement() const {
    std::vector<Arc> out;
    if (full_plane) return out;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        out.push_back(Arc{arcs[i].end, arcs[(i + 1) % arcs.size()].start});
    return out;
}

AggregatedCone AggregatedCone::negated() const {
    std::vector<Arc> flipped;
    for (const Arc& a : arcs) flipped.push_back(Arc{-a.start, -a.end});
    if (full_plane) return *this;
    return cone_from_arcs(direction, flipped);
}

std::vector<EdgeDirection> edge_directions(const Polytope3& p) {
    std::set<EdgeDirection> dirs;
    for (const Edge& e : p.edges()) dirs.insert(EdgeDirection::of(p.vertex(e.b) - p.vertex(e.a)));
    return {dirs.begin(), dirs.end()};
}

bool has_edge_direction(const Polytope3& p, const EdgeDirection& u) {
    for (const Edge& e : p.edges())
        if (EdgeDirection::of(p.vertex(e.b) - p.vertex(e.a)) == u) return true;
    return false;
}

AggregatedCone cone_from_arcs(const EdgeDirection& u, const std::vector<Arc>& pieces) {
    CircleFrame frame(u);
    AggregatedCone out{u, false, {}};
    if (pieces.empty()) return out;

    std::vector<Vec3> rays;
    for (const Arc& a : pieces) {
        rays.push_back(primitive(a.start));
        rays.push_back(primitive(a.end));
    }
    std::sort(rays.begin(), rays.end(), [&](const Vec3& a, const Vec3& b) { return frame.less(a, b); });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    const std::size_t m = rays.size();
    auto position = [&](const Vec3& r) {
        auto it = std::lower_bound(rays.begin(), rays.end(), r,
                                   [&](const Vec3& a, const Vec3& b) { return frame.less(a, b); });
        return static_cast<std::size_t>(it - rays.begin());
    };

    // Gap j is the open sector between rays[j] and rays[j + 1 mod m].
    std::vector<bool> covered(m, false);
    for (const Arc& a : pieces) {
        std::size_t i = position(primitive(a.start));
        std::size_t j = position(primitive(a.end));
        if (i == j) throw Error("cone_from_arcs: degenerate arc");
        for (std::size_t g = i; g != j; g = (g + 1) % m) covered[g] = true;
    }
    if (std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
        out.full_plane = true;
        return out;
    }
    // Walk maximal runs of covered gaps, starting right after an uncovered one.
    std::size_t first_gap = 0;
    while (covered[first_gap]) ++first_gap;
    for (std::size_t step = 1; step <= m; ++step) {
        std::size_t g = (first_gap + step) % m;
        if (!covered[g]) continue;
        std::size_t begin = g;
        while (covered[(g + 1) % m]) {
            g = (g + 1) % m;
            ++step;
        }
        out.arcs.push_back(Arc{rays[begin], rays[(g + 1) % m]});
    }
    std::sort(out.arcs.begin(), out.arcs.end(),
              [&](const Arc& a, const Arc& b) { return frame.less(a.start, b.start); });
    return out;
}

AggregatedCone aggregated_cone(const Polytope3& p, const EdgeDirection& u) {
    CircleFrame frame(u);
    std::vector<Arc> pieces;
    bool full = false;
    for (std::size_t e = 0; e < p.edges().size(); ++e) {
        const Edge& ed = p.edges()[e];
        if (!(EdgeDirection::of(p.vertex(ed.b) - p.vertex(ed.a)) == u)) continue;
        switch (p.dimension()) {
        case 1:
            full = true;
            break;
        case 2: {
            const Vec3& m = p.facet_normals()[0];
            const Vec3& out = p.edge_normals()[e];
            if (sign(frame.cross2(m, out)) > 0)
                pieces.push_back(Arc{m, -m});
            else
                pieces.push_back(Arc{-m, m});
            break;
        }
        default: {
            const auto& fs = p.edge_facets()[e];
            const Vec3& n1 = p.facet_normals()[fs[0]];
            const Vec3& n2 = p.facet_normals()[fs[1]];
            if (sign(frame.cross2(n1, n2)) > 0)
                pieces.push_back(Arc{n1, n2});
            else
                pieces.push_back(Arc{n2, n1});
            break;
        }
        }
    }
    if (!full && pieces.empty())
        throw PreconditionError("aggregated_cone: direction is not an edge direction of the polytope");
    if (full) return AggregatedCone{u, true, {}};
    return cone_from_arcs(u, pieces);
}

AggregatedCone unite(const AggregatedCone& a, const AggregatedCone& b) {
    if (!(a.direction == b.direction)) throw PreconditionError("unite: cones live in different planes");
    if (a.full_plane) return a;
    if (b.full_plane) return b;
    std::vector<Arc> pieces = a.arcs;
    pieces.insert(pieces.end(), b.arcs.begin(), b.arcs.end());
    return cone_from_arcs(a.direction, pieces);
}

bool contains(const AggregatedCone& outer, const AggregatedCone& inner) {
    if (outer.full_plane) return true;
    if (inner.full_plane) return false;
    return unite(outer, inner) == outer;
}

bool cone_is_partition_with_opposite(const AggregatedCone& c) {
    if (c.full_plane) return false;
    std::vector<Arc> flipped;
    for (const Arc& a : c.complement()) flipped.push_back(Arc{-a.start, -a.end});
    CircleFrame frame(c.direction);
    std::sort(flipped.begin(), flipped.end(),
              [&](const Arc& a, const Arc& b) { return frame.less(a.start, b.start); });
    return flipped == c.arcs;
}

bool arcs_close_full_turn(const AggregatedCone& c) {
    if (c.full_plane) return c.arcs.empty();
    if (c.arcs.empty()) return false;
    CircleFrame frame(c.direction);
    std::vector<Arc> comp = c.complement();
    // Boundary rays in circular order: start_0, end_0, start_1, end_1, ...
    std::vector<Vec3> seq;
    for (std::size_t i = 0; i < c.arcs.size(); ++i) {
        seq.push_back(c.arcs[i].start);
        seq.push_back(c.arcs[i].end);
        if (!(comp[i].start == c.arcs[i].end)) return false;
        if (!(comp[i].end == c.arcs[(i + 1) % c.arcs.size()].start)) return false;
    }
    Planar base = frame.coords(seq.front());
    for (std::size_t i = 1; i < seq.size(); ++i) {
        Planar prev = relative_to(base, frame.coords(seq[i - 1]));
        Planar cur = relative_to(base, frame.coords(seq[i]));
        if (!angle_less(prev, cur)) return false;
    }
    return true;
}

Multiplicity multiplicity(const Polytope3& p, const EdgeDirection& u) {
    return aggregated_cone(p, u).full_plane ? Multiplicity::Two : Multiplicity::One;
}

int kappa(const Polytope3& p) {
    int total = 0;
    for (const EdgeDirection& u : edge_directions(p)) total += static_cast<int>(multiplicity(p, u));
    return total;
}

}  // namespace equiproj

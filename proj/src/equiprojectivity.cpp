#include "equiproj/equiprojectivity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "equiproj/errors.hpp"

namespace equiproj {

namespace {

void require_3d(const Polytope3& p, const char* what) {
    if (p.dimension() != 3)
        throw PreconditionError(std::string(what) + ": polytope must be 3-dimensional, got dimension " +
                                std::to_string(p.dimension()));
}

EdgeDirection direction_of(const Polytope3& p, std::size_t edge) {
    const Edge& e = p.edges()[edge];
    return EdgeDirection::of(p.vertex(e.b) - p.vertex(e.a));
}

Vec3 facet_centroid(const Polytope3& p, std::size_t facet) { return p.centroid(p.facet_face(facet)); }

// Perfect matching on a small graph by backtracking, always branching on the
// unmatched node with the fewest free neighbours.
class Matcher {
public:
    explicit Matcher(const std::vector<std::vector<std::size_t>>& adj) : adj_(adj), mate_(adj.size(), kFree) {}

    std::optional<std::vector<std::size_t>> solve() {
        if (adj_.size() % 2 != 0) return std::nullopt;
        if (!extend()) return std::nullopt;
        return mate_;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    static constexpr std::size_t kNodeBudget = 5'000'000;

    bool extend() {
        if (++nodes_ > kNodeBudget) throw ResourceLimit("check_hasan_lubiw: matching search budget exceeded");
        std::size_t pick = kFree;
        std::size_t fewest = kFree;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (mate_[v] != kFree) continue;
            std::size_t options = 0;
            for (std::size_t w : adj_[v])
                if (mate_[w] == kFree) ++options;
            if (options < fewest) {
                fewest = options;
                pick = v;
            }
        }
        if (pick == kFree) return true;
        if (fewest == 0) return false;
        for (std::size_t w : adj_[pick]) {
            if (mate_[w] != kFree) continue;
            mate_[pick] = w;
            mate_[w] = pick;
            if (extend()) return true;
            mate_[pick] = kFree;
            mate_[w] = kFree;
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> mate_;
    std::size_t nodes_ = 0;
};

}  // namespace

const char* to_string(DirectionCase c) {
    switch (c) {
    case DirectionCase::FullPlane: return "FULL_PLANE";
    case DirectionCase::Partition: return "PARTITION";
    case DirectionCase::Fail: return "FAIL";
    }
    return "?";
}

std::vector<EdgeFacetIncidence> incidences(const Polytope3& p) {
    std::vector<EdgeFacetIncidence> out;
    for (std::size_t e = 0; e < p.edges().size(); ++e)
        for (std::size_t f : p.edge_facets()[e]) out.push_back({e, f});
    std::sort(out.begin(), out.end());
    return out;
}

bool compensates(const Polytope3& p, const EdgeFacetIncidence& i1, const EdgeFacetIncidence& i2) {
    if (i1 == i2) throw PreconditionError("compensates: an incidence cannot compensate itself");
    if (!(direction_of(p, i1.edge) == direction_of(p, i2.edge))) return false;
    if (i1.facet == i2.facet) return i1.edge != i2.edge;
    const Vec3& n1 = p.facet_normals()[i1.facet];
    const Vec3& n2 = p.facet_normals()[i2.facet];
    if (!collinear(n1, n2)) return false;

    const Edge& e1 = p.edges()[i1.edge];
    const Edge& e2 = p.edges()[i2.edge];
    const Vec3& base = p.vertex(e1.a);
    Vec3 along = p.vertex(e1.b) - base;
    Vec3 m = cross(along, p.vertex(e2.a) - base);
    if (m.is_zero()) return false;  // collinear edges span no plane
    int s1 = sign(dot(m, facet_centroid(p, i1.facet) - base));
    int s2 = sign(dot(m, facet_centroid(p, i2.facet) - base));
    return s1 != 0 && s1 == s2;
}

std::optional<CompensationPairing> check_hasan_lubiw(const Polytope3& p, std::size_t max_class_size) {
    require_3d(p, "check_hasan_lubiw");
    std::map<EdgeDirection, std::vector<EdgeFacetIncidence>> classes;
    for (const EdgeFacetIncidence& inc : incidences(p)) classes[direction_of(p, inc.edge)].push_back(inc);

    CompensationPairing pairing;
    for (const auto& [dir, members] : classes) {
        if (members.size() > max_class_size)
            throw ResourceLimit("check_hasan_lubiw: direction class of " + std::to_string(members.size()) +
                                " incidences exceeds the budget of " + std::to_string(max_class_size));
        std::vector<std::vector<std::size_t>> adj(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (compensates(p, members[i], members[j])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        auto mate = Matcher(adj).solve();
        if (!mate) return std::nullopt;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (i < (*mate)[i]) pairing.pairs.emplace_back(members[i], members[(*mate)[i]]);
    }
    return pairing;
}

EquiprojectivityReport check_aggregated(const Polytope3& p) {
    require_3d(p, "check_aggregated");
    EquiprojectivityReport report;
    report.is_equiprojective = true;
    int total = 0;
    for (const EdgeDirection& u : edge_directions(p)) {
        AggregatedCone c = aggregated_cone(p, u);
        DirectionCase tag = DirectionCase::Fail;
        if (c.full_plane) {
            tag = DirectionCase::FullPlane;
            total += 2;
        } else if (cone_is_partition_with_opposite(c)) {
            tag = DirectionCase::Partition;
            total += 1;
        } else {
            report.is_equiprojective = false;
        }
        report.per_direction.emplace_back(u, tag);
    }
    if (report.is_equiprojective) {
        report.kappa = total;
        report.pairing = pairing_from_cones(p);
    }
    return report;
}

CompensationPairing pairing_from_cones(const Polytope3& p) {
    require_3d(p, "pairing_from_cones");
    std::map<Vec3, std::size_t> facet_by_normal;
    for (std::size_t f = 0; f < p.facet_count(); ++f) facet_by_normal.emplace(p.facet_normals()[f], f);

    // Edges of each facet along each direction.
    std::map<std::pair<std::size_t, EdgeDirection>, std::vector<std::size_t>> along;
    for (const EdgeFacetIncidence& inc : incidences(p))
        along[{inc.facet, direction_of(p, inc.edge)}].push_back(inc.edge);

    CompensationPairing pairing;
    std::set<EdgeFacetIncidence> used;
    for (const EdgeFacetIncidence& inc : incidences(p)) {
        if (used.count(inc)) continue;
        EdgeDirection u = direction_of(p, inc.edge);
        const auto& mine = along.at({inc.facet, u});
        EdgeFacetIncidence partner;
        if (mine.size() == 2) {
            partner = {mine[0] == inc.edge ? mine[1] : mine[0], inc.facet};
        } else {
            auto it = facet_by_normal.find(-p.facet_normals()[inc.facet]);
            if (it == facet_by_normal.end())
                throw PreconditionError("pairing_from_cones: no facet opposite to a lone parallel edge");
            auto theirs = along.find({it->second, u});
            if (theirs == along.end() || theirs->second.size() != 1)
                throw PreconditionError("pairing_from_cones: opposite facet has no lone parallel edge");
            partner = {theirs->second[0], it->second};
        }
        if (used.count(partner)) throw PreconditionError("pairing_from_cones: incidence paired twice");
        used.insert(inc);
        used.insert(partner);
        pairing.pairs.emplace_back(inc, partner);
    }
    return pairing;
}

bool is_valid_pairing(const Polytope3& p, const CompensationPairing& pairing) {
    std::vector<EdgeFacetIncidence> seen;
    for (const auto& [a, b] : pairing.pairs) {
        if (a == b || !compensates(p, a, b)) return false;
        seen.push_back(a);
        seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    return seen == incidences(p);
}

int shadow_vertex_count(const Polytope3& p, const Vec3& d) {
    require_3d(p, "shadow_vertex_count");
    std::vector<int> side(p.facet_count());
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        side[f] = sign(dot(d, p.facet_normals()[f]));
        if (side[f] == 0) {
            std::ostringstream msg;
            msg << "direction " << d << " is orthogonal to the normal " << p.facet_normals()[f] << " of facet "
                << f;
            throw InadmissibleDirection(msg.str(), f);
        }
    }
    int count = 0;
    for (const auto& fs : p.edge_facets())
        if (side[fs[0]] != side[fs[1]]) ++count;
    return count;
}

Vec3 random_admissible_direction(const Polytope3& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coord(-kDirectionBound, kDirectionBound);
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        Vec3 d = ivec(coord(rng), coord(rng), coord(rng));
        if (d.is_zero()) continue;
        bool ok = std::all_of(p.facet_normals().begin(), p.facet_normals().end(),
                              [&](const Vec3& n) { return sign(dot(d, n)) != 0; });
        if (ok) return d;
    }
    throw ResourceLimit("random_admissible_direction: no admissible direction found");
}

std::map<int, int> shadow_histogram(const Polytope3& p, int samples, std::uint64_t seed) {
    require_3d(p, "shadow_histogram");
    std::mt19937_64 rng(seed);
    std::map<int, int> hist;
    for (int s = 0; s < samples; ++s) ++hist[shadow_vertex_count(p, random_admissible_direction(p, rng))];
    return hist;
}

std::optional<int> oracle_equiprojective(const Polytope3& p, int samples, std::uint64_t seed) {
    if (samples < 1) throw PreconditionError("oracle_equiprojective: samples must be positive");
    auto hist = shadow_histogram(p, samples, seed);
    if (hist.size() != 1) return std::nullopt;
    return hist.begin()->first;
}

}  // namespace equiproj

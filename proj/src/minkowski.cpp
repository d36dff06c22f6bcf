#include "equiproj/minkowski.hpp"

#include <algorithm>
#include <set>

#include "equiproj/equiprojectivity.hpp"
#include "equiproj/errors.hpp"

namespace equiproj {

GeneratorSet GeneratorSet::make(std::vector<Vec3> generators) {
    if (generators.empty()) throw PreconditionError("generator set must be nonempty");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].is_zero()) throw PreconditionError("generator set contains the zero vector");
        if (!is_integral(generators[i])) throw PreconditionError("generators must be integer vectors");
        for (std::size_t j = 0; j < i; ++j)
            if (collinear(generators[i], generators[j]))
                throw PreconditionError("generators " + std::to_string(j) + " and " + std::to_string(i) +
                                        " are collinear");
    }
    return GeneratorSet(std::move(generators));
}

bool GeneratorSet::spans_space() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            for (std::size_t k = j + 1; k < generators_.size(); ++k)
                if (sign(det3(generators_[i], generators_[j], generators_[k])) != 0) return true;
    return false;
}

GeneratorSet GeneratorSet::flipped(const std::vector<bool>& flips) const {
    std::vector<Vec3> g = generators_;
    for (std::size_t i = 0; i < g.size() && i < flips.size(); ++i)
        if (flips[i]) g[i] = -g[i];
    return GeneratorSet(std::move(g));
}

MinkowskiSum minkowski_sum(const Polytope3& p, const Polytope3& q) {
    std::vector<Vec3> points;
    points.reserve(p.vertices().size() * q.vertices().size());
    for (const Vec3& a : p.vertices())
        for (const Vec3& b : q.vertices()) points.push_back(a + b);
    MinkowskiSum out{hull3(points), {}};
    const Polytope3& s = out.sum;

    out.decomposition.parts.reserve(s.faces().size());
    for (std::size_t f = 0; f < s.faces().size(); ++f) {
        Vec3 y = normal_cone(s, f).relint_witness();
        std::size_t fp = p.face_in_direction(y);
        std::size_t fq = q.face_in_direction(y);
        // Every vertex of F must split as a vertex of fp plus a vertex of fq.
        for (std::size_t v : s.face(f).vertices) {
            bool split = false;
            for (std::size_t a : p.face(fp).vertices) {
                for (std::size_t b : q.face(fq).vertices)
                    if (p.vertex(a) + q.vertex(b) == s.vertex(v)) {
                        split = true;
                        break;
                    }
                if (split) break;
            }
            if (!split) throw Error("minkowski_sum: face decomposition disagrees with the hull");
        }
        out.decomposition.parts.emplace_back(fp, fq);
    }
    return out;
}

Polytope3 segment_sum(const std::vector<Vec3>& vectors) {
    if (vectors.empty()) throw PreconditionError("segment_sum: no vectors");
    std::vector<Vec3> acc{Vec3(0, 0, 0)};
    for (const Vec3& g : vectors) {
        if (g.is_zero()) throw PreconditionError("segment_sum: zero vector");
        std::vector<Vec3> next = acc;
        next.reserve(2 * acc.size());
        for (const Vec3& a : acc) next.push_back(a + g);
        acc = hull3(next).vertices();
    }
    return hull3(acc);
}

Polytope3 zonotope(const GeneratorSet& g) { return segment_sum(g.generators()); }

const char* to_string(SharedCase c) {
    switch (c) {
    case SharedCase::OneFullPlane: return "ONE_FULL_PLANE";
    case SharedCase::ConesEqual: return "CONES_EQUAL";
    case SharedCase::ConesOpposite: return "CONES_OPPOSITE";
    case SharedCase::ContainedProper: return "CONTAINED_PROPER";
    case SharedCase::Incompatible: return "INCOMPATIBLE";
    }
    return "?";
}

SumVerdict sum_equiprojective(const Polytope3& p, const Polytope3& q) {
    for (const Polytope3* s : {&p, &q})
        if (s->dimension() == 3 && !check_aggregated(*s).is_equiprojective)
            throw PreconditionError("sum_equiprojective: a 3-dimensional summand is not equiprojective");

    SumVerdict verdict;
    verdict.equiprojective = true;
    SumCertificate& cert = verdict.certificate;

    std::vector<EdgeDirection> dp = edge_directions(p);
    std::vector<EdgeDirection> dq = edge_directions(q);
    std::vector<EdgeDirection> shared;
    std::set_intersection(dp.begin(), dp.end(), dq.begin(), dq.end(), std::back_inserter(shared));
    for (const EdgeDirection& u : shared) {
        AggregatedCone cp = aggregated_cone(p, u);
        AggregatedCone cq = aggregated_cone(q, u);
        SharedDirection entry{u, SharedCase::Incompatible, cp.full_plane, cq.full_plane};
        if (cp.full_plane || cq.full_plane) {
            entry.tag = SharedCase::OneFullPlane;
            if (cp.full_plane && cq.full_plane)
                ++cert.kprime_shared_count;
            else
                ++cert.k_shared_count;
        } else if (cp == cq) {
            entry.tag = SharedCase::ConesEqual;
            ++cert.k_shared_count;
        } else if (cp == cq.negated()) {
            entry.tag = SharedCase::ConesOpposite;
        } else if (contains(cp, cq) || contains(cq, cp)) {
            entry.tag = SharedCase::ContainedProper;
            ++cert.k_shared_count;
            verdict.equiprojective = false;
        } else {
            verdict.equiprojective = false;
        }
        cert.shared_directions.push_back(std::move(entry));
    }
    cert.lambda = cert.k_shared_count + 2 * cert.kprime_shared_count;

    std::vector<Vec3> probe;
    for (const Vec3& a : p.vertices())
        for (const Vec3& b : q.vertices()) probe.push_back(a + b);
    cert.sum_dimension = hull3(probe).dimension();
    return verdict;
}

int kappa_of_sum(const Polytope3& p, const Polytope3& q) {
    SumVerdict v = sum_equiprojective(p, q);
    if (!v.equiprojective) throw PreconditionError("kappa_of_sum: the sum is not equiprojective");
    return kappa(p) + kappa(q) - v.certificate.lambda;
}

bool triangle_is_generic(const Polytope3& z, const Polytope3& triangle) {
    if (triangle.dimension() != 2 || triangle.vertices().size() != 3) return false;
    std::vector<EdgeDirection> zd = edge_directions(z);
    std::vector<EdgeDirection> td = edge_directions(triangle);
    for (std::size_t i = 0; i < zd.size(); ++i)
        for (std::size_t j = i + 1; j < zd.size(); ++j)
            for (const EdgeDirection& v : td)
                if (sign(det3(zd[i].dir(), zd[j].dir(), v.dir())) == 0) return false;
    for (std::size_t i = 0; i < td.size(); ++i)
        for (std::size_t j = i + 1; j < td.size(); ++j)
            for (const EdgeDirection& u : zd)
                if (sign(det3(td[i].dir(), td[j].dir(), u.dir())) == 0) return false;
    return true;
}

Polytope3 generic_triangle(const Polytope3& z, std::uint64_t seed, std::size_t retry_budget) {
    if (z.dimension() != 3) throw PreconditionError("generic_triangle: zonotope must be 3-dimensional");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-kTriangleBound, kTriangleBound);
    for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
        std::vector<Vec3> corners;
        for (int i = 0; i < 3; ++i) corners.push_back(ivec(coord(rng), coord(rng), coord(rng)));
        if (cross(corners[1] - corners[0], corners[2] - corners[0]).is_zero()) continue;
        Polytope3 t = hull3(corners);
        if (triangle_is_generic(z, t)) return t;
    }
    throw ResourceLimit("generic_triangle: no generic triangle within " + std::to_string(retry_budget) +
                        " attempts");
}

GeneratorSet random_generators(std::size_t n, std::mt19937_64& rng, long long bound) {
    if (n < 3) throw PreconditionError("random_generators: need at least 3 generators to span R^3");
    std::uniform_int_distribution<long long> coord(-bound, bound);
    while (true) {
        std::vector<Vec3> g;
        while (g.size() < n) {
            Vec3 v = ivec(coord(rng), coord(rng), coord(rng));
            if (v.is_zero()) continue;
            if (std::any_of(g.begin(), g.end(), [&](const Vec3& w) { return collinear(v, w); })) continue;
            g.push_back(v);
        }
        GeneratorSet gs = GeneratorSet::make(std::move(g));
        if (gs.spans_space()) return gs;
    }
}

OddConstruction odd_construction(int k, std::uint64_t seed) {
    if (k < 9 || k % 2 == 0)
        throw PreconditionError("odd_equiprojective: k must be an odd integer >= 9, got " + std::to_string(k));
    std::mt19937_64 rng(seed);
    GeneratorSet g = random_generators(static_cast<std::size_t>((k - 3) / 2), rng);
    Polytope3 z = zonotope(g);
    Polytope3 t = generic_triangle(z, seed);
    MinkowskiSum s = minkowski_sum(z, t);
    return OddConstruction{std::move(g), std::move(z), std::move(t), std::move(s)};
}

Polytope3 odd_equiprojective(int k, std::uint64_t seed) { return odd_construction(k, seed).sum.sum; }

FaceSummandMaps face_summand_maps(const MinkowskiSum& s) {
    FaceSummandMaps maps;
    for (const auto& [zf, tf] : s.decomposition.parts) {
        maps.zeta.push_back(zf);
        maps.tau.push_back(tf);
    }
    return maps;
}

}  // namespace equiproj

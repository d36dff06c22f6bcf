#include "equiproj/lattice.hpp"

#include <deque>
#include <limits>
#include <map>

#include "equiproj/errors.hpp"

namespace equiproj {

namespace {

constexpr std::uint32_t kSeparator = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kUnlabeled = std::numeric_limits<std::size_t>::max();

// Half-edge structure of the boundary of a 3-polytope. Dart d runs from
// tail[d] to head[d] with facet face[d] on its left (seen from outside).
struct DartMap {
    std::vector<std::size_t> tail, head, next, prev, twin;
    std::size_t vertex_count = 0;

    explicit DartMap(const Polytope3& p) : vertex_count(p.vertices().size()) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
        for (const auto& cycle : p.facet_cycles()) {
            std::size_t base = tail.size();
            std::size_t k = cycle.size();
            for (std::size_t i = 0; i < k; ++i) {
                tail.push_back(cycle[i]);
                head.push_back(cycle[(i + 1) % k]);
                next.push_back(base + (i + 1) % k);
                prev.push_back(base + (i + k - 1) % k);
                id[{cycle[i], cycle[(i + 1) % k]}] = base + i;
            }
        }
        twin.resize(tail.size());
        for (std::size_t d = 0; d < tail.size(); ++d) twin[d] = id.at({head[d], tail[d]});
    }

    std::size_t size() const { return tail.size(); }
    std::size_t rotate(std::size_t d, bool mirrored) const {
        return mirrored ? next[twin[d]] : twin[prev[d]];
    }

    // Appends the traversal code from `start` to `out`; returns steps spent.
    std::size_t encode(std::size_t start, bool mirrored, std::vector<std::uint32_t>& out) const {
        std::vector<std::size_t> label(vertex_count, kUnlabeled);
        std::deque<std::size_t> queue;
        label[tail[start]] = 0;
        std::uint32_t next_label = 1;
        queue.push_back(start);
        std::size_t steps = 0;
        while (!queue.empty()) {
            std::size_t first = queue.front();
            queue.pop_front();
            std::size_t d = first;
            do {
                std::size_t w = head[d];
                if (label[w] == kUnlabeled) {
                    label[w] = next_label++;
                    queue.push_back(twin[d]);
                }
                out.push_back(static_cast<std::uint32_t>(label[w]));
                d = rotate(d, mirrored);
                ++steps;
            } while (d != first);
            out.push_back(kSeparator);
        }
        return steps;
    }
};

}  // namespace

bool face_lattice_isomorphic(const Polytope3& p, const Polytope3& q, std::size_t node_budget) {
    if (p.dimension() != q.dimension()) return false;
    if (p.f_vector() != q.f_vector()) return false;
    if (p.dimension() < 3) return true;

    DartMap dp(p);
    DartMap dq(q);
    std::vector<std::uint32_t> reference;
    std::size_t spent = dp.encode(0, false, reference);
    std::vector<std::uint32_t> candidate;
    candidate.reserve(reference.size());
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        for (std::size_t start = 0; start < dq.size(); ++start) {
            candidate.clear();
            spent += dq.encode(start, mirrored != 0, candidate);
            if (spent > node_budget)
                throw ResourceLimit("face_lattice_isomorphic: node budget of " + std::to_string(node_budget) +
                                    " exceeded");
            if (candidate == reference) return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> canonical_code(const Polytope3& p) {
    if (p.dimension() < 3) {
        return {static_cast<std::uint32_t>(p.dimension()), static_cast<std::uint32_t>(p.vertices().size())};
    }
    DartMap dm(p);
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> candidate;
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        for (std::size_t start = 0; start < dm.size(); ++start) {
            candidate.clear();
            dm.encode(start, mirrored != 0, candidate);
            if (best.empty() || candidate < best) best = candidate;
        }
    }
    return best;
}

}  // namespace equiproj

#include "equiproj/omatroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "equiproj/errors.hpp"

namespace equiproj {

namespace {

void check_size(std::size_t n, std::size_t max_size, const char* what) {
    if (n > max_size)
        throw ResourceLimit(std::string(what) + ": " + std::to_string(n) + " vectors exceed the bound of " +
                            std::to_string(max_size));
}

std::vector<SignVector> as_sorted(const std::set<SignVector>& s) { return {s.begin(), s.end()}; }

// Image of a covector set under z -> (flip_i * z_perm[i])_i.
std::vector<SignVector> transform(const std::vector<SignVector>& c, const std::vector<std::size_t>& perm,
                                  const std::vector<bool>& flip) {
    std::vector<SignVector> out;
    out.reserve(c.size());
    for (const SignVector& z : c) {
        SignVector w(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) {
            std::int8_t v = z[perm[i]];
            w[i] = flip[perm[i]] ? static_cast<std::int8_t>(-v) : v;
        }
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Some coordinate permutation (and, when allowed, some coordinate sign flip)
// maps `b` onto `a`.
bool equivalent_sets(const std::vector<SignVector>& a, const std::vector<SignVector>& b, std::size_t n,
                     bool allow_flips) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(n);
    // Flipping every coordinate maps a covector set to itself, so the first
    // flip bit can stay clear.
    const std::size_t flip_masks = allow_flips && n > 0 ? (std::size_t{1} << (n - 1)) : 1;
    for (std::size_t mask = 0; mask < flip_masks; ++mask) {
        std::vector<bool> flip(n, false);
        for (std::size_t i = 1; i < n; ++i) flip[i] = (mask >> (i - 1)) & 1;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (transform(b, perm, flip) == a) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

// Cheap invariant under permutation and flips: how many covectors have each
// number of zero entries.
std::vector<std::size_t> zero_profile(const std::set<SignVector>& c, std::size_t n) {
    std::vector<std::size_t> profile(n + 1, 0);
    for (const SignVector& z : c) ++profile[static_cast<std::size_t>(std::count(z.begin(), z.end(), 0))];
    return profile;
}

}  // namespace

std::size_t nontrivial_face_count(const Polytope3& p) {
    std::size_t count = 0;
    for (std::size_t f = 0; f < p.faces().size(); ++f)
        if (!normal_cone(p, f).relint_witness().is_zero()) ++count;
    return count;
}

CovectorSet covectors(const std::vector<Vec3>& x, std::size_t max_size) {
    check_size(x.size(), max_size, "covectors");
    CovectorSet out{x, {}};
    Polytope3 z = segment_sum(x);
    for (std::size_t f = 0; f < z.faces().size(); ++f) {
        Vec3 y = normal_cone(z, f).relint_witness();
        if (y.is_zero()) continue;
        SignVector s(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = static_cast<std::int8_t>(sign(dot(x[i], y)));
        out.covectors.insert(std::move(s));
    }
    return out;
}

bool om_equivalent(const std::vector<Vec3>& x, const std::vector<Vec3>& y, std::size_t max_size) {
    if (x.size() != y.size()) return false;
    check_size(x.size(), max_size, "om_equivalent");
    auto cx = covectors(x, max_size).covectors;
    auto cy = covectors(y, max_size).covectors;
    return equivalent_sets(as_sorted(cx), as_sorted(cy), x.size(), false);
}

bool zonotope_type_equal(const GeneratorSet& g, const GeneratorSet& h, std::size_t max_size) {
    if (g.size() != h.size()) return false;
    check_size(g.size(), max_size, "zonotope_type_equal");
    auto cg = covectors(g.generators(), max_size).covectors;
    auto ch = covectors(h.generators(), max_size).covectors;
    return equivalent_sets(as_sorted(cg), as_sorted(ch), g.size(), true);
}

CensusReport type_census(int n, int samples, std::uint64_t seed) {
    if (n < 3 || n > 5) throw PreconditionError("type_census: n must be between 3 and 5");
    if (samples < 0) throw PreconditionError("type_census: negative sample count");
    CensusReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;

    struct Representative {
        std::vector<SignVector> covectors;
    };
    std::map<std::vector<std::size_t>, std::vector<Representative>> buckets;
    std::mt19937_64 rng(seed);
    const auto nn = static_cast<std::size_t>(n);
    for (int s = 0; s < samples; ++s) {
        GeneratorSet g = random_generators(nn, rng, kCensusBound);
        auto c = covectors(g.generators()).covectors;
        auto key = zero_profile(c, nn);
        key.push_back(c.size());
        auto sorted = as_sorted(c);
        auto& bucket = buckets[key];
        bool known = std::any_of(bucket.begin(), bucket.end(), [&](const Representative& r) {
            return equivalent_sets(r.covectors, sorted, nn, true);
        });
        if (!known) {
            bucket.push_back(Representative{std::move(sorted)});
            report.representatives.push_back(g.generators());
        }
    }
    report.distinct_types = static_cast<int>(report.representatives.size());
    return report;
}

}  // namespace equiproj

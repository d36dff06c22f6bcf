#include "equiproj/families.hpp"

#include <cmath>
#include <numbers>

#include "equiproj/errors.hpp"

namespace equiproj {

std::vector<Vec3> circle_polygon(int m) {
    if (m < 3) throw PreconditionError("circle_polygon: need at least 3 sides");
    std::vector<Vec3> pts;
    for (int i = 0; i < m; ++i) {
        double theta = -std::numbers::pi + std::numbers::pi / m + 2.0 * std::numbers::pi * i / m;
        Rat t(static_cast<long long>(std::llround(std::tan(theta / 2) * 1000)), 1000);
        Rat w = 1 + t * t;
        pts.emplace_back(Rat((1 - t * t) / w), Rat(2 * t / w), Rat(0));
    }
    return pts;
}

Polytope3 prism(int m) {
    std::vector<Vec3> pts = circle_polygon(m);
    std::size_t base = pts.size();
    for (std::size_t i = 0; i < base; ++i) pts.push_back(pts[i] + ivec(0, 0, 1));
    return hull3(pts);
}

Polytope3 pyramid(int m) {
    std::vector<Vec3> pts = circle_polygon(m);
    pts.push_back(ivec(0, 0, 1));
    return hull3(pts);
}

Polytope3 regular_tetrahedron() {
    return hull3(std::vector<Vec3>{ivec(1, 1, 1), ivec(1, -1, -1), ivec(-1, 1, -1), ivec(-1, -1, 1)});
}

Polytope3 unit_cube() {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(ivec(i & 1, (i >> 1) & 1, (i >> 2) & 1));
    return hull3(pts);
}

Polytope3 pyritohedron(const Rat& h) {
    std::vector<Vec3> pts;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) pts.push_back(ivec(sx, sy, sz));
    const Rat a = 1 + h;
    const Rat b = 1 - h * h;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            Rat p = s1 * a;
            Rat q = s2 * b;
            pts.emplace_back(Rat(0), p, q);
            pts.emplace_back(p, q, Rat(0));
            pts.emplace_back(q, Rat(0), p);
        }
    return hull3(pts);
}

}  // namespace equiproj

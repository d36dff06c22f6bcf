#ifndef EQUIPROJ_RATIONAL_HPP
#define EQUIPROJ_RATIONAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace equiproj {

using Int = boost::multiprecision::mpz_int;
/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::mpq_rational;

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& i) { return i.sign(); }

/// Parses "p" or "p/q" (optional leading '-'); throws ParseError on bad input
/// or a zero denominator. The result is reduced.
Rat parse_rat(std::string_view text);
/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rat(const Rat& r);

struct Vec3 {
    Rat x, y, z;

    Vec3() = default;
    Vec3(Rat a, Rat b, Rat c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}
    Vec3(long long a, long long b, long long c) : x(a), y(b), z(c) {}

    const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend Vec3 operator*(const Rat& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    /// Lexicographic order on (x, y, z).
    friend bool operator<(const Vec3& a, const Vec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
};

std::ostream& operator<<(std::ostream& os, const Vec3& v);

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Scales v to the unique integer vector with coprime entries pointing the
/// same way. The zero vector maps to itself.
Vec3 primitive(const Vec3& v);

/// primitive(v), then negated if needed so that the first nonzero entry is
/// positive. Canonical representative of the line spanned by v.
Vec3 canonical_line(const Vec3& v);

/// True iff all three coordinates are integers.
bool is_integral(const Vec3& v);

inline bool collinear(const Vec3& a, const Vec3& b) { return cross(a, b).is_zero(); }

/// Convenience constructor for integer-valued test and generator data.
inline Vec3 ivec(long long a, long long b, long long c) { return Vec3(a, b, c); }

}  // namespace equiproj

#endif  // EQUIPROJ_RATIONAL_HPP

#include "equiproj/rational.hpp"

#include <cctype>

#include "equiproj/errors.hpp"

namespace equiproj {

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    Int v(std::string(s.substr(i)));
    return negative ? Int(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(t, text));
    Int num = parse_int(trim(t.substr(0, slash)), text);
    std::string_view den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("denominator must be an unsigned integer: '" + std::string(text) + "'");
    Int den = parse_int(den_text, text);
    if (den.is_zero()) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
}

std::string format_rat(const Rat& r) {
    const Int& den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << format_rat(v.x) << ", " << format_rat(v.y) << ", " << format_rat(v.z) << ')';
}

Vec3 primitive(const Vec3& v) {
    if (v.is_zero()) return v;
    Int l = 1;
    for (int i = 0; i < 3; ++i) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v[i]));
    Int n[3];
    Int g = 0;
    for (int i = 0; i < 3; ++i) {
        n[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, n[i]);
    }
    if (g < 0) g = -g;
    return {Rat(Int(n[0] / g)), Rat(Int(n[1] / g)), Rat(Int(n[2] / g))};
}

Vec3 canonical_line(const Vec3& v) {
    Vec3 p = primitive(v);
    for (int i = 0; i < 3; ++i) {
        int s = sign(p[i]);
        if (s != 0) return s > 0 ? p : -p;
    }
    return p;
}

bool is_integral(const Vec3& v) {
    for (int i = 0; i < 3; ++i)
        if (boost::multiprecision::denominator(v[i]) != 1) return false;
    return true;
}

}  // namespace equiproj

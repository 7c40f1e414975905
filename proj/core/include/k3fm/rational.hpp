#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals,
// canonical residue representatives in [0,n), and "p/q" formatting.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return den(q) == 1; }

// n/d as an exact rational; unlike the raw two-argument cpp_rational
// constructor this accepts negative denominators
inline Rat make_rat(Int n, Int d) {
    if (d == 0) throw std::invalid_argument("make_rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// floor(a/b), exact for negative operands
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// residue of a mod n in [0, n), n > 0
inline Int imod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// canonical representative of q mod n in [0, n)
inline Rat rmod(const Rat& q, const Int& n) {
    Rat f = q / Rat(n);
    Int fl = floor_div(num(f), den(f));
    return q - Rat(n) * fl;
}

inline Rat mod1(const Rat& q) { return rmod(q, 1); }
inline Rat mod2(const Rat& q) { return rmod(q, 2); }

inline std::string rat_str(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

// extended gcd: g = gcd(a,b), g = x*a + y*b
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return boost::multiprecision::abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// modular inverse of a mod n (gcd(a,n)=1), result in [0,n)
inline Int inv_mod(const Int& a, const Int& n) {
    Int x, y;
    Int g = ext_gcd(imod(a, n), n, x, y);
    if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
    return imod(x, n);
}

}  // namespace k3fm

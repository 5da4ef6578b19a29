#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace hcw {

// Exact arithmetic used throughout the symbolic layer. No floating point
// enters any algebraic identity check.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long num, long den = 1) { return Rat(Int(num), Int(den)); }

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

inline double to_double(const Rat& r) {
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

// Exact complex rational, for matrix representations of compact Lie algebras.
struct CRat {
    Rat re{0}, im{0};

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

}  // namespace hcw

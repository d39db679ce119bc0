#ifndef EXALG_SCALAR_HPP
#define EXALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

namespace exalg {

// Exact rational scalar, trivial conjugation (Euclidean case).
using Rational = boost::multiprecision::cpp_rational;

inline Rational conj(const Rational& x) { return x; }
inline bool is_zero(const Rational& x) { return x == 0; }

// Gaussian rational a + bi, complex conjugation (Hermitian case).
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& a) {
        return os << "(" << a.re << (a.im < 0 ? "" : "+") << a.im << "i)";
    }
};

inline GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }
inline bool is_zero(const GaussianRational& x) { return x.re == 0 && x.im == 0; }

}  // namespace exalg

#endif

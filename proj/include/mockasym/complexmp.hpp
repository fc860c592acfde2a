// Arbitrary-precision real/complex scaffolding shared by all numeric modules.
//
// Real is an MPFR-backed float whose working precision is set at runtime
// through PrecGuard; Cx is a minimal complex type over Real with the handful
// of transcendental functions the evaluators need. sqrt() uses the principal
// branch (arg in (-pi, pi]); every formula in this library is stated under
// that convention.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace mockasym {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy used across the numeric modules.
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct divide_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct nonconverged_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working-precision context. `digits` is what the caller asks for; `guard`
// extra digits absorb roundoff inside the evaluators.
struct Prec {
    int digits = 30;
    int guard = 10;

    int work_digits() const { return digits + guard; }
    // Relative tolerance promised to the caller.
    Real eps() const;
    // Internal cutoff used for series/quadrature truncation.
    Real cutoff() const;
    void validate() const {
        if (digits < 15) throw domain_error("Prec: digits must be >= 15");
        if (guard < 5) throw domain_error("Prec: guard must be >= 5");
    }
};

// RAII scope guard for Real's default precision (decimal digits).
class PrecGuard {
  public:
    explicit PrecGuard(int decimal_digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(decimal_digits));
    }
    explicit PrecGuard(const Prec& p) : PrecGuard(p.work_digits()) {}
    ~PrecGuard() { Real::default_precision(saved_); }
    PrecGuard(const PrecGuard&) = delete;
    PrecGuard& operator=(const PrecGuard&) = delete;

  private:
    unsigned saved_;
};

inline Real pi_value() { return atan2(Real(0), Real(-1)); }

inline Real pow10(int e) { return pow(Real(10), e); }

inline Real Prec::eps() const { return mockasym::pow10(-digits); }
inline Real Prec::cutoff() const { return mockasym::pow10(-(digits + guard) + 2); }

// Minimal complex number over Real.
struct Cx {
    Real re{0}, im{0};

    Cx() = default;
    Cx(Real r) : re(std::move(r)) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cx(int r) : re(r) {}
    Cx(long r) : re(r) {}
    Cx(double r) : re(r) {}

    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator-=(const Cx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cx& operator*=(const Cx& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
};

inline Cx operator+(Cx a, const Cx& b) { return a += b; }
inline Cx operator-(Cx a, const Cx& b) { return a -= b; }
inline Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }
inline Cx operator*(Cx a, const Cx& b) { return a *= b; }
inline Cx operator*(const Real& s, Cx a) {
    a.re *= s;
    a.im *= s;
    return a;
}
inline Cx operator*(Cx a, const Real& s) { return s * a; }

inline Real abs2(const Cx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cx& z) { return hypot(z.re, z.im); }
inline Cx conj(const Cx& z) { return Cx(z.re, -z.im); }

inline Cx operator/(const Cx& a, const Cx& b) {
    Real d = abs2(b);
    return Cx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}
inline Cx operator/(const Cx& a, const Real& s) { return Cx(a.re / s, a.im / s); }
inline Cx operator/(const Real& s, const Cx& b) { return Cx(s) / b; }

inline bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }

inline Cx exp(const Cx& z) {
    Real m = exp(z.re);
    return Cx(m * cos(z.im), m * sin(z.im));
}

inline Real arg(const Cx& z) { return atan2(z.im, z.re); }

inline Cx log(const Cx& z) { return Cx(log(abs(z)), arg(z)); }

// Principal square root.
inline Cx sqrt(const Cx& z) {
    Real r = abs(z);
    if (r == 0) return Cx(Real(0));
    Real t = arg(z) / 2;
    Real s = sqrt(r);
    return Cx(s * cos(t), s * sin(t));
}

inline Cx pow_int(Cx base, long e) {
    if (e < 0) return Real(1) / pow_int(base, -e);
    Cx out(Real(1));
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline Real to_real(const Rational& r) {
    return Real(boost::multiprecision::numerator(r).str()) /
           Real(boost::multiprecision::denominator(r).str());
}

inline Real to_real(const BigInt& n) { return Real(n.str()); }

// Fixed-width decimal rendering (scientific) for reports.
std::string real_str(const Real& x, int digits);
std::string cx_str(const Cx& z, int digits);

}  // namespace mockasym

// Configurable-precision complex evaluation of the modular objects behind
// the R-family series: Jacobi theta, Dedekind eta, the normalized Appell sum
// mu, the Mordell integral h, the classical theta Theta, the non-normalized
// Appell sum A, the Hickerson-Mortenson theta_{n,p}, and the assembled
// analytic forms of R33 and R31. Also houses the transformation-law
// validator.
//
// Conventions (fixed project-wide, numerically adjudicated in the tests):
//   theta(z; tau) = sum_{nu in 1/2+Z} e^{pi i nu^2 tau + 2 pi i nu (z + 1/2)},
// under which the triple product
//   theta(z; tau) = -i q^{1/8} zeta^{-1/2} (zeta; q)oo (q; q)oo (q/zeta; q)oo
// holds exactly, as do all eight classical mu/theta transformation laws.
// Note theta(1/2; tau) = -2 eta(2 tau)^2 / eta(tau) in this convention; the
// opposite-sign version of that identity circulates as well, and the
// validator records which variant holds rather than silently switching.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mockasym/complexmp.hpp"

namespace mockasym {

// A point tau = u + iv in the upper half-plane.
struct HPoint {
    Real u{0};
    Real v{1};

    HPoint() = default;
    HPoint(Real uu, Real vv) : u(std::move(uu)), v(std::move(vv)) {
        if (!(v > 0)) throw domain_error("HPoint: v > 0 required");
    }
    Cx as_cx() const { return Cx(u, v); }
};

// x = sign * q^a with a an exact rational exponent.
struct QPowSpec {
    int sign = 1;  // +1 or -1
    Rational a{0};
};

struct ThetaStatus {
    bool cancellation = false;
    long terms = 0;
};

// e^{2 pi i r tau}: fractional q-powers are always taken through tau, never
// through a principal-branch power of a computed q.
Cx qpow(const HPoint& tau, const Rational& r);
Cx qpow(const Cx& tau, const Rational& r);

Cx theta(const Cx& z, const HPoint& tau, const Prec& prec, ThetaStatus* status = nullptr);
Cx eta(const HPoint& tau, const Prec& prec);
Cx mu(const Cx& z1, const Cx& z2, const HPoint& tau, const Prec& prec);
Cx mordell_h(const Cx& z, const HPoint& tau, const Prec& prec);
Cx theta_big(const HPoint& tau, const Prec& prec);
// A(2 tau + 1/2, 1/2; 24 tau) = theta(1/2; 24 tau) mu(2 tau + 1/2, 1/2; 24 tau)
//                             = i q sum_n q^{12(n^2+n)} / (1 + q^{24n+2}).
Cx appell_A(const HPoint& tau, const Prec& prec);

// j(sign * q^a, q^b) evaluated through theta:
//   j(q^a, q^b)  =  i q^{a/2 - b/8} theta(a tau; b tau)
//   j(-q^a, q^b) =   -q^{a/2 - b/8} theta(1/2 + a tau; b tau)
Cx jtheta_convert(const Rational& a, const Rational& b, bool negated, const HPoint& tau,
                  const Prec& prec);

// Hickerson-Mortenson theta_{n,p}(x, y, q) for x, y of the form +-q^rational.
Cx theta_np(int n, int p, const QPowSpec& xs, const QPowSpec& ys, const HPoint& tau,
            const Prec& prec);

// The four-term simplified theta-quotient T(tau), and the sixteen-term
// Q(r,s) double-sum form it was condensed from.
Cx T_fn(const HPoint& tau, const Prec& prec);
Cx T_fn_qform(const HPoint& tau, const Prec& prec);

// R33(tau) = 2 i q^{-1} mu(2 tau + 1/2, 1/2; 24 tau) + T(tau)
// R31(tau) = -2 i q^{-1/2} mu(5 tau, 3 tau; 12 tau)
//            + e^{-pi i/12} q^{-1/3} eta(tau+1/2) eta(3 tau+1/2) eta(12 tau)
//              / (eta(2 tau) eta(6 tau))
Cx R33_fn(const HPoint& tau, const Prec& prec);
Cx R31_fn(const HPoint& tau, const Prec& prec);

struct EvalReport {
    std::string law;
    std::string sample;     // rendered sample point(s)
    std::string lhs;
    std::string rhs;
    std::string rel_err;    // decimal string at working precision
    bool pass = false;
    std::string note;       // e.g. sign-resolution record
};

// One report per law per sample. Laws that fail at every sample with the
// printed sign are re-tested with the quadratic-exponential factor's sign
// flipped; the resolution lands in `note`. Multiplier laws (Jacobi-form and
// elliptic shifts) treat the multiplier as an unknown constant root of unity.
std::vector<EvalReport> validate_transforms(int samples, std::uint64_t seed, const Prec& prec);

std::string reports_to_json(const std::vector<EvalReport>& reports, const Prec& prec);

}  // namespace mockasym

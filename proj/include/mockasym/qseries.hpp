// Exact truncated q-series over arbitrary-precision integers, and the
// multi-sum expansions of the Bailey-type series R1^(k), R3^(k), nu(-q),
// phi(q) built on top of them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mockasym/complexmp.hpp"

namespace mockasym {

// Truncated formal power series sum_{n=offset..order} coeffs[n-offset] q^n.
// `order` is the largest exponent whose coefficient is guaranteed correct;
// arithmetic propagates the weakest guarantee rather than assuming inputs
// are exact polynomials.
struct QSeries {
    long offset = 0;
    long order = 0;
    std::vector<BigInt> coeffs;  // size == order - offset + 1

    QSeries() : coeffs(1) {}
    QSeries(long off, long ord) : offset(off), order(ord), coeffs(static_cast<size_t>(ord - off + 1)) {}

    static QSeries zero(long order_) { return QSeries(0, order_); }
    static QSeries one(long order_) {
        QSeries s(0, order_);
        s.coeffs[0] = 1;
        return s;
    }
    static QSeries monomial(const BigInt& c, long e, long order_);

    void check_invariants() const;

    // Coefficient of q^n; exponents below offset are zero, above order are
    // out of contract.
    const BigInt& at(long n) const;
    long size() const { return static_cast<long>(coeffs.size()); }
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries negate(QSeries a);
bool equal_as_series(const QSeries& a, const QSeries& b);  // on the common guaranteed range

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

constexpr long kInfinitePochhammer = -1;

// (sign*q^a; q^b)_m truncated at order N; m = kInfinitePochhammer for the
// infinite product.
QSeries qpoch(int sign, long a, long b, long m, long N);
// Reciprocal series of qpoch(...); exact integer coefficients.
QSeries qpoch_inv(int sign, long a, long b, long m, long N);

// Gaussian binomial [m choose n] in the variable q^base; zero series if n > m.
QSeries gauss_binom(long m, long n, long base, long N);

struct MultiIndex {
    int k = 3;
    std::vector<long> n;  // n[0] = n_1 <= n[1] = n_2 <= ... <= n[k-1] = n_k, all >= 0

    void validate() const;
};

// B_k(n_k,...,n_1; q^scale): the product-form summand of the R-families.
QSeries bailey_B(const MultiIndex& idx, int scale, long N);

QSeries expand_R1(int k, long N);
QSeries expand_R3(int k, long N);
QSeries expand_nu_neg(long N);
QSeries expand_phi10(long N);

// Smallest n >= 0 with c(n+1) < c(n), or nullopt if weakly increasing
// through the guaranteed order.
std::optional<long> monotone_check(const QSeries& s);

// Serialization: {"offset":..,"order":..,"coeffs":["...", ...]} with decimal
// strings, and CSV rows "n,c(n)".
std::string qseries_to_json(const QSeries& s);
std::string qseries_to_csv(const QSeries& s);

}  // namespace mockasym

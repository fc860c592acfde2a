#include "mockasym/qseries.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mockasym {

namespace {

// Dense polynomial helpers on vector<BigInt> representing sum c[i] q^i,
// always truncated at a fixed top order N (size N+1). The multi-sum
// expansions work in this raw form and wrap the result in a QSeries at the
// end; all intermediates are exact polynomials truncated at N, so every
// coefficient <= N stays exact.
using Poly = std::vector<BigInt>;

long first_nonzero(const Poly& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<long>(i);
    return static_cast<long>(a.size());
}

// a *= (1 + sign*q^c)
void mul_1pq(Poly& a, long c, int sign) {
    const long N = static_cast<long>(a.size()) - 1;
    if (c > N) return;
    for (long i = N; i >= c; --i) {
        if (sign > 0)
            a[i] += a[i - c];
        else
            a[i] -= a[i - c];
    }
}

// a /= (1 - q^c): running prefix sum.
void div_1mq(Poly& a, long c) {
    const long N = static_cast<long>(a.size()) - 1;
    for (long i = c; i <= N; ++i) a[i] += a[i - c];
}

// a /= (1 + q^c): alternating prefix.
void div_1pq(Poly& a, long c) {
    const long N = static_cast<long>(a.size()) - 1;
    for (long i = c; i <= N; ++i) a[i] -= a[i - c];
}

// a <- a * q^s (drops overflowed coefficients).
void shift_up(Poly& a, long s) {
    if (s == 0) return;
    const long N = static_cast<long>(a.size()) - 1;
    for (long i = N; i >= s; --i) a[i] = a[i - s];
    for (long i = 0; i < s && i <= N; ++i) a[i] = 0;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const long N = static_cast<long>(a.size()) - 1;
    Poly out(a.size());
    const long va = first_nonzero(a), vb = first_nonzero(b);
    if (va + vb > N) return out;
    for (long i = va; i <= N - vb; ++i) {
        if (a[i] == 0) continue;
        const long jmax = N - i;
        for (long j = vb; j <= jmax; ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

void poly_add_into(Poly& acc, const Poly& t) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
}

Poly poly_qpoch(int sign, long a, long b, long m, long N) {
    Poly s(static_cast<size_t>(N + 1));
    s[0] = 1;
    for (long j = 0; (m == kInfinitePochhammer || j < m); ++j) {
        const long c = a + j * b;
        if (c > N) {
            if (m == kInfinitePochhammer) break;
            // remaining finite factors are 1 + O(q^{>N}); they do not touch
            // coefficients <= N
            break;
        }
        mul_1pq(s, c, -sign);
    }
    return s;
}

Poly poly_qpoch_inv(int sign, long a, long b, long m, long N) {
    Poly s(static_cast<size_t>(N + 1));
    s[0] = 1;
    for (long j = 0; (m == kInfinitePochhammer || j < m); ++j) {
        const long c = a + j * b;
        if (c > N) break;
        // 1/(1 - sign q^c)
        for (long i = c; i <= N; ++i) {
            if (sign > 0)
                s[i] += s[i - c];
            else
                s[i] -= s[i - c];
        }
    }
    return s;
}

QSeries wrap(Poly p, long N) {
    QSeries s(0, N);
    s.coeffs = std::move(p);
    return s;
}

long binom2(long n) { return n * (n + 1) / 2; }  // C(n+1, 2)

}  // namespace

QSeries QSeries::monomial(const BigInt& c, long e, long order_) {
    if (e > order_) throw domain_error("QSeries::monomial: exponent beyond order");
    QSeries s(std::min(e, 0L), order_);
    s.coeffs[static_cast<size_t>(e - s.offset)] = c;
    return s;
}

void QSeries::check_invariants() const {
    if (order < offset) throw domain_error("QSeries: order < offset");
    if (static_cast<long>(coeffs.size()) != order - offset + 1)
        throw domain_error("QSeries: coefficient count mismatch");
}

const BigInt& QSeries::at(long n) const {
    static const BigInt zero_{0};
    if (n < offset) return zero_;
    if (n > order) throw domain_error("QSeries::at: exponent beyond guaranteed order");
    return coeffs[static_cast<size_t>(n - offset)];
}

QSeries add(const QSeries& a, const QSeries& b) {
    const long order = std::min(a.order, b.order);
    const long offset = std::min(a.offset, b.offset);
    QSeries out(offset, order);
    for (long n = offset; n <= order; ++n) {
        BigInt v = 0;
        if (n >= a.offset && n <= a.order) v += a.at(n);
        if (n >= b.offset && n <= b.order) v += b.at(n);
        out.coeffs[static_cast<size_t>(n - offset)] = std::move(v);
    }
    return out;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }

QSeries negate(QSeries a) {
    for (auto& c : a.coeffs) c = -c;
    return a;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    // Truncation: the unknown tail of a (exponents > Na) times the lowest
    // term of b first pollutes exponent Na + ob, and vice versa.
    const long order = std::min(a.order + b.offset, b.order + a.offset);
    const long offset = a.offset + b.offset;
    if (order < offset) throw domain_error("mul: empty guaranteed range");
    QSeries out(offset, order);
    for (long i = a.offset; i <= a.order; ++i) {
        const BigInt& ai = a.at(i);
        if (ai == 0) continue;
        const long jmax = std::min(b.order, order - i);
        for (long j = b.offset; j <= jmax; ++j) {
            const BigInt& bj = b.at(j);
            if (bj != 0) out.coeffs[static_cast<size_t>(i + j - offset)] += ai * bj;
        }
    }
    return out;
}

bool equal_as_series(const QSeries& a, const QSeries& b) {
    const long order = std::min(a.order, b.order);
    const long lo = std::min(a.offset, b.offset);
    for (long n = lo; n <= order; ++n) {
        if (a.at(n) != b.at(n)) return false;
    }
    return true;
}

QSeries qpoch(int sign, long a, long b, long m, long N) {
    if (a < 1 || b < 1 || N < 0) throw domain_error("qpoch: need a,b >= 1 and N >= 0");
    return wrap(poly_qpoch(sign, a, b, m, N), N);
}

QSeries qpoch_inv(int sign, long a, long b, long m, long N) {
    if (a < 1 || b < 1 || N < 0) throw domain_error("qpoch_inv: need a,b >= 1 and N >= 0");
    return wrap(poly_qpoch_inv(sign, a, b, m, N), N);
}

QSeries gauss_binom(long m, long n, long base, long N) {
    if (m < 0 || n < 0) throw domain_error("gauss_binom: need m,n >= 0");
    if (n > m) return QSeries::zero(N);
    Poly num = poly_qpoch(1, base, base, m, N);
    Poly d1 = poly_qpoch_inv(1, base, base, n, N);
    Poly d2 = poly_qpoch_inv(1, base, base, m - n, N);
    return wrap(poly_mul(poly_mul(num, d1), d2), N);
}

void MultiIndex::validate() const {
    if (k < 3) throw domain_error("MultiIndex: k >= 3 required");
    if (static_cast<int>(n.size()) != k) throw domain_error("MultiIndex: need k entries");
    long prev = 0;
    for (long v : n) {
        if (v < prev) throw domain_error("MultiIndex: entries must be nondecreasing");
        prev = v;
    }
    if (n.front() < 0) throw domain_error("MultiIndex: entries must be nonnegative");
}

QSeries bailey_B(const MultiIndex& idx, int scale, long N) {
    idx.validate();
    if (scale != 1 && scale != 2) throw domain_error("bailey_B: scale must be 1 or 2");
    const int k = idx.k;
    const long S = scale;
    // n[i] here is n_{i+1}; pad with n_0 = 0.
    std::vector<long> nn(static_cast<size_t>(k + 1), 0);
    for (int i = 1; i <= k; ++i) nn[static_cast<size_t>(i)] = idx.n[static_cast<size_t>(i - 1)];

    Poly out(static_cast<size_t>(N + 1));
    out[0] = (nn[1] % 2 == 1) ? -1 : 1;  // (-1)^{n_1}
    // (-q; q)_{n_{k-1}} q^{C(n_{k-1}+1, 2)}
    out = poly_mul(out, poly_qpoch(-1, S, S, nn[static_cast<size_t>(k - 1)], N));
    shift_up(out, S * binom2(nn[static_cast<size_t>(k - 1)]));
    // numerator factors q^{2^{j-2} n_{k-j}} (-q^{2^{j-2}}; q^{2^{j-2}})_{2 n_{k-j}}
    for (int j = 2; j <= k - 1; ++j) {
        const long base = S * (1L << (j - 2));
        const long v = nn[static_cast<size_t>(k - j)];
        shift_up(out, base * v);
        out = poly_mul(out, poly_qpoch(-1, base, base, 2 * v, N));
    }
    // denominators (q^{2^{j-1}}; q^{2^{j-1}})_{n_{k-j+1} - n_{k-j}}
    for (int j = 1; j <= k; ++j) {
        const long base = S * (1L << (j - 1));
        const long gap = nn[static_cast<size_t>(k - j + 1)] - nn[static_cast<size_t>(k - j)];
        out = poly_mul(out, poly_qpoch_inv(1, base, base, gap, N));
    }
    return wrap(std::move(out), N);
}

namespace {

// Shared chained evaluator for the R-family multi-sums. Index levels run
// n_1, ..., n_k; between consecutive levels the denominator Pochhammer
// 1/(q^base; q^base)_{gap} is realized as a running division chain per lower
// index, so no full series multiplication is spent on it.
Poly expand_R_chain(int k, long N, int which) {
    if (k < 3) throw domain_error("expand_R: k >= 3 required");
    if (N < 0) throw domain_error("expand_R: N >= 0 required");
    const long S = (which == 1) ? 1 : 2;  // B_k is taken in q^S

    long maxn = 0;
    if (which == 1) {
        while (binom2(maxn + 1) <= N) ++maxn;
    } else {
        while ((maxn + 1) * (maxn + 1) + 2 * (maxn + 1) <= N) ++maxn;
    }

    const long e1 = 1L << (k - 3);
    const long ek = 1L << (k - 1);

    // Level-1 atoms: (-1)^{n1} q^{S e1 n1} (-q^{S e1}; q^{S e1})_{2 n1}
    //                / (q^{S ek}; q^{S ek})_{n1}
    std::vector<Poly> G;
    {
        Poly cur(static_cast<size_t>(N + 1));
        cur[0] = 1;
        G.push_back(cur);
        for (long n1 = 1; n1 <= maxn && S * e1 * n1 <= N; ++n1) {
            shift_up(cur, S * e1);
            mul_1pq(cur, S * e1 * (2 * n1 - 1), +1);
            mul_1pq(cur, S * e1 * 2 * n1, +1);
            div_1mq(cur, S * ek * n1);
            Poly signed_cur = cur;
            if (n1 % 2 == 1)
                for (auto& c : signed_cur) c = -c;
            G.push_back(std::move(signed_cur));
        }
    }

    // Combine level i -> i+1 for i = 1..k-1.
    for (int i = 1; i <= k - 1; ++i) {
        const long base = S * (1L << (k - i - 1));
        std::vector<Poly> chains;
        std::vector<Poly> G2;
        // Incremental prefactor for the R3 outer level.
        Poly r3pref(static_cast<size_t>(N + 1));
        r3pref[0] = 1;
        for (long m = 0; m <= maxn; ++m) {
            if (m < static_cast<long>(G.size())) chains.push_back(G[static_cast<size_t>(m)]);
            Poly tot(static_cast<size_t>(N + 1));
            for (size_t t = 0; t < chains.size(); ++t) {
                const long gap = m - static_cast<long>(t);
                if (gap > 0) div_1mq(chains[t], base * gap);
                poly_add_into(tot, chains[t]);
            }
            const int lev = i + 1;
            if (lev <= k - 2) {
                const long b2 = S * (1L << (k - lev - 2));
                shift_up(tot, b2 * m);
                tot = poly_mul(tot, poly_qpoch(-1, b2, b2, 2 * m, N));
            } else if (lev == k - 1) {
                tot = poly_mul(tot, poly_qpoch(-1, S, S, m, N));
                shift_up(tot, S * binom2(m));
            } else {  // lev == k: outer prefactor
                if (which == 1) {
                    shift_up(tot, binom2(m));
                } else {
                    if (m > 0) {
                        // (q; q^2)_m / (-q^2; q^2)_m built incrementally
                        mul_1pq(r3pref, 2 * m - 1, -1);
                        div_1pq(r3pref, 2 * m);
                    }
                    tot = poly_mul(tot, r3pref);
                    shift_up(tot, m * m + 2 * m);
                    if (m % 2 == 1)
                        for (auto& c : tot) c = -c;
                }
            }
            G2.push_back(std::move(tot));
        }
        G = std::move(G2);
    }

    Poly out(static_cast<size_t>(N + 1));
    for (const auto& t : G) poly_add_into(out, t);
    return out;
}

}  // namespace

QSeries expand_R1(int k, long N) { return wrap(expand_R_chain(k, N, 1), N); }

QSeries expand_R3(int k, long N) { return wrap(expand_R_chain(k, N, 3), N); }

QSeries expand_nu_neg(long N) {
    if (N < 0) throw domain_error("expand_nu_neg: N >= 0 required");
    Poly out(static_cast<size_t>(N + 1));
    Poly cur(static_cast<size_t>(N + 1));
    cur[0] = 1;
    div_1mq(cur, 1);  // n = 0 term: 1/(1-q)
    long n = 0;
    while (n * n + n <= N) {
        const long s = n * n + n;
        for (long i = s; i <= N; ++i) out[i] += cur[i - s];
        ++n;
        div_1mq(cur, 2 * n + 1);
    }
    return wrap(std::move(out), N);
}

QSeries expand_phi10(long N) {
    if (N < 0) throw domain_error("expand_phi10: N >= 0 required");
    Poly out(static_cast<size_t>(N + 1));
    Poly cur(static_cast<size_t>(N + 1));
    cur[0] = 1;
    div_1mq(cur, 1);
    long n = 0;
    while (n * (n + 1) / 2 <= N) {
        const long s = n * (n + 1) / 2;
        for (long i = s; i <= N; ++i) out[i] += cur[i - s];
        ++n;
        div_1mq(cur, 2 * n + 1);
    }
    return wrap(std::move(out), N);
}

std::optional<long> monotone_check(const QSeries& s) {
    if (s.offset < 0) throw domain_error("monotone_check: offset must be >= 0");
    for (long n = 0; n + 1 <= s.order; ++n) {
        if (s.at(n + 1) < s.at(n)) return n;
    }
    return std::nullopt;
}

std::string qseries_to_json(const QSeries& s) {
    std::ostringstream os;
    os << "{\"offset\": " << s.offset << ", \"order\": " << s.order << ", \"coeffs\": [";
    for (size_t i = 0; i < s.coeffs.size(); ++i) {
        if (i) os << ", ";
        os << '"' << s.coeffs[i].str() << '"';
    }
    os << "]}";
    return os.str();
}

std::string qseries_to_csv(const QSeries& s) {
    std::ostringstream os;
    os << "n,c\n";
    for (long n = s.offset; n <= s.order; ++n) os << n << ',' << s.at(n).str() << '\n';
    return os.str();
}

}  // namespace mockasym

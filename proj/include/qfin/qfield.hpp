#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace qfin {

using Integer = mpz_class;
using Rational = mpq_class;

/// A primitive root of unity q = e^{2*pi*i*n/m}, gcd(n,m) = 1, 1 <= n < m.
struct QRoot {
    long n = 1;
    long m = 2;

    QRoot() = default;
    QRoot(long n_, long m_);

    /// Parse "n/m", reducing the fraction first.
    static QRoot parse(const std::string& text);

    bool operator==(const QRoot& o) const { return n == o.n && m == o.m; }
};

/*
 * Element of the cyclotomic field Q(zeta_m), stored as a residue modulo
 * the m-th cyclotomic polynomial: coefficient vector of length deg Phi_m
 * in the power basis 1, zeta, ..., zeta^{deg-1}.
 *
 * Coefficients are kept as integer numerators over one positive common
 * denominator, which keeps the Gram-matrix hot paths in plain mpz
 * arithmetic (denominators are 1 there). The zero test is exact: an
 * element is zero iff all numerators are zero.
 *
 * Binary operations on elements of different conductors first lift both
 * to the least common conductor.
 */
class Cyclotomic {
public:
    Cyclotomic();  // zero (conductor 1)

    static Cyclotomic from_rational(const Rational& r);
    static Cyclotomic from_integer(long v);
    /// zeta_cond^e, e arbitrary (reduced mod cond).
    static Cyclotomic zeta_power(long cond, long e);
    /// e^{2*pi*i*f} for rational f; the conductor is the denominator of f mod 1.
    static Cyclotomic root_of_unity(const Rational& f);
    static Cyclotomic from_coefficients(long cond, const std::vector<Rational>& coeffs);

    long conductor() const { return cond_; }
    long degree() const { return static_cast<long>(num_.size()); }
    Rational coefficient(long i) const;
    std::vector<Rational> coefficients() const;

    bool is_zero() const;
    /// True iff the element lies in Q; the value is written to *out when given.
    bool is_rational(Rational* out = nullptr) const;
    bool is_real() const { return *this == star(); }

    /// The field automorphism zeta -> zeta^{-1} (complex conjugation on |q|=1).
    Cyclotomic star() const;
    Cyclotomic inverse() const;  // throws std::domain_error on zero

    Cyclotomic lifted(long new_cond) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Non-rigorous complex value, for display only.
    std::complex<double> approx() const;
    std::string to_string() const;

private:
    long cond_;
    std::vector<Integer> num_;
    Integer den_;  // > 0

    void normalize();
    static Cyclotomic make(long cond, std::vector<Integer> num, Integer den);

    friend int sign_of_real(const Cyclotomic& x);
};

/*
 * Exact sign of a real cyclotomic element (star-fixed), under the embedding
 * zeta_m -> e^{2*pi*i/m}. Zero is decided by the canonical form alone;
 * the sign of a nonzero element is found by rational interval evaluation
 * with the working precision doubled until the interval excludes zero.
 * Throws std::domain_error for non-real input.
 */
int sign_of_real(const Cyclotomic& x);

/// Interval enclosure of cos(2*pi*k/m) with width <= 2^{-prec_bits}.
/// Exposed for tests.
void cos_enclosure(long k, long m, long prec_bits, Rational& lo, Rational& hi);

/// Smallest M >= 1 with (q^d)^{2M} = 1, i.e. [M]_{q^d} = 0.
long order_m(const QRoot& q, long d = 1);
/// True iff q^{2d} != 1 (the standing admissibility assumption for q_i).
bool q_squared_nontrivial(const QRoot& q, long d);

/// The canonical residue of q = zeta_m^n.
Cyclotomic embed_q(const QRoot& q);
/// q^y for rational y, principal branch e^{2*pi*i*n*y/m}.
Cyclotomic q_power(const QRoot& q, const Rational& y);
Cyclotomic q_power(const QRoot& q, long y);

/// [k]_{q_i} with q_i = q^d, as the Laurent sum q_i^{k-1} + q_i^{k-3} + ...
/// Requires q_i^2 != 1; throws std::domain_error otherwise.
Cyclotomic qint(long k, long d, const QRoot& q);
/// [x]_{q_i} for rational x, via principal powers q_i^{+-x}.
Cyclotomic qint(const Rational& x, long d, const QRoot& q);
/// [k]_{q_i}! for k >= 0.
Cyclotomic qfactorial(long k, long d, const QRoot& q);

/*
 * Balanced Gaussian binomial [n over k]_{q_i}, defined as the Laurent
 * polynomial in an indeterminate (symmetric under q -> q^{-1}) and
 * evaluated at q_i = q^d. This is total: it agrees with the quotient of
 * q-factorials wherever that quotient is defined, and remains defined at
 * roots of unity where numerator and denominator both vanish.
 * Values are memoised per (q, d).
 */
Cyclotomic qbinomial(long n, long k, long d, const QRoot& q);

/// Exact check of the root-of-unity q-binomial reduction
///   [aM+b over cM+d]_q = q^{M^2 c(a+1) + M(ad-bc)} [b over d]_q C(a,c)
/// with M the order attached to q and C the ordinary binomial.
bool check_qbinom_identity(long a, long b, long c, long d, const QRoot& q);

Integer binomial_integer(long n, long k);

}  // namespace qfin

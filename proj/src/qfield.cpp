#include "qfin/qfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qfin {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomial helpers (coefficients low to high).

using ZPoly = std::vector<Integer>;

long zdegree(const ZPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Exact division by a monic divisor.
ZPoly zdiv_monic(const ZPoly& num, const ZPoly& den) {
    long dn = zdegree(num), dd = zdegree(den);
    if (dn < dd) return {};
    ZPoly rem = num;
    ZPoly quot(dn - dd + 1);
    for (long k = dn; k >= dd; --k) {
        Integer c = rem[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den[j];
    }
    return quot;
}

// Phi_m via x^m - 1 = prod_{d | m} Phi_d.
ZPoly cyclotomic_poly(long m) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto compute = [&](long mm, auto&& self) -> const ZPoly& {
        auto it = cache.find(mm);
        if (it != cache.end()) return it->second;
        ZPoly p(mm + 1);
        p[0] = -1;
        p[mm] = 1;
        for (long dv = 1; dv < mm; ++dv) {
            if (mm % dv != 0) continue;
            p = zdiv_monic(p, self(dv, self));
        }
        p.resize(zdegree(p) + 1);
        return cache.emplace(mm, std::move(p)).first->second;
    };
    return compute(m, compute);
}

struct CondData {
    long m = 1;
    long deg = 1;
    ZPoly phi;                              // monic, length deg+1
    std::vector<std::vector<Integer>> zeta_pow;  // x^e mod phi, e in [0, m)
};

// Reduce a raw coefficient vector modulo phi in place, then truncate to deg.
void reduce_mod_phi(std::vector<Integer>& raw, const CondData& cd) {
    for (long k = static_cast<long>(raw.size()) - 1; k >= cd.deg; --k) {
        if (raw[k] == 0) continue;
        Integer c;
        mpz_swap(c.get_mpz_t(), raw[k].get_mpz_t());
        for (long j = 0; j < cd.deg; ++j) {
            if (cd.phi[j] != 0)
                mpz_submul(raw[k - cd.deg + j].get_mpz_t(), c.get_mpz_t(),
                           cd.phi[j].get_mpz_t());
        }
    }
    raw.resize(cd.deg);
}

const CondData& cond_data(long m) {
    static std::map<long, CondData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CondData cd;
    cd.m = m;
    cd.phi = cyclotomic_poly(m);
    cd.deg = zdegree(cd.phi);
    cd.zeta_pow.resize(m);
    std::vector<Integer> row(cd.deg);
    row[0] = 1;
    cd.zeta_pow[0] = row;
    for (long e = 1; e < m; ++e) {
        std::vector<Integer> next(cd.deg + 1);
        for (long j = 0; j < cd.deg; ++j) next[j + 1] = row[j];
        reduce_mod_phi(next, cd);
        row = next;
        cd.zeta_pow[e] = row;
    }
    return cache.emplace(m, std::move(cd)).first->second;
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers for field inversion (cold path).

using QPoly = std::vector<Rational>;

long qdegree(const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qdivmod(QPoly& rem, const QPoly& den) {
    long dd = qdegree(den);
    long dn = qdegree(rem);
    QPoly quot(std::max<long>(dn - dd + 1, 1));
    while ((dn = qdegree(rem)) >= dd) {
        Rational c = rem[dn] / den[dd];
        quot[dn - dd] = c;
        for (long j = 0; j <= dd; ++j) rem[dn - dd + j] -= c * den[j];
    }
    return quot;
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly out = a;
    long dq = qdegree(q), db = qdegree(b);
    if (dq >= 0 && db >= 0) {
        if (static_cast<long>(out.size()) < dq + db + 1) out.resize(dq + db + 1);
        for (long i = 0; i <= dq; ++i) {
            if (q[i] == 0) continue;
            for (long j = 0; j <= db; ++j) out[i + j] -= q[i] * b[j];
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QRoot

QRoot::QRoot(long n_, long m_) : n(n_), m(m_) {
    if (m < 2 || n < 1 || n >= m)
        throw std::invalid_argument("QRoot: need 1 <= n < m, m >= 2");
    if (std::gcd(n, m) != 1)
        throw std::invalid_argument("QRoot: n and m must be coprime");
}

QRoot QRoot::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("QRoot: expected \"n/m\", got \"" + text + "\"");
    long n = 0, m = 0;
    try {
        n = std::stol(text.substr(0, slash));
        m = std::stol(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("QRoot: expected \"n/m\", got \"" + text + "\"");
    }
    if (n <= 0 || m <= 0) throw std::invalid_argument("QRoot: n/m must be positive");
    long g = std::gcd(n, m);
    return QRoot(n / g, m / g);
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : cond_(1), num_(1), den_(1) {}

Cyclotomic Cyclotomic::make(long cond, std::vector<Integer> num, Integer den) {
    Cyclotomic x;
    x.cond_ = cond;
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.normalize();
    return x;
}

void Cyclotomic::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& v : num_) {
        if (g == 1) break;
        g = gcd(g, v);
    }
    if (g > 1) {
        den_ /= g;
        for (auto& v : num_) v /= g;
    }
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
    Cyclotomic x;
    x.num_[0] = r.get_num();
    x.den_ = r.get_den();
    return x;
}

Cyclotomic Cyclotomic::from_integer(long v) {
    Cyclotomic x;
    x.num_[0] = v;
    return x;
}

Cyclotomic Cyclotomic::zeta_power(long cond, long e) {
    const CondData& cd = cond_data(cond);
    e %= cond;
    if (e < 0) e += cond;
    Cyclotomic x;
    x.cond_ = cond;
    x.num_ = cd.zeta_pow[e];
    x.den_ = 1;
    x.normalize();
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& f) {
    Rational g = f;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), g.get_num_mpz_t(), g.get_den_mpz_t());
    g -= Rational(fl);
    g.canonicalize();
    if (!g.get_den().fits_slong_p())
        throw std::invalid_argument("root_of_unity: conductor too large");
    long cond = g.get_den().get_si();
    long e = static_cast<long>(g.get_num().get_si());
    if (cond == 1) return from_integer(1);
    return zeta_power(cond, e);
}

Cyclotomic Cyclotomic::from_coefficients(long cond, const std::vector<Rational>& coeffs) {
    const CondData& cd = cond_data(cond);
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> raw(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        raw[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    if (raw.size() < static_cast<size_t>(cd.deg)) raw.resize(cd.deg);
    reduce_mod_phi(raw, cd);
    return make(cond, std::move(raw), den);
}

Rational Cyclotomic::coefficient(long i) const {
    Rational r(num_[i], den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> Cyclotomic::coefficients() const {
    std::vector<Rational> out(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) out[i] = coefficient(i);
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& v : num_)
        if (v != 0) return false;
    return true;
}

bool Cyclotomic::is_rational(Rational* out) const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    if (out) *out = coefficient(0);
    return true;
}

Cyclotomic Cyclotomic::star() const {
    const CondData& cd = cond_data(cond_);
    std::vector<Integer> raw(cd.deg);
    for (long k = 0; k < cd.deg; ++k) {
        if (num_[k] == 0) continue;
        long e = (cond_ - k) % cond_;
        const auto& row = cd.zeta_pow[e];
        for (long j = 0; j < cd.deg; ++j)
            if (row[j] != 0)
                mpz_addmul(raw[j].get_mpz_t(), num_[k].get_mpz_t(), row[j].get_mpz_t());
    }
    return make(cond_, std::move(raw), den_);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse of zero");
    const CondData& cd = cond_data(cond_);
    QPoly phi(cd.phi.size());
    for (size_t i = 0; i < cd.phi.size(); ++i) phi[i] = Rational(cd.phi[i]);
    QPoly a(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) {
        a[i] = Rational(num_[i], den_);
        a[i].canonicalize();
    }
    // Extended Euclid over Q[x]: maintain s with s*a == r (mod phi). Phi_m is
    // irreducible over Q, so the gcd is a nonzero constant.
    QPoly r0 = phi, r1 = a;
    QPoly s0 = {Rational(0)}, s1 = {Rational(1)};
    while (qdegree(r1) > 0) {
        QPoly rem = r0;
        QPoly quot = qdivmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly s2 = qsub_mul(s0, quot, s1);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (qdegree(r1) < 0)
            throw std::logic_error("Cyclotomic::inverse: Phi_m split unexpectedly");
    }
    Rational c = r1[0];
    std::vector<Rational> inv(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / c;
    return from_coefficients(cond_, inv);
}

Cyclotomic Cyclotomic::lifted(long new_cond) const {
    if (new_cond == cond_) return *this;
    if (new_cond % cond_ != 0)
        throw std::invalid_argument("Cyclotomic::lifted: target conductor not a multiple");
    const CondData& cd = cond_data(new_cond);
    long t = new_cond / cond_;
    std::vector<Integer> raw(static_cast<size_t>((num_.size() - 1) * t + 1));
    for (size_t k = 0; k < num_.size(); ++k) raw[k * t] = num_[k];
    if (raw.size() < static_cast<size_t>(cd.deg)) raw.resize(cd.deg);
    reduce_mod_phi(raw, cd);
    return make(new_cond, std::move(raw), den_);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& v : x.num_) v = -v;
    return x;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (cond_ != o.cond_) {
        long L = std::lcm(cond_, o.cond_);
        *this = lifted(L);
        return *this += o.lifted(L);
    }
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        Integer g = gcd(den_, o.den_);
        Integer fa = o.den_ / g, fb = den_ / g;
        for (size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= fa;
            mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
        }
        den_ *= fa;
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (cond_ != o.cond_) {
        long L = std::lcm(cond_, o.cond_);
        *this = lifted(L);
        return *this -= o.lifted(L);
    }
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
    } else {
        Integer g = gcd(den_, o.den_);
        Integer fa = o.den_ / g, fb = den_ / g;
        for (size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= fa;
            mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
        }
        den_ *= fa;
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (cond_ != o.cond_) {
        long L = std::lcm(cond_, o.cond_);
        *this = lifted(L);
        return *this *= o.lifted(L);
    }
    const CondData& cd = cond_data(cond_);
    std::vector<Integer> raw(2 * cd.deg - 1);
    for (long i = 0; i < cd.deg; ++i) {
        if (num_[i] == 0) continue;
        for (long j = 0; j < cd.deg; ++j) {
            if (o.num_[j] == 0) continue;
            mpz_addmul(raw[i + j].get_mpz_t(), num_[i].get_mpz_t(),
                       o.num_[j].get_mpz_t());
        }
    }
    reduce_mod_phi(raw, cd);
    num_ = std::move(raw);
    den_ *= o.den_;
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (cond_ != o.cond_) {
        long L = std::lcm(cond_, o.cond_);
        return lifted(L) == o.lifted(L);
    }
    return den_ == o.den_ && num_ == o.num_;
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> acc(0.0, 0.0);
    double d = den_.get_d();
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(k) /
                       static_cast<double>(cond_);
        acc += (num_[k].get_d() / d) *
               std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < num_.size(); ++i) {
        if (i) os << ", ";
        Rational c(num_[i], den_);
        c.canonicalize();
        os << c.get_str();
    }
    os << "] zeta_" << cond_;
    return os.str();
}

// ---------------------------------------------------------------------------
// Sign determination via dyadic interval arithmetic.
//
// Values are represented as [lo, hi] * 2^{-P}. The only inexact inputs are
// the pi / cos enclosures; all interval operations round outward.

namespace {

struct DyInterval {
    Integer lo, hi;  // value in [lo, hi] * 2^{-P}
};

// floor(a*b / 2^P) resp. ceil, for the product of two scaled integers.
Integer mul_down(const Integer& a, const Integer& b, long P) {
    Integer t = a * b;
    Integer q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), t.get_mpz_t(), P);
    return q;
}
Integer mul_up(const Integer& a, const Integer& b, long P) {
    Integer t = a * b;
    Integer q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), t.get_mpz_t(), P);
    return q;
}

DyInterval interval_mul(const DyInterval& a, const DyInterval& b, long P) {
    // General sign handling: take min/max over the four corner products.
    Integer c1 = mul_down(a.lo, b.lo, P), c2 = mul_down(a.lo, b.hi, P);
    Integer c3 = mul_down(a.hi, b.lo, P), c4 = mul_down(a.hi, b.hi, P);
    Integer d1 = mul_up(a.lo, b.lo, P), d2 = mul_up(a.lo, b.hi, P);
    Integer d3 = mul_up(a.hi, b.lo, P), d4 = mul_up(a.hi, b.hi, P);
    DyInterval r;
    r.lo = std::min(std::min(c1, c2), std::min(c3, c4));
    r.hi = std::max(std::max(d1, d2), std::max(d3, d4));
    return r;
}

DyInterval interval_div_long(const DyInterval& a, long d) {
    DyInterval r;
    mpz_fdiv_q_ui(r.lo.get_mpz_t(), a.lo.get_mpz_t(), d);
    mpz_cdiv_q_ui(r.hi.get_mpz_t(), a.hi.get_mpz_t(), d);
    return r;
}

// arctan(1/invx) for invx >= 2, alternating Taylor series with outward rounding.
DyInterval arctan_inv(long invx, long P) {
    Integer one = Integer(1) << P;
    DyInterval pw;
    mpz_fdiv_q_ui(pw.lo.get_mpz_t(), one.get_mpz_t(), invx);
    mpz_cdiv_q_ui(pw.hi.get_mpz_t(), one.get_mpz_t(), invx);
    DyInterval sum{0, 0};
    long inv2 = invx * invx;
    int sign = 1;
    for (long j = 0;; ++j) {
        DyInterval term = interval_div_long(pw, 2 * j + 1);
        if (sign > 0) {
            sum.lo += term.lo;
            sum.hi += term.hi;
        } else {
            sum.lo -= term.hi;
            sum.hi -= term.lo;
        }
        // Alternating with strictly decreasing terms: remainder bounded by
        // the next term.
        pw = interval_div_long(pw, inv2);
        if (pw.hi <= 1) {
            sum.lo -= pw.hi + 1;
            sum.hi += pw.hi + 1;
            break;
        }
        sign = -sign;
    }
    return sum;
}

DyInterval pi_interval(long P) {
    static std::map<long, DyInterval> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(P);
    if (it != cache.end()) return it->second;
    DyInterval a = arctan_inv(5, P);
    DyInterval b = arctan_inv(239, P);
    DyInterval pi;
    pi.lo = 16 * a.lo - 4 * b.hi;
    pi.hi = 16 * a.hi - 4 * b.lo;
    cache[P] = pi;
    return pi;
}

// cos at a dyadic point t*2^{-P}, 0 <= t*2^{-P} < 3.5, by the alternating
// Taylor series (terms decrease from j = 2 on for |t| < sqrt(12)).
DyInterval cos_point(const DyInterval& t, long P) {
    DyInterval t2 = interval_mul(t, t, P);
    DyInterval term{Integer(1) << P, Integer(1) << P};
    DyInterval sum{0, 0};
    int sign = 1;
    for (long j = 0;; ++j) {
        if (sign > 0) {
            sum.lo += term.lo;
            sum.hi += term.hi;
        } else {
            sum.lo -= term.hi;
            sum.hi -= term.lo;
        }
        term = interval_mul(term, t2, P);
        term = interval_div_long(term, (2 * j + 1) * (2 * j + 2));
        if (j >= 1 && term.hi <= 1) {
            sum.lo -= term.hi + 1;
            sum.hi += term.hi + 1;
            break;
        }
        sign = -sign;
    }
    return sum;
}

Rational dyadic_to_rational(const Integer& v, long P) {
    Rational r(v, Integer(1) << P);
    r.canonicalize();
    return r;
}

}  // namespace

void cos_enclosure(long k, long m, long prec_bits, Rational& lo, Rational& hi) {
    k %= m;
    if (k < 0) k += m;
    k = std::min(k, m - k);  // cos(2*pi*k/m) = cos(2*pi*(m-k)/m)
    long P = prec_bits + 32;
    DyInterval pi = pi_interval(P);
    // theta = 2*pi*k/m in [0, pi]
    DyInterval theta;
    mpz_fdiv_q_ui(theta.lo.get_mpz_t(), Integer(2 * k * pi.lo).get_mpz_t(), m);
    mpz_cdiv_q_ui(theta.hi.get_mpz_t(), Integer(2 * k * pi.hi).get_mpz_t(), m);
    DyInterval c = cos_point(theta, P);
    lo = dyadic_to_rational(c.lo, P);
    hi = dyadic_to_rational(c.hi, P);
}

int sign_of_real(const Cyclotomic& x) {
    if (x.is_zero()) return 0;
    if (!(x == x.star()))
        throw std::domain_error("sign_of_real: element is not star-fixed (not real)");
    long m = x.cond_;
    for (long prec = 64;; prec *= 2) {
        Rational lo(0), hi(0), cl, ch;
        for (size_t k = 0; k < x.num_.size(); ++k) {
            if (x.num_[k] == 0) continue;
            cos_enclosure(static_cast<long>(k), m, prec, cl, ch);
            Rational c(x.num_[k]);
            if (c >= 0) {
                lo += c * cl;
                hi += c * ch;
            } else {
                lo += c * ch;
                hi += c * cl;
            }
        }
        // den_ > 0, so it does not affect the sign.
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (prec > (1L << 15))
            throw std::logic_error("sign_of_real: failed to separate from zero");
    }
}

// ---------------------------------------------------------------------------
// Orders and q-combinatorics

long order_m(const QRoot& q, long d) {
    long e = (2 * d * q.n) % q.m;
    long g = std::gcd(q.m, e);  // gcd(m, 2dn) = gcd(m, 2d) since gcd(n, m) = 1
    return q.m / g;
}

bool q_squared_nontrivial(const QRoot& q, long d) { return order_m(q, d) > 1; }

Cyclotomic embed_q(const QRoot& q) { return Cyclotomic::zeta_power(q.m, q.n); }

Cyclotomic q_power(const QRoot& q, const Rational& y) {
    Rational f = y * Rational(q.n, q.m);
    f.canonicalize();
    return Cyclotomic::root_of_unity(f);
}

Cyclotomic q_power(const QRoot& q, long y) {
    long e = ((y % q.m) * q.n) % q.m;
    return Cyclotomic::zeta_power(q.m, e);
}

Cyclotomic qint(long k, long d, const QRoot& q) {
    if (!q_squared_nontrivial(q, d))
        throw std::domain_error("qint: q^d = q^{-d}, bracket undefined");
    if (k == 0) return Cyclotomic();
    long a = std::abs(k);
    Cyclotomic sum;
    for (long j = 0; j < a; ++j) sum += q_power(q, d * (a - 1 - 2 * j));
    if (k < 0) return -sum;
    return sum;
}

Cyclotomic qint(const Rational& x, long d, const QRoot& q) {
    if (!q_squared_nontrivial(q, d))
        throw std::domain_error("qint: q^d = q^{-d}, bracket undefined");
    if (x.get_den() == 1 && x.get_num().fits_slong_p())
        return qint(x.get_num().get_si(), d, q);
    Rational dx = Rational(d) * x;
    Cyclotomic numer = q_power(q, dx) - q_power(q, -dx);
    Cyclotomic denom = q_power(q, d) - q_power(q, -d);
    return numer / denom;
}

Cyclotomic qfactorial(long k, long d, const QRoot& q) {
    if (k < 0) throw std::invalid_argument("qfactorial: negative argument");
    Cyclotomic acc = Cyclotomic::from_integer(1);
    for (long j = 2; j <= k; ++j) acc *= qint(j, d, q);
    return acc;
}

namespace {

// Memoised balanced Gaussian binomial values per (q, d):
// B(n,k) = q_i^{-k} B(n-1,k) + q_i^{n-k} B(n-1,k-1), which is the Pascal
// recurrence of the q -> q^{-1} symmetric Laurent polynomial, evaluated at q_i.
struct BinomCache {
    std::vector<std::vector<Cyclotomic>> rows;  // rows[n][k], k <= n
};

std::map<std::tuple<long, long, long>, BinomCache> g_binom_cache;
std::mutex g_binom_mtx;

}  // namespace

Cyclotomic qbinomial(long n, long k, long d, const QRoot& q) {
    if (k < 0 || k > n) return Cyclotomic();
    if (n < 0) throw std::invalid_argument("qbinomial: negative upper argument");
    std::lock_guard<std::mutex> lock(g_binom_mtx);
    BinomCache& cache = g_binom_cache[{q.n, q.m, d}];
    if (cache.rows.empty())
        cache.rows.push_back({Cyclotomic::from_integer(1)});
    while (static_cast<long>(cache.rows.size()) <= n) {
        long nn = static_cast<long>(cache.rows.size());
        const auto& prev = cache.rows.back();
        std::vector<Cyclotomic> row(nn + 1);
        row[0] = Cyclotomic::from_integer(1);
        row[nn] = Cyclotomic::from_integer(1);
        for (long kk = 1; kk < nn; ++kk) {
            row[kk] = q_power(q, -d * kk) * prev[kk] +
                      q_power(q, d * (nn - kk)) * prev[kk - 1];
        }
        cache.rows.push_back(std::move(row));
    }
    return cache.rows[n][k];
}

Integer binomial_integer(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool check_qbinom_identity(long a, long b, long c, long d, const QRoot& q) {
    long M = order_m(q, 1);
    if (b < 0 || b >= M || d < 0 || d >= M)
        throw std::invalid_argument("check_qbinom_identity: need 0 <= b, d < M");
    if (a < 0 || c < 0)
        throw std::invalid_argument("check_qbinom_identity: need a, c >= 0");
    Cyclotomic lhs = qbinomial(a * M + b, c * M + d, 1, q);
    long expo = M * M * c * (a + 1) + M * (a * d - b * c);
    Cyclotomic rhs = q_power(q, expo) * qbinomial(b, d, 1, q) *
                     Cyclotomic::from_rational(Rational(binomial_integer(a, c)));
    return lhs == rhs;
}

}  // namespace qfin

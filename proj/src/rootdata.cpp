#include "qfin/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qfin {

// ---------------------------------------------------------------------------
// Weight

bool Weight::is_integral() const {
    for (const auto& c : fund)
        if (c.get_den() != 1) return false;
    return true;
}

bool Weight::is_zero() const {
    for (const auto& c : fund)
        if (c != 0) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < fund.size(); ++i) r.fund[i] += o.fund[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < fund.size(); ++i) r.fund[i] -= o.fund[i];
    return r;
}

Weight Weight::scaled(const Rational& c) const {
    Weight r = *this;
    for (auto& v : r.fund) v *= c;
    return r;
}

bool Weight::operator<(const Weight& o) const {
    for (size_t i = 0; i < fund.size(); ++i) {
        int c = cmp(fund[i], o.fund[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < fund.size(); ++i) {
        if (i) os << ",";
        os << fund[i].get_str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Construction

namespace {

// Cartan matrices in the convention cartan[i][j] = 2(a_i,a_j)/(a_i,a_i),
// together with the d_i.
void cartan_table(char series, long rank, std::vector<std::vector<long>>& A,
                  std::vector<long>& d) {
    auto chain = [&](long l) {
        A.assign(l, std::vector<long>(l, 0));
        for (long i = 0; i < l; ++i) A[i][i] = 2;
        for (long i = 0; i + 1 < l; ++i) {
            A[i][i + 1] = -1;
            A[i + 1][i] = -1;
        }
    };
    switch (series) {
        case 'A':
            if (rank < 1) throw std::invalid_argument("A_l requires l >= 1");
            chain(rank);
            d.assign(rank, 1);
            return;
        case 'B':
            if (rank < 2) throw std::invalid_argument("B_l requires l >= 2");
            chain(rank);
            A[rank - 1][rank - 2] = -2;  // short node l against long node l-1
            d.assign(rank, 2);
            d[rank - 1] = 1;
            return;
        case 'C':
            if (rank < 2) throw std::invalid_argument("C_l requires l >= 2");
            chain(rank);
            A[rank - 2][rank - 1] = -2;  // short node l-1 against long node l
            d.assign(rank, 1);
            d[rank - 1] = 2;
            return;
        case 'D':
            if (rank < 4) throw std::invalid_argument("D_l requires l >= 4");
            chain(rank - 1);
            A.resize(rank);
            for (auto& row : A) row.resize(rank, 0);
            A[rank - 1].assign(rank, 0);
            A[rank - 1][rank - 1] = 2;
            // node l attaches to node l-2; drop the chain edge (l-1, l) added above
            A[rank - 2][rank - 1] = 0;
            A[rank - 1][rank - 2] = 0;
            A[rank - 3][rank - 1] = -1;
            A[rank - 1][rank - 3] = -1;
            d.assign(rank, 1);
            return;
        case 'E': {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E_l requires l in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-...-l, node 2 attached to node 4.
            A.assign(rank, std::vector<long>(rank, 0));
            for (long i = 0; i < rank; ++i) A[i][i] = 2;
            auto link = [&](long i, long j) {
                A[i - 1][j - 1] = -1;
                A[j - 1][i - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (long i = 4; i < rank; ++i) link(i, i + 1);
            d.assign(rank, 1);
            return;
        }
        case 'F':
            if (rank != 4) throw std::invalid_argument("F requires rank 4");
            chain(4);
            A[2][1] = -2;  // short node 3 against long node 2
            d = {2, 2, 1, 1};
            return;
        case 'G':
            if (rank != 2) throw std::invalid_argument("G requires rank 2");
            // node 1 long, node 2 short
            A = {{2, -1}, {-3, 2}};
            d = {3, 1};
            return;
        default:
            throw std::invalid_argument(std::string("unknown series '") + series + "'");
    }
}

long pairing_root_coroot(const std::vector<long>& beta, long i,
                         const std::vector<std::vector<long>>& A) {
    // <beta, alpha_i^vee> = sum_j beta_j * cartan[i][j]
    long s = 0;
    for (size_t j = 0; j < beta.size(); ++j) s += beta[j] * A[i][j];
    return s;
}

// Exact inverse of an integer matrix, by Gauss-Jordan over Q.
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<long>>& M) {
    long n = static_cast<long>(M.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) a[i][j] = M[i][j];
        a[i][n + i] = 1;
    }
    for (long c = 0; c < n; ++c) {
        long p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::logic_error("invert: singular Cartan matrix");
        std::swap(a[c], a[p]);
        Rational pv = a[c][c];
        for (long j = 0; j < 2 * n; ++j) a[c][j] /= pv;
        for (long i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (long j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

RootSystem finish_build(char series, long rank, std::vector<std::vector<long>> A,
                        std::vector<long> d) {
    RootSystem rs;
    rs.series = series;
    rs.rank = rank;
    rs.cartan = std::move(A);
    rs.d = std::move(d);

    // Positive roots by closing the simple roots under root strings:
    // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the
    // number of steps one can subtract alpha_i from beta staying in the set.
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> level;
    for (long i = 0; i < rank; ++i) {
        std::vector<long> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        level.push_back(e);
    }
    rs.positive_roots = level;
    while (!level.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& beta : level) {
            for (long i = 0; i < rank; ++i) {
                std::vector<long> down = beta;
                long p = 0;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(),
                                              [](long v) { return v >= 0; });
                    if (!nonneg || !seen.count(down)) break;
                    ++p;
                }
                long q = p - pairing_root_coroot(beta, i, rs.cartan);
                if (q >= 1) {
                    std::vector<long> up = beta;
                    up[i] += 1;
                    if (seen.insert(up).second) {
                        next.push_back(up);
                        rs.positive_roots.push_back(up);
                    }
                }
            }
        }
        level = std::move(next);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const std::vector<long>& a, const std::vector<long>& b) {
                  long ha = std::accumulate(a.begin(), a.end(), 0L);
                  long hb = std::accumulate(b.begin(), b.end(), 0L);
                  if (ha != hb) return ha < hb;
                  return a < b;
              });

    // d_alpha = (alpha,alpha)/2 with (alpha_i,alpha_j) = d_i * cartan[i][j].
    for (const auto& beta : rs.positive_roots) {
        Rational n2 = 0;
        for (long i = 0; i < rank; ++i)
            for (long j = 0; j < rank; ++j)
                n2 += Rational(beta[i]) * Rational(beta[j]) *
                      Rational(rs.d[i] * rs.cartan[i][j]);
        Rational da = n2 / 2;
        if (da.get_den() != 1 || !da.get_num().fits_slong_p())
            throw std::logic_error("non-integral d_alpha");
        rs.d_alpha.push_back(da.get_num().get_si());
    }

    rs.highest_root = rs.positive_roots.back();
    rs.coxeter_labels = rs.highest_root;
    rs.rho = Weight(std::vector<Rational>(rank, Rational(1)));

    // (Lambda_i, Lambda_j) = B[i][j] * d_j where B = (cartan^T)^{-1}.
    std::vector<std::vector<long>> AT(rank, std::vector<long>(rank));
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j) AT[i][j] = rs.cartan[j][i];
    auto B = invert(AT);
    rs.fund_gram.assign(rank, std::vector<Rational>(rank));
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j) rs.fund_gram[i][j] = B[i][j] * Rational(rs.d[j]);
    return rs;
}

}  // namespace

std::string RootSystem::type_label() const {
    std::ostringstream os;
    os << series << rank;
    return os.str();
}

RootSystem build_root_system(char series, long rank) {
    std::vector<std::vector<long>> A;
    std::vector<long> d;
    cartan_table(series, rank, A, d);
    return finish_build(series, rank, std::move(A), std::move(d));
}

RootSystem build_from_cartan(const std::vector<std::vector<long>>& cartan) {
    long n = static_cast<long>(cartan.size());
    // Recover d from d_i * A_ij = d_j * A_ji, propagating along edges, then
    // clear denominators and divide by the overall gcd per the convention.
    std::vector<Rational> dr(n, 0);
    for (long start = 0; start < n; ++start) {
        if (dr[start] != 0) continue;
        dr[start] = 1;
        std::vector<long> stack = {start};
        while (!stack.empty()) {
            long i = stack.back();
            stack.pop_back();
            for (long j = 0; j < n; ++j) {
                if (i == j || cartan[i][j] == 0 || dr[j] != 0) continue;
                dr[j] = dr[i] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
                stack.push_back(j);
            }
        }
    }
    Integer L = 1;
    for (const auto& r : dr) L = lcm(L, Integer(r.get_den()));
    std::vector<long> d(n);
    Integer g = 0;
    for (long i = 0; i < n; ++i) {
        Integer v = dr[i].get_num() * (L / dr[i].get_den());
        g = gcd(g, v);
        d[i] = v.get_si();
    }
    for (auto& v : d) v /= g.get_si();
    return finish_build('?', n, cartan, d);
}

Rational pairing(const Weight& lambda, const std::vector<long>& alpha, const RootSystem& rs) {
    // (lambda, alpha) = sum_j c_j d_j lambda_j;   (lambda, alpha^vee) = (lambda,alpha)/d_alpha
    Rational num = 0, n2 = 0;
    for (long j = 0; j < rs.rank; ++j)
        num += Rational(alpha[j] * rs.d[j]) * lambda.fund[j];
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j)
            n2 += Rational(alpha[i] * alpha[j] * rs.d[i] * rs.cartan[i][j]);
    return num / (n2 / 2);
}

Rational inner(const Weight& a, const Weight& b, const RootSystem& rs) {
    Rational s = 0;
    for (long i = 0; i < rs.rank; ++i) {
        if (a.fund[i] == 0) continue;
        for (long j = 0; j < rs.rank; ++j)
            s += a.fund[i] * b.fund[j] * rs.fund_gram[i][j];
    }
    return s;
}

Weight weight_of_root(const std::vector<long>& alpha, const RootSystem& rs) {
    Weight w = Weight::zero(rs.rank);
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j)
            w.fund[i] += Rational(rs.cartan[i][j] * alpha[j]);
    return w;
}

Weight reflect(const Weight& lambda, long i, const RootSystem& rs) {
    // s_i(lambda) = lambda - (lambda, alpha_i^vee) alpha_i, and
    // (lambda, alpha_i^vee) is the i-th fundamental coordinate.
    Weight r = lambda;
    Rational c = lambda.fund[i];
    for (long j = 0; j < rs.rank; ++j) r.fund[j] -= c * Rational(rs.cartan[j][i]);
    return r;
}

Weight dominant_representative(Weight lambda, const RootSystem& rs) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (long i = 0; i < rs.rank; ++i) {
            if (lambda.fund[i] < 0) {
                lambda = reflect(lambda, i, rs);
                moved = true;
            }
        }
    }
    return lambda;
}

Weight antidominant_representative(Weight lambda, const RootSystem& rs) {
    return dominant_representative(lambda.scaled(-1), rs).scaled(-1);
}

bool is_dominant_integral(const Weight& lambda, const RootSystem& rs) {
    if (lambda.rank() != rs.rank || !lambda.is_integral()) return false;
    for (const auto& c : lambda.fund)
        if (c < 0) return false;
    return true;
}

long module_depth(const Weight& lambda, const RootSystem& rs) {
    if (!is_dominant_integral(lambda, rs))
        throw std::invalid_argument("module_depth: weight not dominant integral");
    Weight low = antidominant_representative(lambda, rs);
    Weight diff = lambda - low;  // lies in the root lattice
    // Solve diff = sum c_i alpha_i: fundamental coords are cartan * c.
    auto inv = invert(rs.cartan);
    Rational h = 0;
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j) h += inv[i][j] * diff.fund[j];
    if (h.get_den() != 1) throw std::logic_error("module_depth: non-integral height");
    return static_cast<long>(h.get_num().get_si());
}

Integer weyl_dimension(const Weight& lambda, const RootSystem& rs) {
    if (!is_dominant_integral(lambda, rs))
        throw std::invalid_argument("weyl_dimension: weight not dominant integral");
    Rational prod = 1;
    Weight lr = lambda + rs.rho;
    for (const auto& alpha : rs.positive_roots)
        prod *= pairing(lr, alpha, rs) / pairing(rs.rho, alpha, rs);
    if (prod.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral result");
    return prod.get_num();
}

std::map<Weight, long> freudenthal_character(const Weight& lambda, const RootSystem& rs,
                                             long height_cap) {
    if (!is_dominant_integral(lambda, rs))
        throw std::invalid_argument("freudenthal_character: weight not dominant integral");
    if (height_cap < 0) throw std::invalid_argument("freudenthal_character: negative cap");

    // Indexed by the descent beta (root-lattice coords), level by level.
    std::map<std::vector<long>, Integer> mult;
    std::vector<long> zero(rs.rank, 0);
    mult[zero] = 1;
    std::vector<std::vector<long>> level = {zero};

    Weight lr = lambda + rs.rho;
    Rational norm_top = inner(lr, lr, rs);

    // Precompute root weights for the inner products.
    std::vector<Weight> root_weights;
    for (const auto& alpha : rs.positive_roots)
        root_weights.push_back(weight_of_root(alpha, rs));

    for (long h = 1; h <= height_cap && !level.empty(); ++h) {
        std::set<std::vector<long>> cand;
        for (const auto& beta : level)
            for (long i = 0; i < rs.rank; ++i) {
                auto b = beta;
                b[i] += 1;
                cand.insert(b);
            }
        std::vector<std::vector<long>> next;
        for (const auto& beta : cand) {
            Weight mu = lambda;
            for (long i = 0; i < rs.rank; ++i)
                for (long j = 0; j < rs.rank; ++j)
                    mu.fund[j] -= Rational(beta[i] * rs.cartan[j][i]);
            Weight mr = mu + rs.rho;
            Rational denom = norm_top - inner(mr, mr, rs);
            if (denom == 0) continue;  // |mu+rho| = |lambda+rho| only off the module
            // 2 * sum_{alpha>0} sum_{k>=1} mult(mu + k alpha) (mu + k alpha, alpha)
            Rational acc = 0;
            for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
                const auto& alpha = rs.positive_roots[a];
                auto up = beta;
                for (long k = 1;; ++k) {
                    bool ok = true;
                    for (long i = 0; i < rs.rank; ++i) {
                        up[i] -= alpha[i];
                        if (up[i] < 0) ok = false;
                    }
                    if (!ok) break;
                    auto it = mult.find(up);
                    if (it == mult.end() || it->second == 0) continue;
                    Weight muk = mu;
                    for (long j = 0; j < rs.rank; ++j)
                        muk.fund[j] += Rational(k) * root_weights[a].fund[j];
                    acc += Rational(it->second) * inner(muk, root_weights[a], rs);
                }
            }
            Rational mv = 2 * acc / denom;
            if (mv == 0) continue;
            if (mv.get_den() != 1 || mv < 0)
                throw std::logic_error("freudenthal: non-integral multiplicity");
            mult[beta] = mv.get_num();
            next.push_back(beta);
        }
        level = std::move(next);
    }

    std::map<Weight, long> out;
    for (const auto& [beta, mv] : mult) {
        if (mv == 0) continue;
        Weight mu = lambda;
        for (long i = 0; i < rs.rank; ++i)
            for (long j = 0; j < rs.rank; ++j)
                mu.fund[j] -= Rational(beta[i] * rs.cartan[j][i]);
        out[mu] = static_cast<long>(mv.get_si());
    }
    return out;
}

std::vector<long> coxeter_labels(const RootSystem& rs) { return rs.coxeter_labels; }

std::vector<int> dynkin_bipartition(const RootSystem& rs) {
    std::vector<int> colour(rs.rank, -1);
    for (long start = 0; start < rs.rank; ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::vector<long> stack = {start};
        while (!stack.empty()) {
            long i = stack.back();
            stack.pop_back();
            for (long j = 0; j < rs.rank; ++j) {
                if (i == j || rs.cartan[i][j] == 0) continue;
                if (colour[j] == -1) {
                    colour[j] = 1 - colour[i];
                    stack.push_back(j);
                } else if (colour[j] == colour[i]) {
                    throw std::logic_error("dynkin_bipartition: diagram not bipartite");
                }
            }
        }
    }
    return colour;
}

}  // namespace qfin

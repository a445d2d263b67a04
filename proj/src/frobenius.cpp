#include "qfin/frobenius.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qfin {

namespace {

using Matrix = std::vector<std::vector<Cyclotomic>>;

Matrix zeros(long n) { return Matrix(n, std::vector<Cyclotomic>(n)); }

Matrix mat_mul(const Matrix& A, const Matrix& B) {
    long n = static_cast<long>(A.size());
    Matrix C = zeros(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                if (B[k][j].is_zero()) continue;
                C[i][j] += A[i][k] * B[k][j];
            }
        }
    return C;
}

Matrix mat_sub(const Matrix& A, const Matrix& B) {
    Matrix C = A;
    for (size_t i = 0; i < C.size(); ++i)
        for (size_t j = 0; j < C.size(); ++j) C[i][j] -= B[i][j];
    return C;
}

Matrix mat_scale(const Matrix& A, const Cyclotomic& c) {
    Matrix C = A;
    for (auto& row : C)
        for (auto& v : row) v *= c;
    return C;
}

std::vector<Cyclotomic> column(const Matrix& A, long j) {
    std::vector<Cyclotomic> c(A.size());
    for (size_t i = 0; i < A.size(); ++i) c[i] = A[i][j];
    return c;
}

int sign_value(const Cyclotomic& x, const char* what) {
    Rational r;
    if (!x.is_rational(&r) || (r != 1 && r != -1))
        throw std::logic_error(std::string(what) + ": exact evaluation is not a sign");
    return r == 1 ? 1 : -1;
}

}  // namespace

TildeData tilde_data(const RootSystem& rs, const RootOfUnitySpec& spec) {
    TildeData td;
    td.bipartition = dynkin_bipartition(rs);
    td.s_matrix.assign(rs.rank, std::vector<int>(rs.rank, 1));
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j) {
            // (alpha_i, alpha_j) = d_i * cartan[i][j]
            long e = spec.M_simple[i] * spec.M_simple[j] * rs.d[i] * rs.cartan[i][j];
            td.s_matrix[i][j] = sign_value(q_power(spec.q, e), "tilde_data s_ij");
        }
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j)
            if (td.s_matrix[i][j] != td.s_matrix[j][i])
                throw std::logic_error("tilde_data: s matrix not symmetric");
    // Bipartition sign identity on edges: s_ji^{a_i} s_ij^{1-a_j} = 1.
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j) {
            if (i == j || rs.cartan[i][j] == 0) continue;
            int v = (td.bipartition[i] ? td.s_matrix[j][i] : 1) *
                    (td.bipartition[j] ? 1 : td.s_matrix[i][j]);
            if (v != 1) throw std::logic_error("tilde_data: bipartition sign identity fails");
        }
    return td;
}

std::vector<int> k_tilde_eval(const RootSystem& rs, const RootOfUnitySpec& spec,
                              const std::vector<long>& z) {
    if (static_cast<long>(z.size()) != rs.rank)
        throw std::invalid_argument("k_tilde_eval: z has wrong length");
    std::vector<int> out(rs.rank);
    for (long i = 0; i < rs.rank; ++i) {
        long Mi = spec.M_simple[i];
        long e = rs.d[i] * z[i] * Mi * Mi;
        out[i] = sign_value(q_power(spec.q, e), "k_tilde_eval");
    }
    return out;
}

std::vector<std::vector<Cyclotomic>> DividedPowerModule::divided_power_lowering(long a) const {
    Matrix F = zeros(dim);
    for (long k = 0; k + a < dim; ++k) F[k + a][k] = qbinomial(k + a, a, 1, q);
    return F;
}

DividedPowerModule rank1_res_module(long z, const RootOfUnitySpec& spec) {
    if (spec.M_simple.size() != 1)
        throw std::invalid_argument("rank1_res_module: spec is not rank 1");
    if (z < 0) throw std::invalid_argument("rank1_res_module: z must be non-negative");
    DividedPowerModule mod;
    mod.z = z;
    mod.M = spec.M;
    mod.q = spec.q;
    long lam = z * mod.M;
    mod.dim = lam + 1;
    const QRoot& q = spec.q;

    mod.Xminus = zeros(mod.dim);
    mod.XminusM = zeros(mod.dim);
    mod.Xplus = zeros(mod.dim);
    mod.XplusM = zeros(mod.dim);
    mod.K = zeros(mod.dim);
    mod.H = zeros(mod.dim);
    mod.Ktilde = zeros(mod.dim);
    for (long k = 0; k < mod.dim; ++k) {
        if (k + 1 < mod.dim) mod.Xminus[k + 1][k] = qint(k + 1, 1, q);
        if (k + mod.M < mod.dim) mod.XminusM[k + mod.M][k] = qbinomial(k + mod.M, mod.M, 1, q);
        if (k >= 1) mod.Xplus[k - 1][k] = qint(lam - k + 1, 1, q);
        if (k >= mod.M) mod.XplusM[k - mod.M][k] = qbinomial(lam - k + mod.M, mod.M, 1, q);
        mod.K[k][k] = q_power(q, lam - 2 * k);
        mod.H[k][k] = Cyclotomic::from_integer(lam - 2 * k);
        mod.Ktilde[k][k] = q_power(q, mod.M * (lam - 2 * k));
    }
    for (long n = 0; n * mod.M <= lam; ++n) mod.sector.push_back(n * mod.M);

    // Tilde generators with the frozen rank-1 bipartition a_1 = 0:
    //   X~+ = X^{+(M)},  X~- = X^{-(M)} K~ q^{M^2}.
    mod.XplusT = mod.XplusM;
    mod.XminusT = mat_scale(mat_mul(mod.XminusM, mod.Ktilde),
                            q_power(q, mod.M * mod.M));
    return mod;
}

TildeRelationReport verify_tilde_relations_rank1(const DividedPowerModule& mod,
                                                 const RootOfUnitySpec& spec) {
    TildeRelationReport rep;
    auto add = [&](const std::string& name, bool ok, const std::string& witness) {
        rep.items.push_back({name, ok, ok ? "" : witness});
        if (!ok) rep.all_ok = false;
    };
    auto vec_name = [&](long k) {
        std::ostringstream os;
        os << "v_" << k;
        return os.str();
    };

    Matrix Ht = mat_sub(mat_mul(mod.XplusT, mod.XminusT), mat_mul(mod.XminusT, mod.XplusT));

    // H~ diagonal on the sector with eigenvalues z, z-2, ..., -z.
    for (size_t n = 0; n < mod.sector.size(); ++n) {
        long k = mod.sector[n];
        auto col = column(Ht, k);
        bool ok = true;
        Cyclotomic expect = Cyclotomic::from_integer(mod.z - 2 * static_cast<long>(n));
        for (long i = 0; i < mod.dim; ++i) {
            if (i == k ? !(col[i] == expect) : !col[i].is_zero()) ok = false;
        }
        add("Htilde_eigenvalue", ok, vec_name(k));
        if (!ok) break;
    }

    // [H~, X~+-] = +-2 X~+- on the sector.
    Matrix cp = mat_sub(mat_mul(Ht, mod.XplusT), mat_mul(mod.XplusT, Ht));
    Matrix cm = mat_sub(mat_mul(Ht, mod.XminusT), mat_mul(mod.XminusT, Ht));
    Cyclotomic two = Cyclotomic::from_integer(2);
    for (long k : mod.sector) {
        auto lhs = column(cp, k);
        auto rhs = column(mod.XplusT, k);
        bool ok = true;
        for (long i = 0; i < mod.dim; ++i)
            if (!(lhs[i] == two * rhs[i])) ok = false;
        add("commutator_Xplus_tilde", ok, vec_name(k));
        if (!ok) break;
    }
    for (long k : mod.sector) {
        auto lhs = column(cm, k);
        auto rhs = column(mod.XminusT, k);
        bool ok = true;
        for (long i = 0; i < mod.dim; ++i)
            if (!(lhs[i] == -(two * rhs[i]))) ok = false;
        add("commutator_Xminus_tilde", ok, vec_name(k));
        if (!ok) break;
    }

    // X~+- K~ = s_11 K~ X~+- (s_11 = q^{2 M^2} = 1), on the whole carrier.
    Cyclotomic s11 = q_power(spec.q, 2 * mod.M * mod.M);
    {
        Matrix lp = mat_sub(mat_mul(mod.XplusT, mod.Ktilde),
                            mat_scale(mat_mul(mod.Ktilde, mod.XplusT), s11));
        Matrix lm = mat_sub(mat_mul(mod.XminusT, mod.Ktilde),
                            mat_scale(mat_mul(mod.Ktilde, mod.XminusT), s11));
        bool okp = true, okm = true;
        for (long i = 0; i < mod.dim; ++i)
            for (long j = 0; j < mod.dim; ++j) {
                if (!lp[i][j].is_zero()) okp = false;
                if (!lm[i][j].is_zero()) okm = false;
            }
        add("Ktilde_commutation_plus", okp, "matrix");
        add("Ktilde_commutation_minus", okm, "matrix");
    }

    // The sector is X~-stable and carries the irreducible (z+1)-dimensional
    // classical sl2 string: lowering steps are nonzero until the bottom.
    std::set<long> sector_set(mod.sector.begin(), mod.sector.end());
    for (size_t n = 0; n < mod.sector.size(); ++n) {
        long k = mod.sector[n];
        auto dn = column(mod.XminusT, k);
        auto up = column(mod.XplusT, k);
        bool ok = true;
        for (long i = 0; i < mod.dim; ++i) {
            if (!dn[i].is_zero() && !sector_set.count(i)) ok = false;
            if (!up[i].is_zero() && !sector_set.count(i)) ok = false;
        }
        add("sector_invariance", ok, vec_name(k));
        bool string_ok = true;
        if (n + 1 < mod.sector.size()) {
            if (dn[mod.sector[n + 1]].is_zero()) string_ok = false;
        } else {
            for (long i = 0; i < mod.dim; ++i)
                if (!dn[i].is_zero()) string_ok = false;
        }
        add("sl2_string_lowering", string_ok, vec_name(k));
    }

    // X^{+-} send sector vectors into the radical span (their image has no
    // sector component), matching the one-dimensionality of the sectors.
    for (long k : mod.sector) {
        auto dn = column(mod.Xminus, k);
        auto up = column(mod.Xplus, k);
        bool ok = true;
        for (long i : mod.sector)
            if (!dn[i].is_zero() || !up[i].is_zero()) ok = false;
        add("small_ops_into_radical", ok, vec_name(k));
    }

    return rep;
}

bool tensor_character_check(const RootSystem& rs, const RootOfUnitySpec& spec,
                            const Weight& lambda0, const std::vector<long>& z) {
    if (!is_dominant_integral(lambda0, rs))
        throw std::invalid_argument("tensor_character_check: lambda0 not dominant integral");
    for (long i = 0; i < rs.rank; ++i) {
        if (lambda0.fund[i] >= spec.M_simple[i])
            throw std::invalid_argument("tensor_character_check: lambda0 not in the box");
        if (z[i] < 0)
            throw std::invalid_argument("tensor_character_check: z must be non-negative");
    }

    RootSystem dual = build_from_cartan(spec.dual_cartan);
    Weight zw = Weight::zero(rs.rank);
    for (long i = 0; i < rs.rank; ++i) zw.fund[i] = z[i];
    long depth = module_depth(zw, dual);
    auto dual_weights = freudenthal_character(zw, dual, depth);

    // Side A: push each dual weight through the rescaling Lambda~_j -> M_j Lambda_j.
    std::map<Weight, long> side_a;
    for (const auto& [mu, mult] : dual_weights) {
        Weight key = lambda0;
        for (long j = 0; j < rs.rank; ++j)
            key.fund[j] += mu.fund[j] * Rational(spec.M_simple[j]);
        side_a[key] += mult;
    }

    // Side B: enumerate displacement vectors n and reconstruct the dual weight
    // z - sum n_i alpha~_i, taking its multiplicity from the oracle.
    std::map<Weight, long> side_b;
    std::vector<long> n(rs.rank, 0);
    while (true) {
        Weight zprime = zw;
        for (long i = 0; i < rs.rank; ++i)
            for (long j = 0; j < rs.rank; ++j)
                zprime.fund[j] -= Rational(n[i] * spec.dual_cartan[j][i]);
        auto it = dual_weights.find(zprime);
        if (it != dual_weights.end() && it->second > 0) {
            Weight key = lambda0;
            for (long j = 0; j < rs.rank; ++j) {
                key.fund[j] += Rational(z[j] * spec.M_simple[j]);
                for (long i = 0; i < rs.rank; ++i)
                    key.fund[j] -= Rational(n[i] * spec.M_simple[i] * rs.cartan[j][i]);
            }
            side_b[key] += it->second;
        }
        // iterate all n with |n| <= depth
        long pos = rs.rank - 1;
        while (pos >= 0) {
            ++n[pos];
            if (std::accumulate(n.begin(), n.end(), 0L) <= depth) break;
            n[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    return side_a == side_b;
}

namespace {

// Type classification of a connected simple system given its Cartan matrix,
// by matching against the standard tables under node permutations.
std::string classify_component(const std::vector<std::vector<long>>& C) {
    long n = static_cast<long>(C.size());
    if (n == 1) return "A1";
    std::vector<char> candidates;
    switch (n) {
        case 2: candidates = {'A', 'B', 'C', 'G'}; break;
        case 3: candidates = {'A', 'B', 'C'}; break;
        case 4: candidates = {'A', 'B', 'C', 'D', 'F'}; break;
        default: candidates = {'A', 'B', 'C', 'D'}; break;
    }
    std::vector<long> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (char s : candidates) {
        RootSystem ref;
        try {
            ref = build_root_system(s, n);
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto p = perm;
        do {
            bool match = true;
            for (long i = 0; i < n && match; ++i)
                for (long j = 0; j < n && match; ++j)
                    if (ref.cartan[i][j] != C[p[i]][p[j]]) match = false;
            if (match) return ref.type_label();
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return "unrecognised";
}

}  // namespace

RealityAlgebra reality_preserving_algebra(const RootSystem& rs, const RootOfUnitySpec& spec) {
    RealityAlgebra out;
    Cyclotomic one = Cyclotomic::from_integer(1);
    for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
        const auto& alpha = rs.positive_roots[a];
        bool pass = true;
        for (long i = 0; i < rs.rank && pass; ++i) {
            long ip = 0;  // (alpha, alpha_i) = sum_j alpha_j d_i cartan[i][j]
            for (long j = 0; j < rs.rank; ++j) ip += alpha[j] * rs.d[i] * rs.cartan[i][j];
            if (!(q_power(spec.q, spec.M_per_root[a] * ip) == one)) pass = false;
        }
        if (pass) out.passing_roots.push_back(a);
    }

    if (out.passing_roots.empty()) {
        out.label = "trivial";
        return out;
    }
    if (out.passing_roots.size() == rs.positive_roots.size()) {
        out.full = true;
        out.label = spec.dual_type;
        out.components = {spec.dual_type};
        return out;
    }

    // Proper subsystem: identify its type on the rescaled lattice. Simple
    // elements are the passing positives that are not sums of two passing
    // positives; pairings use the rescaled roots M_alpha alpha.
    std::set<std::vector<long>> passing_set;
    for (size_t a : out.passing_roots) passing_set.insert(rs.positive_roots[a]);
    std::vector<size_t> simple;
    for (size_t a : out.passing_roots) {
        bool is_sum = false;
        for (size_t b : out.passing_roots) {
            if (is_sum) break;
            const auto& rb = rs.positive_roots[b];
            const auto& ra = rs.positive_roots[a];
            std::vector<long> diff(rs.rank);
            bool nonneg = true;
            for (long i = 0; i < rs.rank; ++i) {
                diff[i] = ra[i] - rb[i];
                if (diff[i] < 0) nonneg = false;
            }
            if (!nonneg || diff == std::vector<long>(rs.rank, 0)) continue;
            if (passing_set.count(diff)) is_sum = true;
        }
        if (!is_sum) simple.push_back(a);
    }

    // Pairing of rescaled roots: <M_b beta, (M_a alpha)^vee> = (M_b/M_a)(beta, alpha)/d_alpha.
    auto tilde_pairing = [&](size_t arow, size_t bcol) -> long {
        const auto& alpha = rs.positive_roots[arow];
        const auto& beta = rs.positive_roots[bcol];
        Rational ip = 0;
        for (long i = 0; i < rs.rank; ++i)
            for (long j = 0; j < rs.rank; ++j)
                ip += Rational(alpha[i] * beta[j] * rs.d[i] * rs.cartan[i][j]);
        Rational v = Rational(spec.M_per_root[bcol], spec.M_per_root[arow]) * ip /
                     Rational(rs.d_alpha[arow]);
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("reality algebra: non-integral pairing");
        return v.get_num().get_si();
    };

    long ns = static_cast<long>(simple.size());
    std::vector<std::vector<long>> C(ns, std::vector<long>(ns));
    for (long i = 0; i < ns; ++i)
        for (long j = 0; j < ns; ++j) C[i][j] = tilde_pairing(simple[i], simple[j]);

    // Connected components.
    std::vector<int> comp(ns, -1);
    int ncomp = 0;
    for (long i = 0; i < ns; ++i) {
        if (comp[i] != -1) continue;
        std::vector<long> stack = {i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            long u = stack.back();
            stack.pop_back();
            for (long vtx = 0; vtx < ns; ++vtx)
                if (comp[vtx] == -1 && C[u][vtx] != 0) {
                    comp[vtx] = ncomp;
                    stack.push_back(vtx);
                }
        }
        ++ncomp;
    }
    bool all_a1 = true;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<long> nodes;
        for (long i = 0; i < ns; ++i)
            if (comp[i] == c) nodes.push_back(i);
        std::vector<std::vector<long>> sub(nodes.size(), std::vector<long>(nodes.size()));
        for (size_t i = 0; i < nodes.size(); ++i)
            for (size_t j = 0; j < nodes.size(); ++j) sub[i][j] = C[nodes[i]][nodes[j]];
        std::string t = classify_component(sub);
        out.components.push_back(t);
        if (t != "A1") all_a1 = false;
    }
    std::sort(out.components.begin(), out.components.end());
    if (all_a1) {
        out.label = "(su(2))^" + std::to_string(ncomp);
    } else if (ncomp == 1) {
        out.label = out.components[0];
    } else {
        std::string joined;
        for (size_t i = 0; i < out.components.size(); ++i) {
            if (i) joined += " x ";
            joined += out.components[i];
        }
        out.label = joined;
    }
    return out;
}

}  // namespace qfin

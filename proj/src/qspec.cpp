#include "qfin/qspec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfin {

std::string RealForm::to_string() const {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += (s[i] > 0 ? "+" : "-");
    }
    return out;
}

RootOfUnitySpec compute_spec(const RootSystem& rs, const QRoot& q) {
    RootOfUnitySpec spec;
    spec.q = q;
    spec.M = order_m(q, 1);
    spec.even = (q.m % 2 == 0);  // q^M = -1 iff m even
    for (long i = 0; i < rs.rank; ++i) {
        long Mi = order_m(q, rs.d[i]);
        if (Mi < 2) {
            std::ostringstream os;
            os << "compute_spec: q^{d_" << (i + 1) << "} = q^{-d_" << (i + 1)
               << "} at q = " << q.n << "/" << q.m
               << "; the algebra requires q^{d_i} != q^{-d_i}";
            throw std::invalid_argument(os.str());
        }
        spec.M_simple.push_back(Mi);
    }
    for (long a = 0; a < static_cast<long>(rs.positive_roots.size()); ++a)
        spec.M_per_root.push_back(order_m(q, rs.d_alpha[a]));

    // dual_cartan[i][j] = (M_j / M_i) cartan[i][j]; integrality is forced by
    // the divisibility of the orders.
    spec.dual_cartan.assign(rs.rank, std::vector<long>(rs.rank));
    for (long i = 0; i < rs.rank; ++i)
        for (long j = 0; j < rs.rank; ++j) {
            long num = spec.M_simple[j] * rs.cartan[i][j];
            if (num % spec.M_simple[i] != 0)
                throw std::logic_error("compute_spec: dual Cartan entry not integral");
            spec.dual_cartan[i][j] = num / spec.M_simple[i];
        }

    bool swapped = false;
    for (long i = 1; i < rs.rank; ++i)
        if (spec.M_simple[i] != spec.M_simple[0]) swapped = true;
    spec.role_swapped = false;
    if (!swapped) {
        spec.dual_type = rs.type_label();
    } else {
        switch (rs.series) {
            case 'B':
                spec.dual_type = "C" + std::to_string(rs.rank);
                break;
            case 'C':
                spec.dual_type = "B" + std::to_string(rs.rank);
                break;
            case 'F':
            case 'G':
                spec.dual_type = rs.type_label();
                spec.role_swapped = true;
                break;
            default:
                throw std::logic_error("compute_spec: unequal orders in simply laced type");
        }
    }
    return spec;
}

std::pair<std::vector<std::vector<long>>, std::string> dual_algebra(const RootOfUnitySpec& spec) {
    return {spec.dual_cartan, spec.dual_type};
}

bool is_special_point(const Weight& lambda, const RootOfUnitySpec& spec) {
    for (size_t i = 0; i < lambda.fund.size(); ++i) {
        Rational z = lambda.fund[i] / Rational(spec.M_simple[i]);
        if (z.get_den() != 1) return false;
    }
    return true;
}

bool hyperplane_check(const Weight& lambda, const RootSystem& rs, const RootOfUnitySpec& spec) {
    for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
        Rational r = pairing(lambda, rs.positive_roots[a], rs) / Rational(spec.M_per_root[a]);
        if (r.get_den() != 1) return false;
    }
    return true;
}

bool compact_bound_check(const Weight& lambda, const RootSystem& rs,
                         const RootOfUnitySpec& spec) {
    Weight lr = lambda + rs.rho;
    for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
        // floor(m / (2 n d_alpha)) + 1
        long bound = spec.q.m / (2 * spec.q.n * rs.d_alpha[a]) + 1;
        if (pairing(lr, rs.positive_roots[a], rs) > bound) return false;
    }
    return true;
}

SingletData singlet_weights(const RootSystem& rs, const RootOfUnitySpec& spec,
                            const std::vector<long>& p) {
    if (static_cast<long>(p.size()) != rs.rank)
        throw std::invalid_argument("singlet_weights: p has wrong length");
    SingletData out;
    out.lambda_r = Weight::zero(rs.rank);
    out.form.s.resize(rs.rank);
    for (long i = 0; i < rs.rank; ++i) {
        Rational coeff = Rational(spec.q.m, 2 * spec.q.n * rs.d[i]) * Rational(p[i]);
        coeff.canonicalize();
        out.lambda_r.fund[i] = coeff;
        // s_i = q_i^{M_i r_i} with r_i M_i = (lambda_r, alpha_i^vee); exact evaluation.
        Cyclotomic s = q_power(spec.q, Rational(rs.d[i]) * coeff);
        Rational sv;
        if (!s.is_rational(&sv) || (sv != 1 && sv != -1))
            throw std::logic_error("singlet_weights: q_i^{M_i r_i} is not a sign");
        out.form.s[i] = (sv == 1) ? 1 : -1;
    }
    return out;
}

AlcoveAdjacency alcove_adjacency(const Weight& lambda_r, const RootSystem& rs,
                                 const RootOfUnitySpec& spec) {
    // Validate the singlet shape: p_i = (lambda_r)_i * 2 n d_i / m must be integral.
    std::vector<Rational> p(rs.rank);
    for (long i = 0; i < rs.rank; ++i) {
        p[i] = lambda_r.fund[i] * Rational(2 * spec.q.n * rs.d[i], spec.q.m);
        p[i].canonicalize();
        if (p[i].get_den() != 1)
            throw std::invalid_argument(
                "alcove_adjacency: weight is not of the singlet shape");
    }

    AlcoveAdjacency out;
    if (lambda_r.is_zero()) {
        out.adjacent = true;  // degenerate compact case
        return out;
    }

    // If the input already has a single nonzero coordinate, report its node
    // and sign; otherwise normalise to the antidominant chamber and report
    // the antidominant representative with sign -1.
    long nonzero = -1;
    bool single = true;
    for (long i = 0; i < rs.rank; ++i) {
        if (p[i] != 0) {
            if (nonzero >= 0) single = false;
            nonzero = i;
        }
    }
    Weight anti = antidominant_representative(lambda_r, rs);
    long node = -1;
    for (long i = 0; i < rs.rank; ++i) {
        if (anti.fund[i] == 0) continue;
        if (node >= 0) return out;  // more than one wall coordinate: not adjacent
        node = i;
    }
    // anti = -(m/2nd_{node}) Lambda_{node} exactly, with Coxeter label 1?
    Rational expect = -Rational(spec.q.m, 2 * spec.q.n * rs.d[node]);
    expect.canonicalize();
    if (anti.fund[node] != expect) return out;
    if (rs.coxeter_labels[node] != 1) return out;
    out.adjacent = true;
    if (single && p[nonzero] > 0) {
        out.node = nonzero + 1;
        out.sign = 1;
    } else if (single) {
        out.node = nonzero + 1;
        out.sign = -1;
    } else {
        out.node = node + 1;
        out.sign = -1;
    }
    return out;
}

std::vector<HermitianNode> hermitian_nodes(const RootSystem& rs) {
    std::vector<HermitianNode> out;
    for (long i = 0; i < rs.rank; ++i) {
        if (rs.coxeter_labels[i] != 1) continue;
        std::ostringstream name;
        long l = rs.rank;
        long node = i + 1;
        switch (rs.series) {
            case 'A':
                name << "su(" << (l + 1 - node) << "," << node << ")";
                break;
            case 'B':
                name << "so(" << (2 * l - 1) << ",2)";
                break;
            case 'C':
                name << "sp(" << l << ",R)";
                break;
            case 'D':
                if (node == 1)
                    name << "so(" << (2 * l - 2) << ",2)";
                else
                    name << "so*(" << 2 * l << ")";
                break;
            case 'E':
                name << "e" << l << (l == 6 ? "(-14)" : "(-25)");
                break;
            default:
                name << "hermitian";
                break;
        }
        out.push_back({node, name.str()});
    }
    return out;
}

}  // namespace qfin

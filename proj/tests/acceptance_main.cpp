// Acceptance suite: one pass/fail line per criterion, with timing.
// Exit code is the number of failed criteria. All arithmetic is exact and
// every tolerance is zero; the per-criterion wall-clock budgets are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qfin/frobenius.hpp"
#include "qfin/gram.hpp"

using namespace qfin;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

Weight fw(std::vector<long> coords) {
    std::vector<Rational> c(coords.begin(), coords.end());
    return Weight(std::move(c));
}

std::vector<long> admissible_m(const RootSystem& rs, long max_M) {
    std::vector<long> out;
    for (long m = 3; m <= 2 * max_M + 1; ++m) {
        try {
            RootOfUnitySpec spec = compute_spec(rs, QRoot(1, m));
            if (spec.M <= max_M) out.push_back(m);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

// Every dominant integral lambda with 0 <= (lambda, alpha_i^vee) < cap_i.
std::vector<Weight> weight_box(const std::vector<long>& cap) {
    std::vector<Weight> out;
    std::vector<long> coords(cap.size(), 0);
    while (true) {
        std::vector<Rational> c(coords.begin(), coords.end());
        out.push_back(Weight(std::move(c)));
        long pos = static_cast<long>(cap.size()) - 1;
        while (pos >= 0 && coords[pos] == cap[pos] - 1) coords[pos--] = 0;
        if (pos < 0) break;
        ++coords[pos];
    }
    return out;
}

// --------------------------------------------------------------------------
// 1. q-binomial reduction identity, randomized.

bool criterion_qbinom(std::string& detail) {
    std::mt19937 rng(20260808);
    long checked = 0;
    for (long m = 4; m <= 20; ++m) {
        QRoot q(1, m);
        long M = order_m(q);
        std::uniform_int_distribution<long> ac(0, 4), bd(0, M - 1);
        for (int rep = 0; rep < 500; ++rep) {
            long a = ac(rng), b = bd(rng), c = ac(rng), d = bd(rng);
            if (!check_qbinom_identity(a, b, c, d, q)) {
                std::ostringstream os;
                os << "violated at m=" << m << " (a,b,c,d)=(" << a << "," << b << ","
                   << c << "," << d << ")";
                detail = os.str();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " tuples";
    return true;
}

// --------------------------------------------------------------------------
// 2. Spectral tables and the dual-algebra case analysis.

bool criterion_spectral(std::string& detail) {
    std::vector<std::pair<char, long>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                                {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4},
                                                {'G', 2}, {'F', 4}};
    long checked = 0;
    for (auto [series, rank] : types) {
        RootSystem rs = build_root_system(series, rank);
        for (long m = 3; m <= 24; ++m) {
            RootOfUnitySpec spec;
            try {
                spec = compute_spec(rs, QRoot(1, m));
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (long i = 0; i < rs.rank; ++i) {
                if (spec.M % spec.M_simple[i] != 0) {
                    detail = "M_i does not divide M";
                    return false;
                }
                for (long j = 0; j < rs.rank; ++j) {
                    if (spec.M_simple[i] * spec.dual_cartan[i][j] !=
                        spec.M_simple[j] * rs.cartan[i][j]) {
                        detail = "dual Cartan relation fails";
                        return false;
                    }
                    if (i == j && spec.dual_cartan[i][j] != 2) {
                        detail = "dual Cartan diagonal not 2";
                        return false;
                    }
                    if (i != j && spec.dual_cartan[i][j] > 0) {
                        detail = "dual Cartan off-diagonal positive";
                        return false;
                    }
                }
            }
            std::string expect;
            bool expect_swap = false;
            switch (series) {
                case 'A':
                case 'D':
                    expect = rs.type_label();
                    break;
                case 'B':
                    expect = (m % 4 == 0 ? "C" : "B") + std::to_string(rank);
                    break;
                case 'C':
                    expect = (m % 4 == 0 ? "B" : "C") + std::to_string(rank);
                    break;
                case 'F':
                    expect = "F4";
                    expect_swap = (m % 4 == 0);
                    break;
                case 'G':
                    expect = "G2";
                    expect_swap = (m % 3 == 0);
                    break;
            }
            if (spec.dual_type != expect || spec.role_swapped != expect_swap) {
                std::ostringstream os;
                os << rs.type_label() << " at m=" << m << ": got " << spec.dual_type
                   << (spec.role_swapped ? " (swapped)" : "") << ", expected " << expect
                   << (expect_swap ? " (swapped)" : "");
                detail = os.str();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (type, m) pairs";
    return true;
}

// --------------------------------------------------------------------------
// 3. Character criterion: Gram ranks equal classical multiplicities inside
// the fundamental alcove.

bool criterion_oracle_equivalence(std::string& detail) {
    std::vector<std::pair<char, long>> types = {{'A', 1}, {'A', 2}, {'B', 2},
                                                {'C', 2}, {'G', 2}};
    long modules = 0;
    for (auto [series, rank] : types) {
        RootSystem rs = build_root_system(series, rank);
        for (long m : admissible_m(rs, 6)) {
            RootOfUnitySpec spec = compute_spec(rs, QRoot(1, m));
            std::vector<long> cap(rs.rank);
            for (long i = 0; i < rs.rank; ++i) cap[i] = spec.M_simple[i];
            for (const Weight& lambda : weight_box(cap)) {
                Weight lr = lambda + rs.rho;
                bool in_alcove = true;
                for (size_t a = 0; a < rs.positive_roots.size(); ++a)
                    if (pairing(lr, rs.positive_roots[a], rs) > spec.M_per_root[a])
                        in_alcove = false;
                if (!in_alcove) continue;
                ModuleReport rep =
                    module_report(rs, spec, lambda, RealForm::compact(rs.rank), 80);
                if (rep.truncated) {
                    detail = "unexpected truncation";
                    return false;
                }
                auto oracle =
                    freudenthal_character(lambda, rs, module_depth(lambda, rs));
                if (rep.dims != oracle) {
                    std::ostringstream os;
                    os << rs.type_label() << " m=" << m << " lambda=" << lambda.to_string();
                    detail = "rank/multiplicity mismatch at " + os.str();
                    return false;
                }
                ++modules;
            }
        }
    }
    detail = std::to_string(modules) + " modules";
    return true;
}

// --------------------------------------------------------------------------
// 4. Rank-1 unitarity at q = e^{i pi / M}.

bool criterion_rank1_unitarity(std::string& detail) {
    RootSystem a1 = build_root_system('A', 1);
    long checked = 0;
    for (long M = 3; M <= 8; ++M) {
        RootOfUnitySpec spec = compute_spec(a1, QRoot(1, 2 * M));
        for (long j = 0; j <= M; ++j) {
            ModuleReport rep = module_report(a1, spec, fw({j}), RealForm::compact(1), 40);
            std::ostringstream os;
            os << "M=" << M << " j=" << j;
            if (!rep.unitary) {
                detail = "not unitary at " + os.str();
                return false;
            }
            if (j <= M - 1 && !rep.classical_character) {
                detail = "character dropped early at " + os.str();
                return false;
            }
            if (j == M && rep.total_dim != 1) {
                detail = "boundary module not one-dimensional at " + os.str();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " modules";
    return true;
}

// --------------------------------------------------------------------------
// 5. Shift equivalence with the section-5 sign analysis.

bool criterion_shift_equivalence(std::string& detail) {
    std::vector<std::pair<char, long>> types = {{'A', 1}, {'A', 2}, {'B', 2},
                                                {'C', 2}, {'G', 2}};
    long checked = 0;
    for (auto [series, rank] : types) {
        RootSystem rs = build_root_system(series, rank);
        for (long m : admissible_m(rs, 6)) {
            RootOfUnitySpec spec = compute_spec(rs, QRoot(1, m));
            // The section-5 parity data: t_i = q_i^{M_i} = +-1 per node.
            std::vector<int> t(rs.rank);
            for (long i = 0; i < rs.rank; ++i) {
                Cyclotomic ti = q_power(spec.q, rs.d[i] * spec.M_simple[i]);
                Rational tv;
                if (!ti.is_rational(&tv) || (tv != 1 && tv != -1)) {
                    detail = "q_i^{M_i} is not a sign";
                    return false;
                }
                t[i] = (tv == 1) ? 1 : -1;
                // Case analysis: odd q -> +1 everywhere. Even q -> -1, except
                // the doubled roots (d_i = 2) when M is odd, where M_l = M
                // gives q_l^{M_l} = q^{2M} = +1. The triple root of G2 stays
                // -1 at even q for either parity of M.
                int expect;
                if (spec.q.m % 2 == 1)
                    expect = 1;
                else if (spec.M % 2 == 1 && rs.d[i] == 2)
                    expect = 1;
                else
                    expect = -1;
                if (t[i] != expect) {
                    detail = "q_i^{M_i} disagrees with the parity case analysis";
                    return false;
                }
            }
            std::vector<long> pcap(rs.rank, 3);  // p_i in {0,1,2}
            std::vector<long> box(rs.rank);
            for (long i = 0; i < rs.rank; ++i) box[i] = spec.M_simple[i];
            for (const Weight& pw : weight_box(pcap)) {
                std::vector<long> p(rs.rank);
                for (long i = 0; i < rs.rank; ++i)
                    p[i] = static_cast<long>(pw.fund[i].get_num().get_si());
                SingletData sd = singlet_weights(rs, spec, p);
                for (long i = 0; i < rs.rank; ++i) {
                    int expect = (p[i] % 2 == 0) ? 1 : -1;
                    if (sd.form.s[i] != expect) {
                        detail = "singlet sign differs from (-1)^{p_i}";
                        return false;
                    }
                }
                // When lambda_r is integral, the sign must equal t_i^{z_i}.
                if (sd.lambda_r.is_integral()) {
                    for (long i = 0; i < rs.rank; ++i) {
                        Rational z = sd.lambda_r.fund[i] / Rational(spec.M_simple[i]);
                        z.canonicalize();
                        if (z.get_den() != 1) continue;
                        long zi = z.get_num().get_si();
                        int expect = (zi % 2 == 0) ? 1 : t[i];
                        if (sd.form.s[i] != expect) {
                            detail = "singlet sign differs from the z-parity rule";
                            return false;
                        }
                    }
                }
                for (const Weight& lambda0 : weight_box(box)) {
                    if (!verify_shift_equivalence(rs, spec, lambda0, p, 8)) {
                        std::ostringstream os;
                        os << rs.type_label() << " m=" << m
                           << " lambda0=" << lambda0.to_string() << " p=(";
                        for (long v : p) os << v << ",";
                        os << ")";
                        detail = "block mismatch at " + os.str();
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " (lambda0, p) pairs";
    return true;
}

// --------------------------------------------------------------------------
// 6. Rank-1 quasi-classical generators.

bool criterion_rank1_frobenius(std::string& detail) {
    RootSystem a1 = build_root_system('A', 1);
    long checked = 0;
    for (long M = 2; M <= 8; ++M) {
        RootOfUnitySpec spec = compute_spec(a1, QRoot(1, 2 * M));
        for (long z = 0; z <= 5; ++z) {
            DividedPowerModule mod = rank1_res_module(z, spec);
            TildeRelationReport rep = verify_tilde_relations_rank1(mod, spec);
            if (!rep.all_ok) {
                for (const auto& item : rep.items)
                    if (!item.ok) {
                        std::ostringstream os;
                        os << "relation " << item.relation << " fails at M=" << M
                           << " z=" << z << " (" << item.witness << ")";
                        detail = os.str();
                        return false;
                    }
            }
            ++checked;
        }
    }
    // The explicit divided-power value at M = 3, z = 2.
    RootOfUnitySpec s6 = compute_spec(a1, QRoot(1, 6));
    DividedPowerModule mod = rank1_res_module(2, s6);
    if (!(mod.XminusM[6][3] == Cyclotomic::from_integer(-2)) ||
        !(mod.XminusM[3][0] == Cyclotomic::from_integer(1))) {
        detail = "X^{-(3)} structure constants wrong at z=2, M=3";
        return false;
    }
    detail = std::to_string(checked) + " modules";
    return true;
}

// --------------------------------------------------------------------------
// 7. Reality-preserving algebra table.

bool criterion_reality_table(std::string& detail) {
    struct Case {
        char series;
        long rank;
    };
    std::vector<Case> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                               {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4},
                               {'D', 4}, {'F', 4}, {'G', 2}};
    long checked = 0;
    for (const auto& cse : types) {
        RootSystem rs = build_root_system(cse.series, cse.rank);
        for (long m = 3; m <= 20; ++m) {
            RootOfUnitySpec spec;
            try {
                spec = compute_spec(rs, QRoot(1, m));
            } catch (const std::invalid_argument&) {
                continue;
            }
            bool q_even = (m % 2 == 0);
            bool M_even = (spec.M % 2 == 0);
            std::string expect;
            if (!q_even) {
                expect = rs.type_label();
            } else {
                switch (cse.series) {
                    case 'A':
                        expect = (cse.rank == 1) ? "A1" : "trivial";
                        break;
                    case 'D':
                        expect = "trivial";
                        break;
                    case 'B':
                        expect = M_even ? "(su(2))^" + std::to_string(cse.rank)
                                        : rs.type_label();
                        break;
                    case 'C':
                        if (cse.rank == 2)
                            expect = M_even ? "(su(2))^2" : "C2";
                        else
                            expect = M_even ? "trivial"
                                            : "(su(2))^" + std::to_string(cse.rank);
                        break;
                    case 'F':
                        expect = M_even ? "trivial" : "D4";
                        break;
                    case 'G':
                        expect = "trivial";
                        break;
                }
            }
            RealityAlgebra got = reality_preserving_algebra(rs, spec);
            if (got.label != expect) {
                std::ostringstream os;
                os << rs.type_label() << " m=" << m << ": got " << got.label
                   << ", expected " << expect;
                detail = os.str();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (type, m) pairs";
    return true;
}

// --------------------------------------------------------------------------
// 8. Hermitian nodes bullet list.

bool criterion_hermitian_nodes(std::string& detail) {
    auto nodes_of = [](const RootSystem& rs) {
        std::vector<long> nodes;
        for (const auto& h : hermitian_nodes(rs)) {
            if (rs.coxeter_labels[h.node - 1] != 1) return std::vector<long>{-1};
            nodes.push_back(h.node);
        }
        return nodes;
    };
    for (long l = 1; l <= 5; ++l) {
        std::vector<long> expect(l);
        for (long i = 0; i < l; ++i) expect[i] = i + 1;
        if (nodes_of(build_root_system('A', l)) != expect) {
            detail = "A_l nodes wrong";
            return false;
        }
    }
    for (long l = 2; l <= 5; ++l)
        if (nodes_of(build_root_system('B', l)) != std::vector<long>{1}) {
            detail = "B_l nodes wrong";
            return false;
        }
    for (long l = 2; l <= 5; ++l)
        if (nodes_of(build_root_system('C', l)) != std::vector<long>{l}) {
            detail = "C_l nodes wrong";
            return false;
        }
    for (long l = 4; l <= 6; ++l)
        if (nodes_of(build_root_system('D', l)) != std::vector<long>({1, l - 1, l})) {
            detail = "D_l nodes wrong";
            return false;
        }
    if (nodes_of(build_root_system('E', 6)) != std::vector<long>({1, 6})) {
        detail = "E6 nodes wrong";
        return false;
    }
    if (nodes_of(build_root_system('E', 7)) != std::vector<long>({7})) {
        detail = "E7 nodes wrong";
        return false;
    }
    for (auto [s, r] : std::vector<std::pair<char, long>>{{'E', 8}, {'F', 4}, {'G', 2}})
        if (!hermitian_nodes(build_root_system(s, r)).empty()) {
            detail = "exceptional type should have no hermitian nodes";
            return false;
        }
    detail = "bullet list reproduced";
    return true;
}

// --------------------------------------------------------------------------
// 9. Classical-limit scan.

bool criterion_limit_scan(std::string& detail) {
    RootSystem a1 = build_root_system('A', 1);
    auto stages = classical_limit_scan(a1, fw({-1}), 1, QRoot(1, 4), 6, 40);
    for (const auto& st : stages) {
        if (!st.lambda0_ok || !st.unitary || st.truncated) {
            detail = "stage k=" + std::to_string(st.k) + " not unitary";
            return false;
        }
    }
    detail = std::to_string(stages.size()) + " stages unitary";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "q-binomial reduction identity, 500 random tuples per m in 4..20", 10.0,
         criterion_qbinom},
        {2, "spectral tables and dual-algebra types for m <= 24", 5.0, criterion_spectral},
        {3, "Gram ranks equal classical multiplicities inside the alcove", 300.0,
         criterion_oracle_equivalence},
        {4, "rank-1 unitarity and character behaviour at q = e^{i pi/M}", 60.0,
         criterion_rank1_unitarity},
        {5, "shift equivalence of twisted and compact Gram blocks to height 8", 600.0,
         criterion_shift_equivalence},
        {6, "rank-1 quasi-classical generators and relations", 30.0,
         criterion_rank1_frobenius},
        {7, "reality-preserving algebra case table", 5.0, criterion_reality_table},
        {8, "hermitian node classification", 5.0, criterion_hermitian_nodes},
        {9, "classical-limit scan for the sl2 family", 30.0, criterion_limit_scan},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        bool in_budget = dt < c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s criterion %d: %s [%s] (%.2fs%s)\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), detail.c_str(), dt,
                    in_budget ? "" : ", over budget");
        std::fflush(stdout);
    }
    return failures;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfin/qspec.hpp"

using namespace qfin;

namespace {

Weight fw(std::vector<Rational> coords) { return Weight(std::move(coords)); }

Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool cartan_axioms(const std::vector<std::vector<long>>& A) {
    long n = static_cast<long>(A.size());
    for (long i = 0; i < n; ++i) {
        if (A[i][i] != 2) return false;
        for (long j = 0; j < n; ++j)
            if (i != j && A[i][j] > 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("compute_spec on the standing examples") {
    RootSystem a1 = build_root_system('A', 1);
    RootOfUnitySpec s = compute_spec(a1, QRoot(1, 10));
    CHECK(s.M == 5);
    CHECK(s.even);  // q^5 = -1
    CHECK(s.M_simple == std::vector<long>({5}));

    RootSystem b2 = build_root_system('B', 2);
    RootOfUnitySpec sb = compute_spec(b2, QRoot(1, 8));
    CHECK(sb.M == 4);
    CHECK(sb.M_simple == std::vector<long>({2, 4}));  // long node first

    RootSystem g2 = build_root_system('G', 2);
    CHECK_THROWS_AS(compute_spec(g2, QRoot(1, 6)), std::invalid_argument);
}

TEST_CASE("dual algebra across the case table") {
    RootSystem a2 = build_root_system('A', 2);
    for (long m : {5L, 6L, 7L, 8L, 12L}) {
        auto [at, label] = dual_algebra(compute_spec(a2, QRoot(1, m)));
        CHECK(label == "A2");
        CHECK(at == a2.cartan);
    }

    RootSystem b2 = build_root_system('B', 2);
    RootOfUnitySpec s8 = compute_spec(b2, QRoot(1, 8));
    CHECK(s8.dual_type == "C2");
    CHECK(s8.dual_cartan == std::vector<std::vector<long>>({{2, -2}, {-1, 2}}));
    // q even but M odd: all orders coincide, self-dual.
    RootOfUnitySpec s6 = compute_spec(b2, QRoot(1, 6));
    CHECK(s6.M == 3);
    CHECK(s6.M_simple == std::vector<long>({3, 3}));
    CHECK(s6.dual_type == "B2");
    // odd q: self-dual.
    CHECK(compute_spec(b2, QRoot(1, 5)).dual_type == "B2");

    RootSystem c3 = build_root_system('C', 3);
    CHECK(compute_spec(c3, QRoot(1, 8)).dual_type == "B3");
    CHECK(compute_spec(c3, QRoot(1, 10)).dual_type == "C3");

    RootSystem g2 = build_root_system('G', 2);
    RootOfUnitySpec sg = compute_spec(g2, QRoot(1, 18));  // M = 9, divisible by 3
    CHECK(sg.dual_type == "G2");
    CHECK(sg.role_swapped);
    CHECK(sg.dual_cartan == std::vector<std::vector<long>>({{2, -3}, {-1, 2}}));
    RootOfUnitySpec sg8 = compute_spec(g2, QRoot(1, 8));
    CHECK(sg8.dual_type == "G2");
    CHECK_FALSE(sg8.role_swapped);
}

TEST_CASE("spectral invariants for rank <= 4 and m <= 24") {
    std::vector<std::pair<char, long>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                                {'B', 2}, {'B', 3}, {'B', 4}, {'C', 2},
                                                {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4},
                                                {'G', 2}};
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
                CHECK(spec.M % spec.M_simple[i] == 0);
                for (long j = 0; j < rs.rank; ++j)
                    CHECK(spec.M_simple[i] * spec.dual_cartan[i][j] ==
                          spec.M_simple[j] * rs.cartan[i][j]);
            }
            CHECK(cartan_axioms(spec.dual_cartan));
            // The dual matrix is A or its transpose.
            bool is_a = spec.dual_cartan == rs.cartan;
            std::vector<std::vector<long>> at(rs.rank, std::vector<long>(rs.rank));
            for (long i = 0; i < rs.rank; ++i)
                for (long j = 0; j < rs.rank; ++j) at[i][j] = rs.cartan[j][i];
            bool is_at = spec.dual_cartan == at;
            CHECK((is_a || is_at));
        }
    }
}

TEST_CASE("spectral data on higher-rank and exceptional systems") {
    for (auto [series, rank] : std::vector<std::pair<char, long>>{
             {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}}) {
        RootSystem rs = build_root_system(series, rank);
        for (long m : {7L, 9L, 16L}) {
            RootOfUnitySpec spec = compute_spec(rs, QRoot(1, m));
            CHECK(spec.dual_type == rs.type_label());  // simply laced: self-dual
            CHECK(spec.dual_cartan == rs.cartan);
            for (long i = 0; i < rs.rank; ++i) CHECK(spec.M_simple[i] == spec.M);
        }
    }
}

TEST_CASE("special points and hyperplanes") {
    RootSystem b2 = build_root_system('B', 2);
    RootOfUnitySpec spec = compute_spec(b2, QRoot(1, 8));  // M_i = (2, 4)
    CHECK(is_special_point(fw({Rational(2), Rational(0)}), spec));
    CHECK(is_special_point(fw({Rational(-4), Rational(8)}), spec));
    CHECK_FALSE(is_special_point(fw({Rational(1), Rational(0)}), spec));
    CHECK_FALSE(is_special_point(fw({Rational(2), Rational(2)}), spec));

    // Every special point lies on a hyperplane for every root: exhaustively
    // for rank-2 systems and z in {-2..2}^2.
    for (auto [series, m] : std::vector<std::pair<char, long>>{
             {'A', 6}, {'A', 5}, {'B', 8}, {'B', 10}, {'C', 8}, {'G', 8}}) {
        RootSystem rs = build_root_system(series, 2);
        RootOfUnitySpec sp = compute_spec(rs, QRoot(1, m));
        for (long z1 = -2; z1 <= 2; ++z1)
            for (long z2 = -2; z2 <= 2; ++z2) {
                Weight lz = fw({Rational(z1 * sp.M_simple[0]), Rational(z2 * sp.M_simple[1])});
                CHECK(is_special_point(lz, sp));
                CHECK(hyperplane_check(lz, rs, sp));
            }
        // A non-special integral weight generically fails the hyperplane test.
        Weight probe = fw({Rational(1), Rational(0)});
        if (!is_special_point(probe, sp)) CHECK_FALSE(hyperplane_check(probe, rs, sp));
    }
}

TEST_CASE("compact bound check implements the floor reading") {
    RootSystem a1 = build_root_system('A', 1);
    RootOfUnitySpec spec = compute_spec(a1, QRoot(1, 10));
    CHECK(compact_bound_check(fw({Rational(5)}), a1, spec));        // 6 <= 5 + 1
    CHECK_FALSE(compact_bound_check(fw({Rational(6)}), a1, spec));  // 7 > 6
    CHECK(compact_bound_check(fw({Rational(0)}), a1, spec));

    // Non-simply-laced: the bound involves d_alpha per root.
    RootSystem b2 = build_root_system('B', 2);
    RootOfUnitySpec sb = compute_spec(b2, QRoot(1, 12));
    CHECK(compact_bound_check(fw({Rational(0), Rational(0)}), b2, sb));
}

TEST_CASE("singlet weights and their sign vectors") {
    RootSystem a1 = build_root_system('A', 1);
    RootOfUnitySpec spec = compute_spec(a1, QRoot(1, 10));
    SingletData s1 = singlet_weights(a1, spec, {1});
    CHECK(s1.lambda_r == fw({Rational(5)}));
    CHECK(s1.form.s == std::vector<int>({-1}));  // su(1,1)
    SingletData s2 = singlet_weights(a1, spec, {2});
    CHECK(s2.lambda_r == fw({Rational(10)}));
    CHECK(s2.form.s == std::vector<int>({1}));

    // B2 at q = e^{2 pi i/6}: M = 3 odd, q even; integral z = (1,1) has
    // p = (2,1), giving s_long = +1, s_short = -1.
    RootSystem b2 = build_root_system('B', 2);
    RootOfUnitySpec sb = compute_spec(b2, QRoot(1, 6));
    SingletData sz = singlet_weights(b2, sb, {2, 1});
    CHECK(sz.lambda_r == fw({Rational(3), Rational(3)}));
    CHECK(is_special_point(sz.lambda_r, sb));
    CHECK(sz.form.s == std::vector<int>({1, -1}));

    // s_i = (-1)^{p_i} exactly, for a sweep of cases.
    for (auto [series, m] : std::vector<std::pair<char, long>>{
             {'A', 8}, {'B', 6}, {'B', 8}, {'C', 12}, {'G', 10}}) {
        RootSystem rs = build_root_system(series, 2);
        RootOfUnitySpec sp = compute_spec(rs, QRoot(1, m));
        for (long p1 = -2; p1 <= 2; ++p1)
            for (long p2 = -2; p2 <= 2; ++p2) {
                SingletData sd = singlet_weights(rs, sp, {p1, p2});
                CHECK(sd.form.s[0] == ((p1 % 2) ? -1 : 1));
                CHECK(sd.form.s[1] == ((p2 % 2) ? -1 : 1));
            }
    }
}

TEST_CASE("alcove adjacency classification") {
    RootSystem a2 = build_root_system('A', 2);
    RootOfUnitySpec spec = compute_spec(a2, QRoot(1, 8));
    Rational c = rat(8, 2);  // m/2n = 4

    AlcoveAdjacency adj = alcove_adjacency(fw({-c, Rational(0)}), a2, spec);
    CHECK(adj.adjacent);
    CHECK(adj.node == 1);
    CHECK(adj.sign == -1);

    AlcoveAdjacency pos = alcove_adjacency(fw({Rational(0), c}), a2, spec);
    CHECK(pos.adjacent);
    CHECK(pos.node == 2);
    CHECK(pos.sign == 1);

    AlcoveAdjacency far = alcove_adjacency(fw({-c, -c}), a2, spec);
    CHECK_FALSE(far.adjacent);

    AlcoveAdjacency origin = alcove_adjacency(fw({Rational(0), Rational(0)}), a2, spec);
    CHECK(origin.adjacent);
    CHECK_FALSE(origin.node.has_value());

    CHECK_THROWS_AS(alcove_adjacency(fw({Rational(1), Rational(0)}), a2, spec),
                    std::invalid_argument);

    // Nodes with Coxeter label != 1 are not adjacency nodes: G2 has none.
    RootSystem g2 = build_root_system('G', 2);
    RootOfUnitySpec sg = compute_spec(g2, QRoot(1, 8));
    Rational cl = rat(8, 2 * 3), cs = rat(8, 2);
    CHECK_FALSE(alcove_adjacency(fw({-cl, Rational(0)}), g2, sg).adjacent);
    CHECK_FALSE(alcove_adjacency(fw({Rational(0), -cs}), g2, sg).adjacent);

    // Weyl images of an adjacent point remain adjacent.
    Weight wimg = reflect(fw({-c, Rational(0)}), 1, a2);
    AlcoveAdjacency adj2 = alcove_adjacency(wimg, a2, spec);
    CHECK(adj2.adjacent);
    CHECK(adj2.node == 1);
}

TEST_CASE("hermitian nodes reproduce the classical list") {
    auto names = [](const std::vector<HermitianNode>& v) {
        std::vector<long> nodes;
        for (const auto& h : v) nodes.push_back(h.node);
        return nodes;
    };

    RootSystem a3 = build_root_system('A', 3);
    auto ha = hermitian_nodes(a3);
    CHECK(names(ha) == std::vector<long>({1, 2, 3}));
    CHECK(ha[0].form_name == "su(3,1)");
    CHECK(ha[1].form_name == "su(2,2)");

    auto hb = hermitian_nodes(build_root_system('B', 3));
    CHECK(names(hb) == std::vector<long>({1}));
    CHECK(hb[0].form_name == "so(5,2)");

    auto hc = hermitian_nodes(build_root_system('C', 3));
    CHECK(names(hc) == std::vector<long>({3}));
    CHECK(hc[0].form_name == "sp(3,R)");

    auto hd = hermitian_nodes(build_root_system('D', 4));
    CHECK(names(hd) == std::vector<long>({1, 3, 4}));
    CHECK(hd[0].form_name == "so(6,2)");
    CHECK(hd[1].form_name == "so*(8)");

    CHECK(names(hermitian_nodes(build_root_system('E', 6))) == std::vector<long>({1, 6}));
    CHECK(names(hermitian_nodes(build_root_system('E', 7))) == std::vector<long>({7}));
    CHECK(hermitian_nodes(build_root_system('E', 8)).empty());
    CHECK(hermitian_nodes(build_root_system('F', 4)).empty());
    CHECK(hermitian_nodes(build_root_system('G', 2)).empty());

    // Consistency with alcove adjacency: an adjacent node always carries
    // Coxeter label 1 and therefore appears in the hermitian list.
    RootSystem a2 = build_root_system('A', 2);
    RootOfUnitySpec spec = compute_spec(a2, QRoot(1, 8));
    AlcoveAdjacency adj = alcove_adjacency(fw({-Rational(4), Rational(0)}), a2, spec);
    REQUIRE(adj.adjacent);
    bool found = false;
    for (const auto& h : hermitian_nodes(a2))
        if (h.node == *adj.node) found = true;
    CHECK(found);
}

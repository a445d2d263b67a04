#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfin/qfield.hpp"
#include "qfin/rootdata.hpp"

namespace qfin {

/// The star structure (X_i^+)* = s_i X_i^-, s_i = +-1; compact iff all +1.
struct RealForm {
    std::vector<int> s;

    static RealForm compact(long rank) { return RealForm{std::vector<int>(rank, 1)}; }
    bool is_compact() const {
        for (int v : s)
            if (v != 1) return false;
        return true;
    }
    bool operator==(const RealForm& o) const { return s == o.s; }
    std::string to_string() const;
};

/*
 * Root-of-unity environment for a fixed (root system, q): the order M
 * (smallest with q^{2M} = 1), the parity (even iff q^M = -1), the per-root
 * orders M_i / M_alpha, and the dual Cartan data on the lattice of special
 * points.
 *
 * dual_cartan follows the same index convention as RootSystem::cartan, so
 * M_j * cartan[i][j] = M_i * dual_cartan[i][j].
 */
struct RootOfUnitySpec {
    QRoot q;
    long M = 1;
    bool even = false;  // q^M = -1
    std::vector<long> M_simple;
    std::vector<long> M_per_root;  // aligned with rs.positive_roots
    std::vector<std::vector<long>> dual_cartan;
    std::string dual_type;  // frozen enumeration: A_l,...,G2; B<->C swap at role change
    bool role_swapped = false;  // F4/G2: long and short roots exchange roles
};

/// Computes the full spectral record. Throws std::invalid_argument when some
/// q^{d_i} is a square root of unity (M_i = 1), which the algebra excludes.
RootOfUnitySpec compute_spec(const RootSystem& rs, const QRoot& q);

/// The dual Cartan matrix and its human-readable type.
std::pair<std::vector<std::vector<long>>, std::string> dual_algebra(const RootOfUnitySpec& spec);

/// lambda = sum z_i M_i Lambda_i with integer z?
bool is_special_point(const Weight& lambda, const RootOfUnitySpec& spec);

/// (lambda, alpha^vee) in M_alpha * Z for every positive root alpha?
bool hyperplane_check(const Weight& lambda, const RootSystem& rs, const RootOfUnitySpec& spec);

/// Sufficient unitarity bound: (lambda+rho, alpha^vee) <= floor(m/(2 n d_alpha)) + 1
/// for all positive roots.
bool compact_bound_check(const Weight& lambda, const RootSystem& rs, const RootOfUnitySpec& spec);

struct SingletData {
    Weight lambda_r;
    RealForm form;
};

/// One-dimensional module data for the integer vector p:
/// lambda_r = sum_i (m / 2 n d_i) p_i Lambda_i and s_i = q_i^{M_i r_i},
/// each s_i evaluated exactly and verified to be +-1.
SingletData singlet_weights(const RootSystem& rs, const RootOfUnitySpec& spec,
                            const std::vector<long>& p);

struct AlcoveAdjacency {
    bool adjacent = false;
    std::optional<long> node;  // i_0 when the nonzero single-node shape applies
    int sign = 0;              // sign of lambda_r = +-(m/2nd_{i0}) Lambda_{i0}
};

/// Does lambda_r lie in the closure of an alcove sharing a corner with the
/// origin? If so, after Weyl normalisation lambda_r = +-(m/2nd_{i0}) Lambda_{i0}
/// with Coxeter label a_{i0} = 1. lambda_r must be of the singlet shape.
AlcoveAdjacency alcove_adjacency(const Weight& lambda_r, const RootSystem& rs,
                                 const RootOfUnitySpec& spec);

struct HermitianNode {
    long node;  // 1-based index
    std::string form_name;
};

/// All nodes with Coxeter label 1, with the classical real-form label.
std::vector<HermitianNode> hermitian_nodes(const RootSystem& rs);

}  // namespace qfin

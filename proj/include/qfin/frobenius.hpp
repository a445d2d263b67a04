#pragma once

#include <string>
#include <vector>

#include "qfin/gram.hpp"
#include "qfin/qspec.hpp"

namespace qfin {

/*
 * Quasi-classical sign data of the tilde generators: the Dynkin bipartition
 * a_i, the sign matrix s_ij = q^{M_i M_j (alpha_i, alpha_j)} governing the
 * commutation of the tilde raising/lowering operators with the parity
 * generators K~_i = K_i^{M_i}, and the evaluations <K~_i, lambda_z>.
 */
struct TildeData {
    std::vector<int> bipartition;           // a_i in {0,1}
    std::vector<std::vector<int>> s_matrix; // s_ij in {+-1}, symmetric
};

TildeData tilde_data(const RootSystem& rs, const RootOfUnitySpec& spec);

/// <K~_i, lambda_z> = q_i^{z_i M_i^2} per node, for an integer special point z.
std::vector<int> k_tilde_eval(const RootSystem& rs, const RootOfUnitySpec& spec,
                              const std::vector<long>& z);

/*
 * The rank-1 restricted module with highest weight z*M in the divided-power
 * basis v_k = F^{(k)} v, k = 0..zM. The stored matrices act on that full
 * carrier, where F^{(a)} F^{(b)} = [a+b over a]_q F^{(a+b)} holds exactly;
 * the irreducible quotient is the lambda_z-sector spanned by the v_{nM}
 * (the non-sector basis vectors span the radical of the contravariant form,
 * and X^{+-} map the sector into that radical span).
 */
struct DividedPowerModule {
    long z = 0;
    long M = 1;
    QRoot q;
    long dim = 1;  // zM + 1
    std::vector<std::vector<Cyclotomic>> Xplus, Xminus;      // X^{+-}
    std::vector<std::vector<Cyclotomic>> XplusM, XminusM;    // X^{+-(M)}
    std::vector<std::vector<Cyclotomic>> K, H;               // diagonal
    std::vector<std::vector<Cyclotomic>> Ktilde;             // K^M, diagonal +-1
    std::vector<std::vector<Cyclotomic>> XplusT, XminusT;    // tilde generators
    std::vector<long> sector;  // indices 0, M, 2M, ..., zM

    /// F^{(a)} in the same basis (used by the composition checks).
    std::vector<std::vector<Cyclotomic>> divided_power_lowering(long a) const;
};

/// Requires a rank-1 root system environment (spec computed over A1) and z >= 0.
DividedPowerModule rank1_res_module(long z, const RootOfUnitySpec& spec);

struct TildeRelationReport {
    struct Item {
        std::string relation;
        bool ok;
        std::string witness;  // offending vector, if any
    };
    std::vector<Item> items;
    bool all_ok = true;
};

/*
 * Exact verification on the lambda_z-sector: H~ = [X~+, X~-] is diagonal with
 * the integer eigenvalues z, z-2, ..., -z; [H~, X~+-] = +-2 X~+- on the
 * sector; X~+- commute with K~ up to s_11; and the sector carries an
 * irreducible classical sl2 module of dimension z+1. Any violation names the
 * relation and a witness vector.
 */
TildeRelationReport verify_tilde_relations_rank1(const DividedPowerModule& mod,
                                                 const RootOfUnitySpec& spec);

/*
 * Character-level consistency of the tensor factorisation: the multiset of
 * sector highest weights {lambda_0 + lambda_z - sum n_i M_i alpha_i} with the
 * classical dual-algebra multiplicities equals {lambda_0 + phi(mu)} for mu
 * running over the weights of the dual-algebra irreducible with highest
 * weight z, computed with the Freudenthal oracle on the M-rescaled lattice.
 */
bool tensor_character_check(const RootSystem& rs, const RootOfUnitySpec& spec,
                            const Weight& lambda0, const std::vector<long>& z);

struct RealityAlgebra {
    std::string label;  // "trivial", full dual label, "(su(2))^n", "D4", ...
    bool full = false;
    std::vector<size_t> passing_roots;       // indices into rs.positive_roots
    std::vector<std::string> components;     // component types of the subsystem
};

/*
 * Classifies the subalgebra of the classical dual symmetry commuting with all
 * parity generators K_i: a root alpha passes iff q^{M_alpha (alpha, alpha_i)} = 1
 * for every simple root alpha_i (evaluated exactly); the passing roots form a
 * closed subsystem whose type is identified on the rescaled lattice.
 */
RealityAlgebra reality_preserving_algebra(const RootSystem& rs, const RootOfUnitySpec& spec);

}  // namespace qfin

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qfin/qspec.hpp"

namespace qfin {

/// A word (i_1,...,i_k) denotes F_{i_1} ... F_{i_k} v_lambda; letters 0-based.
using Word = std::vector<uint8_t>;

struct Signature {
    long n_plus = 0;
    long n_zero = 0;
    long n_minus = 0;
};

/// Rank and signature of a Hermitian cyclotomic matrix, by exact congruence
/// elimination: star-fixed diagonal pivots are consumed with their sign
/// (sign_of_real), a fully isotropic diagonal is handled through hyperbolic
/// 2x2 pivots contributing (+1,-1). No floating point anywhere.
std::pair<long, Signature> hermitian_rank_signature(
    std::vector<std::vector<Cyclotomic>> M);

/// Gram data of one weight space lambda - sum n_i alpha_i.
struct GramBlock {
    Weight weight;
    std::vector<Word> words;  // lexicographic
    std::vector<std::vector<Cyclotomic>> matrix;
    long rank = 0;
    Signature signature;
};

/*
 * The contravariant form on lowering words, computed by the recursion
 *   <v,v> = 1,   <F_i u, w> = s_i <u, E_i |> w>,
 * where E_i F_j = F_j E_i + delta_ij [H_i] and [H_i] evaluates on a vector
 * of weight mu to [(mu, alpha_i^vee)]_{q_i}. One factor s_i enters per
 * E_i-F_i contraction; this is the whole real-form dependence.
 *
 * gram_block materialises the full block of the weight space given by the
 * descent vector `target` (all words of that content, lex order).
 */
GramBlock gram_block(const RootSystem& rs, const RootOfUnitySpec& spec, const Weight& lambda,
                     const RealForm& form, const std::vector<long>& target);

struct ModuleReport {
    Weight lambda;
    RealForm form;
    RootOfUnitySpec spec;
    std::map<Weight, long> dims;  // weights with positive rank only
    long total_dim = 0;
    bool unitary = true;
    bool classical_character = false;
    bool truncated = false;
    long height_reached = 0;
};

/*
 * Builds L^fin(lambda) for the given real form, descending height by height
 * and quotienting the form radical as it goes; stops when an entire height
 * level has rank 0 (all deeper levels then vanish) or when the height budget
 * is hit, in which case `truncated` is set.
 */
ModuleReport module_report(const RootSystem& rs, const RootOfUnitySpec& spec,
                           const Weight& lambda, const RealForm& form, long height_budget);

struct ShiftDecomposition {
    bool reachable = false;
    Weight lambda0;   // dominant integral with 0 <= (lambda0, alpha_i^vee) < M_i
    Weight lambda_r;  // singlet weight
    std::vector<long> p;
};

/// The unique lambda = lambda0 + lambda_r decomposition when it exists.
ShiftDecomposition shift_decompose(const Weight& lambda, const RootSystem& rs,
                                   const RootOfUnitySpec& spec);

/*
 * Exhaustive check of the shift construction: the Gram blocks of
 * lambda0 + lambda_r(p) under the singlet real form equal, entry by entry on
 * identically indexed words, the compact Gram blocks of lambda0, on every
 * weight space up to the given height.
 */
bool verify_shift_equivalence(const RootSystem& rs, const RootOfUnitySpec& spec,
                              const Weight& lambda0, const std::vector<long>& p,
                              long height_cap);

/*
 * True iff the report's per-weight ranks equal the classical multiplicities.
 * Requires an untruncated report with dominant integral highest weight.
 * When (lambda+rho, alpha^vee) <= M_alpha holds for all positive roots, a
 * `false` outcome is impossible and raises std::logic_error.
 */
bool classical_character_check(const ModuleReport& report, const RootSystem& rs);

struct StabilityVerdict {
    QRoot sample;
    bool admissible = false;
    bool stable = false;
};

/*
 * Advisory finite sampling of the character-constancy hypothesis on the open
 * arc below q: recomputes the module at each sampled root of unity and
 * compares with the classical character. Samples outside (0, n/m) are
 * rejected. The decidable sufficient criterion is compact_bound_check.
 */
std::vector<StabilityVerdict> character_stability_scan(const RootSystem& rs,
                                                       const Weight& lambda,
                                                       const RootOfUnitySpec& spec,
                                                       const std::vector<QRoot>& samples);

struct LimitStage {
    long k = 0;
    QRoot q_k;
    Weight lambda0;
    bool lambda0_ok = false;  // lambda - lambda_{r,k} dominant integral
    bool unitary = false;
    bool truncated = false;
    long total_dim = 0;
};

/*
 * Scans the family q_k = (n, m + 2nk d_{i0}) towards q -> 1: at each stage,
 * forms lambda_{r,k} = -(m_k / 2n d_{i0}) Lambda_{i0}, checks that
 * lambda - lambda_{r,k} is dominant integral, and decides unitarity of
 * L^fin(lambda) under the real form with s_{i0} = -1 and s_j = +1 otherwise.
 * Requires Coxeter label 1 at i0 and (lambda, alpha_j^vee) a non-negative
 * integer for j != i0.
 */
std::vector<LimitStage> classical_limit_scan(const RootSystem& rs, const Weight& lambda,
                                             long i0_node, const QRoot& base, long k_max,
                                             long height_budget);

}  // namespace qfin

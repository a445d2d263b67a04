#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfin/qfield.hpp"

namespace qfin {

/// Weight in the fundamental-weight basis, exact rational coordinates.
struct Weight {
    std::vector<Rational> fund;

    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : fund(std::move(coords)) {
        for (auto& c : fund) c.canonicalize();
    }
    static Weight zero(long rank) { return Weight(std::vector<Rational>(rank)); }

    long rank() const { return static_cast<long>(fund.size()); }
    bool is_integral() const;
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(const Rational& c) const;

    bool operator==(const Weight& o) const { return fund == o.fund; }
    bool operator<(const Weight& o) const;  // lexicographic, for map keys

    std::string to_string() const;
};

/*
 * Exact root-system data for the finite series A-G.
 *
 * Conventions, frozen here for the whole project:
 *   - cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
 *   - d[i] = (alpha_i,alpha_i)/2, normalised to relatively prime integers
 *   - roots are integer vectors in the simple-root basis; weights are rational
 *     vectors in the fundamental-weight basis
 *   - numbering is Bourbaki-style: A_l/D_l/E chains as usual; B_l has the short
 *     root at node l; C_l has the long root at node l; F4 is long-long-short-short;
 *     G2 has the long root at node 1 and the short root at node 2.
 */
struct RootSystem {
    char series = 'A';
    long rank = 1;
    std::vector<std::vector<long>> cartan;
    std::vector<long> d;
    std::vector<std::vector<long>> positive_roots;  // closed under the root strings
    std::vector<long> d_alpha;                      // (alpha,alpha)/2 per positive root
    std::vector<long> highest_root;                 // simple-root coordinates
    std::vector<long> coxeter_labels;               // = highest_root
    Weight rho;                                     // all-ones in the fundamental basis

    // (Lambda_i, Lambda_j), for Freudenthal's inner products.
    std::vector<std::vector<Rational>> fund_gram;

    std::string type_label() const;  // e.g. "B3"
};

/// Validates (series, rank) and builds the full system.
/// Throws std::invalid_argument for invalid pairs.
RootSystem build_root_system(char series, long rank);

/// Builds a root system from an explicit Cartan matrix (used for dual systems);
/// d is recovered from symmetrisability. The series label is best-effort.
RootSystem build_from_cartan(const std::vector<std::vector<long>>& cartan);

/// (lambda, alpha^vee) = 2(lambda,alpha)/(alpha,alpha), alpha in simple-root coords.
Rational pairing(const Weight& lambda, const std::vector<long>& alpha, const RootSystem& rs);

/// Inner product of two weights.
Rational inner(const Weight& a, const Weight& b, const RootSystem& rs);

/// Fundamental coordinates of a root-lattice vector.
Weight weight_of_root(const std::vector<long>& alpha, const RootSystem& rs);

/// Simple reflection s_i applied to a weight.
Weight reflect(const Weight& lambda, long i, const RootSystem& rs);

/// Weyl-dominant (resp. antidominant) representative of the orbit.
Weight dominant_representative(Weight lambda, const RootSystem& rs);
Weight antidominant_representative(Weight lambda, const RootSystem& rs);

bool is_dominant_integral(const Weight& lambda, const RootSystem& rs);

/// Height of lambda - w0(lambda) in the simple-root basis: the depth of the
/// weight diagram of L(lambda). Requires dominant integral lambda.
long module_depth(const Weight& lambda, const RootSystem& rs);

/// Weyl dimension formula, prod (lambda+rho, alpha^vee)/(rho, alpha^vee).
/// Throws std::invalid_argument unless lambda is dominant integral.
Integer weyl_dimension(const Weight& lambda, const RootSystem& rs);

/*
 * Exact weight multiplicities of the classical irreducible L(lambda) down to
 * the given height, by the Freudenthal recursion. The returned map sends each
 * weight with nonzero multiplicity to its multiplicity.
 */
std::map<Weight, long> freudenthal_character(const Weight& lambda, const RootSystem& rs,
                                             long height_cap);

/// Coxeter labels a_j of the highest root theta = sum a_j alpha_j.
std::vector<long> coxeter_labels(const RootSystem& rs);

/// 2-colouring a_i in {0,1} of the Dynkin diagram with a_i + a_j = 1 on every
/// edge; the lowest-numbered node of each component gets colour 0.
std::vector<int> dynkin_bipartition(const RootSystem& rs);

}  // namespace qfin

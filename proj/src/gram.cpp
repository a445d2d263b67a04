#include "qfin/gram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qfin {

namespace {

// ---------------------------------------------------------------------------
// Elimination helpers

struct ElimResult {
    long rank = 0;
    Signature sig;
    std::vector<long> pivots;  // row/col indices consumed by pivoting
};

// Exact congruence elimination of a Hermitian matrix: star-fixed diagonal
// pivots are consumed with their sign_of_real; when the active diagonal is
// entirely zero, a nonzero off-diagonal entry yields a hyperbolic pair
// contributing (+1, -1).
ElimResult hermitian_eliminate(std::vector<std::vector<Cyclotomic>> M) {
    long n = static_cast<long>(M.size());
    std::vector<long> active(n);
    std::iota(active.begin(), active.end(), 0);
    ElimResult res;
    while (!active.empty()) {
        long kpos = -1;
        for (size_t t = 0; t < active.size(); ++t) {
            if (!M[active[t]][active[t]].is_zero()) {
                kpos = static_cast<long>(t);
                break;
            }
        }
        if (kpos >= 0) {
            long k = active[kpos];
            int s = sign_of_real(M[k][k]);
            if (s > 0)
                ++res.sig.n_plus;
            else
                ++res.sig.n_minus;
            res.pivots.push_back(k);
            Cyclotomic inv = M[k][k].inverse();
            active.erase(active.begin() + kpos);
            for (long u : active) {
                if (M[u][k].is_zero()) continue;
                Cyclotomic factor = M[u][k] * inv;
                for (long v : active) M[u][v] -= factor * M[k][v];
            }
            continue;
        }
        // All active diagonal entries vanish; look for a hyperbolic pair.
        long ip = -1, jp = -1;
        for (size_t t = 0; t < active.size() && ip < 0; ++t)
            for (size_t u = t + 1; u < active.size(); ++u) {
                if (!M[active[t]][active[u]].is_zero()) {
                    ip = active[t];
                    jp = active[u];
                    break;
                }
            }
        if (ip < 0) break;  // active block is zero
        ++res.sig.n_plus;
        ++res.sig.n_minus;
        res.pivots.push_back(ip);
        res.pivots.push_back(jp);
        Cyclotomic inva = M[ip][jp].inverse();
        Cyclotomic invastar = inva.star();
        active.erase(std::remove(active.begin(), active.end(), ip), active.end());
        active.erase(std::remove(active.begin(), active.end(), jp), active.end());
        for (long u : active) {
            Cyclotomic fu_i = M[u][ip] * invastar;
            Cyclotomic fu_j = M[u][jp] * inva;
            for (long v : active) {
                if (!fu_i.is_zero()) M[u][v] -= fu_i * M[jp][v];
                if (!fu_j.is_zero()) M[u][v] -= fu_j * M[ip][v];
            }
        }
    }
    res.rank = res.sig.n_plus + res.sig.n_minus;
    res.sig.n_zero = n - res.rank;
    return res;
}

// Solve A X = B for nonsingular A (Gaussian elimination over the field).
std::vector<std::vector<Cyclotomic>> solve_matrix(std::vector<std::vector<Cyclotomic>> A,
                                                  std::vector<std::vector<Cyclotomic>> B) {
    long n = static_cast<long>(A.size());
    long w = n ? static_cast<long>(B[0].size()) : 0;
    for (long c = 0; c < n; ++c) {
        long p = c;
        while (p < n && A[p][c].is_zero()) ++p;
        if (p == n) throw std::logic_error("solve_matrix: singular system");
        std::swap(A[c], A[p]);
        std::swap(B[c], B[p]);
        Cyclotomic inv = A[c][c].inverse();
        for (long j = c; j < n; ++j) A[c][j] *= inv;
        for (long j = 0; j < w; ++j) B[c][j] *= inv;
        for (long i = 0; i < n; ++i) {
            if (i == c || A[i][c].is_zero()) continue;
            Cyclotomic f = A[i][c];
            for (long j = c; j < n; ++j) A[i][j] -= f * A[c][j];
            for (long j = 0; j < w; ++j) B[i][j] -= f * B[c][j];
        }
    }
    return B;
}

// ---------------------------------------------------------------------------
// Shared form machinery

struct FormContext {
    const RootSystem& rs;
    const RootOfUnitySpec& spec;
    Weight lambda;
    RealForm form;
    std::map<std::pair<long, std::vector<long>>, Cyclotomic> brackets;

    FormContext(const RootSystem& rs_, const RootOfUnitySpec& spec_, Weight lambda_,
                RealForm form_)
        : rs(rs_), spec(spec_), lambda(std::move(lambda_)), form(std::move(form_)) {
        if (static_cast<long>(form.s.size()) != rs.rank)
            throw std::invalid_argument("real form has wrong rank");
        if (lambda.rank() != rs.rank)
            throw std::invalid_argument("weight has wrong rank");
    }

    // [(mu, alpha_i^vee)]_{q_i} where mu = lambda - sum beta_k alpha_k is the
    // weight of the vector [H_i] acts on.
    const Cyclotomic& bracket(long i, const std::vector<long>& beta) {
        auto key = std::make_pair(i, beta);
        auto it = brackets.find(key);
        if (it != brackets.end()) return it->second;
        Rational x = lambda.fund[i];
        for (long k = 0; k < rs.rank; ++k)
            if (beta[k]) x -= Rational(beta[k] * rs.cartan[i][k]);
        return brackets.emplace(std::move(key), qint(x, rs.d[i], spec.q)).first->second;
    }

    Weight weight_at(const std::vector<long>& beta) const {
        Weight mu = lambda;
        for (long i = 0; i < rs.rank; ++i) {
            if (!beta[i]) continue;
            for (long j = 0; j < rs.rank; ++j)
                mu.fund[j] -= Rational(beta[i] * rs.cartan[j][i]);
        }
        return mu;
    }
};

std::vector<std::vector<long>> compositions(long rank, long h, const std::vector<long>* cone) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(rank, 0);
    std::function<void(long, long)> rec = [&](long pos, long rem) {
        if (pos == rank - 1) {
            if (cone && rem > (*cone)[pos]) return;
            cur[pos] = rem;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        long top = cone ? std::min(rem, (*cone)[pos]) : rem;
        for (long v = 0; v <= top; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    rec(0, h);
    return out;
}

std::vector<Word> words_of_content(const std::vector<long>& beta) {
    Word base;
    for (size_t i = 0; i < beta.size(); ++i)
        base.insert(base.end(), beta[i], static_cast<uint8_t>(i));
    std::vector<Word> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Full word lattice (no quotient): every word of every weight space within
// the cone / height cap, with E-expansions and Gram matrices per block.
// `mirror` fills the lower triangle by star-transposition instead of running
// the recursion twice (the recursion itself is exercised either way).

struct FullBlock {
    std::vector<Word> words;
    std::map<Word, long> index;
    // eexp[i][w]: terms (parent word index, coeff) in the block at beta - e_i
    std::vector<std::vector<std::vector<std::pair<long, Cyclotomic>>>> eexp;
    std::vector<std::vector<Cyclotomic>> gram;
};

using FullLevel = std::map<std::vector<long>, FullBlock>;

std::vector<FullLevel> build_full_lattice(FormContext& ctx, long height_cap,
                                          const std::vector<long>* cone, bool mirror) {
    const long rank = ctx.rs.rank;
    std::vector<FullLevel> levels(height_cap + 1);
    std::vector<long> zero(rank, 0);
    FullBlock top;
    top.words = {{}};
    top.index[{}] = 0;
    top.eexp.assign(rank, {{}});
    top.gram = {{Cyclotomic::from_integer(1)}};
    levels[0].emplace(zero, std::move(top));

    for (long h = 1; h <= height_cap; ++h) {
        for (const auto& beta : compositions(rank, h, cone)) {
            FullBlock blk;
            blk.words = words_of_content(beta);
            long nw = static_cast<long>(blk.words.size());
            for (long w = 0; w < nw; ++w) blk.index[blk.words[w]] = w;
            blk.eexp.assign(rank, std::vector<std::vector<std::pair<long, Cyclotomic>>>(nw));

            for (long i = 0; i < rank; ++i) {
                if (beta[i] == 0) continue;
                auto target_beta = beta;
                target_beta[i] -= 1;
                const FullBlock& target = levels[h - 1].at(target_beta);
                for (long w = 0; w < nw; ++w) {
                    const Word& word = blk.words[w];
                    long j = word[0];
                    Word tail(word.begin() + 1, word.end());
                    auto parent_beta = beta;
                    parent_beta[j] -= 1;
                    const FullBlock& pb = levels[h - 1].at(parent_beta);
                    long tidx = pb.index.at(tail);
                    auto& terms = blk.eexp[i][w];
                    if (i == j)
                        terms.emplace_back(target.index.at(tail), ctx.bracket(i, parent_beta));
                    for (const auto& [uidx, c] : pb.eexp[i][tidx]) {
                        auto gp_beta = parent_beta;
                        gp_beta[i] -= 1;
                        const Word& u = levels[h - 2].at(gp_beta).words[uidx];
                        Word ju;
                        ju.reserve(u.size() + 1);
                        ju.push_back(static_cast<uint8_t>(j));
                        ju.insert(ju.end(), u.begin(), u.end());
                        terms.emplace_back(target.index.at(ju), c);
                    }
                }
            }

            blk.gram.assign(nw, std::vector<Cyclotomic>(nw));
            for (long a = 0; a < nw; ++a) {
                long ia = blk.words[a][0];
                Word atail(blk.words[a].begin() + 1, blk.words[a].end());
                auto parent_beta = beta;
                parent_beta[ia] -= 1;
                const FullBlock& pa = levels[h - 1].at(parent_beta);
                long aidx = pa.index.at(atail);
                int s = ctx.form.s[ia];
                for (long b = mirror ? a : 0; b < nw; ++b) {
                    Cyclotomic acc;
                    for (const auto& [x, c] : blk.eexp[ia][b]) acc += c * pa.gram[aidx][x];
                    if (s < 0) acc = -acc;
                    if (mirror && b != a) blk.gram[b][a] = acc.star();
                    blk.gram[a][b] = std::move(acc);
                }
            }
            levels[h].emplace(beta, std::move(blk));
        }
    }
    return levels;
}

// ---------------------------------------------------------------------------
// Radical-quotient pipeline: at each level only words whose Gram rows are
// independent (a basis of the irreducible quotient's weight space) generate
// the next level, so the word count tracks the weight multiplicities instead
// of r^h. Non-kept generated words are re-expressed over the kept basis; that
// expression is what the next level's E-expansions consume.

struct PrunedBlock {
    std::vector<Word> gen;
    std::map<Word, long> gen_index;
    std::vector<std::vector<Cyclotomic>> gram;  // gen x gen
    long rank = 0;
    Signature sig;
    std::vector<long> kept;         // indices into gen, |kept| = rank
    std::map<Word, long> kept_pos;  // kept word -> position in kept
    std::vector<std::vector<Cyclotomic>> gen_over_kept;  // [g][t]
    // E_i of each kept word over the kept basis of the block at beta - e_i,
    // one level up. kexp[i][t] is dense of that length (empty when absent).
    std::vector<std::vector<std::vector<Cyclotomic>>> kexp;
};

using PrunedLevel = std::map<std::vector<long>, PrunedBlock>;

PrunedBlock make_top_block(long rank) {
    PrunedBlock top;
    top.gen = {{}};
    top.gen_index[{}] = 0;
    top.gram = {{Cyclotomic::from_integer(1)}};
    top.rank = 1;
    top.sig = {1, 0, 0};
    top.kept = {0};
    top.kept_pos[{}] = 0;
    top.gen_over_kept = {{Cyclotomic::from_integer(1)}};
    top.kexp.assign(rank, {{}});
    return top;
}

// Builds level h from levels h-1 (prev) and h-2 (grand); returns total rank.
long build_pruned_level(FormContext& ctx, const PrunedLevel& grand, const PrunedLevel& prev,
                        PrunedLevel& out) {
    const long rank = ctx.rs.rank;
    std::vector<std::vector<long>> betas;
    {
        std::set<std::vector<long>> seen;
        for (const auto& [pbeta, pblk] : prev) {
            if (pblk.kept.empty()) continue;
            for (long j = 0; j < rank; ++j) {
                auto beta = pbeta;
                beta[j] += 1;
                if (seen.insert(beta).second) betas.push_back(beta);
            }
        }
        std::sort(betas.begin(), betas.end());
    }

    long level_rank = 0;
    for (const auto& beta : betas) {
        PrunedBlock blk;
        for (long j = 0; j < rank; ++j) {
            if (beta[j] == 0) continue;
            auto pbeta = beta;
            pbeta[j] -= 1;
            auto it = prev.find(pbeta);
            if (it == prev.end()) continue;
            for (long t : it->second.kept) {
                const Word& pword = it->second.gen[t];
                Word w;
                w.reserve(pword.size() + 1);
                w.push_back(static_cast<uint8_t>(j));
                w.insert(w.end(), pword.begin(), pword.end());
                blk.gen.push_back(std::move(w));
            }
        }
        if (blk.gen.empty()) continue;
        std::sort(blk.gen.begin(), blk.gen.end());
        long ng = static_cast<long>(blk.gen.size());
        for (long g = 0; g < ng; ++g) blk.gen_index[blk.gen[g]] = g;

        // eK[i][g]: E_i(gen word g) over the kept basis of block (beta - e_i).
        std::vector<std::vector<std::vector<Cyclotomic>>> eK(
            rank, std::vector<std::vector<Cyclotomic>>(ng));
        for (long i = 0; i < rank; ++i) {
            if (beta[i] == 0) continue;
            auto tbeta = beta;
            tbeta[i] -= 1;
            auto target_it = prev.find(tbeta);
            if (target_it == prev.end()) continue;
            const PrunedBlock& target = target_it->second;
            long tk = static_cast<long>(target.kept.size());
            for (long g = 0; g < ng; ++g) {
                std::vector<Cyclotomic> vec(tk);
                const Word& word = blk.gen[g];
                long j = word[0];
                Word tail(word.begin() + 1, word.end());
                auto pbeta = beta;
                pbeta[j] -= 1;
                const PrunedBlock& pb = prev.at(pbeta);
                if (i == j) vec[target.kept_pos.at(tail)] += ctx.bracket(i, pbeta);
                const auto& exp = pb.kexp[i][pb.kept_pos.at(tail)];
                if (!exp.empty()) {
                    auto gbeta = pbeta;
                    gbeta[i] -= 1;
                    const PrunedBlock& gp = grand.at(gbeta);
                    for (size_t u = 0; u < exp.size(); ++u) {
                        if (exp[u].is_zero()) continue;
                        const Word& uword = gp.gen[gp.kept[u]];
                        Word ju;
                        ju.reserve(uword.size() + 1);
                        ju.push_back(static_cast<uint8_t>(j));
                        ju.insert(ju.end(), uword.begin(), uword.end());
                        const auto& expr = target.gen_over_kept[target.gen_index.at(ju)];
                        for (long t = 0; t < tk; ++t)
                            if (!expr[t].is_zero()) vec[t] += exp[u] * expr[t];
                    }
                }
                eK[i][g] = std::move(vec);
            }
        }

        // Gram on the generated words, via the kept Gram of the parent block.
        blk.gram.assign(ng, std::vector<Cyclotomic>(ng));
        for (long a = 0; a < ng; ++a) {
            long ia = blk.gen[a][0];
            Word atail(blk.gen[a].begin() + 1, blk.gen[a].end());
            auto pbeta = beta;
            pbeta[ia] -= 1;
            const PrunedBlock& pa = prev.at(pbeta);
            long ta = pa.kept_pos.at(atail);
            int s = ctx.form.s[ia];
            for (long b = a; b < ng; ++b) {
                Cyclotomic acc;
                const auto& vec = eK[ia][b];
                for (size_t u = 0; u < vec.size(); ++u) {
                    if (vec[u].is_zero()) continue;
                    acc += vec[u] * pa.gram[pa.kept[ta]][pa.kept[u]];
                }
                if (s < 0) acc = -acc;
                if (b != a) blk.gram[b][a] = acc.star();
                blk.gram[a][b] = std::move(acc);
            }
        }

        ElimResult el = hermitian_eliminate(blk.gram);
        blk.rank = el.rank;
        blk.sig = el.sig;
        blk.kept = el.pivots;
        std::sort(blk.kept.begin(), blk.kept.end());
        for (size_t t = 0; t < blk.kept.size(); ++t)
            blk.kept_pos[blk.gen[blk.kept[t]]] = static_cast<long>(t);

        long k = blk.rank;
        if (k > 0) {
            std::vector<std::vector<Cyclotomic>> KG(k, std::vector<Cyclotomic>(k));
            std::vector<std::vector<Cyclotomic>> RHS(k, std::vector<Cyclotomic>(ng));
            for (long t = 0; t < k; ++t) {
                for (long u = 0; u < k; ++u) KG[t][u] = blk.gram[blk.kept[t]][blk.kept[u]];
                for (long g = 0; g < ng; ++g) RHS[t][g] = blk.gram[blk.kept[t]][g];
            }
            auto X = solve_matrix(std::move(KG), std::move(RHS));
            blk.gen_over_kept.assign(ng, std::vector<Cyclotomic>(k));
            for (long g = 0; g < ng; ++g)
                for (long t = 0; t < k; ++t) blk.gen_over_kept[g][t] = X[t][g];
        } else {
            blk.gen_over_kept.assign(ng, {});
        }

        blk.kexp.assign(rank, std::vector<std::vector<Cyclotomic>>(blk.kept.size()));
        for (long i = 0; i < rank; ++i)
            for (size_t t = 0; t < blk.kept.size(); ++t)
                blk.kexp[i][t] = eK[i][blk.kept[t]];

        level_rank += blk.rank;
        out.emplace(beta, std::move(blk));
    }
    return level_rank;
}

}  // namespace

std::pair<long, Signature> hermitian_rank_signature(std::vector<std::vector<Cyclotomic>> M) {
    ElimResult el = hermitian_eliminate(std::move(M));
    return {el.rank, el.sig};
}

GramBlock gram_block(const RootSystem& rs, const RootOfUnitySpec& spec, const Weight& lambda,
                     const RealForm& form, const std::vector<long>& target) {
    if (static_cast<long>(target.size()) != rs.rank)
        throw std::invalid_argument("gram_block: target has wrong rank");
    for (long v : target)
        if (v < 0) throw std::invalid_argument("gram_block: target must be non-negative");
    FormContext ctx(rs, spec, lambda, form);
    long h = std::accumulate(target.begin(), target.end(), 0L);
    auto levels = build_full_lattice(ctx, h, &target, /*mirror=*/false);
    const FullBlock& blk = levels[h].at(target);
    GramBlock out;
    out.weight = ctx.weight_at(target);
    out.words = blk.words;
    out.matrix = blk.gram;
    auto [rank, sig] = hermitian_rank_signature(blk.gram);
    out.rank = rank;
    out.signature = sig;
    return out;
}

ModuleReport module_report(const RootSystem& rs, const RootOfUnitySpec& spec,
                           const Weight& lambda, const RealForm& form, long height_budget) {
    if (height_budget < 0)
        throw std::invalid_argument("module_report: negative height budget");
    FormContext ctx(rs, spec, lambda, form);
    ModuleReport rep;
    rep.lambda = lambda;
    rep.form = form;
    rep.spec = spec;
    rep.dims[lambda] = 1;
    rep.total_dim = 1;

    std::vector<PrunedLevel> levels;
    levels.emplace_back();
    std::vector<long> zero(rs.rank, 0);
    levels[0].emplace(zero, make_top_block(rs.rank));

    bool complete = false;
    long h = 0;
    while (h < height_budget) {
        ++h;
        PrunedLevel next;
        const PrunedLevel& prev = levels.back();
        const PrunedLevel empty;
        const PrunedLevel& grand = levels.size() >= 2 ? levels[levels.size() - 2] : empty;
        long level_rank = build_pruned_level(ctx, grand, prev, next);
        for (const auto& [beta, blk] : next) {
            if (blk.sig.n_minus > 0) rep.unitary = false;
            if (blk.rank > 0) {
                rep.dims[ctx.weight_at(beta)] = blk.rank;
                rep.total_dim += blk.rank;
            }
        }
        levels.push_back(std::move(next));
        if (level_rank == 0) {
            complete = true;
            break;
        }
    }
    rep.height_reached = h;
    rep.truncated = !complete && h == height_budget;

    if (is_dominant_integral(lambda, rs) && !rep.truncated) {
        auto oracle = freudenthal_character(lambda, rs, module_depth(lambda, rs));
        rep.classical_character = (rep.dims == oracle);
    }
    return rep;
}

ShiftDecomposition shift_decompose(const Weight& lambda, const RootSystem& rs,
                                   const RootOfUnitySpec& spec) {
    ShiftDecomposition out;
    out.lambda0 = Weight::zero(rs.rank);
    out.lambda_r = Weight::zero(rs.rank);
    out.p.assign(rs.rank, 0);
    for (long i = 0; i < rs.rank; ++i) {
        Rational c(spec.q.m, 2 * spec.q.n * rs.d[i]);
        c.canonicalize();
        Integer a = c.get_num(), t = c.get_den();
        const Rational& li = lambda.fund[i];
        if (!mpz_divisible_p(t.get_mpz_t(), li.get_den().get_mpz_t()))
            return out;  // no integral solution: not shift-reachable
        // Solve a*p == lambda_i * t (mod t); a is invertible mod t.
        Integer p0 = 0;
        if (t != 1) {
            Integer L = li.get_num() * (t / li.get_den());
            Integer ainv;
            if (mpz_invert(ainv.get_mpz_t(), a.get_mpz_t(), t.get_mpz_t()) == 0)
                throw std::logic_error("shift_decompose: non-invertible residue");
            p0 = (ainv * L) % t;
            if (p0 < 0) p0 += t;
        }
        Rational l0 = li - c * Rational(p0);
        // Slide by multiples of c*t = M_i into [0, M_i).
        Rational ratio = l0 / Rational(spec.M_simple[i]);
        Integer j;
        mpz_fdiv_q(j.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
        l0 -= Rational(j) * Rational(spec.M_simple[i]);
        Integer p = p0 + j * t;
        if (l0.get_den() != 1 || l0 < 0 || l0 >= spec.M_simple[i])
            throw std::logic_error("shift_decompose: normalisation failed");
        if (!p.fits_slong_p()) throw std::logic_error("shift_decompose: p overflow");
        out.p[i] = p.get_si();
        out.lambda0.fund[i] = l0;
        out.lambda_r.fund[i] = c * Rational(p);
    }
    out.reachable = true;
    return out;
}

bool verify_shift_equivalence(const RootSystem& rs, const RootOfUnitySpec& spec,
                              const Weight& lambda0, const std::vector<long>& p,
                              long height_cap) {
    if (!is_dominant_integral(lambda0, rs))
        throw std::invalid_argument("verify_shift_equivalence: lambda0 not dominant integral");
    for (long i = 0; i < rs.rank; ++i)
        if (lambda0.fund[i] >= spec.M_simple[i])
            throw std::invalid_argument(
                "verify_shift_equivalence: lambda0 not in the fundamental box");
    SingletData singlet = singlet_weights(rs, spec, p);
    Weight shifted = lambda0 + singlet.lambda_r;

    FormContext compact_ctx(rs, spec, lambda0, RealForm::compact(rs.rank));
    FormContext twisted_ctx(rs, spec, shifted, singlet.form);
    auto compact = build_full_lattice(compact_ctx, height_cap, nullptr, /*mirror=*/true);
    auto twisted = build_full_lattice(twisted_ctx, height_cap, nullptr, /*mirror=*/true);

    for (long h = 0; h <= height_cap; ++h) {
        if (compact[h].size() != twisted[h].size()) return false;
        for (const auto& [beta, cblk] : compact[h]) {
            auto it = twisted[h].find(beta);
            if (it == twisted[h].end()) return false;
            const FullBlock& tblk = it->second;
            for (size_t a = 0; a < cblk.words.size(); ++a)
                for (size_t b = 0; b < cblk.words.size(); ++b)
                    if (!(cblk.gram[a][b] == tblk.gram[a][b])) return false;
        }
    }
    return true;
}

bool classical_character_check(const ModuleReport& report, const RootSystem& rs) {
    if (report.truncated)
        throw std::invalid_argument("classical_character_check: report is truncated");
    if (!is_dominant_integral(report.lambda, rs))
        throw std::invalid_argument(
            "classical_character_check: highest weight not dominant integral");
    auto oracle = freudenthal_character(report.lambda, rs, module_depth(report.lambda, rs));
    bool equal = (report.dims == oracle);

    bool hypothesis = true;
    Weight lr = report.lambda + rs.rho;
    for (size_t a = 0; a < rs.positive_roots.size(); ++a)
        if (pairing(lr, rs.positive_roots[a], rs) > report.spec.M_per_root[a])
            hypothesis = false;
    if (hypothesis && !equal)
        throw std::logic_error(
            "classical_character_check: character dropped inside the fundamental alcove");
    return equal;
}

std::vector<StabilityVerdict> character_stability_scan(const RootSystem& rs,
                                                       const Weight& lambda,
                                                       const RootOfUnitySpec& spec,
                                                       const std::vector<QRoot>& samples) {
    if (!is_dominant_integral(lambda, rs))
        throw std::invalid_argument("character_stability_scan: lambda not dominant integral");
    std::vector<StabilityVerdict> out;
    long depth = module_depth(lambda, rs);
    auto oracle = freudenthal_character(lambda, rs, depth);
    for (const QRoot& sample : samples) {
        if (!(Rational(sample.n, sample.m) < Rational(spec.q.n, spec.q.m)))
            throw std::invalid_argument(
                "character_stability_scan: sample outside the open interval (0, n/m)");
        StabilityVerdict v{sample, false, false};
        try {
            RootOfUnitySpec sspec = compute_spec(rs, sample);
            v.admissible = true;
            ModuleReport rep =
                module_report(rs, sspec, lambda, RealForm::compact(rs.rank), depth + 2);
            v.stable = !rep.truncated && rep.dims == oracle;
        } catch (const std::invalid_argument&) {
            v.admissible = false;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<LimitStage> classical_limit_scan(const RootSystem& rs, const Weight& lambda,
                                             long i0_node, const QRoot& base, long k_max,
                                             long height_budget) {
    if (i0_node < 1 || i0_node > rs.rank)
        throw std::invalid_argument("classical_limit_scan: node out of range");
    long i0 = i0_node - 1;
    if (rs.coxeter_labels[i0] != 1)
        throw std::invalid_argument("classical_limit_scan: node has Coxeter label != 1");
    for (long j = 0; j < rs.rank; ++j) {
        if (j == i0) continue;
        const Rational& c = lambda.fund[j];
        if (c.get_den() != 1 || c < 0)
            throw std::invalid_argument(
                "classical_limit_scan: lambda not dominant integral on the compact nodes");
    }

    std::vector<LimitStage> out;
    for (long k = 0; k <= k_max; ++k) {
        long mk = base.m + 2 * base.n * k * rs.d[i0];
        QRoot qk(base.n, mk);
        LimitStage stage{k, qk, Weight::zero(rs.rank), false, false, false, 0};
        RootOfUnitySpec spec_k = compute_spec(rs, qk);
        std::vector<long> p(rs.rank, 0);
        p[i0] = -1;
        SingletData singlet = singlet_weights(rs, spec_k, p);
        for (long j = 0; j < rs.rank; ++j) {
            int expect = (j == i0) ? -1 : 1;
            if (singlet.form.s[j] != expect)
                throw std::logic_error("classical_limit_scan: unexpected real form");
        }
        stage.lambda0 = lambda - singlet.lambda_r;
        stage.lambda0_ok = is_dominant_integral(stage.lambda0, rs);
        if (stage.lambda0_ok) {
            ModuleReport rep = module_report(rs, spec_k, lambda, singlet.form, height_budget);
            stage.unitary = rep.unitary;
            stage.truncated = rep.truncated;
            stage.total_dim = rep.total_dim;
        }
        out.push_back(stage);
    }
    return out;
}

}  // namespace qfin

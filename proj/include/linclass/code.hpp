#ifndef LINCLASS_CODE_HPP
#define LINCLASS_CODE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linclass/mat.hpp"

namespace linclass {

// A linear [n,k]_q code held by a systematic generator matrix (I_k | A).
struct LinearCode {
    int q = 2, n = 0, k = 0;
    Mat gen;
};

// Systematize by Gaussian elimination; columns are swapped toward the front
// as needed and the swaps recorded: result column j is input column perm[j].
struct SystematizeResult {
    Mat sys;
    std::vector<int> perm;
};
SystematizeResult systematize(const Mat& g);  // throws on rank < k

LinearCode make_code(const Mat& g);  // systematize and wrap

// For systematic input (I_k | A): returns (-A^T | I_{n-k}), a generator of
// the dual code. k = n yields an empty (0 x n) matrix.
Mat dual_gen(const Mat& sys);

// Nullspace basis of any full-rank matrix, without column permutation: the
// rows of the result span { x : g x^T = 0 }. Shape (n-k) x n.
Mat null_basis(const Mat& g);

// Column multiset as projective points: encoded point id -> multiplicity.
// All-zero columns are not points; their count is reported separately.
struct ColumnMultiset {
    std::map<uint64_t, int> mult;  // point id (see pg.hpp) -> multiplicity
    int zero_cols = 0;
    int min_mult() const;  // minimum over support points; 0 if empty
};
ColumnMultiset column_multiset(const Mat& g);

// Exact weight distribution A_0..A_n, computed from the column multiset by
// incidence counting: each projective coefficient class x contributes q-1
// codewords of weight n_eff - sum of m(P) over points P with <x,P> = 0.
// Rank-deficient input is reduced to a basis first.
std::vector<long long> codeword_weights(const Mat& g);

int min_distance(const Mat& g);  // least w > 0 with A_w > 0
// Exact dual distance; n+1 when k = n. Large dual dimensions fall back to a
// bounded search for small dependent column sets and give up beyond weight 5.
int dual_distance(const Mat& g);
// Cheap threshold check: no dependent column subset of size < t.
bool dual_distance_at_least(const Mat& g, int t);

bool is_divisible(const Mat& g, int delta);

enum class OrthForm { euclidean, hermitian };
// G * G^T = 0 (euclidean) or G * conj(G)^T = 0 (hermitian, q = 4 only).
bool is_self_orthogonal(const Mat& g, OrthForm form);

// Number of minimal nonzero codewords: a codeword is minimal iff no codeword
// of a different projective class has support strictly contained in its
// support. Scalar multiples are counted separately.
long long minimal_codeword_count(const Mat& g);

// Bundle of isometry-invariant selection predicates shared by the search
// engines and the brute-force checker. Defaults accept every code.
struct CodeFilter {
    int min_dist = 1;
    int min_dual_dist = 1;
    int divisor = 1;                       // all weights divisible by this
    std::optional<OrthForm> self_orth;     // require G orthogonal to itself
};
bool satisfies(const Mat& g, const CodeFilter& f);

}  // namespace linclass

#endif

#ifndef LINCLASS_LATEXT_HPP
#define LINCLASS_LATEXT_HPP

#include <cstdint>
#include <vector>

#include "linclass/code.hpp"
#include "linclass/mat.hpp"

namespace linclass {

// Lengthening step for divisible codes: append r columns and one row to a
// seed [m,k]_q code whose nonzero weights all lie in {i*delta : a <= i <= b},
// producing [m+r, k+1]_q codes with weights in the same window. The seed must
// be in reduced row echelon form and free of zero columns.
struct ExtensionProblem {
    Mat seed;
    int r = 1;
    int delta = 1;
    int a = 1, b = 1;
};

// Integer linear system whose solutions are the candidate lengthenings.
// Unknowns: one x per point of PG(k, q) counting columns of the extended code
// on that point, and one slack y per hyperplane encoding its codeword weight
// delta*(a + y). Point and hyperplane indices both follow the ascending
// little-endian order of pg.hpp over F_q^(k+1).
struct ExtensionSystem {
    int q = 2;
    int k1 = 0;       // rows of the extended code, seed k + 1
    int target_n = 0; // seed length + r
    int delta = 1, a = 1, b = 1;
    int r = 1;

    std::vector<uint64_t> points;          // point ids, index order
    std::vector<std::vector<int>> hyper;   // hyperplane -> incident point indices
    int rhs = 0;                           // target_n - a*delta, shared by all hyperplanes

    // each point lies in exactly one column class: the projection of its
    // first k entries, with the pure last unit vector forming class 0
    std::vector<int> group_of;             // point -> group
    std::vector<int> group_sum;            // group -> required column count
    std::vector<std::vector<int>> group_pts;
    std::vector<int> min_x;                // 1 on the k+1 unit points, else 0
};

// throws std::invalid_argument if the seed is not systematic, has a zero
// column, or has a nonzero weight outside the window
ExtensionSystem build_system(const ExtensionProblem& p);

struct ExtensionSolution {
    std::vector<int> x;  // by point index
    std::vector<int> y;  // by hyperplane index
};

struct SolveStats {
    long long nodes = 0;      // assignments tried
    long long pruned = 0;     // assignments cut off by a hyperplane bound
    long long solutions = 0;
};

// All solutions, in lexicographic x order. Backtracking over the column
// classes: within a class the point counts are compositions of the class sum,
// the last point taking the residual; every partial sum is checked against
// the hyperplane right-hand side, a completed hyperplane immediately against
// divisibility and the slack range. Counters accumulate into *stats.
std::vector<ExtensionSolution> enumerate_solutions(const ExtensionSystem& sys,
                                                   SolveStats* stats = nullptr);

// Generator realizing a solution: the seed's columns lifted by one entry so
// that the column multiset over PG(k, q) is exactly sol.x, plus r new columns
// on the last unit point. Pivot columns stay unit vectors, so the result is
// systematic up to column order.
Mat solution_to_code(const ExtensionProblem& p, const ExtensionSolution& sol);

// Keeps candidates whose minimum column multiplicity is exactly r, the length
// at which the lengthening chain is forced to stop growing r. A seed whose
// own minimum multiplicity is below r admits no such candidate and yields an
// empty list outright.
std::vector<Mat> canonical_length_filter(const Mat& seed,
                                         const std::vector<Mat>& candidates,
                                         int r);

// Keeps a candidate iff the seed's weight distribution is lexicographically
// minimal among the residual codes at all points of multiplicity exactly r
// (delete the r columns on the point and the row its transform pins down).
// Ties are kept; the duplicates they cause are merged later by dedup.
std::vector<Mat> lex_length_filter(const Mat& seed,
                                   const std::vector<Mat>& candidates, int r);

// All inequivalent [n,k]_q codes, free of zero columns, whose nonzero weights
// lie in {i*delta : a <= i <= b} minus the forbidden list. b = 0 means the
// largest window the length allows, floor(n/delta).
struct LatticeTask {
    int q = 2, n = 0, k = 1;
    int delta = 1;
    int a = 1, b = 0;
    std::vector<int> forbidden;
};

// Builds the codes bottom-up: dimension 1 leaves only the full repetition
// code of each admissible length, dimension s+1 lengthens every dimension-s
// class by every r in [1, n'-s], with both filters applied per seed and the
// levels deduplicated. Returns sorted canonical forms.
std::vector<Mat> classify_lattice(const LatticeTask& task,
                                  SolveStats* stats = nullptr);

}  // namespace linclass

#endif

#ifndef LINCLASS_AUGMENT_HPP
#define LINCLASS_AUGMENT_HPP

#include <functional>
#include <optional>
#include <vector>

#include "linclass/canon.hpp"
#include "linclass/code.hpp"
#include "linclass/isometry.hpp"
#include "linclass/mat.hpp"

namespace linclass {

// One classification job: all inequivalent [n,k]_q codes with minimum
// distance >= d, dual distance >= dual_d, and the optional extras. Emitted
// codes never have all-zero columns, so their effective length is exactly n;
// in particular dual_d = 1 and dual_d = 2 describe the same output.
struct AugTask {
    int q = 2, n = 0, k = 0;
    int d = 1;
    int dual_d = 1;
    int divisor = 1;                    // weights divisible by this
    std::optional<OrthForm> self_orth;  // self-orthogonal codes only

    CodeFilter filter() const { return CodeFilter{d, dual_d, divisor, self_orth}; }
};

// The matrix-plus-automorphism pairs through which code automorphisms act on
// information vectors: for each generator phi of Aut(C), the unique A with
// apply(phi, G) = A * G. Composition follows the semilinear rule (the matrix
// of a composite picks up a Frobenius twist).
struct InducedMap {
    Mat a;          // k x k invertible
    int alpha = 0;  // Frobenius exponent of the generator
};
std::vector<InducedMap> induced_matrix_action(const std::vector<Isometry>& gens,
                                              const Mat& g);

// Orbits of the induced action on candidate extension vectors. side::column
// acts on F_q^k by x -> frob^-alpha(A x); side::row acts on F_q^(n-k) through
// the dual code (mult inverted on the dual side). The zero vector is skipped;
// representatives are the smallest vector of each orbit in the base-q
// encoding, listed in ascending order.
enum class Side { column, row };
struct VectorOrbitRep {
    std::vector<Felt> rep;
    long long orbit_size = 0;
};
std::vector<VectorOrbitRep> vector_orbit_reps(const std::vector<Isometry>& gens,
                                              const Mat& g, Side side);

// True iff the coordinate sits in the special orbit of the child: the first
// automorphism orbit, in canonical order, that avoids both all-zero columns
// and coordinates carrying weight-1 codewords. This decides which parent a
// code is charged to during augmentation.
bool parent_test(const Mat& child, int added_coord);

// Progress hook: called once per completed intermediate level with the code
// length and the canonical forms of that level's classes.
using LevelFn = std::function<void(int length, const std::vector<Mat>&)>;

// Column-by-column engine. Grows codes from the trivial [k,k]_q seed (or from
// a complete inequivalent list of [n',k]_q codes, n' <= n) one column at a
// time, keeping length-m codes with minimum distance >= max(1, d-(n-m)) and
// dual distance >= dual_d, pruning siblings to orbit representatives and
// keeping a child only if the new coordinate lands in its special orbit.
// Returns the sorted canonical forms of all classes; infeasible parameters
// give an empty list.
std::vector<Mat> classify_col(const AugTask& task,
                              const std::vector<Mat>* seeds = nullptr,
                              const LevelFn& level_fn = {});

// Row-by-row engine: the same augmentation run on the dual codes, which gain
// one column while the primal codes gain a row and a coordinate. Nodes carry
// the primal code; the dual-side bookkeeping (orbit action on appended
// columns, the parent choice) is derived from it, since a code and its dual
// share coordinate permutations of automorphisms. Step-s codes keep minimum
// distance >= d throughout and dual distance >= max(1, dual_d-(k-s)), so
// intermediate levels may contain zero coordinates and the level hook sees
// those classes too; the final level may not, matching classify_col byte for
// byte. Requires d >= 2 (codes containing unit vectors have duals with
// all-zero columns, which column augmentation never produces).
std::vector<Mat> classify_row(const AugTask& task,
                              const std::vector<Mat>* seeds = nullptr,
                              const LevelFn& level_fn = {});

}  // namespace linclass

#endif

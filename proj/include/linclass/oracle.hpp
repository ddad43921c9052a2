#ifndef LINCLASS_ORACLE_HPP
#define LINCLASS_ORACLE_HPP

#include <vector>

#include "linclass/code.hpp"
#include "linclass/mat.hpp"

namespace linclass {

// Ground-truth classification by sheer enumeration: every k-dimensional
// subspace of F_q^n is visited (as its unique RREF generator matrix), the
// semilinear isometry orbits are closed off by breadth-first search, and one
// representative per orbit is kept. No canonical forms, no search tree; this
// exists only to check the clever code paths at small sizes.
//
// Feasible parameter ranges (anything else throws std::invalid_argument):
//   q = 2: n <= 8
//   q = 3: n <= 6, k <= 3
//   q = 4: n <= 5, k <= 2
struct BruteClasses {
    long long count = 0;
    std::vector<Mat> reps;  // one generator matrix per class, RREF form
};

BruteClasses brute_classes(int q, int n, int k, const CodeFilter& filter);

}  // namespace linclass

#endif

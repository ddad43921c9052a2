#ifndef LINCLASS_CANON_HPP
#define LINCLASS_CANON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "linclass/isometry.hpp"
#include "linclass/mat.hpp"

namespace linclass {

// Everything the classification engines need to know about one code: a
// canonical representative, a map onto it, the automorphism group by
// generators, and the coordinate orbit structure.
struct CanonicalResult {
    Mat canon;                  // representative; reduced echelon over its column order
    Isometry transport;         // maps the input code onto canon
    std::vector<Isometry> aut_gens;
    // Coordinate orbits of the automorphism group, ordered by the smallest
    // position their coordinates occupy in canon (equivalently: by transport
    // image). Each orbit is sorted ascending.
    std::vector<std::vector<int>> orbits;
    int special = -1;           // index into orbits, -1 when undefined
    std::vector<int> zero_coords;  // coordinates that are all-zero columns
    std::vector<int> unit_coords;  // coordinates carrying a weight-1 codeword

    bool special_defined() const { return special >= 0; }
    const std::vector<int>& special_orbit() const { return orbits[(size_t)special]; }
};

// Per-coordinate signature, constant on automorphism orbits: hash of the
// column's point multiplicity together with, for every weight, the number of
// projective codeword classes of that weight which are nonzero here.
std::vector<uint64_t> coordinate_invariant(const Mat& g);

// Canonical representative map. Same output for every generator matrix of
// every equivalent code (bit-exact), established by a backtrack search over
// column orderings restricted to signature cells. Input must have full row
// rank; all-zero columns are allowed and sort last in the representative.
CanonicalResult canonical_form(const Mat& g);

// An isometry mapping rowspace(a) onto rowspace(b), if one exists.
std::optional<Isometry> are_equivalent(const Mat& a, const Mat& b);

// Order of the group generated by gens, via a stabilizer chain on the
// n*(q-1) scaled coordinates.
long long group_order(const std::vector<Isometry>& gens, int q, int n);

}  // namespace linclass

#endif

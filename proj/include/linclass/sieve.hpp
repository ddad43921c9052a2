#ifndef LINCLASS_SIEVE_HPP
#define LINCLASS_SIEVE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "linclass/mat.hpp"

namespace linclass {

// Cheap isometry-invariant fingerprint of a code. Equivalent codes always get
// equal keys; unequal keys prove inequivalence. Used to split large lists into
// small buckets before exact comparison.
struct InvariantKey {
    uint64_t weights;  // digest of the weight distribution
    uint64_t mults;    // digest of the sorted column multiplicity profile
    uint64_t coords;   // digest of the sorted per-coordinate invariants

    bool operator==(const InvariantKey& o) const {
        return weights == o.weights && mults == o.mults && coords == o.coords;
    }
    bool operator<(const InvariantKey& o) const {
        if (weights != o.weights) return weights < o.weights;
        if (mults != o.mults) return mults < o.mults;
        return coords < o.coords;
    }
};

InvariantKey invariant_key(const Mat& g);

// Group a list of same-parameter codes by invariant key. Mixing dimensions or
// lengths or fields in one list is a contract violation (throws).
std::map<InvariantKey, std::vector<Mat>> bucket(const std::vector<Mat>& codes);

// Remove equivalent duplicates from a list of same-parameter codes. Output is
// one canonical form per class, sorted by serialization, so any two runs over
// inputs covering the same classes produce byte-identical lists.
std::vector<Mat> dedup(const std::vector<Mat>& codes);

}  // namespace linclass

#endif

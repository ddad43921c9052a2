#ifndef LINCLASS_ISOMETRY_HPP
#define LINCLASS_ISOMETRY_HPP

#include <random>
#include <string>
#include <vector>

#include "linclass/mat.hpp"

namespace linclass {

// Monomial map combined with a field automorphism. Acting on a word v of
// length n: out[dest[i]] = frob^alpha(v[i] * mult[i]).
struct Isometry {
    int n = 0, q = 2;
    int alpha = 0;
    std::vector<int> dest;
    std::vector<Felt> mult;

    bool operator==(const Isometry& o) const {
        return n == o.n && q == o.q && alpha == o.alpha && dest == o.dest &&
               mult == o.mult;
    }
};

Isometry identity_isometry(int q, int n);
// a after b: apply(compose(a,b), v) = apply(a, apply(b, v))
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);
bool is_identity(const Isometry& a);

std::vector<Felt> apply_vec(const Isometry& iso, const std::vector<Felt>& v);
Mat apply(const Isometry& iso, const Mat& m);  // acts on every row

std::string iso_key(const Isometry& a);  // for dedup containers

Isometry random_isometry(std::mt19937& rng, int q, int n);

}  // namespace linclass

#endif

#ifndef LINCLASS_PG_HPP
#define LINCLASS_PG_HPP

#include <cstdint>
#include <vector>

#include "linclass/gf.hpp"

namespace linclass {

// Vectors of F_q^k encoded as base-q integers, little-endian (entry 0 is the
// least significant digit). Projective points are the normalized vectors
// (first nonzero entry 1); enumeration order is ascending encoded value.

uint64_t encode_vec(const std::vector<Felt>& v, int q);
std::vector<Felt> decode_vec(uint64_t id, int q, int k);

// all points of PG(k-1, q), i.e. (q^k-1)/(q-1) normalized vectors
std::vector<uint64_t> projective_points(int q, int k);

}  // namespace linclass

#endif

#include "linclass/pg.hpp"

#include <stdexcept>

namespace linclass {

uint64_t encode_vec(const std::vector<Felt>& v, int q) {
    uint64_t id = 0;
    for (size_t i = v.size(); i-- > 0;) id = id * q + v[i];
    return id;
}

std::vector<Felt> decode_vec(uint64_t id, int q, int k) {
    std::vector<Felt> v((size_t)k);
    for (int i = 0; i < k; ++i) {
        v[i] = (Felt)(id % q);
        id /= q;
    }
    return v;
}

std::vector<uint64_t> projective_points(int q, int k) {
    if (k > 16) throw std::invalid_argument("projective dimension too large");
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    std::vector<uint64_t> pts;
    pts.reserve((size_t)((total - 1) / (q - 1)));
    for (uint64_t id = 1; id < total; ++id) {
        uint64_t t = id;
        Felt first = 0;
        while (t) {
            first = (Felt)(t % q);
            if (first) break;
            t /= q;
        }
        if (first == 1) pts.push_back(id);
    }
    return pts;
}

}  // namespace linclass

#include "linclass/sieve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "linclass/canon.hpp"
#include "linclass/code.hpp"

namespace linclass {

namespace {

uint64_t fnv64(const uint64_t* data, size_t len, uint64_t seed) {
    uint64_t h = 14695981039346656037ull ^ seed;
    for (size_t i = 0; i < len; i++) {
        const uint64_t x = data[i];
        for (int b = 0; b < 64; b += 8) {
            h ^= (x >> b) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace

InvariantKey invariant_key(const Mat& g) {
    const uint64_t seed =
        (uint64_t(g.q()) << 40) ^ (uint64_t(g.cols()) << 20) ^ uint64_t(g.rows());

    std::vector<long long> we = codeword_weights(g);
    std::vector<uint64_t> wv(we.begin(), we.end());

    ColumnMultiset cm = column_multiset(g);
    std::vector<uint64_t> mv;
    mv.push_back(uint64_t(cm.zero_cols));
    for (const auto& [pt, m] : cm.mult) mv.push_back(uint64_t(m));
    std::sort(mv.begin() + 1, mv.end());

    std::vector<uint64_t> cv = coordinate_invariant(g);
    std::sort(cv.begin(), cv.end());

    return InvariantKey{fnv64(wv.data(), wv.size(), seed),
                        fnv64(mv.data(), mv.size(), seed ^ 0x9e3779b97f4a7c15ull),
                        fnv64(cv.data(), cv.size(), seed ^ 0xc2b2ae3d27d4eb4full)};
}

namespace {

void check_uniform(const std::vector<Mat>& codes, const char* who) {
    for (const Mat& g : codes)
        if (g.q() != codes[0].q() || g.cols() != codes[0].cols() || g.rows() != codes[0].rows())
            throw std::invalid_argument(std::string(who) + ": mixed code parameters");
}

}  // namespace

std::map<InvariantKey, std::vector<Mat>> bucket(const std::vector<Mat>& codes) {
    check_uniform(codes, "bucket");
    std::map<InvariantKey, std::vector<Mat>> out;
    for (const Mat& g : codes) out[invariant_key(g)].push_back(g);
    return out;
}

std::vector<Mat> dedup(const std::vector<Mat>& codes) {
    check_uniform(codes, "dedup");
    std::set<std::string> seen;
    std::vector<Mat> out;
    for (const Mat& g : codes) {
        Mat c = canonical_form(g).canon;
        if (seen.insert(c.serialize()).second) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace linclass

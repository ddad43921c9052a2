#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "linclass/canon.hpp"
#include "linclass/code.hpp"
#include "linclass/isometry.hpp"
#include "linclass/sieve.hpp"

using namespace linclass;

namespace {

Mat from_rows(int q, int n, const std::vector<std::vector<int>>& rows) {
    Mat m(q, (int)rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n; ++c) m.set((int)r, c, (Felt)rows[r][c]);
    return m;
}

Mat hamming74() {
    return from_rows(2, 7,
                     {{1, 0, 0, 0, 0, 1, 1},
                      {0, 1, 0, 0, 1, 0, 1},
                      {0, 0, 1, 0, 1, 1, 0},
                      {0, 0, 0, 1, 1, 1, 1}});
}

Mat random_code(std::mt19937& rng, int q, int n, int k) {
    while (true) {
        Mat m(q, k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) m.set(r, c, (Felt)(rng() % q));
        if (rank(m) == k) return m;
    }
}

}  // namespace

TEST_CASE("equivalent codes always share an invariant key") {
    std::mt19937 rng(411);
    std::vector<Mat> pool = {hamming74(),
                             from_rows(2, 7, {{1, 1, 0, 0, 1, 0, 1},
                                              {0, 1, 1, 1, 0, 0, 1},
                                              {1, 0, 1, 0, 1, 1, 0}}),
                             random_code(rng, 3, 6, 3), random_code(rng, 4, 5, 2)};
    for (const Mat& g : pool) {
        InvariantKey base = invariant_key(g);
        for (int t = 0; t < 25; ++t) {
            Isometry iso = random_isometry(rng, g.q(), g.cols());
            CHECK(invariant_key(apply(iso, g)) == base);
        }
    }
}

TEST_CASE("keys separate codes with different weight distributions") {
    // a doubled point forces a weight the Hamming code does not have
    Mat repeated = from_rows(2, 7,
                             {{1, 0, 0, 0, 0, 1, 1},
                              {0, 1, 0, 0, 1, 0, 1},
                              {0, 0, 1, 0, 1, 1, 0},
                              {0, 0, 0, 1, 1, 1, 0}});
    CHECK(codeword_weights(hamming74()) != codeword_weights(repeated));
    CHECK(!(invariant_key(hamming74()) == invariant_key(repeated)));
}

TEST_CASE("bucket groups by key and rejects mixed parameter lists") {
    std::mt19937 rng(7);
    Mat a = hamming74();
    std::vector<Mat> list;
    for (int t = 0; t < 6; ++t) list.push_back(apply(random_isometry(rng, 2, 7), a));
    Mat b = from_rows(2, 7,
                      {{1, 0, 0, 0, 0, 1, 1},
                       {0, 1, 0, 0, 1, 0, 1},
                       {0, 0, 1, 0, 1, 1, 0},
                       {0, 0, 0, 1, 1, 1, 0}});
    for (int t = 0; t < 4; ++t) list.push_back(apply(random_isometry(rng, 2, 7), b));

    auto buckets = bucket(list);
    CHECK(buckets.size() == 2);
    // every bucket holds a single equivalence class here
    for (const auto& [key, members] : buckets) {
        for (const Mat& g : members) CHECK(invariant_key(g) == key);
        for (size_t i = 1; i < members.size(); ++i)
            CHECK(are_equivalent(members[0], members[i]).has_value());
    }

    list.push_back(random_code(rng, 2, 6, 4));
    CHECK_THROWS_AS(bucket(list), std::invalid_argument);
    CHECK_THROWS_AS(dedup(list), std::invalid_argument);
}

TEST_CASE("dedup collapses relabelings to one canonical form") {
    std::mt19937 rng(99);
    for (int q : {2, 3, 4}) {
        Mat g = random_code(rng, q, 6, 3);
        std::vector<Mat> list;
        for (int t = 0; t < 12; ++t) list.push_back(apply(random_isometry(rng, q, 6), g));
        std::vector<Mat> out = dedup(list);
        REQUIRE(out.size() == 1);
        CHECK(out[0] == canonical_form(g).canon);
    }
}

TEST_CASE("dedup keeps one representative per class, sorted and idempotent") {
    std::mt19937 rng(1234);
    const int q = 2, n = 7, k = 3;

    // build a pool with a known number of classes
    std::vector<Mat> classes;
    std::vector<std::string> seen;
    while (classes.size() < 5) {
        Mat g = random_code(rng, q, n, k);
        std::string c = canonical_form(g).canon.serialize();
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
            seen.push_back(c);
            classes.push_back(g);
        }
    }
    std::vector<Mat> noisy;
    for (const Mat& g : classes)
        for (int t = 0; t < 7; ++t) noisy.push_back(apply(random_isometry(rng, q, n), g));

    std::vector<Mat> out = dedup(noisy);
    CHECK(out.size() == classes.size());
    CHECK(std::is_sorted(out.begin(), out.end()));
    CHECK(dedup(out) == out);

    // order independence: shuffled input gives the byte-identical list
    std::shuffle(noisy.begin(), noisy.end(), rng);
    CHECK(dedup(noisy) == out);
}

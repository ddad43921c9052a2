#include "linclass/oracle.hpp"

#include <array>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace linclass {

namespace {

// Every full-rank k x n matrix in reduced row echelon form, one per subspace.
std::vector<Mat> all_rref(int q, int n, int k) {
    std::vector<Mat> out;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free positions for this pivot pattern
        std::vector<char> is_piv(n, 0);
        for (int p : piv) is_piv[p] = 1;
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);

        Mat m(q, k, n);
        for (int r = 0; r < k; ++r) m.set(r, piv[r], 1);
        std::vector<Felt> v(free_pos.size(), 0);
        while (true) {
            out.push_back(m);
            size_t i = 0;
            while (i < v.size() && v[i] == q - 1) {
                v[i] = 0;
                m.set(free_pos[i].first, free_pos[i].second, 0);
                ++i;
            }
            if (i == v.size()) break;
            ++v[i];
            m.set(free_pos[i].first, free_pos[i].second, v[i]);
        }

        int j = k - 1;
        while (j >= 0 && piv[j] == n - k + j) --j;
        if (j < 0) break;
        ++piv[j];
        for (int t = j + 1; t < k; ++t) piv[t] = piv[t - 1] + 1;
    }
    return out;
}

// Neighbours of a subspace under generators of the semilinear isometry group:
// adjacent column swaps, scaling of column 0 by a generator of F_q^*, and the
// Frobenius map for q = 4. Results come back in RREF.
std::vector<Mat> neighbours(const Mat& m) {
    const int q = m.q(), n = m.cols(), k = m.rows();
    const Field& f = field(q);
    std::vector<Mat> out;
    for (int c = 0; c + 1 < n; ++c) {
        Mat t = m;
        t.swap_cols(c, c + 1);
        rref(t);
        out.push_back(std::move(t));
    }
    if (q > 2) {
        Mat t = m;
        for (int r = 0; r < k; ++r) t.set(r, 0, f.mul(t.get(r, 0), 2));
        rref(t);
        out.push_back(std::move(t));
    }
    if (q == 4) {
        Mat t = m;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) t.set(r, c, f.frob(t.get(r, c)));
        rref(t);
        out.push_back(std::move(t));
    }
    return out;
}

const std::vector<Mat>& class_reps(int q, int n, int k) {
    static std::map<std::array<int, 3>, std::vector<Mat>> cache;
    const std::array<int, 3> key{q, n, k};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    std::vector<Mat> all = all_rref(q, n, k);
    std::unordered_map<std::string, int> index;
    index.reserve(all.size() * 2);
    for (size_t i = 0; i < all.size(); ++i) index.emplace(all[i].serialize(), (int)i);

    std::vector<char> seen(all.size(), 0);
    std::vector<Mat> reps;
    for (size_t i = 0; i < all.size(); ++i) {
        if (seen[i]) continue;
        reps.push_back(all[i]);
        std::deque<int> queue{(int)i};
        seen[i] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (const Mat& nb : neighbours(all[cur])) {
                int j = index.at(nb.serialize());
                if (!seen[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
    }
    return cache.emplace(key, std::move(reps)).first->second;
}

}  // namespace

BruteClasses brute_classes(int q, int n, int k, const CodeFilter& filter) {
    const bool ok = (q == 2 && n <= 8) || (q == 3 && n <= 6 && k <= 3) ||
                    (q == 4 && n <= 5 && k <= 2);
    if (!ok || k < 1 || k > n)
        throw std::invalid_argument("brute_classes: parameters outside the feasible range");
    if (q == 4 && filter.self_orth == OrthForm::euclidean)
        throw std::invalid_argument(
            "brute_classes: euclidean self-orthogonality is not class-invariant over F4");

    BruteClasses res;
    for (const Mat& g : class_reps(q, n, k)) {
        if (!satisfies(g, filter)) continue;
        res.count++;
        res.reps.push_back(g);
    }
    return res;
}

}  // namespace linclass

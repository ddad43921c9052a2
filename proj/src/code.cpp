#include "linclass/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "linclass/pg.hpp"

namespace linclass {

namespace {

bool is_systematic(const Mat& g) {
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.rows(); ++c)
            if (g.get(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

// rank of the submatrix formed by the given columns
int cols_rank(const Mat& g, const std::vector<int>& cols) {
    Mat sub(g.q(), g.rows(), (int)cols.size());
    for (int r = 0; r < g.rows(); ++r)
        for (size_t j = 0; j < cols.size(); ++j) sub.set(r, (int)j, g.get(r, cols[j]));
    return rref(sub);
}

// first `rank` rows of the reduced form: a basis of the row space
Mat row_basis(const Mat& g) {
    Mat b = g;
    int rk = rref(b);
    if (rk == b.rows()) return b;
    Mat out(b.q(), rk, b.cols());
    for (int r = 0; r < rk; ++r)
        for (int c = 0; c < b.cols(); ++c) out.set(r, c, b.get(r, c));
    return out;
}

}  // namespace

int ColumnMultiset::min_mult() const {
    int m = 0;
    for (const auto& [id, c] : mult)
        if (m == 0 || c < m) m = c;
    return m;
}

SystematizeResult systematize(const Mat& g) {
    const Field& f = field(g.q());
    SystematizeResult out;
    out.sys = g;
    out.perm.resize((size_t)g.cols());
    for (int j = 0; j < g.cols(); ++j) out.perm[j] = j;
    Mat& m = out.sys;
    for (int i = 0; i < m.rows(); ++i) {
        int pc = -1, pr = -1;
        for (int c = i; c < m.cols() && pc < 0; ++c)
            for (int r = i; r < m.rows(); ++r)
                if (m.get(r, c)) {
                    pc = c;
                    pr = r;
                    break;
                }
        if (pc < 0) throw std::invalid_argument("systematize: matrix is not full rank");
        m.swap_rows(i, pr);
        if (pc != i) {
            m.swap_cols(i, pc);
            std::swap(out.perm[i], out.perm[pc]);
        }
        m.row_scale(i, f.inv(m.get(i, i)));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == i) continue;
            Felt v = m.get(r, i);
            if (v) m.row_add_scaled(r, i, f.neg(v));
        }
    }
    return out;
}

LinearCode make_code(const Mat& g) {
    LinearCode c;
    c.q = g.q();
    c.n = g.cols();
    c.k = g.rows();
    c.gen = systematize(g).sys;
    return c;
}

Mat dual_gen(const Mat& sys) {
    if (!is_systematic(sys)) throw std::invalid_argument("dual_gen needs (I_k | A) input");
    const Field& f = field(sys.q());
    int k = sys.rows(), n = sys.cols();
    Mat d(sys.q(), n - k, n);
    for (int r = 0; r < n - k; ++r) {
        for (int c = 0; c < k; ++c) d.set(r, c, f.neg(sys.get(c, k + r)));
        d.set(r, k + r, 1);
    }
    return d;
}

Mat null_basis(const Mat& g) {
    const Field& f = field(g.q());
    const int k = g.rows(), n = g.cols();
    Mat r = g;
    std::vector<int> pivots;
    if (rref(r, &pivots) != k) throw std::invalid_argument("null_basis: rank-deficient input");
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    Mat d(g.q(), n - k, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        d.set(row, c, 1);
        for (int i = 0; i < k; ++i) d.set(row, pivots[i], f.neg(r.get(i, c)));
        ++row;
    }
    return d;
}

ColumnMultiset column_multiset(const Mat& g) {
    const Field& f = field(g.q());
    ColumnMultiset out;
    for (int c = 0; c < g.cols(); ++c) {
        std::vector<Felt> v = g.col_vec(c);
        if (vec_weight(v) == 0) {
            out.zero_cols++;
            continue;
        }
        out.mult[encode_vec(normalize_vec(f, v), g.q())]++;
    }
    return out;
}

std::vector<long long> codeword_weights(const Mat& g) {
    const int n = g.cols(), q = g.q();
    const Field& f = field(q);
    Mat b = g;
    int rk = rref(b);
    if (rk < b.rows()) {
        Mat t(q, rk, n);
        for (int r = 0; r < rk; ++r)
            for (int c = 0; c < n; ++c) t.set(r, c, b.get(r, c));
        b = t;
    }
    ColumnMultiset cm = column_multiset(b);
    std::vector<std::pair<std::vector<Felt>, int>> supp;
    supp.reserve(cm.mult.size());
    for (const auto& [id, m] : cm.mult) supp.push_back({decode_vec(id, q, rk), m});
    int n_eff = n - cm.zero_cols;

    std::vector<long long> A((size_t)n + 1, 0);
    A[0] = 1;
    // odometer over normalized x in F_q^rk
    std::vector<Felt> x((size_t)rk, 0);
    while (true) {
        int i = 0;
        while (i < rk && x[i] == q - 1) x[i++] = 0;
        if (i == rk) break;
        x[i]++;
        int first = 0;
        while (x[first] == 0) ++first;
        if (x[first] != 1) continue;
        int hit = 0;
        for (const auto& [p, m] : supp)
            if (dot(f, x, p) == 0) hit += m;
        A[(size_t)(n_eff - hit)] += q - 1;
    }
    return A;
}

int min_distance(const Mat& g) {
    std::vector<long long> A = codeword_weights(g);
    for (size_t w = 1; w < A.size(); ++w)
        if (A[w]) return (int)w;
    return 0;  // zero-dimensional row space
}

bool dual_distance_at_least(const Mat& g, int t) {
    if (t <= 1) return true;
    const int n = g.cols();
    ColumnMultiset cm = column_multiset(g);
    if (cm.zero_cols > 0) return false;  // dependent singleton
    if (t == 2) return true;
    for (const auto& [id, m] : cm.mult)
        if (m > 1) return false;  // dependent pair
    if (t == 3) return true;
    // look for dependent subsets of sizes 3 .. t-1 among distinct points
    for (int s = 3; s < t; ++s) {
        std::vector<int> comb(s);
        for (int i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            if (cols_rank(g, comb) < s) return false;
            int i = s - 1;
            while (i >= 0 && comb[i] == n - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return true;
}

int dual_distance(const Mat& g) {
    const int n = g.cols(), k = g.rows(), q = g.q();
    if (k == n) return n + 1;  // dual code is trivial
    double sz = 1;
    for (int i = 0; i < n - k; ++i) sz *= q;
    if (sz <= (double)(1 << 20)) return min_distance(dual_gen(systematize(g).sys));
    for (int t = 2; t <= 6; ++t)
        if (!dual_distance_at_least(g, t)) return t - 1;
    throw std::runtime_error("dual distance beyond supported search depth");
}

bool is_divisible(const Mat& g, int delta) {
    if (delta <= 0) throw std::invalid_argument("divisor must be positive");
    if (delta == 1) return true;
    std::vector<long long> A = codeword_weights(g);
    for (size_t w = 1; w < A.size(); ++w)
        if (A[w] && w % delta) return false;
    return true;
}

bool is_self_orthogonal(const Mat& g, OrthForm form) {
    const Field& f = field(g.q());
    if (form == OrthForm::hermitian && g.q() != 4)
        throw std::invalid_argument("hermitian form needs q = 4");
    for (int r = 0; r < g.rows(); ++r)
        for (int s = r; s < g.rows(); ++s) {
            Felt acc = 0;
            for (int c = 0; c < g.cols(); ++c) {
                Felt b = g.get(s, c);
                if (form == OrthForm::hermitian) b = f.conj(b);
                acc = f.add(acc, f.mul(g.get(r, c), b));
            }
            if (acc) return false;
        }
    return true;
}

long long minimal_codeword_count(const Mat& g) {
    const int n = g.cols(), q = g.q();
    const Field& f = field(q);
    if (n > 64) throw std::invalid_argument("minimal codeword count supports n <= 64");
    Mat b = row_basis(g);
    int rk = b.rows();
    double classes = 1;
    for (int i = 0; i < rk; ++i) classes *= q;
    if (classes > (double)(1 << 17))
        throw std::invalid_argument("minimal codeword count: dimension too large");

    std::vector<std::vector<Felt>> cols((size_t)n);
    for (int c = 0; c < n; ++c) cols[c] = b.col_vec(c);
    std::vector<uint64_t> masks;
    std::vector<Felt> x((size_t)rk, 0);
    while (true) {
        int i = 0;
        while (i < rk && x[i] == q - 1) x[i++] = 0;
        if (i == rk) break;
        x[i]++;
        int first = 0;
        while (x[first] == 0) ++first;
        if (x[first] != 1) continue;
        uint64_t m = 0;
        for (int c = 0; c < n; ++c)
            if (dot(f, x, cols[c])) m |= 1ull << c;
        masks.push_back(m);
    }
    long long minimal = 0;
    for (size_t a = 0; a < masks.size(); ++a) {
        bool ok = true;
        for (size_t bv = 0; bv < masks.size() && ok; ++bv)
            if (bv != a && masks[bv] != masks[a] && (masks[bv] & ~masks[a]) == 0)
                ok = false;
        minimal += ok;
    }
    return minimal * (q - 1);
}

bool satisfies(const Mat& g, const CodeFilter& f) {
    if (f.min_dist > 1 && min_distance(g) < f.min_dist) return false;
    if (!dual_distance_at_least(g, f.min_dual_dist)) return false;
    if (f.divisor > 1 && !is_divisible(g, f.divisor)) return false;
    if (f.self_orth && !is_self_orthogonal(g, *f.self_orth)) return false;
    return true;
}

}  // namespace linclass

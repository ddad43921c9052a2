#include "linclass/mat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace linclass {

namespace {
constexpr uint64_t kLoLanes = 0x5555555555555555ull;  // bit0 of every 2-bit lane
}

Mat::Mat(int q, int rows, int cols) : q_(q), rows_(rows), cols_(cols) {
    field(q);  // validate q
    if (rows < 0 || cols < 0 || cols > 512) throw std::invalid_argument("bad matrix shape");
    bpe_ = (q == 2) ? 1 : 2;
    mask_ = (Felt)((1u << bpe_) - 1);
    wpr_ = (cols * bpe_ + 63) / 64;
    w_.assign((size_t)rows * wpr_, 0);
}

void Mat::row_add_scaled(int dst, int src, Felt lam) {
    if (!lam) return;
    if (dst == src) {
        // dst = (1+lam)*dst
        row_scale(dst, field(q_).add(1, lam));
        return;
    }
    span_add_scaled(q_, row_ptr(dst), row_ptr(src), lam, cols_);
}

void Mat::row_scale(int r, Felt lam) {
    if (lam == 1) return;
    if (q_ == 4) {
        row_scale4(row_ptr(r), wpr_, lam);
        return;
    }
    const Field& f = field(q_);
    if (lam == 0) {
        std::fill(row_ptr(r), row_ptr(r) + wpr_, 0);
        return;
    }
    for (int c = 0; c < cols_; ++c) set(r, c, f.mul(get(r, c), lam));
}

void Mat::swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
}

void Mat::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) {
        Felt x = get(r, a), y = get(r, b);
        set(r, a, y);
        set(r, b, x);
    }
}

std::vector<Felt> Mat::row_vec(int r) const {
    std::vector<Felt> v((size_t)cols_);
    for (int c = 0; c < cols_; ++c) v[c] = get(r, c);
    return v;
}

std::vector<Felt> Mat::col_vec(int c) const {
    std::vector<Felt> v((size_t)rows_);
    for (int r = 0; r < rows_; ++r) v[r] = get(r, c);
    return v;
}

void Mat::set_row(int r, const std::vector<Felt>& v) {
    for (int c = 0; c < cols_; ++c) set(r, c, v[c]);
}

void Mat::set_col(int c, const std::vector<Felt>& v) {
    for (int r = 0; r < rows_; ++r) set(r, c, v[r]);
}

bool Mat::operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            Felt a = get(r, c), b = o.get(r, c);
            if (a != b) return a < b;
        }
    return false;
}

std::string Mat::serialize() const {
    std::string s;
    s.reserve((size_t)rows_ * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) s.push_back((char)('0' + get(r, c)));
        if (r + 1 < rows_) s.push_back('\n');
    }
    return s;
}

int row_weight(const uint64_t* w, int nwords, int bpe) {
    int t = 0;
    if (bpe == 1) {
        for (int i = 0; i < nwords; ++i) t += std::popcount(w[i]);
    } else {
        for (int i = 0; i < nwords; ++i)
            t += std::popcount((w[i] | (w[i] >> 1)) & kLoLanes);
    }
    return t;
}

void row_xor(uint64_t* dst, const uint64_t* src, int nwords) {
    for (int i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

void row_scale4(uint64_t* w, int nwords, Felt lam) {
    // lanes (hi,lo): value lo + hi*w.  *w: (hi,lo) -> (hi^lo, hi);
    // *(w+1): (hi,lo) -> (lo, hi^lo)
    if (lam == 1) return;
    for (int i = 0; i < nwords; ++i) {
        uint64_t lo = w[i] & kLoLanes, hi = (w[i] >> 1) & kLoLanes;
        uint64_t nlo, nhi;
        if (lam == 0) {
            nlo = nhi = 0;
        } else if (lam == 2) {
            nhi = hi ^ lo;
            nlo = hi;
        } else {  // lam == 3
            nhi = lo;
            nlo = hi ^ lo;
        }
        w[i] = nlo | (nhi << 1);
    }
}

void span_add_scaled(int q, uint64_t* acc, const uint64_t* src, Felt lam, int cols) {
    if (!lam) return;
    int nwords = ((q == 2 ? 1 : 2) * cols + 63) / 64;
    if (q == 2) {
        row_xor(acc, src, nwords);
        return;
    }
    if (q == 4) {
        if (lam == 1) {
            row_xor(acc, src, nwords);
        } else {
            for (int i = 0; i < nwords; ++i) {
                uint64_t s[1] = {src[i]};
                row_scale4(s, 1, lam);
                acc[i] ^= s[0];
            }
        }
        return;
    }
    // q == 3: per-entry with tables
    const Field& f = field(3);
    for (int c = 0; c < cols; ++c) {
        int bit = c * 2;
        Felt a = (Felt)((acc[bit >> 6] >> (bit & 63)) & 3);
        Felt b = (Felt)((src[bit >> 6] >> (bit & 63)) & 3);
        if (!b) continue;
        Felt s = f.add(a, f.mul(b, lam));
        acc[bit >> 6] =
            (acc[bit >> 6] & ~(3ull << (bit & 63))) | ((uint64_t)s << (bit & 63));
    }
}

int rref(Mat& m, std::vector<int>* pivots) {
    const Field& f = field(m.q());
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        m.swap_rows(r, pr);
        m.row_scale(r, f.inv(m.get(r, c)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Felt v = m.get(i, c);
            if (v) m.row_add_scaled(i, r, f.neg(v));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

int rank(Mat m) { return rref(m); }

Mat append_col(const Mat& m, const std::vector<Felt>& col) {
    Mat out(m.q(), m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out.set(r, c, m.get(r, c));
        out.set(r, m.cols(), col[r]);
    }
    return out;
}

Mat append_row(const Mat& m, const std::vector<Felt>& row) {
    Mat out(m.q(), m.rows() + 1, m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.set(r, c, m.get(r, c));
    out.set_row(m.rows(), row);
    return out;
}

Mat delete_cols(const Mat& m, const std::vector<int>& sorted_cols) {
    Mat out(m.q(), m.rows(), m.cols() - (int)sorted_cols.size());
    for (int r = 0; r < m.rows(); ++r) {
        int oc = 0;
        size_t s = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (s < sorted_cols.size() && sorted_cols[s] == c) {
                ++s;
                continue;
            }
            out.set(r, oc++, m.get(r, c));
        }
    }
    return out;
}

Mat delete_row(const Mat& m, int dr) {
    Mat out(m.q(), m.rows() - 1, m.cols());
    int orow = 0;
    for (int r = 0; r < m.rows(); ++r) {
        if (r == dr) continue;
        for (int c = 0; c < m.cols(); ++c) out.set(orow, c, m.get(r, c));
        ++orow;
    }
    return out;
}

Felt dot(const Field& f, const std::vector<Felt>& a, const std::vector<Felt>& b) {
    Felt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

int vec_weight(const std::vector<Felt>& v) {
    int t = 0;
    for (Felt x : v) t += (x != 0);
    return t;
}

std::vector<Felt> normalize_vec(const Field& f, std::vector<Felt> v) {
    for (Felt x : v)
        if (x) {
            if (x != 1) {
                Felt lam = f.inv(x);
                for (Felt& y : v) y = f.mul(y, lam);
            }
            break;
        }
    return v;
}

}  // namespace linclass

#ifndef LINCLASS_MAT_HPP
#define LINCLASS_MAT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "linclass/gf.hpp"

namespace linclass {

// Generator-matrix storage: row-major, each row packed into 64-bit limbs.
// One bit per entry for q=2, two bits for q=3 and q=4. Unused high bits of
// the last limb of a row are kept zero so whole-word operations stay exact.
class Mat {
  public:
    Mat() : q_(2), rows_(0), cols_(0), bpe_(1), wpr_(0) {}
    Mat(int q, int rows, int cols);

    int q() const { return q_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Felt get(int r, int c) const {
        const uint64_t* w = row_ptr(r);
        int bit = c * bpe_;
        return (Felt)((w[bit >> 6] >> (bit & 63)) & mask_);
    }
    void set(int r, int c, Felt v) {
        uint64_t* w = row_ptr(r);
        int bit = c * bpe_;
        w[bit >> 6] = (w[bit >> 6] & ~((uint64_t)mask_ << (bit & 63))) |
                      ((uint64_t)v << (bit & 63));
    }

    uint64_t* row_ptr(int r) { return w_.data() + (size_t)r * wpr_; }
    const uint64_t* row_ptr(int r) const { return w_.data() + (size_t)r * wpr_; }
    int words_per_row() const { return wpr_; }

    // dst += lam * src (rows of this matrix)
    void row_add_scaled(int dst, int src, Felt lam);
    void row_scale(int r, Felt lam);
    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

    std::vector<Felt> row_vec(int r) const;
    std::vector<Felt> col_vec(int c) const;
    void set_row(int r, const std::vector<Felt>& v);
    void set_col(int c, const std::vector<Felt>& v);

    bool operator==(const Mat& o) const {
        return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    // row-major entry order, labels 0<1<2<3
    bool operator<(const Mat& o) const;

    std::string serialize() const;  // rows of label chars joined by '\n'

  private:
    int q_, rows_, cols_, bpe_, wpr_;
    Felt mask_ = 1;
    std::vector<uint64_t> w_;
};

// ---- packed-span helpers (spans are rows of some Mat with matching q/cols) ----

int row_weight(const uint64_t* w, int nwords, int bpe);
// dst ^= src; valid addition for q=2 and q=4
void row_xor(uint64_t* dst, const uint64_t* src, int nwords);
// multiply every entry of a packed q=4 row by lam (bit-sliced)
void row_scale4(uint64_t* w, int nwords, Felt lam);
// acc += lam * src over cols entries (any q; lam may be 0)
void span_add_scaled(int q, uint64_t* acc, const uint64_t* src, Felt lam, int cols);

// ---- elementary transforms ----

// In-place reduced row echelon form, left-to-right pivots; returns rank.
// Rows beyond the rank come out zero. pivots, when non-null, receives the
// pivot column of each of the first rank rows.
int rref(Mat& m, std::vector<int>* pivots = nullptr);

int rank(Mat m);

// append / delete helpers (return new matrices)
Mat append_col(const Mat& m, const std::vector<Felt>& col);
Mat append_row(const Mat& m, const std::vector<Felt>& row);
Mat delete_cols(const Mat& m, const std::vector<int>& sorted_cols);
Mat delete_row(const Mat& m, int r);

// ---- label vector helpers ----

Felt dot(const Field& f, const std::vector<Felt>& a, const std::vector<Felt>& b);
int vec_weight(const std::vector<Felt>& v);
// scale so the first nonzero entry becomes 1; zero vector unchanged
std::vector<Felt> normalize_vec(const Field& f, std::vector<Felt> v);

// Enumerate one representative per projective codeword class of the row
// space of G (normalized coefficient vectors x, first nonzero entry 1).
// fn(x, packed_codeword_words, weight) is called (q^k-1)/(q-1) times in a
// fixed order. k = G.rows() must stay small (all q^k vectors are visited).
template <class F>
void for_each_projective_class(const Mat& G, F&& fn) {
    const int k = G.rows(), q = G.q(), nw = G.words_per_row();
    const int bpe = (q == 2) ? 1 : 2;
    std::vector<Felt> x(k, 0);
    std::vector<uint64_t> acc((size_t)std::max(nw, 1));
    while (true) {
        int i = 0;
        while (i < k && x[i] == q - 1) x[i++] = 0;
        if (i == k) break;
        x[i]++;
        int first = 0;
        while (x[first] == 0) ++first;
        if (x[first] != 1) continue;  // one representative per scalar class
        std::fill(acc.begin(), acc.end(), 0);
        for (int r = 0; r < k; ++r)
            if (x[r]) span_add_scaled(q, acc.data(), G.row_ptr(r), x[r], G.cols());
        fn((const std::vector<Felt>&)x, (const uint64_t*)acc.data(),
           row_weight(acc.data(), nw, bpe));
    }
}

}  // namespace linclass

#endif

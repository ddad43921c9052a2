#include "linclass/isometry.hpp"

#include <algorithm>
#include <numeric>

namespace linclass {

Isometry identity_isometry(int q, int n) {
    Isometry a;
    a.n = n;
    a.q = q;
    a.dest.resize((size_t)n);
    std::iota(a.dest.begin(), a.dest.end(), 0);
    a.mult.assign((size_t)n, 1);
    return a;
}

Isometry compose(const Isometry& a, const Isometry& b) {
    const Field& f = field(a.q);
    Isometry c;
    c.n = a.n;
    c.q = a.q;
    c.alpha = (a.alpha + b.alpha) % f.aut_order;
    c.dest.resize((size_t)c.n);
    c.mult.resize((size_t)c.n);
    for (int i = 0; i < c.n; ++i) {
        c.dest[i] = a.dest[b.dest[i]];
        // the inner automorphism is an involution, so its inverse is itself
        c.mult[i] = f.mul(b.mult[i], f.aut(a.mult[b.dest[i]], b.alpha));
    }
    return c;
}

Isometry inverse(const Isometry& a) {
    const Field& f = field(a.q);
    Isometry b;
    b.n = a.n;
    b.q = a.q;
    b.alpha = a.alpha;
    b.dest.resize((size_t)a.n);
    b.mult.resize((size_t)a.n);
    for (int i = 0; i < a.n; ++i) {
        b.dest[a.dest[i]] = i;
        b.mult[a.dest[i]] = f.aut(f.inv(a.mult[i]), a.alpha);
    }
    return b;
}

bool is_identity(const Isometry& a) {
    if (a.alpha) return false;
    for (int i = 0; i < a.n; ++i)
        if (a.dest[i] != i || a.mult[i] != 1) return false;
    return true;
}

std::vector<Felt> apply_vec(const Isometry& iso, const std::vector<Felt>& v) {
    const Field& f = field(iso.q);
    std::vector<Felt> out((size_t)iso.n, 0);
    for (int i = 0; i < iso.n; ++i)
        out[iso.dest[i]] = f.aut(f.mul(v[i], iso.mult[i]), iso.alpha);
    return out;
}

Mat apply(const Isometry& iso, const Mat& m) {
    Mat out(m.q(), m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) out.set_row(r, apply_vec(iso, m.row_vec(r)));
    return out;
}

std::string iso_key(const Isometry& a) {
    std::string s;
    s.reserve((size_t)a.n * 3 + 1);
    s.push_back((char)('0' + a.alpha));
    for (int i = 0; i < a.n; ++i) {
        s.push_back((char)a.dest[i]);
        s.push_back((char)('0' + a.mult[i]));
    }
    return s;
}

Isometry random_isometry(std::mt19937& rng, int q, int n) {
    const Field& f = field(q);
    Isometry a = identity_isometry(q, n);
    std::shuffle(a.dest.begin(), a.dest.end(), rng);
    std::uniform_int_distribution<int> scal(1, q - 1);
    for (int i = 0; i < n; ++i) a.mult[i] = (Felt)scal(rng);
    if (f.aut_order > 1) a.alpha = (int)(rng() % (unsigned)f.aut_order);
    return a;
}

}  // namespace linclass

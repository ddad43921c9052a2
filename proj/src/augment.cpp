#include "linclass/augment.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "linclass/pg.hpp"

namespace linclass {

namespace {

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat out(a.q(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < a.cols(); ++t)
            span_add_scaled(a.q(), out.row_ptr(i), b.row_ptr(t), a.get(i, t), b.cols());
    return out;
}

}  // namespace

std::vector<InducedMap> induced_matrix_action(const std::vector<Isometry>& gens,
                                              const Mat& g) {
    const Field& f = field(g.q());
    const int k = g.rows(), n = g.cols();

    // T with T * g reduced: row-reduce (g | I) and keep both blocks
    Mat aug(g.q(), k, n + k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < n; ++c) aug.set(r, c, g.get(r, c));
        aug.set(r, n + r, 1);
    }
    std::vector<int> piv;
    rref(aug, &piv);
    if ((int)piv.size() < k || piv[k - 1] >= n)
        throw std::invalid_argument("induced_matrix_action: rank-deficient matrix");
    Mat tr(g.q(), k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) tr.set(r, c, aug.get(r, n + c));

    std::vector<InducedMap> out;
    for (const Isometry& phi : gens) {
        if (phi.n != n || phi.q != g.q())
            throw std::invalid_argument("induced_matrix_action: generator shape mismatch");
        Mat b = apply(phi, g);
        // rows of b against the reduced form: coefficients sit at the pivots
        Mat coef(g.q(), k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) coef.set(i, j, b.get(i, piv[j]));
        Mat a = mat_mul(coef, tr);
        if (mat_mul(a, g) != b)
            throw std::invalid_argument("induced_matrix_action: generator does not fix the code");
        out.push_back(InducedMap{std::move(a), phi.alpha % f.aut_order});
    }
    return out;
}

std::vector<VectorOrbitRep> vector_orbit_reps(const std::vector<Isometry>& gens,
                                              const Mat& g, Side side) {
    const int q = g.q();
    const Field& f = field(q);

    std::vector<InducedMap> maps;
    int dim;
    if (side == Side::column) {
        dim = g.rows();
        maps = induced_matrix_action(gens, g);
    } else {
        dim = g.cols() - g.rows();
        if (dim == 0) return {};
        std::vector<Isometry> dual_gens;
        for (Isometry phi : gens) {
            for (Felt& m : phi.mult) m = f.inv(m);
            dual_gens.push_back(std::move(phi));
        }
        maps = induced_matrix_action(dual_gens, null_basis(g));
    }

    long long space = 1;
    for (int i = 0; i < dim; ++i) {
        space *= q;
        if (space > (1ll << 22))
            throw std::invalid_argument("vector_orbit_reps: vector space too large");
    }

    std::vector<char> seen((size_t)space, 0);
    std::vector<VectorOrbitRep> out;
    std::vector<Felt> y(dim);
    for (long long v = 1; v < space; ++v) {
        if (seen[v]) continue;
        long long size = 0;
        std::deque<long long> queue{v};
        seen[v] = 1;
        while (!queue.empty()) {
            const std::vector<Felt> x = decode_vec((uint64_t)queue.front(), q, dim);
            queue.pop_front();
            ++size;
            for (const InducedMap& m : maps) {
                for (int i = 0; i < dim; ++i) {
                    Felt acc = 0;
                    for (int j = 0; j < dim; ++j) acc = f.add(acc, f.mul(m.a.get(i, j), x[j]));
                    y[i] = f.aut(acc, f.aut_order - m.alpha);  // inverse automorphism
                }
                const long long id = (long long)encode_vec(y, q);
                if (!seen[id]) {
                    seen[id] = 1;
                    queue.push_back(id);
                }
            }
        }
        out.push_back(VectorOrbitRep{decode_vec((uint64_t)v, q, dim), size});
    }
    return out;
}

bool parent_test(const Mat& child, int added_coord) {
    if (added_coord < 0 || added_coord >= child.cols())
        throw std::invalid_argument("parent_test: coordinate out of range");
    CanonicalResult r = canonical_form(child);
    if (!r.special_defined()) return false;
    const std::vector<int>& orb = r.special_orbit();
    return std::find(orb.begin(), orb.end(), added_coord) != orb.end();
}

namespace {

// a level entry: the class representative and its automorphisms
struct Node {
    Mat canon;
    std::vector<Isometry> gens;
};

Node make_node(const CanonicalResult& r) {
    Node n;
    n.canon = r.canon;
    const Isometry ti = inverse(r.transport);
    for (const Isometry& g : r.aut_gens)
        n.gens.push_back(compose(r.transport, compose(g, ti)));
    return n;
}

void validate(const AugTask& t) {
    field(t.q);
    if (t.k < 1 || t.k > t.n)
        throw std::invalid_argument("classify: need 1 <= k <= n");
    if (t.d < 1 || t.dual_d < 1 || t.divisor < 1)
        throw std::invalid_argument("classify: bounds must be positive");
    if (t.self_orth == OrthForm::hermitian && t.q != 4)
        throw std::invalid_argument("classify: hermitian form needs q = 4");
}

bool infeasible(const AugTask& t) {
    return t.d > t.n - t.k + 1 || t.dual_d > t.k + 1;
}

// scaling a column must not disturb the Gram matrix, otherwise the rank bound
// is not a class invariant and may not be used as a filter
bool gram_filter_valid(int q, OrthForm form) {
    return form == OrthForm::hermitian ? q == 4 : q <= 3;
}

int gram_rank(const Mat& g, OrthForm form) {
    const Field& f = field(g.q());
    const int k = g.rows();
    Mat gr(g.q(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Felt acc = 0;
            for (int c = 0; c < g.cols(); ++c) {
                Felt b = g.get(j, c);
                if (form == OrthForm::hermitian) b = f.conj(b);
                acc = f.add(acc, f.mul(g.get(i, c), b));
            }
            gr.set(i, j, acc);
        }
    return rank(gr);
}

// can every codeword weight still reach a multiple of delta within r more
// coordinate additions of at most one each
bool divisible_reachable(const Mat& g, int r, int delta) {
    const std::vector<long long> a = codeword_weights(g);
    for (size_t w = 1; w < a.size(); ++w)
        if (a[w] && (long long)((w + delta - 1) / delta) * delta > (long long)w + r)
            return false;
    return true;
}

// coefficient vectors of codewords with weight exactly d_next-1; when any
// class sits below that, no child of this node can reach the bound
struct TightClasses {
    std::vector<std::vector<Felt>> at;
    bool dead = false;
};

TightClasses tight_classes(const Mat& g, int d_next) {
    TightClasses t;
    if (d_next < 2) return t;
    for_each_projective_class(g, [&](const std::vector<Felt>& x, const uint64_t*, int w) {
        if (w == d_next - 1) t.at.push_back(x);
        if (w < d_next - 1) t.dead = true;
    });
    return t;
}

std::vector<Mat> snapshot(const std::vector<Node>& level) {
    std::vector<Mat> out;
    out.reserve(level.size());
    for (const Node& n : level) out.push_back(n.canon);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Mat> classify_col(const AugTask& task, const std::vector<Mat>* seeds,
                              const LevelFn& level_fn) {
    validate(task);
    if (infeasible(task)) return {};
    const Field& f = field(task.q);

    std::vector<Node> level;
    if (seeds) {
        for (const Mat& s : *seeds) {
            if (s.q() != task.q || s.rows() != task.k || s.cols() > task.n ||
                s.cols() != (*seeds)[0].cols())
                throw std::invalid_argument("classify_col: seed shape mismatch");
            level.push_back(make_node(canonical_form(s)));
        }
    } else {
        Mat tk(task.q, task.k, task.k);
        for (int i = 0; i < task.k; ++i) tk.set(i, i, 1);
        level.push_back(make_node(canonical_form(tk)));
    }

    while (!level.empty() && level[0].canon.cols() < task.n) {
        const int m = level[0].canon.cols();
        const int d_next = std::max(1, task.d - (task.n - (m + 1)));
        const int rem = task.n - (m + 1);
        std::vector<Node> next;
        for (const Node& node : level) {
            const TightClasses tight = tight_classes(node.canon, d_next);
            if (tight.dead) continue;
            for (const VectorOrbitRep& r :
                 vector_orbit_reps(node.gens, node.canon, Side::column)) {
                bool ok = true;
                for (const std::vector<Felt>& x : tight.at)
                    if (dot(f, x, r.rep) == 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                Mat child = append_col(node.canon, r.rep);
                if (!dual_distance_at_least(child, task.dual_d)) continue;
                if (task.divisor > 1 && !divisible_reachable(child, rem, task.divisor))
                    continue;
                if (task.self_orth && gram_filter_valid(task.q, *task.self_orth) &&
                    gram_rank(child, *task.self_orth) > rem)
                    continue;
                CanonicalResult res = canonical_form(child);
                if (!res.special_defined()) continue;
                const std::vector<int>& orb = res.special_orbit();
                if (std::find(orb.begin(), orb.end(), m) == orb.end()) continue;
                next.push_back(make_node(res));
            }
        }
        level = std::move(next);
        if (level_fn && !level.empty() && level[0].canon.cols() < task.n)
            level_fn(level[0].canon.cols(), snapshot(level));
    }

    std::vector<Mat> out;
    const CodeFilter fl = task.filter();
    for (const Node& node : level)
        if (satisfies(node.canon, fl)) out.push_back(node.canon);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat> classify_row(const AugTask& task, const std::vector<Mat>* seeds,
                              const LevelFn& level_fn) {
    validate(task);
    if (task.d < 2)
        throw std::invalid_argument("classify_row: needs d >= 2");
    if (infeasible(task)) return {};
    const Field& f = field(task.q);
    const int rdim = task.n - task.k;  // redundancy, fixed along the run
    // the final level must have no zero columns, exactly like classify_col
    const int eff_dd = std::max(task.dual_d, 2);

    std::vector<Node> level;
    if (seeds) {
        for (const Mat& s : *seeds) {
            const int back = task.n - s.cols();
            if (s.q() != task.q || back < 0 || s.rows() < 1 ||
                s.rows() != task.k - back || s.cols() != (*seeds)[0].cols())
                throw std::invalid_argument("classify_row: seed shape mismatch");
            level.push_back(make_node(canonical_form(s)));
        }
    } else {
        // the root is the zero code of length rdim: no rows yet, and every
        // monomial map together with the field automorphism fixes it
        Node root;
        root.canon = Mat(task.q, 0, rdim);
        for (int i = 0; i + 1 < rdim; ++i) {
            Isometry t = identity_isometry(task.q, rdim);
            std::swap(t.dest[i], t.dest[i + 1]);
            root.gens.push_back(std::move(t));
        }
        if (task.q > 2) {
            Isometry t = identity_isometry(task.q, rdim);
            t.mult[0] = 2;
            root.gens.push_back(std::move(t));
        }
        if (f.aut_order > 1) {
            Isometry t = identity_isometry(task.q, rdim);
            t.alpha = 1;
            root.gens.push_back(std::move(t));
        }
        level.push_back(std::move(root));
    }

    while (!level.empty() && level[0].canon.cols() < task.n) {
        const int m = level[0].canon.cols();
        const int dd_next = std::max(1, eff_dd - (task.n - (m + 1)));
        std::vector<Node> next;
        for (const Node& node : level) {
            const int s = node.canon.rows();
            const Mat dual = null_basis(node.canon);  // rdim x m

            const TightClasses tight = tight_classes(dual, dd_next);
            if (tight.dead) continue;

            // row-reduce (dual | I) once; solving dual * u^T = -b then only
            // takes the stored transform applied to b
            Mat aug(task.q, rdim, m + rdim);
            for (int r = 0; r < rdim; ++r) {
                for (int c = 0; c < m; ++c) aug.set(r, c, dual.get(r, c));
                aug.set(r, m + r, 1);
            }
            std::vector<int> piv;
            rref(aug, &piv);

            for (const VectorOrbitRep& r :
                 vector_orbit_reps(node.gens, node.canon, Side::row)) {
                bool ok = true;
                for (const std::vector<Felt>& x : tight.at)
                    if (dot(f, x, r.rep) == 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;

                // every primal codeword using the new row has the shape
                // (u | t) with dual * u^T = -t * rep; scalar factors do not
                // change weights, so the t = 1 coset decides the distance
                std::vector<Felt> u0(m, 0);
                for (int i = 0; i < rdim; ++i) {
                    Felt acc = 0;
                    for (int j = 0; j < rdim; ++j)
                        acc = f.add(acc, f.mul(aug.get(i, m + j), r.rep[j]));
                    u0[piv[i]] = f.neg(acc);
                }
                int best = vec_weight(u0);
                std::vector<Felt> x(s, 0);
                while (best >= task.d - 1) {
                    int i = 0;
                    while (i < s && x[i] == task.q - 1) x[i++] = 0;
                    if (i == s) break;
                    x[i]++;
                    std::vector<Felt> cur = u0;
                    for (int rr = 0; rr < s; ++rr)
                        if (x[rr])
                            for (int c = 0; c < m; ++c)
                                cur[c] = f.add(cur[c], f.mul(x[rr], node.canon.get(rr, c)));
                    best = std::min(best, vec_weight(cur));
                }
                if (best < task.d - 1) continue;

                // primal child: parent rows padded with 0, new row (u0 | 1)
                Mat pchild(task.q, s + 1, m + 1);
                for (int rr = 0; rr < s; ++rr)
                    for (int c = 0; c < m; ++c) pchild.set(rr, c, node.canon.get(rr, c));
                for (int c = 0; c < m; ++c) pchild.set(s, c, u0[c]);
                pchild.set(s, m, 1);

                if (task.divisor > 1 && !is_divisible(pchild, task.divisor)) continue;
                if (task.self_orth && !is_self_orthogonal(pchild, *task.self_orth))
                    continue;

                // the parent choice runs on the primal side: a code and its
                // dual share the coordinate permutations of their
                // automorphisms, and the two excluded coordinate sets swap
                // roles under duality, so the special orbit of the primal
                // child also selects a removable dual coordinate
                CanonicalResult res = canonical_form(pchild);
                if (!res.special_defined()) continue;
                const std::vector<int>& orb = res.special_orbit();
                if (std::find(orb.begin(), orb.end(), m) == orb.end()) continue;
                next.push_back(make_node(res));
            }
        }
        level = std::move(next);
        if (level_fn && !level.empty() && level[0].canon.cols() < task.n)
            level_fn(level[0].canon.cols(), snapshot(level));
    }

    std::vector<Mat> out;
    const CodeFilter fl = task.filter();
    for (const Node& node : level)
        if (satisfies(node.canon, fl)) out.push_back(node.canon);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace linclass

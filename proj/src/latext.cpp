#include "linclass/latext.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "linclass/canon.hpp"
#include "linclass/gf.hpp"
#include "linclass/pg.hpp"
#include "linclass/sieve.hpp"

namespace linclass {

namespace {

std::vector<Felt> first_nonzero_normalized(const Field& f, const std::vector<Felt>& v,
                                           int* pos, Felt* scale) {
    int t = -1;
    for (int i = 0; i < (int)v.size(); i++)
        if (v[i] != 0) { t = i; break; }
    if (pos) *pos = t;
    if (t < 0) { if (scale) *scale = 0; return v; }
    Felt lam = v[t];
    if (scale) *scale = lam;
    if (lam == 1) return v;
    Felt li = f.inv(lam);
    std::vector<Felt> u(v.size());
    for (int i = 0; i < (int)v.size(); i++) u[i] = f.mul(li, v[i]);
    return u;
}

// index lookup for the point list of PG(k1-1, q)
struct PointTable {
    std::vector<uint64_t> pts;
    std::vector<int> idx;  // id -> index, -1 elsewhere

    PointTable(int q, int k1) {
        pts = projective_points(q, k1);
        uint64_t span = 1;
        for (int i = 0; i < k1; i++) span *= (uint64_t)q;
        idx.assign(span, -1);
        for (int i = 0; i < (int)pts.size(); i++) idx[pts[i]] = i;
    }
};

void check_seed(const ExtensionProblem& p) {
    if (p.r < 1 || p.delta < 1 || p.a < 1 || p.b < p.a)
        throw std::invalid_argument("build_system: bad window parameters");
    const Mat& s = p.seed;
    if (s.rows() < 1 || s.cols() < 1)
        throw std::invalid_argument("build_system: empty seed");
    Mat red = s;
    if (rref(red) != s.rows() || red != s)
        throw std::invalid_argument("build_system: seed must be systematic (reduced row echelon, full rank)");
    ColumnMultiset cm = column_multiset(s);
    if (cm.zero_cols > 0)
        throw std::invalid_argument("build_system: seed has zero columns");
    std::vector<long long> wts = codeword_weights(s);
    for (int w = 1; w < (int)wts.size(); w++) {
        if (wts[w] == 0) continue;
        if (w % p.delta != 0 || w / p.delta < p.a || w / p.delta > p.b)
            throw std::invalid_argument("build_system: seed weight outside the window");
    }
}

}  // namespace

ExtensionSystem build_system(const ExtensionProblem& p) {
    check_seed(p);
    const Field& f = field(p.seed.q());
    int q = p.seed.q(), k = p.seed.rows(), k1 = k + 1;

    ExtensionSystem sys;
    sys.q = q;
    sys.k1 = k1;
    sys.target_n = p.seed.cols() + p.r;
    sys.delta = p.delta;
    sys.a = p.a;
    sys.b = p.b;
    sys.r = p.r;
    sys.rhs = sys.target_n - p.a * p.delta;

    PointTable tab(q, k1);
    sys.points = tab.pts;
    int npts = (int)sys.points.size();

    // column classes: the point's projection to the first k entries
    std::vector<uint64_t> base = projective_points(q, k);
    uint64_t base_span = 1;
    for (int i = 0; i < k; i++) base_span *= (uint64_t)q;
    std::vector<int> base_idx(base_span, -1);
    for (int i = 0; i < (int)base.size(); i++) base_idx[base[i]] = i;
    ColumnMultiset cm = column_multiset(p.seed);
    int ngroups = 1 + (int)base.size();
    sys.group_of.assign(npts, -1);
    sys.group_sum.assign(ngroups, 0);
    sys.group_pts.assign(ngroups, {});
    sys.group_sum[0] = p.r;
    for (int g = 1; g < ngroups; g++) {
        auto it = cm.mult.find(base[g - 1]);
        sys.group_sum[g] = it == cm.mult.end() ? 0 : it->second;
    }
    for (int pi = 0; pi < npts; pi++) {
        std::vector<Felt> v = decode_vec(sys.points[pi], q, k1);
        uint64_t uid = 0, pw = 1;
        for (int i = 0; i < k; i++) { uid += (uint64_t)v[i] * pw; pw *= (uint64_t)q; }
        int g = uid == 0 ? 0 : 1 + base_idx[uid];
        sys.group_of[pi] = g;
        sys.group_pts[g].push_back(pi);
    }

    sys.hyper.assign(npts, {});
    for (int hi = 0; hi < npts; hi++) {
        std::vector<Felt> h = decode_vec(sys.points[hi], q, k1);
        for (int pi = 0; pi < npts; pi++) {
            std::vector<Felt> v = decode_vec(sys.points[pi], q, k1);
            Felt acc = 0;
            for (int i = 0; i < k1; i++) acc = f.add(acc, f.mul(h[i], v[i]));
            if (acc == 0) sys.hyper[hi].push_back(pi);
        }
    }

    sys.min_x.assign(npts, 0);
    uint64_t unit = 1;
    for (int i = 0; i < k1; i++) {
        sys.min_x[tab.idx[unit]] = 1;
        unit *= (uint64_t)q;
    }
    return sys;
}

std::vector<ExtensionSolution> enumerate_solutions(const ExtensionSystem& sys,
                                                   SolveStats* stats) {
    std::vector<ExtensionSolution> out;
    int npts = (int)sys.points.size();
    int nh = (int)sys.hyper.size();
    if (sys.rhs < 0) return out;

    // assignment order: class by class, the last point of a class taking the
    // residual of the class sum
    std::vector<int> ord;
    std::vector<int> suff_min(npts, 0);  // minima still owed to later points of the class
    std::vector<char> last_in_group(npts, 0);
    for (int g = 0; g < (int)sys.group_pts.size(); g++) {
        const std::vector<int>& gp = sys.group_pts[g];
        for (int j = 0; j < (int)gp.size(); j++) {
            ord.push_back(gp[j]);
            int s = 0;
            for (int l = j + 1; l < (int)gp.size(); l++) s += sys.min_x[gp[l]];
            suff_min[gp[j]] = s;
            if (j + 1 == (int)gp.size()) last_in_group[gp[j]] = 1;
        }
        int ub_all = sys.group_sum[g];
        int need = 0;
        for (int pi : gp) need += sys.min_x[pi];
        if (need > ub_all) return out;
    }

    std::vector<std::vector<int>> pt_hyps(npts);
    for (int h = 0; h < nh; h++)
        for (int pi : sys.hyper[h]) pt_hyps[pi].push_back(h);

    // static per-point upper bound, for the reachability prune
    std::vector<int> ub(npts, 0);
    for (int pi = 0; pi < npts; pi++) {
        int g = sys.group_of[pi];
        int others = 0;
        for (int pj : sys.group_pts[g])
            if (pj != pi) others += sys.min_x[pj];
        ub[pi] = sys.group_sum[g] - others;
        if (ub[pi] < sys.min_x[pi]) return out;
    }

    std::vector<int> S(nh, 0), left(nh, 0);
    std::vector<long long> pot(nh, 0);
    for (int h = 0; h < nh; h++) {
        left[h] = (int)sys.hyper[h].size();
        for (int pi : sys.hyper[h]) pot[h] += ub[pi];
    }
    int lo = sys.rhs - sys.delta * (sys.b - sys.a);

    std::vector<int> x(npts, 0), res(sys.group_sum);
    std::vector<int> touched;

    // updates must run to completion even when a check fails: undo reverts
    // every incident hyperplane, so apply may not stop halfway
    auto apply = [&](int pi, int v) -> bool {
        bool ok = true;
        for (int h : pt_hyps[pi]) {
            S[h] += v;
            left[h]--;
            pot[h] -= ub[pi];
            if (S[h] > sys.rhs || S[h] + pot[h] < lo) ok = false;
            if (left[h] == 0 && (sys.rhs - S[h]) % sys.delta != 0) ok = false;
        }
        return ok;
    };
    auto undo = [&](int pi, int v) {
        for (int h : pt_hyps[pi]) {
            S[h] -= v;
            left[h]++;
            pot[h] += ub[pi];
        }
    };

    std::function<void(int)> dfs = [&](int i) {
        if (i == npts) {
            ExtensionSolution sol;
            sol.x = x;
            sol.y.assign(nh, 0);
            for (int h = 0; h < nh; h++) sol.y[h] = (sys.rhs - S[h]) / sys.delta;
            out.push_back(std::move(sol));
            if (stats) stats->solutions++;
            return;
        }
        int pi = ord[i];
        int g = sys.group_of[pi];
        int vmin = sys.min_x[pi], vmax = res[g] - suff_min[pi];
        if (last_in_group[pi]) vmin = vmax;  // residual is forced
        for (int v = vmin; v <= vmax; v++) {
            if (stats) stats->nodes++;
            x[pi] = v;
            res[g] -= v;
            if (apply(pi, v)) {
                dfs(i + 1);
            } else if (stats) {
                stats->pruned++;
            }
            undo(pi, v);
            res[g] += v;
            x[pi] = 0;
        }
    };
    dfs(0);

    std::sort(out.begin(), out.end(),
              [](const ExtensionSolution& a, const ExtensionSolution& b) { return a.x < b.x; });
    return out;
}

Mat solution_to_code(const ExtensionProblem& p, const ExtensionSolution& sol) {
    const Field& f = field(p.seed.q());
    int q = p.seed.q(), k = p.seed.rows(), k1 = k + 1;
    int m = p.seed.cols(), n = m + p.r;
    PointTable tab(q, k1);
    if (sol.x.size() != tab.pts.size())
        throw std::invalid_argument("solution_to_code: solution size mismatch");
    std::vector<int> remaining = sol.x;

    uint64_t qk = 1;
    for (int i = 0; i < k; i++) qk *= (uint64_t)q;

    Mat out(q, k1, n);
    std::vector<char> is_pivot(m, 0);

    // pivot columns first: they take the untouched lift, keeping them unit
    for (int i = 0; i < k; i++) {
        int j = 0;
        while (j < m && p.seed.get(i, j) == 0) j++;
        if (j == m) throw std::invalid_argument("solution_to_code: seed has a zero row");
        is_pivot[j] = 1;
        uint64_t pw = 1;
        for (int l = 0; l < i; l++) pw *= (uint64_t)q;
        int pidx = tab.idx[pw];
        if (remaining[pidx] <= 0)
            throw std::logic_error("solution_to_code: unit point exhausted");
        remaining[pidx]--;
        out.set(i, j, 1);
    }

    for (int j = 0; j < m; j++) {
        if (is_pivot[j]) continue;
        std::vector<Felt> w = p.seed.col_vec(j);
        int t = -1;
        Felt lam = 0;
        std::vector<Felt> u = first_nonzero_normalized(f, w, &t, &lam);
        uint64_t base_id = encode_vec(u, q);
        int c = 0;
        while (c < q && remaining[tab.idx[base_id + (uint64_t)c * qk]] == 0) c++;
        if (c == q) throw std::logic_error("solution_to_code: class allocation exhausted");
        remaining[tab.idx[base_id + (uint64_t)c * qk]]--;
        for (int i = 0; i < k; i++) out.set(i, j, w[i]);
        out.set(k, j, f.mul(lam, (Felt)c));
    }

    int e_last = tab.idx[qk];
    if (remaining[e_last] != p.r)
        throw std::logic_error("solution_to_code: appended column count mismatch");
    remaining[e_last] = 0;
    for (int j = m; j < n; j++) out.set(k, j, 1);

    for (int v : remaining)
        if (v != 0) throw std::logic_error("solution_to_code: leftover allocation");
    return out;
}

std::vector<Mat> canonical_length_filter(const Mat& seed,
                                         const std::vector<Mat>& candidates,
                                         int r) {
    if (column_multiset(seed).min_mult() < r) return {};
    std::vector<Mat> out;
    for (const Mat& c : candidates)
        if (column_multiset(c).min_mult() == r) out.push_back(c);
    return out;
}

namespace {

// delete the r columns on point pid together with the row its transform pins
// down; row operations first move the point onto a unit vector
Mat residual_code(const Mat& g, uint64_t pid, int r) {
    const Field& f = field(g.q());
    int k1 = g.rows();
    std::vector<Felt> pv = decode_vec(pid, g.q(), k1);
    std::vector<int> cols;
    for (int j = 0; j < g.cols(); j++) {
        std::vector<Felt> w = g.col_vec(j);
        int t = -1;
        Felt lam = 0;
        std::vector<Felt> u = first_nonzero_normalized(f, w, &t, &lam);
        if (t >= 0 && encode_vec(u, g.q()) == pid) cols.push_back(j);
    }
    if ((int)cols.size() != r)
        throw std::invalid_argument("residual: point multiplicity is not r");
    int t = -1;
    for (int i = 0; i < k1; i++)
        if (pv[i] != 0) { t = i; break; }
    Mat a = g;
    Felt pt_inv = f.inv(pv[t]);
    for (int i = 0; i < k1; i++) {
        if (i == t || pv[i] == 0) continue;
        a.row_add_scaled(i, t, f.neg(f.mul(pv[i], pt_inv)));
    }
    Mat redc = delete_row(delete_cols(a, cols), t);
    rref(redc);
    return redc;
}

}  // namespace

std::vector<Mat> lex_length_filter(const Mat& seed,
                                   const std::vector<Mat>& candidates, int r) {
    std::vector<long long> seed_we = codeword_weights(seed);
    std::vector<Mat> out;
    for (const Mat& c : candidates) {
        ColumnMultiset cm = column_multiset(c);
        bool keep = true;
        for (const auto& [pid, mult] : cm.mult) {
            if (mult != r) continue;
            if (codeword_weights(residual_code(c, pid, r)) < seed_we) {
                keep = false;
                break;
            }
        }
        if (keep) out.push_back(c);
    }
    return out;
}

std::vector<Mat> classify_lattice(const LatticeTask& task, SolveStats* stats) {
    field(task.q);
    if (task.delta < 1 || task.a < 1)
        throw std::invalid_argument("classify_lattice: bad window parameters");
    if (task.k < 1 || task.n < task.k) return {};
    int b = task.b ? task.b : task.n / task.delta;
    if (b < task.a) return {};
    if (stats) *stats = SolveStats{};
    std::set<int> forb(task.forbidden.begin(), task.forbidden.end());

    std::map<std::pair<int, int>, std::vector<Mat>> memo;
    std::function<const std::vector<Mat>&(int, int)> level = [&](int n, int k)
        -> const std::vector<Mat>& {
        auto key = std::make_pair(n, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Mat> res;
        if (k == 1) {
            if (n >= 1 && n % task.delta == 0 && n / task.delta >= task.a &&
                n / task.delta <= b && !forb.count(n)) {
                Mat g(task.q, 1, n);
                for (int j = 0; j < n; j++) g.set(0, j, 1);
                res.push_back(canonical_form(g).canon);
            }
        } else {
            std::vector<Mat> cands;
            for (int r = 1; r <= n - k + 1; r++) {
                for (const Mat& seed : level(n - r, k - 1)) {
                    if (column_multiset(seed).min_mult() < r) continue;
                    ExtensionProblem prob{seed, r, task.delta, task.a, b};
                    std::vector<ExtensionSolution> sols =
                        enumerate_solutions(build_system(prob), stats);
                    std::vector<Mat> built;
                    built.reserve(sols.size());
                    for (const ExtensionSolution& s : sols)
                        built.push_back(solution_to_code(prob, s));
                    built = canonical_length_filter(seed, built, r);
                    built = lex_length_filter(seed, built, r);
                    for (const Mat& g : built) {
                        if (!forb.empty()) {
                            std::vector<long long> wt = codeword_weights(g);
                            bool bad = false;
                            for (int w : forb)
                                if (w >= 0 && w < (int)wt.size() && wt[w] > 0) bad = true;
                            if (bad) continue;
                        }
                        cands.push_back(g);
                    }
                }
            }
            res = dedup(cands);
        }
        auto [pos, ok] = memo.emplace(key, std::move(res));
        (void)ok;
        return pos->second;
    };
    return level(task.n, task.k);
}

}  // namespace linclass

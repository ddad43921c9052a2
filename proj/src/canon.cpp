#include "linclass/canon.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>

#include "linclass/code.hpp"
#include "linclass/pg.hpp"

namespace linclass {

namespace {

// Per-coordinate data constant on automorphism orbits. Leading entry flags
// all-zero columns so they sort after every effective coordinate; then the
// column multiplicity of the coordinate's point and, for each weight, how
// many projective codeword classes of that weight are nonzero here.
std::vector<std::vector<long long>> invariant_tuples(const Mat& g) {
    const int n = g.cols(), q = g.q();
    const Field& f = field(q);
    std::vector<std::vector<long long>> tup(
        (size_t)n, std::vector<long long>((size_t)n + 3, 0));
    ColumnMultiset cm = column_multiset(g);
    for (int i = 0; i < n; ++i) {
        std::vector<Felt> col = g.col_vec(i);
        if (vec_weight(col) == 0) {
            tup[i][0] = 1;
            continue;
        }
        tup[i][1] = cm.mult.at(encode_vec(normalize_vec(f, col), q));
    }
    const int bpe = (q == 2) ? 1 : 2;
    for_each_projective_class(g, [&](const std::vector<Felt>&, const uint64_t* w,
                                     int wt) {
        for (int i = 0; i < n; ++i) {
            int bit = i * bpe;
            if ((w[bit >> 6] >> (bit & 63)) & (bpe == 1 ? 1u : 3u))
                tup[i][(size_t)wt + 2]++;
        }
    });
    return tup;
}

uint64_t fnv64(const std::vector<long long>& xs, uint64_t salt) {
    uint64_t h = 1469598103934665603ull ^ salt;
    for (long long x : xs)
        for (int b = 0; b < 8; ++b) {
            h ^= (uint64_t)(x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    return h;
}

int cmp_cols(const std::vector<Felt>& a, const std::vector<Felt>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

struct Search {
    const Field& f;
    int q, n, k;
    const Mat& G;
    std::vector<std::vector<Felt>> cols[2];  // raw columns, plain and twisted
    std::vector<std::vector<int>> cells;
    std::vector<int> cell_of_pos;

    std::vector<Felt> U;  // k x k running row transform
    std::vector<int> order;
    std::vector<Felt> lam;
    std::vector<std::vector<Felt>> out;
    std::vector<char> used;
    int rank_now = 0, e_now = 0;

    bool best_set = false;
    std::vector<std::vector<Felt>> best_out;
    std::vector<int> best_order;
    std::vector<Felt> best_lam;
    int best_e = 0;
    Isometry best_inv;
    uint64_t stamp = 0;

    std::vector<Isometry> gens;
    std::set<std::string> seen;
    std::vector<int> dsu;

    explicit Search(const Mat& g)
        : f(field(g.q())), q(g.q()), n(g.cols()), k(g.rows()), G(g) {
        cols[0].resize((size_t)n);
        cols[1].resize((size_t)n);
        for (int c = 0; c < n; ++c) {
            cols[0][c] = g.col_vec(c);
            cols[1][c] = cols[0][c];
            for (auto& e : cols[1][c]) e = f.frob(e);
        }
        order.resize((size_t)n);
        lam.resize((size_t)n);
        out.assign((size_t)n, std::vector<Felt>((size_t)k, 0));
        used.assign((size_t)n, 0);
        cell_of_pos.resize((size_t)n);
        dsu.resize((size_t)n);
        for (int i = 0; i < n; ++i) dsu[i] = i;
    }

    int find(int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    }
    void unite(int a, int b) { dsu[find(a)] = find(b); }

    Isometry transport_of(const std::vector<int>& ord, const std::vector<Felt>& l,
                          int e) const {
        Isometry t;
        t.n = n;
        t.q = q;
        t.alpha = e;
        t.dest.resize((size_t)n);
        t.mult.resize((size_t)n);
        for (int p = 0; p < n; ++p) {
            t.dest[ord[p]] = p;
            t.mult[ord[p]] = f.aut(l[p], e);
        }
        return t;
    }

    void add_auto(const Isometry& a) {
        if (is_identity(a)) return;
        std::string key = iso_key(a);
        if (!seen.insert(key).second) return;
        gens.push_back(a);
        for (int i = 0; i < n; ++i) unite(i, a.dest[i]);
    }

    void preseed() {
        // pairs of proportional columns give transpositions acting trivially
        // on codewords; a global rescale is always an automorphism
        std::map<uint64_t, std::vector<int>> groups;
        std::vector<int> zeros;
        for (int c = 0; c < n; ++c) {
            if (vec_weight(cols[0][c]) == 0)
                zeros.push_back(c);
            else
                groups[encode_vec(normalize_vec(f, cols[0][c]), q)].push_back(c);
        }
        auto transposition = [&](int a, int b, Felt s) {
            Isometry t = identity_isometry(q, n);
            t.dest[a] = b;
            t.dest[b] = a;
            t.mult[a] = s;
            t.mult[b] = f.inv(s);
            add_auto(t);
        };
        for (auto& [pt, cs] : groups)
            for (size_t j = 0; j + 1 < cs.size(); ++j) {
                int a = cs[j], b = cs[j + 1];
                int r = 0;
                while (cols[0][a][r] == 0) ++r;
                transposition(a, b, f.mul(cols[0][b][r], f.inv(cols[0][a][r])));
            }
        for (size_t j = 0; j + 1 < zeros.size(); ++j)
            transposition(zeros[j], zeros[j + 1], 1);
        if (q > 2 && !zeros.empty()) {
            // scaling one zero column alone fixes every codeword; together
            // with the transpositions this spans all zero-column scalings
            Isometry s = identity_isometry(q, n);
            s.mult[zeros[0]] = 2;
            add_auto(s);
        }
        if (q > 2) {
            Isometry s = identity_isometry(q, n);
            for (int i = 0; i < n; ++i) s.mult[i] = 2;
            add_auto(s);
        }
    }

    void build_cells() {
        auto tup = invariant_tuples(G);
        std::map<std::vector<long long>, std::vector<int>> by_sig;
        for (int i = 0; i < n; ++i) by_sig[tup[i]].push_back(i);
        for (auto& [sig, coords] : by_sig) cells.push_back(coords);
        int pos = 0;
        for (size_t ci = 0; ci < cells.size(); ++ci)
            for (size_t j = 0; j < cells[ci].size(); ++j) cell_of_pos[pos++] = (int)ci;
    }

    std::vector<Felt> mul_Uv(const std::vector<Felt>& v) const {
        std::vector<Felt> w((size_t)k, 0);
        for (int r = 0; r < k; ++r) {
            Felt acc = 0;
            const Felt* row = &U[(size_t)r * k];
            for (int c = 0; c < k; ++c) acc = f.add(acc, f.mul(row[c], v[c]));
            w[r] = acc;
        }
        return w;
    }

    void leaf() {
        int c3 = -1;
        if (best_set) {
            c3 = 0;
            for (int t = 0; t < n && c3 == 0; ++t) c3 = cmp_cols(out[t], best_out[t]);
        }
        if (c3 < 0) {
            best_out = out;
            best_order = order;
            best_lam = lam;
            best_e = e_now;
            best_set = true;
            best_inv = inverse(transport_of(best_order, best_lam, best_e));
            ++stamp;
        } else if (c3 == 0) {
            add_auto(compose(best_inv, transport_of(order, lam, e_now)));
        }
    }

    // orbit of candidates under generators that fix the placed prefix
    // exactly (position and scalar); only those give sibling subtrees with
    // identical leaf output sets
    bool pruned_by_orbit(int c, const std::vector<int>& done, int t,
                         std::vector<int>& local) {
        if (done.empty()) return false;
        for (int i = 0; i < n; ++i) local[i] = i;
        auto lfind = [&](int x) {
            while (local[x] != x) x = local[x] = local[local[x]];
            return x;
        };
        for (const Isometry& g : gens) {
            if (g.alpha) continue;
            bool ok = true;
            for (int i = 0; i < t && ok; ++i)
                ok = g.dest[order[i]] == order[i] && g.mult[order[i]] == 1;
            if (!ok) continue;
            for (int i = 0; i < n; ++i) {
                int a = lfind(i), b = lfind(g.dest[i]);
                if (a != b) local[a] = b;
            }
        }
        for (int d : done)
            if (lfind(d) == lfind(c)) return true;
        return false;
    }

    struct Cand {
        int c;
        int s;  // pivot row, or -1 when the column depends on placed pivots
        Felt l;
        std::vector<Felt> w, o;
    };

    void descend(int t, bool lt) {
        if (t == n) {
            leaf();
            return;
        }
        const std::vector<int>& cell = cells[(size_t)cell_of_pos[t]];
        // branches ordered by output label, so the first leaf reached is the
        // greedy minimum and later siblings either tie or cut off at once
        std::vector<Cand> cands;
        for (int c : cell) {
            if (used[c]) continue;
            Cand cd;
            cd.c = c;
            cd.w = mul_Uv(cols[e_now][c]);
            cd.s = -1;
            for (int i = rank_now; i < k; ++i)
                if (cd.w[i]) {
                    cd.s = i;
                    break;
                }
            cd.o.assign((size_t)k, 0);
            cd.l = 1;
            if (cd.s < 0) {
                // dependent column: scale so the first coefficient label is 1
                int fz = -1;
                for (int i = 0; i < rank_now; ++i)
                    if (cd.w[i]) {
                        fz = i;
                        break;
                    }
                if (fz >= 0) cd.l = f.inv(cd.w[fz]);
                for (int i = 0; i < rank_now; ++i) cd.o[i] = f.mul(cd.l, cd.w[i]);
            } else {
                cd.o[rank_now] = 1;
            }
            cands.push_back(std::move(cd));
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) {
                             return cmp_cols(a.o, b.o) < 0;
                         });
        std::vector<int> done;
        std::vector<int> local((size_t)n);
        uint64_t entry = stamp;
        for (Cand& cd : cands) {
            if (lt && stamp != entry) lt = false;  // an ancestor of the new best
            bool clt = lt;
            if (!lt) {
                int c3 = cmp_cols(cd.o, best_out[t]);
                if (c3 > 0) break;  // sorted, every later label is larger too
                clt = c3 < 0;
            }
            if (pruned_by_orbit(cd.c, done, t, local)) {
                done.push_back(cd.c);
                continue;
            }
            if (cd.s < 0) {
                order[t] = cd.c;
                lam[t] = cd.l;
                out[t] = cd.o;
                used[cd.c] = 1;
                descend(t + 1, clt);
                used[cd.c] = 0;
            } else {
                // new pivot: output is forced to a unit column; the scale of
                // the new basis row stays free and is branched explicitly
                std::vector<Felt> Usave = U;
                std::vector<Felt>& w = cd.w;
                if (cd.s != rank_now) {
                    for (int j = 0; j < k; ++j)
                        std::swap(U[(size_t)rank_now * k + j],
                                  U[(size_t)cd.s * k + j]);
                    std::swap(w[rank_now], w[cd.s]);
                }
                Felt inv_p = f.inv(w[rank_now]);
                for (int j = 0; j < k; ++j)
                    U[(size_t)rank_now * k + j] =
                        f.mul(inv_p, U[(size_t)rank_now * k + j]);
                for (int i = 0; i < k; ++i) {
                    if (i == rank_now || !w[i]) continue;
                    Felt l = f.neg(w[i]);
                    for (int j = 0; j < k; ++j)
                        U[(size_t)i * k + j] =
                            f.add(U[(size_t)i * k + j],
                                  f.mul(l, U[(size_t)rank_now * k + j]));
                }
                std::vector<Felt> base_row(U.begin() + (size_t)rank_now * k,
                                           U.begin() + (size_t)(rank_now + 1) * k);
                uint64_t entry2 = stamp;
                bool mlt = clt;
                for (Felt mu = 1; mu < q; ++mu) {
                    if (mlt && stamp != entry2) mlt = false;
                    for (int j = 0; j < k; ++j)
                        U[(size_t)rank_now * k + j] = f.mul(mu, base_row[j]);
                    order[t] = cd.c;
                    lam[t] = f.inv(mu);
                    out[t] = cd.o;
                    used[cd.c] = 1;
                    rank_now++;
                    descend(t + 1, mlt);
                    rank_now--;
                    used[cd.c] = 0;
                }
                U = Usave;
            }
            done.push_back(cd.c);
        }
    }

    void run() {
        preseed();
        build_cells();
        int branches = (f.aut_order > 1) ? 2 : 1;
        for (int e = 0; e < branches; ++e) {
            e_now = e;
            rank_now = 0;
            U.assign((size_t)k * k, 0);
            for (int i = 0; i < k; ++i) U[(size_t)i * k + i] = 1;
            std::fill(used.begin(), used.end(), 0);
            descend(0, !best_set);
        }
    }
};

std::vector<int> unit_coordinates(const Mat& g) {
    const Field& f = field(g.q());
    Mat r = g;
    std::vector<int> pivots;
    int rk = rref(r, &pivots);
    std::vector<int> units;
    for (int i = 0; i < g.cols(); ++i) {
        std::vector<Felt> v((size_t)g.cols(), 0);
        v[i] = 1;
        for (int j = 0; j < rk; ++j) {
            Felt c = v[pivots[j]];
            if (!c) continue;
            std::vector<Felt> row = r.row_vec(j);
            for (int x = 0; x < g.cols(); ++x)
                v[x] = f.sub(v[x], f.mul(c, row[x]));
        }
        if (vec_weight(v) == 0) units.push_back(i);
    }
    return units;
}

CanonicalResult assemble(Search& s, const Mat& g) {
    CanonicalResult res;
    res.canon = Mat(s.q, s.k, s.n);
    for (int t = 0; t < s.n; ++t) res.canon.set_col(t, s.best_out[t]);
    res.transport = s.transport_of(s.best_order, s.best_lam, s.best_e);
    res.aut_gens = s.gens;
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < s.n; ++i) by_root[s.find(i)].push_back(i);
    std::vector<std::pair<int, std::vector<int>>> keyed;
    for (auto& [root, coords] : by_root) {
        int key = s.n;
        for (int i : coords) key = std::min(key, res.transport.dest[i]);
        keyed.push_back({key, coords});
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [key, coords] : keyed) res.orbits.push_back(coords);

    for (int i = 0; i < s.n; ++i)
        if (vec_weight(g.col_vec(i)) == 0) res.zero_coords.push_back(i);
    res.unit_coords = unit_coordinates(g);
    std::set<int> excluded(res.zero_coords.begin(), res.zero_coords.end());
    excluded.insert(res.unit_coords.begin(), res.unit_coords.end());
    for (size_t oi = 0; oi < res.orbits.size(); ++oi) {
        bool clean = true;
        for (int i : res.orbits[oi])
            if (excluded.count(i)) {
                clean = false;
                break;
            }
        if (clean) {
            res.special = (int)oi;
            break;
        }
    }
    return res;
}

// the full space F_q^k: every column order gives the identity-shaped leaf,
// so the search is skipped and the group written down directly
CanonicalResult trivial_full_space(const Mat& g) {
    const int q = g.q(), k = g.rows();
    const Field& f = field(q);
    CanonicalResult res;
    res.canon = Mat(q, k, k);
    for (int i = 0; i < k; ++i) res.canon.set(i, i, 1);
    res.transport = identity_isometry(q, k);
    for (int i = 0; i + 1 < k; ++i) {
        Isometry t = identity_isometry(q, k);
        t.dest[i] = i + 1;
        t.dest[i + 1] = i;
        res.aut_gens.push_back(t);
    }
    if (q > 2) {
        Isometry d = identity_isometry(q, k);
        d.mult[0] = 2;
        res.aut_gens.push_back(d);
    }
    if (f.aut_order > 1) {
        Isometry fr = identity_isometry(q, k);
        fr.alpha = 1;
        res.aut_gens.push_back(fr);
    }
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    res.orbits.push_back(all);
    res.unit_coords = all;
    res.special = -1;
    return res;
}

}  // namespace

std::vector<uint64_t> coordinate_invariant(const Mat& g) {
    auto tup = invariant_tuples(g);
    uint64_t salt = ((uint64_t)g.q() << 32) ^ (uint64_t)g.cols();
    std::vector<uint64_t> out;
    out.reserve(tup.size());
    for (auto& t : tup) out.push_back(fnv64(t, salt));
    return out;
}

CanonicalResult canonical_form(const Mat& g) {
    const int k = g.rows(), n = g.cols();
    if (k < 1 || n < k) throw std::invalid_argument("canonical_form: bad shape");
    double classes = 1;
    for (int i = 0; i < k; ++i) classes *= g.q();
    if (classes > (double)(1 << 22))
        throw std::invalid_argument("canonical_form: dimension too large");
    if (rank(g) < k) throw std::invalid_argument("canonical_form: rank deficient");
    if (n == k) return trivial_full_space(g);
    Search s(g);
    s.run();
    return assemble(s, g);
}

std::optional<Isometry> are_equivalent(const Mat& a, const Mat& b) {
    if (a.q() != b.q() || a.cols() != b.cols() || a.rows() != b.rows())
        return std::nullopt;
    CanonicalResult ra = canonical_form(a);
    CanonicalResult rb = canonical_form(b);
    if (!(ra.canon == rb.canon)) return std::nullopt;
    return compose(inverse(rb.transport), ra.transport);
}

namespace {

using Perm = std::vector<int>;

Perm perm_of(const Isometry& g) {
    const Field& f = field(g.q);
    int s = g.q - 1;
    Perm p((size_t)g.n * s);
    for (int i = 0; i < g.n; ++i)
        for (int c = 1; c <= s; ++c) {
            Felt img = f.aut(f.mul((Felt)c, g.mult[i]), g.alpha);
            p[(size_t)i * s + (c - 1)] = g.dest[i] * s + (img - 1);
        }
    return p;
}

Perm pcompose(const Perm& a, const Perm& b) {  // a after b
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[(size_t)b[i]];
    return c;
}

Perm pinverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[(size_t)a[i]] = (int)i;
    return c;
}

bool pis_id(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != (int)i) return false;
    return true;
}

struct StabChain {
    int m;
    std::vector<int> base;
    std::vector<std::vector<Perm>> S;
    std::vector<std::vector<int>> orb;
    std::vector<std::vector<int>> where;  // point -> transversal slot, -1 outside
    std::vector<std::vector<Perm>> tr;

    explicit StabChain(int m_) : m(m_) {}

    void new_level(const Perm& p) {
        int b = -1;
        for (int i = 0; i < m; ++i)
            if (p[(size_t)i] != i) {
                b = i;
                break;
            }
        base.push_back(b);
        S.emplace_back();
        orb.emplace_back();
        where.emplace_back(std::vector<int>((size_t)m, -1));
        tr.emplace_back();
    }

    // generators of the level-l stabilizer: everything stored at this level
    // or deeper (deeper generators fix a longer base prefix)
    std::vector<Perm> level_gens(size_t l) const {
        std::vector<Perm> out;
        for (size_t i = l; i < S.size(); ++i)
            out.insert(out.end(), S[i].begin(), S[i].end());
        return out;
    }

    void rebuild_orbit(size_t l, const std::vector<Perm>& gens) {
        orb[l].clear();
        tr[l].clear();
        where[l].assign((size_t)m, -1);
        Perm id((size_t)m);
        for (int i = 0; i < m; ++i) id[(size_t)i] = i;
        orb[l].push_back(base[l]);
        where[l][(size_t)base[l]] = 0;
        tr[l].push_back(id);
        for (size_t head = 0; head < orb[l].size(); ++head) {
            int p = orb[l][head];
            for (const Perm& g : gens) {
                int img = g[(size_t)p];
                if (where[l][(size_t)img] < 0) {
                    where[l][(size_t)img] = (int)orb[l].size();
                    orb[l].push_back(img);
                    tr[l].push_back(pcompose(g, tr[l][(size_t)head]));
                }
            }
        }
    }

    // reduce p through levels >= from; returns the level where it stuck
    std::pair<Perm, size_t> strip(Perm p, size_t from) {
        for (size_t l = from; l < base.size(); ++l) {
            int img = p[(size_t)base[l]];
            if (where[l][(size_t)img] < 0) return {p, l};
            p = pcompose(pinverse(tr[l][(size_t)where[l][(size_t)img]]), p);
        }
        return {p, base.size()};
    }

    // clean the chain from the deepest level upward; any new generator sends
    // the walk back down so shallower checks always see settled deeper levels
    void verify() {
        if (base.empty()) return;
        size_t l = base.size() - 1;
        while (true) {
            std::vector<Perm> gens = level_gens(l);
            rebuild_orbit(l, gens);
            bool added = false;
            for (size_t oi = 0; oi < orb[l].size() && !added; ++oi)
                for (const Perm& g : gens) {
                    int p = orb[l][oi];
                    const Perm& up = tr[l][oi];
                    const Perm& uq = tr[l][(size_t)where[l][(size_t)g[(size_t)p]]];
                    Perm sg = pcompose(pinverse(uq), pcompose(g, up));
                    if (pis_id(sg)) continue;
                    auto [res, j] = strip(std::move(sg), l + 1);
                    if (pis_id(res)) continue;
                    if (j == base.size()) new_level(res);
                    S[j].push_back(res);
                    l = j;
                    added = true;
                    break;
                }
            if (added) continue;
            if (l == 0) break;
            --l;
        }
    }

    void add(const Perm& p) {
        if (pis_id(p)) return;
        if (base.empty()) new_level(p);
        S[0].push_back(p);
        verify();
    }

    long long order() const {
        long long o = 1;
        for (size_t l = 0; l < base.size(); ++l) {
            long long sz = (long long)orb[l].size();
            if (o > LLONG_MAX / sz) return LLONG_MAX;
            o *= sz;
        }
        return o;
    }
};

}  // namespace

long long group_order(const std::vector<Isometry>& gens, int q, int n) {
    StabChain chain(n * (q - 1));
    for (const Isometry& g : gens) chain.add(perm_of(g));
    return chain.order();
}

}  // namespace linclass

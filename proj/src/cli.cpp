#include "linclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>

#include "linclass/augment.hpp"
#include "linclass/canon.hpp"
#include "linclass/latext.hpp"
#include "linclass/sieve.hpp"

namespace linclass {

namespace {

void write_checkpoint(const std::string& path, int q, const std::vector<Mat>& codes) {
    const std::string tmp = path + ".tmp";
    save_clf(tmp, CodeList{q, codes});
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place at " + path);
}

void validate(const ClassifyConfig& cfg) {
    if (cfg.q != 2 && cfg.q != 3 && cfg.q != 4)
        throw UsageError("q must be 2, 3 or 4");
    if (cfg.k < 1 || cfg.k > cfg.n) throw UsageError("need 1 <= k <= n");
    if (cfg.dmin < 1 || cfg.ddual < 1 || cfg.delta < 1)
        throw UsageError("dmin, ddual and delta must be positive");
    if (cfg.self_orth == OrthForm::hermitian && cfg.q != 4)
        throw UsageError("the hermitian form needs q = 4");
    if (cfg.shard_total < 1 || cfg.shard_index < 0 ||
        cfg.shard_index >= cfg.shard_total)
        throw UsageError("shard index must lie below the shard total");
    if (cfg.shard_total > 1 && cfg.seed_file.empty())
        throw UsageError("sharding a run requires a seed list");
    if (cfg.algo == Algo::aug_row && cfg.dmin < 2)
        throw UsageError("the row engine needs dmin >= 2");
    if (cfg.algo == Algo::lattice) {
        if (!cfg.seed_file.empty())
            throw UsageError("the lattice engine starts from scratch, no seeds");
        if (!cfg.checkpoint_file.empty())
            throw UsageError("checkpointing requires an augmentation engine");
    }
}

}  // namespace

ClassifyReport run_classify(const ClassifyConfig& cfg) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    const int divisor = cfg.even ? std::lcm(cfg.delta, 2) : cfg.delta;

    ClassifyReport rep;
    rep.codes.q = cfg.q;

    std::vector<Mat> seeds;
    bool seeded = false;
    if (!cfg.seed_file.empty()) {
        CodeList in = load_clf(cfg.seed_file);
        if (in.q != cfg.q)
            throw std::runtime_error("seed file is over q=" + std::to_string(in.q) +
                                     ", the task needs q=" + std::to_string(cfg.q));
        seeded = true;
        for (Mat& g : in.codes)
            if (shard_of(g, cfg.shard_total) == cfg.shard_index)
                seeds.push_back(std::move(g));
    }

    if (cfg.algo == Algo::lattice) {
        LatticeTask task;
        task.q = cfg.q;
        task.n = cfg.n;
        task.k = cfg.k;
        task.delta = divisor;
        task.a = std::max(1, (cfg.dmin + divisor - 1) / divisor);
        rep.codes.codes = classify_lattice(task);
        if (cfg.ddual > 2 || cfg.self_orth) {
            std::vector<Mat> kept;
            for (Mat& g : rep.codes.codes) {
                if (cfg.ddual > 2 && !dual_distance_at_least(g, cfg.ddual)) continue;
                if (cfg.self_orth && !is_self_orthogonal(g, *cfg.self_orth)) continue;
                kept.push_back(std::move(g));
            }
            rep.codes.codes = std::move(kept);
        }
    } else {
        AugTask task;
        task.q = cfg.q;
        task.n = cfg.n;
        task.k = cfg.k;
        task.d = cfg.dmin;
        task.dual_d = cfg.ddual;
        task.divisor = divisor;
        task.self_orth = cfg.self_orth;
        LevelFn hook = [&](int length, const std::vector<Mat>& classes) {
            rep.levels.push_back(LevelCount{length, classes.size()});
            if (!cfg.checkpoint_file.empty())
                write_checkpoint(cfg.checkpoint_file, cfg.q, classes);
        };
        rep.codes.codes = cfg.algo == Algo::aug_col
                              ? classify_col(task, seeded ? &seeds : nullptr, hook)
                              : classify_row(task, seeded ? &seeds : nullptr, hook);
    }

    if (!cfg.output_file.empty()) save_clf(cfg.output_file, rep.codes);
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

CodeList run_extend(const CodeList& seeds, const ExtendConfig& cfg) {
    if (cfg.r < 1) throw UsageError("r must be positive");
    if (cfg.delta < 1 || cfg.a < 1 || cfg.b < cfg.a)
        throw UsageError("need 1 <= a <= b and a positive delta");

    std::vector<Mat> grown;
    for (size_t i = 0; i < seeds.codes.size(); ++i) {
        const Mat& seed = seeds.codes[i];
        if (column_multiset(seed).min_mult() < cfg.r) continue;
        try {
            ExtensionProblem prob{seed, cfg.r, cfg.delta, cfg.a, cfg.b};
            std::vector<Mat> cands;
            for (const ExtensionSolution& sol :
                 enumerate_solutions(build_system(prob)))
                cands.push_back(solution_to_code(prob, sol));
            cands = canonical_length_filter(seed, cands, cfg.r);
            cands = lex_length_filter(seed, cands, cfg.r);
            grown.insert(grown.end(), cands.begin(), cands.end());
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("seed record " + std::to_string(i + 1) +
                                     ": " + e.what());
        }
    }
    return CodeList{seeds.q, dedup(grown)};
}

AnalyzeReport run_analyze(const CodeList& list, Metric metric) {
    AnalyzeReport rep;
    long long eu = 0, he = 0, none = 0;
    std::set<std::string> distinct;
    for (const Mat& g : list.codes) {
        switch (metric) {
            case Metric::minimal_codewords: {
                const long long v = minimal_codeword_count(g);
                rep.rows.push_back(std::to_string(v));
                if (rep.rows.size() == 1 || v < rep.agg_min) rep.agg_min = v;
                if (rep.rows.size() == 1 || v > rep.agg_max) rep.agg_max = v;
                break;
            }
            case Metric::aut_order: {
                const CanonicalResult r = canonical_form(g);
                const long long v = group_order(r.aut_gens, g.q(), g.cols());
                rep.rows.push_back(std::to_string(v));
                if (rep.rows.size() == 1 || v < rep.agg_min) rep.agg_min = v;
                if (rep.rows.size() == 1 || v > rep.agg_max) rep.agg_max = v;
                break;
            }
            case Metric::weight_enumerator: {
                const std::vector<long long> a = codeword_weights(g);
                std::string row;
                for (size_t w = 1; w < a.size(); ++w)
                    if (a[w]) {
                        if (!row.empty()) row += ' ';
                        row += std::to_string(w) + ":" + std::to_string(a[w]);
                    }
                distinct.insert(row);
                rep.rows.push_back(std::move(row));
                break;
            }
            case Metric::self_orthogonality: {
                const bool e = is_self_orthogonal(g, OrthForm::euclidean);
                const bool h =
                    g.q() == 4 && is_self_orthogonal(g, OrthForm::hermitian);
                if (e && h)
                    rep.rows.push_back("euclidean+hermitian");
                else if (e)
                    rep.rows.push_back("euclidean");
                else if (h)
                    rep.rows.push_back("hermitian");
                else
                    rep.rows.push_back("none");
                eu += e;
                he += h;
                none += !e && !h;
                break;
            }
        }
    }
    switch (metric) {
        case Metric::minimal_codewords:
        case Metric::aut_order:
            rep.numeric = true;
            rep.aggregate = rep.rows.empty()
                                ? "empty"
                                : "min=" + std::to_string(rep.agg_min) +
                                      " max=" + std::to_string(rep.agg_max);
            break;
        case Metric::weight_enumerator:
            rep.aggregate = "distinct=" + std::to_string(distinct.size());
            break;
        case Metric::self_orthogonality:
            rep.aggregate = "euclidean=" + std::to_string(eu) +
                            " hermitian=" + std::to_string(he) +
                            " none=" + std::to_string(none);
            break;
    }
    return rep;
}

int shard_of(const Mat& g, int total) {
    if (total < 1) throw UsageError("shard total must be positive");
    const InvariantKey key = invariant_key(g);
    uint64_t h = 1469598103934665603ull;
    for (uint64_t part : {key.weights, key.mults, key.coords}) {
        h ^= part;
        h *= 1099511628211ull;
    }
    return (int)(h % (uint64_t)total);
}

std::vector<CodeList> shard_split(const CodeList& list, int total) {
    if (total < 1) throw UsageError("shard total must be positive");
    std::vector<CodeList> out((size_t)total);
    for (auto& part : out) part.q = list.q;
    for (const Mat& g : list.codes)
        out[(size_t)shard_of(g, total)].codes.push_back(g);
    return out;
}

CodeList merge_lists(const std::vector<CodeList>& parts) {
    CodeList out;
    if (parts.empty()) return out;
    out.q = parts[0].q;
    for (const CodeList& part : parts) {
        if (part.q != out.q)
            throw std::runtime_error("merge: shards disagree on the field");
        out.codes.insert(out.codes.end(), part.codes.begin(), part.codes.end());
    }
    std::sort(out.codes.begin(), out.codes.end());
    return out;
}

}  // namespace linclass

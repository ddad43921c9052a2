#include <cstdio>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "linclass/cli.hpp"

using namespace linclass;

namespace {

int cmd_classify(const ClassifyConfig& cfg) {
    const ClassifyReport rep = run_classify(cfg);
    for (const LevelCount& lc : rep.levels)
        printf("level n=%d classes=%zu\n", lc.length, lc.classes);
    printf("time_ms=%.0f\n", rep.wall_ms);
    printf("classes=%zu\n", rep.codes.codes.size());
    return 0;
}

int cmd_extend(const ExtendConfig& cfg) {
    const CodeList out = run_extend(load_clf(cfg.input_file), cfg);
    if (!cfg.output_file.empty()) save_clf(cfg.output_file, out);
    printf("classes=%zu\n", out.codes.size());
    return 0;
}

int cmd_analyze(const std::string& input, Metric metric) {
    const CodeList list = load_clf(input);
    const AnalyzeReport rep = run_analyze(list, metric);
    for (size_t i = 0; i < rep.rows.size(); ++i)
        printf("%zu\t%s\n", i + 1, rep.rows[i].c_str());
    printf("%s\n", rep.aggregate.c_str());
    return 0;
}

int cmd_shard(const std::string& input, int total, const std::string& prefix) {
    const CodeList list = load_clf(input);
    const std::vector<CodeList> parts = shard_split(list, total);
    for (int i = 0; i < total; ++i) {
        const std::string path = prefix + "." + std::to_string(i) + ".clf";
        save_clf(path, parts[(size_t)i]);
        printf("shard %d classes=%zu\n", i, parts[(size_t)i].codes.size());
    }
    return 0;
}

int cmd_merge(const std::string& prefix, int total, const std::string& output) {
    std::vector<CodeList> parts;
    for (int i = 0; i < total; ++i) {
        const std::string path = prefix + "." + std::to_string(i) + ".clf";
        try {
            parts.push_back(load_clf(path));
        } catch (const std::runtime_error&) {
            throw std::runtime_error("merge incomplete: missing shard " + path);
        }
    }
    const CodeList out = merge_lists(parts);
    if (!output.empty()) save_clf(output, out);
    printf("classes=%zu\n", out.codes.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of linear codes over small fields"};
    app.require_subcommand(1);

    ClassifyConfig ccfg;
    std::string so_name, algo_name = "aug-col";
    CLI::App* classify = app.add_subcommand("classify", "enumerate all classes");
    classify->add_option("--q", ccfg.q, "field size (2, 3 or 4)")->required();
    classify->add_option("--n", ccfg.n, "code length")->required();
    classify->add_option("--k", ccfg.k, "dimension")->required();
    classify->add_option("--dmin", ccfg.dmin, "minimum distance bound");
    classify->add_option("--ddual", ccfg.ddual, "dual distance bound");
    classify->add_option("--delta", ccfg.delta, "weight divisor");
    classify->add_flag("--even", ccfg.even, "even codes only");
    classify->add_option("--so", so_name, "self-orthogonality form")
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    classify->add_option("--algo", algo_name, "engine")
        ->check(CLI::IsMember({"aug-col", "aug-row", "lattice"}));
    classify->add_option("--seeds", ccfg.seed_file, "CLF with starting codes");
    classify->add_option("--shard-index", ccfg.shard_index, "this shard");
    classify->add_option("--shard-total", ccfg.shard_total, "number of shards");
    classify->add_option("-o,--output", ccfg.output_file, "CLF destination");
    classify->add_option("--checkpoint", ccfg.checkpoint_file,
                         "level checkpoint file");

    ExtendConfig ecfg;
    CLI::App* extend = app.add_subcommand("extend", "lengthen a code list");
    extend->add_option("-i,--input", ecfg.input_file, "seed CLF")->required();
    extend->add_option("--r", ecfg.r, "columns to add")->required();
    extend->add_option("--delta", ecfg.delta, "weight divisor");
    extend->add_option("--wa", ecfg.a, "window start, in delta units");
    extend->add_option("--wb", ecfg.b, "window end, in delta units");
    extend->add_option("-o,--output", ecfg.output_file, "CLF destination");

    std::string an_input, metric_name;
    CLI::App* analyze = app.add_subcommand("analyze", "per-code metrics");
    analyze->add_option("-i,--input", an_input, "CLF to inspect")->required();
    analyze->add_option("--metric", metric_name, "what to compute")
        ->required()
        ->check(CLI::IsMember({"minimal-codewords", "weight-enumerator",
                               "aut-order", "self-orthogonality"}));

    std::string sh_input, sh_prefix;
    int sh_total = 1;
    CLI::App* shard = app.add_subcommand("shard", "split a CLF into buckets");
    shard->add_option("-i,--input", sh_input, "CLF to split")->required();
    shard->add_option("--total", sh_total, "number of shards")->required();
    shard->add_option("--out-prefix", sh_prefix, "output name prefix")->required();

    std::string mg_prefix, mg_output;
    int mg_total = 1;
    CLI::App* merge = app.add_subcommand("merge", "combine shard outputs");
    merge->add_option("--in-prefix", mg_prefix, "shard name prefix")->required();
    merge->add_option("--total", mg_total, "number of shards")->required();
    merge->add_option("-o,--output", mg_output, "CLF destination");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fprintf(stderr, "%s\n", e.what());
        return 1;
    }

    try {
        if (classify->parsed()) {
            if (so_name == "euclidean") ccfg.self_orth = OrthForm::euclidean;
            if (so_name == "hermitian") ccfg.self_orth = OrthForm::hermitian;
            if (algo_name == "aug-row") ccfg.algo = Algo::aug_row;
            if (algo_name == "lattice") ccfg.algo = Algo::lattice;
            return cmd_classify(ccfg);
        }
        if (extend->parsed()) return cmd_extend(ecfg);
        if (analyze->parsed()) {
            static const std::map<std::string, Metric> metrics = {
                {"minimal-codewords", Metric::minimal_codewords},
                {"weight-enumerator", Metric::weight_enumerator},
                {"aut-order", Metric::aut_order},
                {"self-orthogonality", Metric::self_orthogonality},
            };
            return cmd_analyze(an_input, metrics.at(metric_name));
        }
        if (shard->parsed()) return cmd_shard(sh_input, sh_total, sh_prefix);
        if (merge->parsed()) return cmd_merge(mg_prefix, mg_total, mg_output);
    } catch (const UsageError& e) {
        fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

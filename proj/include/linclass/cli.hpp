#ifndef LINCLASS_CLI_HPP
#define LINCLASS_CLI_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linclass/clf.hpp"
#include "linclass/code.hpp"

namespace linclass {

// bad flag combinations, reported before any work starts (exit code 1; every
// other failure is a runtime error, exit code 2)
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Algo { aug_col, aug_row, lattice };

struct ClassifyConfig {
    int q = 2, n = 0, k = 0;
    int dmin = 1, ddual = 1, delta = 1;
    bool even = false;  // folds a factor 2 into the weight divisor
    std::optional<OrthForm> self_orth;
    Algo algo = Algo::aug_col;
    int shard_index = 0, shard_total = 1;  // only meaningful with seeds
    std::string seed_file;        // CLF of equal-length starting codes
    std::string output_file;      // CLF destination, empty = in-memory only
    std::string checkpoint_file;  // rewritten after every completed level
};

struct LevelCount {
    int length = 0;
    size_t classes = 0;
};

struct ClassifyReport {
    CodeList codes;
    std::vector<LevelCount> levels;
    double wall_ms = 0;
};

// Dispatches to the column, row, or lattice engine and applies the shard
// filter to the seed list. The returned list is complete, deduplicated, and
// sorted; it is also written to output_file when one is given.
ClassifyReport run_classify(const ClassifyConfig& cfg);

// Window parameters mirror the lengthening problem: r columns added, target
// weights delta*a..delta*b.
struct ExtendConfig {
    int r = 1, delta = 1, a = 1, b = 1;
    std::string input_file, output_file;
};

// Lengthens every seed, applies the multiplicity and residual-comparison
// filters, and deduplicates the union. Seeds whose minimum column
// multiplicity is below r contribute nothing.
CodeList run_extend(const CodeList& seeds, const ExtendConfig& cfg);

enum class Metric {
    minimal_codewords,
    weight_enumerator,
    aut_order,
    self_orthogonality,
};

struct AnalyzeReport {
    std::vector<std::string> rows;  // one formatted value per input code
    std::string aggregate;
    bool numeric = false;
    long long agg_min = 0, agg_max = 0;  // set when numeric
};

AnalyzeReport run_analyze(const CodeList& list, Metric metric);

// Deterministic bucket of a code: a hash of its invariant key modulo total.
// Equivalent codes always land in the same shard.
int shard_of(const Mat& g, int total);

std::vector<CodeList> shard_split(const CodeList& list, int total);

// Concatenation plus sort; parts must share one field. Applied to complete
// shard outputs this reproduces the unsharded list byte for byte.
CodeList merge_lists(const std::vector<CodeList>& parts);

}  // namespace linclass

#endif

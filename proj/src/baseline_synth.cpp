#include "synthcat/baseline_synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synthcat/bn_synth.hpp"
#include "synthcat/errors.hpp"
#include "synthcat/metrics.hpp"
#include "synthcat/rng.hpp"

namespace synthcat {

PrivacyBudget PrivacyBudget::with_epsilon(double epsilon) {
    if (!(epsilon > 0.0)) throw InputError("epsilon must be positive (or use the off budget)");
    return PrivacyBudget(epsilon, true);
}

BayesNet fit_independent(const DataTable& data, const PrivacyBudget& budget,
                         std::uint64_t noise_seed) {
    if (data.empty()) throw InputError("cannot fit on an empty table");
    const CategoricalSchema& schema = data.schema();
    RngStream noise_root(noise_seed);

    std::vector<Cpt> cpts;
    cpts.reserve(schema.size());
    for (std::size_t col = 0; col < schema.size(); ++col) {
        auto counts = data.column_counts(col);
        std::vector<double> mass(counts.begin(), counts.end());
        if (budget.enabled()) {
            double scale = static_cast<double>(schema.size()) / budget.epsilon();
            RngStream column_stream = noise_root.substream(col);
            for (double& m : mass) m = std::max(0.0, m + column_stream.next_laplace(scale));
        }
        double total = 0.0;
        for (double m : mass) total += m;
        if (total <= 0.0) {
            throw NumericError("privacy noise clamped every count of '" +
                               schema.variable(col).name + "' to zero; degenerate marginal");
        }
        for (double& m : mass) m /= total;
        cpts.emplace_back(schema, schema.variable(col).name, std::vector<std::string>{},
                          std::vector<Distribution>{Distribution(std::move(mass))});
    }
    return BayesNet(Dag::empty(data.schema_ptr()), std::move(cpts));
}

namespace {

// Plug-in MI (bits) between column `node` and the joint of `parents`,
// parents addressed in a mixed-radix flat index.
double parent_set_mi(const DataTable& data, std::size_t node,
                     const std::vector<std::size_t>& parents) {
    if (parents.empty()) return 0.0;
    const CategoricalSchema& schema = data.schema();
    std::size_t configs = 1;
    for (std::size_t p : parents) configs *= schema.variable(p).cardinality();

    std::vector<std::vector<double>> joint(configs,
                                           std::vector<double>(schema.variable(node).cardinality(), 0.0));
    for (std::size_t r = 0; r < data.row_count(); ++r) {
        std::size_t config = 0;
        for (std::size_t p : parents) {
            config = config * schema.variable(p).cardinality() + data.at(r, p);
        }
        joint[config][data.at(r, node)] += 1.0;
    }
    return pair_mutual_information(joint);
}

// Subsets of `placed` (declaration-sorted) of size <= k, enumerated by size
// then lexicographically; the empty set comes first.
void enumerate_subsets(const std::vector<std::size_t>& placed, std::size_t k,
                       std::vector<std::vector<std::size_t>>& out) {
    out.push_back({});
    std::vector<std::size_t> current;
    auto recurse = [&](auto&& self, std::size_t start, std::size_t size) -> void {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < placed.size(); ++i) {
            current.push_back(placed[i]);
            self(self, i + 1, size);
            current.pop_back();
        }
    };
    for (std::size_t size = 1; size <= std::min(k, placed.size()); ++size) {
        recurse(recurse, 0, size);
    }
}

} // namespace

Dag learn_structure(const DataTable& data, const StructureOptions& opts,
                    const PrivacyBudget& budget) {
    (void)budget; // scores are computed on raw counts
    if (data.empty()) throw InputError("cannot learn structure from an empty table");
    const CategoricalSchema& schema = data.schema();
    if (schema.size() < 2) throw InputError("structure learning needs at least 2 columns");

    std::vector<std::vector<std::size_t>> parent_lists(schema.size());
    if (opts.max_parents == 0) return Dag(data.schema_ptr(), std::move(parent_lists));

    // First placement: maximum-entropy column, declaration order on ties.
    std::size_t first = 0;
    double best_entropy = -1.0;
    for (std::size_t col = 0; col < schema.size(); ++col) {
        auto counts = data.column_counts(col);
        double total = static_cast<double>(data.row_count());
        double h = 0.0;
        for (std::size_t c : counts) {
            if (c > 0) {
                double p = static_cast<double>(c) / total;
                h -= p * std::log2(p);
            }
        }
        if (h > best_entropy + 1e-12) {
            best_entropy = h;
            first = col;
        }
    }

    std::vector<std::size_t> placed{first};
    std::vector<bool> is_placed(schema.size(), false);
    is_placed[first] = true;

    while (placed.size() < schema.size()) {
        std::vector<std::size_t> placed_sorted = placed;
        std::sort(placed_sorted.begin(), placed_sorted.end());
        std::vector<std::vector<std::size_t>> candidates;
        enumerate_subsets(placed_sorted, opts.max_parents, candidates);

        std::size_t best_node = schema.size();
        const std::vector<std::size_t>* best_set = nullptr;
        double best_score = -1.0;
        for (std::size_t node = 0; node < schema.size(); ++node) {
            if (is_placed[node]) continue;
            for (const auto& candidate : candidates) {
                double score = parent_set_mi(data, node, candidate);
                // Declaration-order tie rule: higher score wins; then the
                // earlier node; candidates are already enumerated smallest
                // set first, lexicographic within a size.
                if (score > best_score + 1e-12 ||
                    (std::abs(score - best_score) <= 1e-12 && node < best_node)) {
                    best_score = score;
                    best_node = node;
                    best_set = &candidate;
                }
            }
        }
        parent_lists[best_node] = *best_set;
        is_placed[best_node] = true;
        placed.push_back(best_node);
    }
    return Dag(data.schema_ptr(), std::move(parent_lists));
}

std::vector<Cpt> fit_correlated(const DataTable& data, const Dag& dag,
                                const PrivacyBudget& budget, std::uint64_t noise_seed) {
    if (!budget.enabled()) {
        return fit_cpts(data, dag, FitOptions{1.0});
    }
    if (data.empty()) throw InputError("cannot fit on an empty table");
    if (!(data.schema() == dag.schema())) throw InputError("data and dag schemas differ");

    const CategoricalSchema& schema = data.schema();
    const double scale = static_cast<double>(schema.size()) / budget.epsilon();
    RngStream noise_root(noise_seed);

    std::vector<Cpt> cpts;
    cpts.reserve(schema.size());
    for (std::size_t node = 0; node < schema.size(); ++node) {
        const auto& parents = dag.parents(node);
        const std::size_t card = schema.variable(node).cardinality();
        std::size_t rows = 1;
        for (std::size_t p : parents) rows *= schema.variable(p).cardinality();

        std::vector<double> counts(rows * card, 0.0);
        for (std::size_t r = 0; r < data.row_count(); ++r) {
            std::size_t config = 0;
            for (std::size_t p : parents) {
                config = config * schema.variable(p).cardinality() + data.at(r, p);
            }
            counts[config * card + data.at(r, node)] += 1.0;
        }

        RngStream node_stream = noise_root.substream(node);
        std::vector<Distribution> table;
        table.reserve(rows);
        for (std::size_t config = 0; config < rows; ++config) {
            RngStream row_stream = node_stream.substream(config);
            std::vector<double> noisy(card);
            double total = 0.0;
            for (std::size_t c = 0; c < card; ++c) {
                noisy[c] = std::max(0.0, counts[config * card + c] + row_stream.next_laplace(scale));
                total += noisy[c];
            }
            if (total <= 0.0) {
                table.push_back(Distribution::uniform(card));
            } else {
                for (double& v : noisy) v /= total;
                table.emplace_back(std::move(noisy));
            }
        }

        std::vector<std::string> parent_names;
        for (std::size_t p : parents) parent_names.push_back(schema.variable(p).name);
        cpts.emplace_back(schema, schema.variable(node).name, std::move(parent_names),
                          std::move(table));
    }
    return cpts;
}

} // namespace synthcat

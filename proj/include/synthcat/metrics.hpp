#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synthcat/data_table.hpp"
#include "synthcat/distribution.hpp"
#include "synthcat/schema.hpp"

namespace synthcat {

// Log conventions: KL divergence uses the natural log; entropy and mutual
// information are in bits.

struct ColumnMetrics {
    double chi_square = 0.0;
    double p_value = 1.0;
    std::size_t degrees_of_freedom = 1;
    double kl = 0.0;
    double tvd = 1.0;
};

struct ChiSquareResult {
    double statistic;
    std::size_t degrees_of_freedom;
    double p_value;
};

struct NodeEntropy {
    std::string node;
    double real = 0.0;
    double synth = 0.0;
};

struct EdgeMutualInformation {
    std::string source;
    std::string target;
    double real = 0.0;
    double synth = 0.0;
};

struct StructureMetrics {
    std::vector<NodeEntropy> entropy;
    std::vector<EdgeMutualInformation> mutual_information;
};

struct Aggregates {
    double kl_median = 0.0;
    double chi_square_median = 0.0;
    double tvd_mean = 0.0;
};

struct HistogramColumn {
    std::string column;
    std::vector<std::string> categories;
    std::vector<double> real_freq;
    std::vector<double> synth_freq;
};

struct EvalReport {
    std::vector<std::string> columns;
    std::vector<ColumnMetrics> column_metrics;
    StructureMetrics structure;
    Aggregates aggregates;
    std::vector<HistogramColumn> histograms;
};

// Similarity score 1 - 0.5 * sum |R - S|: 1 for identical marginals, 0 for
// disjoint support.
double column_tvd(const Distribution& real, const Distribution& synth);

// KL(real || synth) in nats after adding `smoothing` mass to every synth
// category and renormalizing.
double column_kl(const Distribution& real, const Distribution& synth, double smoothing = 1e-9);

// Goodness of fit of synthetic counts against expectations scaled from the
// real proportions. Categories with expected count < 5 are merged first:
// ordinals into the adjacent category, nominals into the largest one.
// Fewer than two categories after merging is an input error.
ChiSquareResult column_chi_square(std::span<const std::size_t> real_counts,
                                  std::span<const std::size_t> synth_counts,
                                  VariableKind kind = VariableKind::Nominal);

// Shannon entropy in bits, 0 log 0 := 0.
double node_entropy(const Distribution& marginal);

// Plug-in mutual information in bits from a joint count (or frequency)
// table; zero cells contribute zero.
double pair_mutual_information(const std::vector<std::vector<double>>& joint_counts);

struct MethodEvaluation {
    std::string method;
    std::vector<std::string> columns;
    std::vector<ColumnMetrics> metrics;
};

struct MethodScore {
    std::string method;
    std::vector<std::string> columns;
    std::vector<ColumnMetrics> metrics;
    Aggregates aggregates;
    bool gate_passed = false;
    std::optional<std::size_t> rank; // assigned only when the gate passed
};

// Gate: every column's p-value >= alpha. Passing methods are ranked by mean
// TVD descending; TVDs within 1e-4 fall back to median KL ascending, then
// method id, so the result never depends on input order.
std::vector<MethodScore> rank_methods(std::vector<MethodEvaluation> methods, double alpha);

// Full metric suite over a (real, synthetic) pair sharing one schema:
// per-column chi-square/KL/TVD, per-node entropy, mutual information over
// the designated edges, aggregates, and per-column histogram data.
EvalReport evaluate_pair(const DataTable& real, const DataTable& synth,
                         const std::vector<std::pair<std::string, std::string>>& edges);

} // namespace synthcat

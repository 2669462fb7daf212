#include "synthcat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synthcat/errors.hpp"
#include "synthcat/special_functions.hpp"

namespace synthcat {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

Distribution marginal_of_counts(const std::vector<std::size_t>& counts) {
    double total = 0.0;
    for (std::size_t c : counts) total += static_cast<double>(c);
    if (total <= 0.0) throw InputError("cannot form a marginal from all-zero counts");
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        probs[i] = static_cast<double>(counts[i]) / total;
    }
    return Distribution(std::move(probs));
}

} // namespace

double column_tvd(const Distribution& real, const Distribution& synth) {
    if (real.size() != synth.size()) {
        throw InputError("tvd needs marginals over the same category set");
    }
    double l1 = 0.0;
    for (std::size_t i = 0; i < real.size(); ++i) l1 += std::abs(real[i] - synth[i]);
    return 1.0 - 0.5 * l1;
}

double column_kl(const Distribution& real, const Distribution& synth, double smoothing) {
    if (real.size() != synth.size()) {
        throw InputError("kl needs marginals over the same category set");
    }
    if (smoothing < 0.0) throw InputError("kl smoothing must be >= 0");
    const double denom = 1.0 + smoothing * static_cast<double>(synth.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < real.size(); ++i) {
        if (real[i] <= 0.0) continue;
        double q = (synth[i] + smoothing) / denom;
        sum += real[i] * std::log(real[i] / q);
    }
    return sum;
}

ChiSquareResult column_chi_square(std::span<const std::size_t> real_counts,
                                  std::span<const std::size_t> synth_counts,
                                  VariableKind kind) {
    if (real_counts.size() != synth_counts.size()) {
        throw InputError("chi-square needs counts over the same category set");
    }
    if (real_counts.size() < 2) throw InputError("chi-square needs at least 2 categories");

    double real_total = 0.0;
    double synth_total = 0.0;
    for (std::size_t c : real_counts) real_total += static_cast<double>(c);
    for (std::size_t c : synth_counts) synth_total += static_cast<double>(c);
    if (real_total <= 0.0) throw InputError("chi-square needs a non-empty real column");

    struct Bucket {
        double expected;
        double observed;
    };
    std::vector<Bucket> buckets;
    buckets.reserve(real_counts.size());
    for (std::size_t i = 0; i < real_counts.size(); ++i) {
        buckets.push_back({static_cast<double>(real_counts[i]) / real_total * synth_total,
                           static_cast<double>(synth_counts[i])});
    }

    auto smallest = [&]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < buckets.size(); ++i) {
            if (buckets[i].expected < buckets[best].expected) best = i;
        }
        return best;
    };

    while (buckets.size() > 1) {
        std::size_t small = smallest();
        if (buckets[small].expected >= 5.0) break;
        std::size_t into;
        if (kind == VariableKind::Ordinal) {
            into = (small + 1 < buckets.size()) ? small + 1 : small - 1;
        } else {
            into = (small == 0) ? 1 : 0;
            for (std::size_t i = 0; i < buckets.size(); ++i) {
                if (i != small && buckets[i].expected > buckets[into].expected) into = i;
            }
        }
        buckets[into].expected += buckets[small].expected;
        buckets[into].observed += buckets[small].observed;
        buckets.erase(buckets.begin() + static_cast<std::ptrdiff_t>(small));
    }

    if (buckets.size() < 2 || buckets[smallest()].expected < 5.0) {
        throw InputError("chi-square undefined: fewer than 2 usable categories after "
                         "merging expected counts below 5");
    }

    double statistic = 0.0;
    for (const auto& b : buckets) {
        double diff = b.observed - b.expected;
        statistic += diff * diff / b.expected;
    }
    std::size_t dof = buckets.size() - 1;
    return ChiSquareResult{statistic, dof, chi_square_upper_tail(statistic, dof)};
}

double node_entropy(const Distribution& marginal) {
    double h = 0.0;
    for (std::size_t i = 0; i < marginal.size(); ++i) {
        if (marginal[i] > 0.0) h -= marginal[i] * std::log2(marginal[i]);
    }
    return h;
}

double pair_mutual_information(const std::vector<std::vector<double>>& joint_counts) {
    if (joint_counts.empty() || joint_counts.front().empty()) {
        throw InputError("mutual information needs a non-empty joint table");
    }
    const std::size_t rows = joint_counts.size();
    const std::size_t cols = joint_counts.front().size();
    double total = 0.0;
    for (const auto& row : joint_counts) {
        if (row.size() != cols) throw InputError("ragged joint table");
        for (double v : row) {
            if (v < 0.0) throw InputError("joint counts must be non-negative");
            total += v;
        }
    }
    if (total <= 0.0) throw InputError("mutual information needs a positive total count");

    std::vector<double> px(rows, 0.0);
    std::vector<double> py(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            px[i] += joint_counts[i][j] / total;
            py[j] += joint_counts[i][j] / total;
        }
    }
    double mi = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            double p = joint_counts[i][j] / total;
            if (p > 0.0) mi += p * std::log2(p / (px[i] * py[j]));
        }
    }
    return mi;
}

std::vector<MethodScore> rank_methods(std::vector<MethodEvaluation> methods, double alpha) {
    if (methods.empty()) throw InputError("rank_methods needs at least one method");
    const auto& reference = methods.front().columns;
    for (const auto& m : methods) {
        if (m.columns != reference || m.metrics.size() != m.columns.size()) {
            throw InputError("every method must be evaluated on identical columns");
        }
    }

    std::vector<MethodScore> scores;
    scores.reserve(methods.size());
    for (auto& m : methods) {
        MethodScore s;
        s.method = std::move(m.method);
        s.columns = std::move(m.columns);
        s.metrics = std::move(m.metrics);

        std::vector<double> kls, chis;
        double tvd_sum = 0.0;
        bool pass = true;
        for (const auto& cm : s.metrics) {
            kls.push_back(cm.kl);
            chis.push_back(cm.chi_square);
            tvd_sum += cm.tvd;
            if (cm.p_value < alpha) pass = false;
        }
        s.aggregates.kl_median = median(std::move(kls));
        s.aggregates.chi_square_median = median(std::move(chis));
        s.aggregates.tvd_mean = tvd_sum / static_cast<double>(s.metrics.size());
        s.gate_passed = pass;
        scores.push_back(std::move(s));
    }

    // TVD quantized at the tie tolerance keeps the comparison transitive;
    // within a bucket the KL median and method id give a total order.
    auto tvd_bucket = [](double tvd) { return std::llround(tvd / 1e-4); };
    std::sort(scores.begin(), scores.end(), [&](const MethodScore& a, const MethodScore& b) {
        if (a.gate_passed != b.gate_passed) return a.gate_passed;
        auto ba = tvd_bucket(a.aggregates.tvd_mean);
        auto bb = tvd_bucket(b.aggregates.tvd_mean);
        if (ba != bb) return ba > bb;
        if (a.aggregates.kl_median != b.aggregates.kl_median) {
            return a.aggregates.kl_median < b.aggregates.kl_median;
        }
        return a.method < b.method;
    });
    std::size_t next_rank = 1;
    for (auto& s : scores) {
        if (s.gate_passed) s.rank = next_rank++;
    }
    return scores;
}

EvalReport evaluate_pair(const DataTable& real, const DataTable& synth,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    if (!(real.schema() == synth.schema())) {
        throw InputError("evaluate_pair needs tables over the same schema");
    }
    if (real.empty() || synth.empty()) throw InputError("evaluate_pair needs non-empty tables");

    const CategoricalSchema& schema = real.schema();
    EvalReport report;
    for (std::size_t c = 0; c < schema.size(); ++c) {
        const VariableSpec& var = schema.variable(c);
        report.columns.push_back(var.name);

        auto real_counts = real.column_counts(c);
        auto synth_counts = synth.column_counts(c);
        Distribution real_marg = marginal_of_counts(real_counts);
        Distribution synth_marg = marginal_of_counts(synth_counts);

        ColumnMetrics cm;
        auto chi = column_chi_square(real_counts, synth_counts, var.kind);
        cm.chi_square = chi.statistic;
        cm.degrees_of_freedom = chi.degrees_of_freedom;
        cm.p_value = chi.p_value;
        cm.kl = column_kl(real_marg, synth_marg);
        cm.tvd = column_tvd(real_marg, synth_marg);
        report.column_metrics.push_back(cm);

        report.structure.entropy.push_back(
            {var.name, node_entropy(real_marg), node_entropy(synth_marg)});

        HistogramColumn hist;
        hist.column = var.name;
        hist.categories = var.categories;
        hist.real_freq = real_marg.probabilities();
        hist.synth_freq = synth_marg.probabilities();
        report.histograms.push_back(std::move(hist));
    }

    auto joint_of = [](const DataTable& t, std::size_t a, std::size_t b) {
        std::vector<std::vector<double>> joint(
            t.schema().variable(a).cardinality(),
            std::vector<double>(t.schema().variable(b).cardinality(), 0.0));
        for (std::size_t r = 0; r < t.row_count(); ++r) joint[t.at(r, a)][t.at(r, b)] += 1.0;
        return joint;
    };
    for (const auto& [source, target] : edges) {
        std::size_t a = schema.index_of(source);
        std::size_t b = schema.index_of(target);
        report.structure.mutual_information.push_back(
            {source, target, pair_mutual_information(joint_of(real, a, b)),
             pair_mutual_information(joint_of(synth, a, b))});
    }

    std::vector<double> kls, chis;
    double tvd_sum = 0.0;
    for (const auto& cm : report.column_metrics) {
        kls.push_back(cm.kl);
        chis.push_back(cm.chi_square);
        tvd_sum += cm.tvd;
    }
    report.aggregates.kl_median = median(std::move(kls));
    report.aggregates.chi_square_median = median(std::move(chis));
    report.aggregates.tvd_mean = tvd_sum / static_cast<double>(report.column_metrics.size());
    return report;
}

} // namespace synthcat

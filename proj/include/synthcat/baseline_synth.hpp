#pragma once

#include <cstdint>
#include <vector>

#include "synthcat/bayes_net.hpp"
#include "synthcat/cpt.hpp"
#include "synthcat/dag.hpp"
#include "synthcat/data_table.hpp"

namespace synthcat {

// Differential-privacy knob: either off (exact counts) or a positive
// epsilon. Smaller epsilon injects more Laplace noise.
class PrivacyBudget {
  public:
    static PrivacyBudget off() { return PrivacyBudget(0.0, false); }
    static PrivacyBudget with_epsilon(double epsilon);

    bool enabled() const { return enabled_; }
    double epsilon() const { return epsilon_; }

  private:
    PrivacyBudget(double epsilon, bool enabled) : epsilon_(epsilon), enabled_(enabled) {}
    double epsilon_;
    bool enabled_;
};

enum class TieBreak { DeclarationOrder };

struct StructureOptions {
    std::size_t max_parents = 2;
    TieBreak tie_break = TieBreak::DeclarationOrder;
};

// Independent attribute mode: per-column marginals over the empty graph.
// With the budget enabled each count is perturbed by Laplace noise of scale
// column_count / epsilon (even budget split, count sensitivity 1), clamped
// at zero and renormalized; a column whose noisy counts all clamp to zero
// is an error. The noise stream is keyed by noise_seed.
BayesNet fit_independent(const DataTable& data, const PrivacyBudget& budget,
                         std::uint64_t noise_seed = 0);

// Greedy structure learning: the first node is the maximum-entropy column;
// each following step attaches the (node, parent set) pair with the highest
// plug-in mutual information, parent sets drawn from already-placed nodes up
// to max_parents. Scores use raw counts, so the result depends only on
// (data, opts); the budget applies to CPT fitting, not the search.
Dag learn_structure(const DataTable& data, const StructureOptions& opts,
                    const PrivacyBudget& budget = PrivacyBudget::off());

// Correlated attribute mode CPTs for a given structure. With the budget
// enabled, conditional counts get Laplace noise of scale node_count /
// epsilon, are clamped at zero and normalized, with the uniform row standing
// in for empty parent configurations. With the budget off this is exactly
// fit_cpts with smoothing_alpha = 1.
std::vector<Cpt> fit_correlated(const DataTable& data, const Dag& dag,
                                const PrivacyBudget& budget, std::uint64_t noise_seed = 0);

} // namespace synthcat

#pragma once

#include <cstdint>
#include <vector>

#include "synthcat/bayes_net.hpp"
#include "synthcat/cpt.hpp"
#include "synthcat/dag.hpp"
#include "synthcat/data_table.hpp"

namespace synthcat {

struct FitOptions {
    // Pseudo-count added to every category of every CPT row. With a
    // positive alpha an unseen parent configuration falls back to the
    // uniform row; with alpha = 0 it is an error instead.
    double smoothing_alpha = 1.0;
};

struct SampleRequest {
    std::size_t n_rows = 1;
    std::uint64_t seed = 0;
};

// Maximum-likelihood CPTs with additive smoothing:
// row[c] = (count(c | config) + alpha) / (total(config) + alpha * cardinality).
std::vector<Cpt> fit_cpts(const DataTable& data, const Dag& dag, const FitOptions& opts = {});

BayesNet fit_bayes_net(const DataTable& data, const Dag& dag, const FitOptions& opts = {});

// Ancestral sampling: each record walks the topological order, drawing every
// node from the CPT row selected by its already-sampled parents. Record r
// uses the seed's substream r, advancing one draw per node, so the output is
// a pure function of (model, request) and independent of record partitioning.
DataTable ancestral_sample(const BayesNet& model, const SampleRequest& request);

} // namespace synthcat

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "synthcat/bayes_net.hpp"
#include "synthcat/distribution.hpp"
#include "synthcat/schema.hpp"

namespace synthcat {

// Dense factor over an ordered variable scope; the first scope variable
// varies slowest, so a CPT flattens into a factor over parents + node
// without reshuffling.
struct Factor {
    std::vector<std::size_t> scope;
    std::vector<std::size_t> cardinalities;
    std::vector<double> values;
};

// Observed category index per variable name.
using Evidence = std::map<std::string, Category>;

enum class QueryDirection { Predictive, Diagnostic };

struct Query {
    std::string target;
    Evidence evidence;
    QueryDirection direction = QueryDirection::Predictive; // metadata only
};

// Exact posterior P(target | evidence) by sum-product variable elimination
// with a min-degree order (declaration-order ties). Evidence with zero
// probability is an EvidenceError.
Distribution posterior(const BayesNet& model, const Query& query);

// Same, with a caller-supplied elimination order over exactly the
// variables that are neither target nor evidence.
Distribution posterior(const BayesNet& model, const Query& query,
                       std::span<const std::string> elimination_order);

// Posterior with empty evidence.
Distribution marginal(const BayesNet& model, const std::string& variable);

struct EvidenceShift {
    Distribution prior;
    Distribution posterior;
    std::vector<double> delta; // posterior - prior, per category
};

EvidenceShift evidence_shift_report(const BayesNet& model, const Query& query);

} // namespace synthcat

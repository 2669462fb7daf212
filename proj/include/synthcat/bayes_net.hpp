#pragma once

#include <span>
#include <vector>

#include "synthcat/cpt.hpp"
#include "synthcat/dag.hpp"
#include "synthcat/data_table.hpp"
#include "synthcat/schema.hpp"

namespace synthcat {

// A fitted network: schema + structure + one CPT per node, all immutable.
// Construction checks that every node has a CPT whose parent list matches
// the dag.
class BayesNet {
  public:
    BayesNet(Dag dag, std::vector<Cpt> cpts);

    const CategoricalSchema& schema() const { return dag_.schema(); }
    const SchemaPtr& schema_ptr() const { return dag_.schema_ptr(); }
    const Dag& dag() const { return dag_; }
    const Cpt& cpt(std::size_t node) const { return cpts_[node]; }
    const std::vector<Cpt>& cpts() const { return cpts_; }
    std::size_t node_count() const { return cpts_.size(); }

  private:
    Dag dag_;
    std::vector<Cpt> cpts_; // aligned with schema order
};

// Product of per-node conditional probabilities for a full record.
double joint_probability(const BayesNet& model, std::span<const Category> record);

// Sum over records of log joint probability. A record the model assigns
// probability zero is an input error naming the row.
double log_likelihood(const DataTable& data, const BayesNet& model);

} // namespace synthcat

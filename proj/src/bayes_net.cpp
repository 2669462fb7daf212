#include "synthcat/bayes_net.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synthcat/errors.hpp"

namespace synthcat {

BayesNet::BayesNet(Dag dag, std::vector<Cpt> cpts) : dag_(std::move(dag)) {
    const CategoricalSchema& schema = dag_.schema();
    cpts_.reserve(schema.size());
    for (std::size_t node = 0; node < schema.size(); ++node) {
        const std::string& name = schema.variable(node).name;
        auto it = std::find_if(cpts.begin(), cpts.end(),
                               [&](const Cpt& c) { return c.node() == name; });
        if (it == cpts.end()) throw InputError("missing cpt for node '" + name + "'");

        const auto& dag_parents = dag_.parents(node);
        if (it->parents().size() != dag_parents.size()) {
            throw InputError("cpt parent list for '" + name + "' disagrees with the dag");
        }
        for (std::size_t i = 0; i < dag_parents.size(); ++i) {
            if (it->parents()[i] != schema.variable(dag_parents[i]).name) {
                throw InputError("cpt parent order for '" + name + "' disagrees with the dag");
            }
        }
        cpts_.push_back(std::move(*it));
        cpts.erase(it);
    }
    if (!cpts.empty()) {
        throw InputError("cpt for '" + cpts.front().node() + "' does not match any schema node");
    }
}

double joint_probability(const BayesNet& model, std::span<const Category> record) {
    const CategoricalSchema& schema = model.schema();
    if (record.size() != schema.size()) {
        throw InputError("joint probability needs a full record (one value per variable)");
    }
    double product = 1.0;
    std::vector<Category> parent_values;
    for (std::size_t node = 0; node < schema.size(); ++node) {
        if (record[node] >= schema.variable(node).cardinality()) {
            throw InputError("record value out of range for '" + schema.variable(node).name + "'");
        }
        parent_values.clear();
        for (std::size_t p : model.dag().parents(node)) parent_values.push_back(record[p]);
        product *= model.cpt(node).row_for(parent_values)[record[node]];
    }
    return product;
}

double log_likelihood(const DataTable& data, const BayesNet& model) {
    if (!(data.schema() == model.schema())) {
        throw InputError("log likelihood needs matching schemas");
    }
    double total = 0.0;
    std::vector<Category> parent_values;
    for (std::size_t r = 0; r < data.row_count(); ++r) {
        auto record = data.row(r);
        for (std::size_t node = 0; node < model.node_count(); ++node) {
            parent_values.clear();
            for (std::size_t p : model.dag().parents(node)) parent_values.push_back(record[p]);
            double p = model.cpt(node).row_for(parent_values)[record[node]];
            if (p <= 0.0) {
                throw InputError("record at row " + std::to_string(r) +
                                 " has probability zero under the model");
            }
            total += std::log(p);
        }
    }
    return total;
}

} // namespace synthcat

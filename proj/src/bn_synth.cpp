#include "synthcat/bn_synth.hpp"

#include <string>

#include "synthcat/errors.hpp"
#include "synthcat/rng.hpp"

namespace synthcat {

std::vector<Cpt> fit_cpts(const DataTable& data, const Dag& dag, const FitOptions& opts) {
    if (data.empty()) throw InputError("cannot fit cpts on an empty table");
    if (!(data.schema() == dag.schema())) throw InputError("data and dag schemas differ");
    if (opts.smoothing_alpha < 0.0) throw InputError("smoothing_alpha must be >= 0");

    const CategoricalSchema& schema = data.schema();
    const double alpha = opts.smoothing_alpha;
    std::vector<Cpt> cpts;
    cpts.reserve(schema.size());

    for (std::size_t node = 0; node < schema.size(); ++node) {
        const auto& parents = dag.parents(node);
        const std::size_t card = schema.variable(node).cardinality();
        std::size_t rows = 1;
        for (std::size_t p : parents) rows *= schema.variable(p).cardinality();

        std::vector<double> counts(rows * card, 0.0);
        std::vector<Category> parent_values(parents.size());
        // Mixed-radix row index, first declared parent slowest; same layout
        // Cpt::parent_config_index uses.
        for (std::size_t r = 0; r < data.row_count(); ++r) {
            std::size_t config = 0;
            for (std::size_t i = 0; i < parents.size(); ++i) {
                config = config * schema.variable(parents[i]).cardinality() +
                         data.at(r, parents[i]);
            }
            counts[config * card + data.at(r, node)] += 1.0;
        }

        std::vector<Distribution> table;
        table.reserve(rows);
        for (std::size_t config = 0; config < rows; ++config) {
            double total = 0.0;
            for (std::size_t c = 0; c < card; ++c) total += counts[config * card + c];
            if (total == 0.0 && alpha == 0.0) {
                throw InputError("unseen parent configuration for '" +
                                 schema.variable(node).name +
                                 "' with smoothing_alpha = 0; set smoothing_alpha > 0");
            }
            std::vector<double> probs(card);
            const double denom = total + alpha * static_cast<double>(card);
            for (std::size_t c = 0; c < card; ++c) {
                probs[c] = (counts[config * card + c] + alpha) / denom;
            }
            table.emplace_back(std::move(probs));
        }

        std::vector<std::string> parent_names;
        parent_names.reserve(parents.size());
        for (std::size_t p : parents) parent_names.push_back(schema.variable(p).name);
        cpts.emplace_back(schema, schema.variable(node).name, std::move(parent_names),
                          std::move(table));
    }
    return cpts;
}

BayesNet fit_bayes_net(const DataTable& data, const Dag& dag, const FitOptions& opts) {
    return BayesNet(dag, fit_cpts(data, dag, opts));
}

DataTable ancestral_sample(const BayesNet& model, const SampleRequest& request) {
    if (request.n_rows < 1) throw InputError("sample request needs n_rows >= 1");

    const CategoricalSchema& schema = model.schema();
    const auto& topo = model.dag().topo_order();
    RngStream root(request.seed);

    std::vector<Category> cells;
    cells.reserve(request.n_rows * schema.size());
    std::vector<Category> record(schema.size(), 0);
    std::vector<Category> parent_values;

    for (std::size_t r = 0; r < request.n_rows; ++r) {
        RngStream stream = root.substream(r);
        for (std::size_t node : topo) {
            parent_values.clear();
            for (std::size_t p : model.dag().parents(node)) parent_values.push_back(record[p]);
            const Distribution& row = model.cpt(node).row_for(parent_values);
            record[node] = static_cast<Category>(row.sample(stream.next_uniform()));
        }
        cells.insert(cells.end(), record.begin(), record.end());
    }
    return DataTable(model.schema_ptr(), std::move(cells));
}

} // namespace synthcat

#include "synthcat/inference.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "synthcat/errors.hpp"

namespace synthcat {

namespace {

std::size_t position_in_scope(const Factor& f, std::size_t var) {
    for (std::size_t i = 0; i < f.scope.size(); ++i) {
        if (f.scope[i] == var) return i;
    }
    return f.scope.size();
}

// Row-major strides: last scope variable has stride 1.
std::vector<std::size_t> strides_of(const Factor& f) {
    std::vector<std::size_t> strides(f.scope.size(), 1);
    for (std::size_t i = f.scope.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * f.cardinalities[i];
    }
    return strides;
}

Factor factor_from_cpt(const BayesNet& model, std::size_t node) {
    const Cpt& cpt = model.cpt(node);
    Factor f;
    for (std::size_t p : model.dag().parents(node)) {
        f.scope.push_back(p);
        f.cardinalities.push_back(model.schema().variable(p).cardinality());
    }
    f.scope.push_back(node);
    f.cardinalities.push_back(cpt.node_cardinality());
    f.values.reserve(cpt.row_count() * cpt.node_cardinality());
    for (std::size_t row = 0; row < cpt.row_count(); ++row) {
        const auto& probs = cpt.row(row).probabilities();
        f.values.insert(f.values.end(), probs.begin(), probs.end());
    }
    return f;
}

Factor reduce(const Factor& f, std::size_t var, Category value) {
    std::size_t pos = position_in_scope(f, var);
    if (pos == f.scope.size()) return f;

    Factor out;
    for (std::size_t i = 0; i < f.scope.size(); ++i) {
        if (i == pos) continue;
        out.scope.push_back(f.scope[i]);
        out.cardinalities.push_back(f.cardinalities[i]);
    }
    auto strides = strides_of(f);
    std::size_t out_size = 1;
    for (std::size_t c : out.cardinalities) out_size *= c;
    out.values.resize(out_size);

    std::vector<std::size_t> assignment(out.scope.size(), 0);
    for (std::size_t flat = 0; flat < out_size; ++flat) {
        std::size_t src = static_cast<std::size_t>(value) * strides[pos];
        for (std::size_t i = 0, j = 0; i < f.scope.size(); ++i) {
            if (i == pos) continue;
            src += assignment[j] * strides[i];
            ++j;
        }
        out.values[flat] = f.values[src];
        for (std::size_t i = out.scope.size(); i-- > 0;) {
            if (++assignment[i] < out.cardinalities[i]) break;
            assignment[i] = 0;
        }
    }
    return out;
}

Factor multiply(const Factor& a, const Factor& b) {
    Factor out;
    out.scope = a.scope;
    out.cardinalities = a.cardinalities;
    for (std::size_t i = 0; i < b.scope.size(); ++i) {
        if (position_in_scope(out, b.scope[i]) == out.scope.size()) {
            out.scope.push_back(b.scope[i]);
            out.cardinalities.push_back(b.cardinalities[i]);
        }
    }
    std::size_t out_size = 1;
    for (std::size_t c : out.cardinalities) out_size *= c;
    out.values.resize(out_size);

    // Strides of each operand along the output scope (0 where absent).
    auto map_strides = [&](const Factor& f) {
        std::vector<std::size_t> mapped(out.scope.size(), 0);
        auto strides = strides_of(f);
        for (std::size_t i = 0; i < out.scope.size(); ++i) {
            std::size_t pos = position_in_scope(f, out.scope[i]);
            if (pos < f.scope.size()) mapped[i] = strides[pos];
        }
        return mapped;
    };
    auto a_strides = map_strides(a);
    auto b_strides = map_strides(b);

    std::vector<std::size_t> assignment(out.scope.size(), 0);
    std::size_t a_index = 0;
    std::size_t b_index = 0;
    for (std::size_t flat = 0; flat < out_size; ++flat) {
        out.values[flat] = a.values[a_index] * b.values[b_index];
        for (std::size_t i = out.scope.size(); i-- > 0;) {
            if (++assignment[i] < out.cardinalities[i]) {
                a_index += a_strides[i];
                b_index += b_strides[i];
                break;
            }
            a_index -= a_strides[i] * (out.cardinalities[i] - 1);
            b_index -= b_strides[i] * (out.cardinalities[i] - 1);
            assignment[i] = 0;
        }
    }
    return out;
}

Factor sum_out(const Factor& f, std::size_t var) {
    std::size_t pos = position_in_scope(f, var);
    Factor out;
    for (std::size_t i = 0; i < f.scope.size(); ++i) {
        if (i == pos) continue;
        out.scope.push_back(f.scope[i]);
        out.cardinalities.push_back(f.cardinalities[i]);
    }
    std::size_t out_size = 1;
    for (std::size_t c : out.cardinalities) out_size *= c;
    out.values.assign(out_size, 0.0);

    auto strides = strides_of(f);
    std::vector<std::size_t> assignment(out.scope.size(), 0);
    for (std::size_t flat = 0; flat < out_size; ++flat) {
        std::size_t base = 0;
        for (std::size_t i = 0, j = 0; i < f.scope.size(); ++i) {
            if (i == pos) continue;
            base += assignment[j] * strides[i];
            ++j;
        }
        double sum = 0.0;
        for (Category v = 0; v < f.cardinalities[pos]; ++v) {
            sum += f.values[base + v * strides[pos]];
        }
        out.values[flat] = sum;
        for (std::size_t i = out.scope.size(); i-- > 0;) {
            if (++assignment[i] < out.cardinalities[i]) break;
            assignment[i] = 0;
        }
    }
    return out;
}

// Min-degree over the factor interaction graph; ties by declaration order.
std::vector<std::size_t> min_degree_order(const std::vector<Factor>& factors,
                                          const std::set<std::size_t>& to_eliminate) {
    std::map<std::size_t, std::set<std::size_t>> neighbors;
    for (std::size_t v : to_eliminate) neighbors[v];
    for (const auto& f : factors) {
        for (std::size_t a : f.scope) {
            if (!to_eliminate.count(a)) continue;
            for (std::size_t b : f.scope) {
                if (a != b && to_eliminate.count(b)) neighbors[a].insert(b);
            }
        }
    }
    std::vector<std::size_t> order;
    std::set<std::size_t> remaining = to_eliminate;
    while (!remaining.empty()) {
        std::size_t best = *remaining.begin();
        std::size_t best_degree = neighbors[best].size();
        for (std::size_t v : remaining) {
            if (neighbors[v].size() < best_degree) {
                best = v;
                best_degree = neighbors[v].size();
            }
        }
        order.push_back(best);
        auto& adjacent = neighbors[best];
        for (std::size_t a : adjacent) {
            neighbors[a].erase(best);
            for (std::size_t b : adjacent) {
                if (a != b) neighbors[a].insert(b);
            }
        }
        for (auto& [v, adj] : neighbors) adj.erase(best);
        remaining.erase(best);
    }
    return order;
}

std::vector<Factor> reduced_factors(const BayesNet& model, const Query& query) {
    const CategoricalSchema& schema = model.schema();
    std::vector<Factor> factors;
    factors.reserve(model.node_count());
    for (std::size_t node = 0; node < model.node_count(); ++node) {
        Factor f = factor_from_cpt(model, node);
        for (const auto& [name, value] : query.evidence) {
            f = reduce(f, schema.index_of(name), value);
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

Distribution run_elimination(const BayesNet& model, const Query& query,
                             std::vector<Factor> factors,
                             const std::vector<std::size_t>& order) {
    const CategoricalSchema& schema = model.schema();
    std::size_t target = schema.index_of(query.target);

    for (std::size_t var : order) {
        Factor product;
        bool have = false;
        std::vector<Factor> rest;
        for (auto& f : factors) {
            if (position_in_scope(f, var) < f.scope.size()) {
                product = have ? multiply(product, f) : std::move(f);
                have = true;
            } else {
                rest.push_back(std::move(f));
            }
        }
        if (have) rest.push_back(sum_out(product, var));
        factors = std::move(rest);
    }

    Factor result;
    result.scope = {target};
    result.cardinalities = {schema.variable(target).cardinality()};
    result.values.assign(result.cardinalities[0], 1.0);
    for (const auto& f : factors) result = multiply(result, f);

    double z = 0.0;
    for (double v : result.values) z += v;
    if (!(z > 0.0)) {
        throw EvidenceError("evidence has probability zero under the model");
    }
    for (double& v : result.values) v /= z;
    return Distribution(std::move(result.values));
}

void validate_query(const BayesNet& model, const Query& query) {
    const CategoricalSchema& schema = model.schema();
    std::size_t target = schema.index_of(query.target);
    for (const auto& [name, value] : query.evidence) {
        std::size_t var = schema.index_of(name);
        if (var == target) throw InputError("target '" + query.target + "' cannot be evidence");
        if (value >= schema.variable(var).cardinality()) {
            throw InputError("evidence value out of range for '" + name + "'");
        }
    }
}

} // namespace

Distribution posterior(const BayesNet& model, const Query& query) {
    validate_query(model, query);
    const CategoricalSchema& schema = model.schema();
    std::set<std::size_t> to_eliminate;
    for (std::size_t v = 0; v < schema.size(); ++v) to_eliminate.insert(v);
    to_eliminate.erase(schema.index_of(query.target));
    for (const auto& [name, value] : query.evidence) to_eliminate.erase(schema.index_of(name));

    std::vector<Factor> factors = reduced_factors(model, query);
    auto order = min_degree_order(factors, to_eliminate);
    return run_elimination(model, query, std::move(factors), order);
}

Distribution posterior(const BayesNet& model, const Query& query,
                       std::span<const std::string> elimination_order) {
    validate_query(model, query);
    const CategoricalSchema& schema = model.schema();
    std::set<std::size_t> expected;
    for (std::size_t v = 0; v < schema.size(); ++v) expected.insert(v);
    expected.erase(schema.index_of(query.target));
    for (const auto& [name, value] : query.evidence) expected.erase(schema.index_of(name));

    std::vector<std::size_t> order;
    order.reserve(elimination_order.size());
    for (const auto& name : elimination_order) order.push_back(schema.index_of(name));
    std::set<std::size_t> given(order.begin(), order.end());
    if (given != expected || given.size() != order.size()) {
        throw InputError("elimination order must list each non-target, non-evidence "
                         "variable exactly once");
    }
    return run_elimination(model, query, reduced_factors(model, query), order);
}

Distribution marginal(const BayesNet& model, const std::string& variable) {
    return posterior(model, Query{variable, {}, QueryDirection::Predictive});
}

EvidenceShift evidence_shift_report(const BayesNet& model, const Query& query) {
    Distribution prior = marginal(model, query.target);
    Distribution post = posterior(model, query);
    std::vector<double> delta(prior.size());
    for (std::size_t i = 0; i < prior.size(); ++i) delta[i] = post[i] - prior[i];
    return EvidenceShift{std::move(prior), std::move(post), std::move(delta)};
}

} // namespace synthcat

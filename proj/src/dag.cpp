#include "synthcat/dag.hpp"

#include <algorithm>
#include <set>

#include "synthcat/errors.hpp"

namespace synthcat {

namespace {

// Kahn's algorithm with a min-index frontier: deterministic, parents first,
// ties resolved by declaration order.
std::vector<std::size_t> sort_topologically(const std::vector<std::vector<std::size_t>>& parents,
                                            const CategoricalSchema& schema) {
    const std::size_t n = parents.size();
    std::vector<std::size_t> missing(n);
    std::vector<std::vector<std::size_t>> children(n);
    for (std::size_t node = 0; node < n; ++node) {
        missing[node] = parents[node].size();
        for (std::size_t p : parents[node]) children[p].push_back(node);
    }

    std::set<std::size_t> frontier;
    for (std::size_t node = 0; node < n; ++node) {
        if (missing[node] == 0) frontier.insert(node);
    }

    std::vector<std::size_t> order;
    order.reserve(n);
    while (!frontier.empty()) {
        std::size_t node = *frontier.begin();
        frontier.erase(frontier.begin());
        order.push_back(node);
        for (std::size_t child : children[node]) {
            if (--missing[child] == 0) frontier.insert(child);
        }
    }

    if (order.size() != n) {
        // Some node kept an unsatisfied parent. Walking parent links inside
        // the leftover set for n+1 steps must revisit a node; that node lies
        // on a cycle.
        std::vector<bool> placed(n, false);
        for (std::size_t node : order) placed[node] = true;
        std::size_t cursor = 0;
        while (placed[cursor]) ++cursor;
        std::vector<bool> seen(n, false);
        while (!seen[cursor]) {
            seen[cursor] = true;
            for (std::size_t p : parents[cursor]) {
                if (!placed[p]) {
                    cursor = p;
                    break;
                }
            }
        }
        throw InputError("graph has a cycle through '" + schema.variable(cursor).name + "'");
    }
    return order;
}

} // namespace

Dag::Dag(SchemaPtr schema, std::vector<std::vector<std::size_t>> parents)
    : schema_(std::move(schema)), parents_(std::move(parents)) {
    if (!schema_) throw InputError("dag needs a schema");
    if (parents_.size() != schema_->size()) {
        throw InputError("dag parent lists must cover every schema variable");
    }
    for (std::size_t node = 0; node < parents_.size(); ++node) {
        std::set<std::size_t> seen;
        for (std::size_t p : parents_[node]) {
            if (p >= parents_.size()) throw InputError("dag parent index out of range");
            if (p == node) {
                throw InputError("variable '" + schema_->variable(node).name +
                                 "' cannot be its own parent");
            }
            if (!seen.insert(p).second) {
                throw InputError("duplicate parent in list for '" +
                                 schema_->variable(node).name + "'");
            }
        }
    }
    topo_order_ = sort_topologically(parents_, *schema_);
}

Dag Dag::empty(SchemaPtr schema) {
    std::size_t n = schema->size();
    return Dag(std::move(schema), std::vector<std::vector<std::size_t>>(n));
}

Dag Dag::from_parent_names(SchemaPtr schema,
                           const std::map<std::string, std::vector<std::string>>& parents) {
    std::vector<std::vector<std::size_t>> lists(schema->size());
    for (const auto& [node, parent_names] : parents) {
        std::size_t idx = schema->index_of(node);
        for (const auto& p : parent_names) lists[idx].push_back(schema->index_of(p));
    }
    return Dag(std::move(schema), std::move(lists));
}

std::vector<std::string> Dag::topo_order_names() const {
    std::vector<std::string> names;
    names.reserve(topo_order_.size());
    for (std::size_t node : topo_order_) names.push_back(schema_->variable(node).name);
    return names;
}

bool Dag::has_edge(std::size_t parent, std::size_t child) const {
    const auto& list = parents_[child];
    return std::find(list.begin(), list.end(), parent) != list.end();
}

} // namespace synthcat

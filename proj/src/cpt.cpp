#include "synthcat/cpt.hpp"

#include <string>

#include "synthcat/errors.hpp"

namespace synthcat {

Cpt::Cpt(const CategoricalSchema& schema, std::string node, std::vector<std::string> parents,
         std::vector<Distribution> table)
    : node_(std::move(node)), parents_(std::move(parents)), table_(std::move(table)) {
    std::size_t node_card = schema.variable(schema.index_of(node_)).cardinality();
    std::size_t rows = 1;
    parent_cards_.reserve(parents_.size());
    for (const auto& p : parents_) {
        std::size_t card = schema.variable(schema.index_of(p)).cardinality();
        parent_cards_.push_back(card);
        rows *= card;
    }
    if (table_.size() != rows) {
        throw InputError("cpt for '" + node_ + "' has " + std::to_string(table_.size()) +
                         " rows, expected " + std::to_string(rows));
    }
    for (const auto& row : table_) {
        if (row.size() != node_card) {
            throw InputError("cpt row width mismatch for '" + node_ + "'");
        }
    }
}

std::size_t Cpt::parent_config_index(std::span<const Category> parent_values) const {
    if (parent_values.size() != parent_cards_.size()) {
        throw InputError("cpt for '" + node_ + "' takes " + std::to_string(parent_cards_.size()) +
                         " parent values, got " + std::to_string(parent_values.size()));
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < parent_values.size(); ++i) {
        if (parent_values[i] >= parent_cards_[i]) {
            throw InputError("parent value out of range for cpt of '" + node_ + "'");
        }
        index = index * parent_cards_[i] + parent_values[i];
    }
    return index;
}

} // namespace synthcat

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "synthcat/distribution.hpp"
#include "synthcat/schema.hpp"

namespace synthcat {

// Conditional probability table for one node. Rows are addressed by a
// mixed-radix index over the parent values; the first declared parent
// varies slowest. A parentless node has a single row.
class Cpt {
  public:
    Cpt(const CategoricalSchema& schema, std::string node, std::vector<std::string> parents,
        std::vector<Distribution> table);

    const std::string& node() const { return node_; }
    const std::vector<std::string>& parents() const { return parents_; }
    const std::vector<std::size_t>& parent_cardinalities() const { return parent_cards_; }
    std::size_t node_cardinality() const { return table_.front().size(); }
    std::size_t row_count() const { return table_.size(); }

    std::size_t parent_config_index(std::span<const Category> parent_values) const;

    const Distribution& row(std::size_t config) const { return table_.at(config); }
    const Distribution& row_for(std::span<const Category> parent_values) const {
        return table_[parent_config_index(parent_values)];
    }
    const std::vector<Distribution>& table() const { return table_; }

  private:
    std::string node_;
    std::vector<std::string> parents_;
    std::vector<std::size_t> parent_cards_;
    std::vector<Distribution> table_;
};

} // namespace synthcat

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "synthcat/schema.hpp"

namespace synthcat {

// Directed acyclic graph over the schema's variables. The topological order
// is derived at construction time: parents before children, ties broken by
// schema declaration order, so the order is stable across runs. A cycle is a
// construction error naming one of its members.
class Dag {
  public:
    Dag(SchemaPtr schema, std::vector<std::vector<std::size_t>> parents);

    static Dag empty(SchemaPtr schema);
    static Dag from_parent_names(SchemaPtr schema,
                                 const std::map<std::string, std::vector<std::string>>& parents);

    std::size_t node_count() const { return parents_.size(); }
    const std::vector<std::size_t>& parents(std::size_t node) const { return parents_[node]; }
    const std::vector<std::vector<std::size_t>>& all_parents() const { return parents_; }
    const std::vector<std::size_t>& topo_order() const { return topo_order_; }
    std::vector<std::string> topo_order_names() const;

    const CategoricalSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }

    bool has_edge(std::size_t parent, std::size_t child) const;

  private:
    SchemaPtr schema_;
    std::vector<std::vector<std::size_t>> parents_;
    std::vector<std::size_t> topo_order_;
};

} // namespace synthcat

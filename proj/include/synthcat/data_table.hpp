#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "synthcat/schema.hpp"

namespace synthcat {

// Row-major matrix of category indices; columns align with the schema.
// Tables are built once (constructor or append_row) and then shared
// read-only.
class DataTable {
  public:
    explicit DataTable(SchemaPtr schema);
    DataTable(SchemaPtr schema, std::vector<Category> cells);

    void append_row(std::span<const Category> row);

    std::size_t row_count() const { return cells_.size() / columns_; }
    std::size_t column_count() const { return columns_; }
    bool empty() const { return cells_.empty(); }

    std::span<const Category> row(std::size_t i) const {
        return {cells_.data() + i * columns_, columns_};
    }
    Category at(std::size_t row, std::size_t col) const {
        return cells_[row * columns_ + col];
    }

    const CategoricalSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }

    // Per-category occurrence counts for one column.
    std::vector<std::size_t> column_counts(std::size_t col) const;

  private:
    SchemaPtr schema_;
    std::size_t columns_ = 0;
    std::vector<Category> cells_;
};

} // namespace synthcat

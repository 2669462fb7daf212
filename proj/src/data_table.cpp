#include "synthcat/data_table.hpp"

#include <string>

#include "synthcat/errors.hpp"

namespace synthcat {

DataTable::DataTable(SchemaPtr schema) : schema_(std::move(schema)) {
    if (!schema_ || schema_->size() == 0) throw InputError("data table needs a non-empty schema");
    columns_ = schema_->size();
}

DataTable::DataTable(SchemaPtr schema, std::vector<Category> cells)
    : DataTable(std::move(schema)) {
    if (cells.size() % columns_ != 0) {
        throw InputError("cell count is not a multiple of the column count");
    }
    cells_ = std::move(cells);
    for (std::size_t r = 0; r < row_count(); ++r) {
        for (std::size_t c = 0; c < columns_; ++c) {
            if (at(r, c) >= schema_->variable(c).cardinality()) {
                throw InputError("category index out of range at row " + std::to_string(r) +
                                 ", column '" + schema_->variable(c).name + "'");
            }
        }
    }
}

void DataTable::append_row(std::span<const Category> row) {
    if (row.size() != columns_) {
        throw InputError("record has " + std::to_string(row.size()) + " values, schema has " +
                         std::to_string(columns_) + " variables");
    }
    for (std::size_t c = 0; c < columns_; ++c) {
        if (row[c] >= schema_->variable(c).cardinality()) {
            throw InputError("category index " + std::to_string(row[c]) +
                             " out of range for variable '" + schema_->variable(c).name + "'");
        }
    }
    cells_.insert(cells_.end(), row.begin(), row.end());
}

std::vector<std::size_t> DataTable::column_counts(std::size_t col) const {
    std::vector<std::size_t> counts(schema_->variable(col).cardinality(), 0);
    for (std::size_t r = 0; r < row_count(); ++r) {
        ++counts[at(r, col)];
    }
    return counts;
}

} // namespace synthcat

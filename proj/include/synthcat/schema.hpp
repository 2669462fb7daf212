#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace synthcat {

// Dense category index into a variable's category list. Labels live only in
// the schema; tables, models and metrics operate on indices.
using Category = std::uint32_t;

enum class VariableKind { Nominal, Ordinal };

struct VariableSpec {
    std::string name;
    VariableKind kind = VariableKind::Nominal;
    // For ordinal variables the declared order is the semantic order
    // (e.g. Never < Rarely < Sometimes < Often < Always).
    std::vector<std::string> categories;

    std::size_t cardinality() const { return categories.size(); }

    // Resolves a label; throws InputError listing the valid labels.
    Category category_index(const std::string& label) const;

    bool operator==(const VariableSpec&) const = default;
};

class CategoricalSchema {
  public:
    CategoricalSchema() = default;
    // Validates: unique variable names, unique labels per variable,
    // cardinality >= 2 everywhere.
    explicit CategoricalSchema(std::vector<VariableSpec> variables);

    std::size_t size() const { return variables_.size(); }
    const VariableSpec& variable(std::size_t i) const { return variables_.at(i); }
    const std::vector<VariableSpec>& variables() const { return variables_; }

    bool has_variable(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    bool operator==(const CategoricalSchema&) const = default;

  private:
    std::vector<VariableSpec> variables_;
};

using SchemaPtr = std::shared_ptr<const CategoricalSchema>;

} // namespace synthcat

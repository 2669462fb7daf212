#include "synthcat/schema.hpp"

#include <unordered_set>

#include "synthcat/errors.hpp"

namespace synthcat {

Category VariableSpec::category_index(const std::string& label) const {
    for (std::size_t i = 0; i < categories.size(); ++i) {
        if (categories[i] == label) return static_cast<Category>(i);
    }
    std::string valid;
    for (const auto& c : categories) {
        if (!valid.empty()) valid += ", ";
        valid += c;
    }
    throw InputError("unknown category '" + label + "' for variable '" + name +
                     "' (valid: " + valid + ")");
}

CategoricalSchema::CategoricalSchema(std::vector<VariableSpec> variables)
    : variables_(std::move(variables)) {
    std::unordered_set<std::string> names;
    for (const auto& var : variables_) {
        if (var.name.empty()) throw InputError("schema variable with empty name");
        if (!names.insert(var.name).second) {
            throw InputError("duplicate variable name '" + var.name + "' in schema");
        }
        if (var.cardinality() < 2) {
            throw InputError("variable '" + var.name + "' needs at least 2 categories");
        }
        std::unordered_set<std::string> labels;
        for (const auto& label : var.categories) {
            if (!labels.insert(label).second) {
                throw InputError("duplicate category '" + label + "' in variable '" +
                                 var.name + "'");
            }
        }
    }
}

bool CategoricalSchema::has_variable(const std::string& name) const {
    for (const auto& var : variables_) {
        if (var.name == name) return true;
    }
    return false;
}

std::size_t CategoricalSchema::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].name == name) return i;
    }
    throw InputError("variable '" + name + "' not in schema");
}

} // namespace synthcat

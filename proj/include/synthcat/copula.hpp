#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synthcat/data_table.hpp"
#include "synthcat/linalg.hpp"
#include "synthcat/schema.hpp"

namespace synthcat {

// Empirical CDF of one column laid out over [0,1] in schema category order.
// boundaries[c] is the cumulative frequency through category c (the last
// boundary is exactly 1); latents[c] is the standard-normal point for the
// midpoint of category c's interval.
struct ColumnCdf {
    std::string name;
    std::vector<double> boundaries;
    std::vector<double> latents;

    // Category whose interval [boundaries[c-1], boundaries[c]) contains u.
    Category category_for(double u) const;
};

// Symmetric, unit-diagonal, entries in [-1, 1].
class CorrelationMatrix {
  public:
    explicit CorrelationMatrix(Matrix values);

    std::size_t dimension() const { return values_.dimension(); }
    double at(std::size_t i, std::size_t j) const { return values_.at(i, j); }
    const Matrix& matrix() const { return values_; }

  private:
    Matrix values_;
};

struct CopulaModel {
    SchemaPtr schema;
    std::vector<ColumnCdf> cdfs;
    CorrelationMatrix correlation;
};

// Fits per-column empirical CDFs, maps every record to its latent point
// vector, and takes the Pearson correlation of the latents. A matrix with a
// genuinely negative spectrum is repaired by clipping those eigenvalues to
// 1e-10 and renormalizing the diagonal. Columns with fewer than two observed
// categories are input errors.
CopulaModel fit_copula(const DataTable& data);

// Draws latent vectors z = L g (L from the PSD-tolerant Cholesky, g i.i.d.
// standard normal via per-record substreams in schema column order), maps
// coordinates through the normal CDF and assigns the containing interval.
DataTable sample_copula(const CopulaModel& model, std::size_t n_rows, std::uint64_t seed);

} // namespace synthcat

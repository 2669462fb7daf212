#include "synthcat/copula.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synthcat/errors.hpp"
#include "synthcat/normal.hpp"
#include "synthcat/rng.hpp"

namespace synthcat {

namespace {

// Quantile arguments are kept inside the validated domain of the inverse
// normal CDF; only categories with zero empirical mass can get this close
// to the endpoints, and their latents are never used.
constexpr double kProbFloor = 1e-12;

double clamped_quantile(double p) {
    return normal_quantile(std::clamp(p, kProbFloor, 1.0 - kProbFloor));
}

} // namespace

Category ColumnCdf::category_for(double u) const {
    for (std::size_t c = 0; c + 1 < boundaries.size(); ++c) {
        if (u < boundaries[c]) return static_cast<Category>(c);
    }
    return static_cast<Category>(boundaries.size() - 1);
}

CorrelationMatrix::CorrelationMatrix(Matrix values) : values_(std::move(values)) {
    const std::size_t n = values_.dimension();
    if (n == 0) throw InputError("correlation matrix cannot be empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(values_.at(i, i) - 1.0) > 1e-12) {
            throw InputError("correlation matrix needs a unit diagonal");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(values_.at(i, j) - values_.at(j, i)) > 1e-12) {
                throw InputError("correlation matrix must be symmetric");
            }
            if (values_.at(i, j) < -1.0 || values_.at(i, j) > 1.0) {
                throw InputError("correlation entries must lie in [-1, 1]");
            }
        }
    }
}

CopulaModel fit_copula(const DataTable& data) {
    if (data.empty()) throw InputError("cannot fit a copula on an empty table");
    const CategoricalSchema& schema = data.schema();
    const std::size_t cols = schema.size();
    const std::size_t rows = data.row_count();

    std::vector<ColumnCdf> cdfs;
    cdfs.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        auto counts = data.column_counts(c);
        std::size_t observed = 0;
        for (std::size_t n : counts) observed += (n > 0) ? 1 : 0;
        if (observed < 2) {
            throw InputError("column '" + schema.variable(c).name +
                             "' is constant in the data; the copula needs >= 2 observed "
                             "categories");
        }
        ColumnCdf cdf;
        cdf.name = schema.variable(c).name;
        double cumulative = 0.0;
        for (std::size_t cat = 0; cat < counts.size(); ++cat) {
            double lo = cumulative;
            cumulative += static_cast<double>(counts[cat]) / static_cast<double>(rows);
            double hi = (cat + 1 == counts.size()) ? 1.0 : cumulative;
            cdf.boundaries.push_back(hi);
            cdf.latents.push_back(clamped_quantile(0.5 * (lo + hi)));
        }
        cdf.boundaries.back() = 1.0;
        cdfs.push_back(std::move(cdf));
    }

    // Pearson correlation of the per-record latent points.
    std::vector<double> mean(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) mean[c] += cdfs[c].latents[data.at(r, c)];
    }
    for (double& m : mean) m /= static_cast<double>(rows);

    Matrix scatter(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < cols; ++i) {
            double di = cdfs[i].latents[data.at(r, i)] - mean[i];
            for (std::size_t j = i; j < cols; ++j) {
                double dj = cdfs[j].latents[data.at(r, j)] - mean[j];
                scatter.at(i, j) += di * dj;
            }
        }
    }

    Matrix corr(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        corr.at(i, i) = 1.0;
        for (std::size_t j = i + 1; j < cols; ++j) {
            double rho = scatter.at(i, j) /
                         (std::sqrt(scatter.at(i, i)) * std::sqrt(scatter.at(j, j)));
            // Snap exact linear dependence (duplicated or mirrored columns)
            // so downstream factorization keeps it exact.
            if (rho > 1.0 - 1e-12) rho = 1.0;
            if (rho < -1.0 + 1e-12) rho = -1.0;
            corr.at(i, j) = rho;
            corr.at(j, i) = rho;
        }
    }

    // Eigenvalues below -1e-9 mean the midpoint latents produced a genuinely
    // indefinite matrix; clip and renormalize. Smaller wobble is left alone
    // so exact semi-definite structure survives bit-for-bit.
    auto eigen = symmetric_eigen(corr);
    if (eigen.values.front() < -1e-9) {
        const std::size_t n = cols;
        for (double& v : eigen.values) v = std::max(v, 1e-10);
        Matrix repaired(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                double sum = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    sum += eigen.vectors.at(i, k) * eigen.values[k] * eigen.vectors.at(j, k);
                }
                repaired.at(i, j) = sum;
                repaired.at(j, i) = sum;
            }
        }
        for (std::size_t i = 0; i < cols; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (i == j) continue;
                corr.at(i, j) = repaired.at(i, j) /
                                std::sqrt(repaired.at(i, i) * repaired.at(j, j));
            }
        }
        for (std::size_t i = 0; i < cols; ++i) corr.at(i, i) = 1.0;
    }

    return CopulaModel{data.schema_ptr(), std::move(cdfs), CorrelationMatrix(std::move(corr))};
}

DataTable sample_copula(const CopulaModel& model, std::size_t n_rows, std::uint64_t seed) {
    if (n_rows < 1) throw InputError("sample request needs n_rows >= 1");
    const std::size_t cols = model.schema->size();
    if (model.cdfs.size() != cols || model.correlation.dimension() != cols) {
        throw InputError("copula model is inconsistent with its schema");
    }

    Matrix factor = psd_cholesky(model.correlation.matrix());
    RngStream root(seed);

    std::vector<Category> cells;
    cells.reserve(n_rows * cols);
    std::vector<double> gaussian(cols);
    for (std::size_t r = 0; r < n_rows; ++r) {
        RngStream stream = root.substream(r);
        for (std::size_t c = 0; c < cols; ++c) {
            gaussian[c] = normal_quantile(stream.next_uniform_open());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            double z = 0.0;
            for (std::size_t k = 0; k <= c; ++k) z += factor.at(c, k) * gaussian[k];
            cells.push_back(model.cdfs[c].category_for(normal_cdf(z)));
        }
    }
    return DataTable(model.schema, std::move(cells));
}

} // namespace synthcat

#include "synthcat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "synthcat/errors.hpp"

namespace synthcat {

SymmetricEigen symmetric_eigen(const Matrix& a) {
    const std::size_t n = a.dimension();
    Matrix m = a;
    Matrix v(n);
    for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) off += m.at(i, j) * m.at(i, j);
        }
        if (off < 1e-30) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double mkp = m.at(k, p);
                    double mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - s * mkq;
                    m.at(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double mpk = m.at(p, k);
                    double mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - s * mqk;
                    m.at(q, k) = s * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v.at(k, p);
                    double vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * vkq;
                    v.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return m.at(i, i) < m.at(j, j); });

    SymmetricEigen result;
    result.values.resize(n);
    result.vectors = Matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        result.values[j] = m.at(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) result.vectors.at(i, j) = v.at(i, order[j]);
    }
    return result;
}

Matrix psd_cholesky(const Matrix& a, double tolerance) {
    const std::size_t n = a.dimension();
    Matrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a.at(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
        if (d < -tolerance) {
            throw NumericError("matrix is not positive semi-definite (pivot " +
                               std::to_string(d) + ")");
        }
        if (d <= tolerance) {
            // Rank-deficient direction: zero the column. Consistent for PSD
            // inputs, where the residual column vanishes with the pivot.
            continue;
        }
        double root = std::sqrt(d);
        l.at(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            double sum = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = sum / root;
        }
    }
    return l;
}

} // namespace synthcat

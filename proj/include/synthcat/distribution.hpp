#pragma once

#include <cstddef>
#include <vector>

namespace synthcat {

// Normalized probability vector over one variable's categories.
// Construction accepts a mass deviation of up to 1e-6 and renormalizes;
// larger deviations or negative entries are input errors. After
// construction the entries sum to 1 within 1e-9.
class Distribution {
  public:
    explicit Distribution(std::vector<double> probabilities);

    static Distribution uniform(std::size_t cardinality);

    std::size_t size() const { return probabilities_.size(); }
    double operator[](std::size_t i) const { return probabilities_[i]; }
    const std::vector<double>& probabilities() const { return probabilities_; }

    // CDF inversion: smallest category whose cumulative mass exceeds u.
    std::size_t sample(double u) const;

  private:
    std::vector<double> probabilities_;
};

} // namespace synthcat

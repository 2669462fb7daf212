#include "synthcat/distribution.hpp"

#include <cmath>
#include <string>

#include "synthcat/errors.hpp"

namespace synthcat {

Distribution::Distribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
    if (probabilities_.empty()) throw InputError("distribution cannot be empty");
    double sum = 0.0;
    for (double p : probabilities_) {
        if (!(p >= 0.0)) throw InputError("distribution entries must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        throw InputError("distribution mass " + std::to_string(sum) +
                         " deviates from 1 by more than 1e-6");
    }
    for (double& p : probabilities_) p /= sum;
}

Distribution Distribution::uniform(std::size_t cardinality) {
    return Distribution(std::vector<double>(cardinality, 1.0 / static_cast<double>(cardinality)));
}

std::size_t Distribution::sample(double u) const {
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < probabilities_.size(); ++i) {
        cumulative += probabilities_[i];
        if (u < cumulative) return i;
    }
    return probabilities_.size() - 1;
}

} // namespace synthcat

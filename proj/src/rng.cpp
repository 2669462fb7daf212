#include "synthcat/rng.hpp"

#include <cmath>

namespace synthcat {

std::uint64_t mix64(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RngStream::next_laplace(double scale) {
    // Inverse-CDF: u in (0,1), centered; both tails stay finite because u
    // never reaches the endpoints.
    double u = next_uniform_open() - 0.5;
    return u < 0.0 ? scale * std::log1p(2.0 * u) : -scale * std::log1p(-2.0 * u);
}

} // namespace synthcat

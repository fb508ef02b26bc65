#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pfsdist/core.hpp"

namespace pfsdist::testing {

/// Deterministic random sets for property tests. PFS elements are uniform
/// over the quarter disc mu^2 + nu^2 <= 1; IFS-valid elements are uniform
/// over the triangle mu + nu <= 1 (and therefore also valid PFS elements).
class SetGenerator {
public:
    explicit SetGenerator(std::uint64_t seed) : rng_(seed) {}

    double uniform() { return dist_(rng_); }

    std::pair<double, double> pfs_pair() {
        while (true) {
            const double mu = uniform();
            const double nu = uniform();
            if (mu * mu + nu * nu <= 1.0) return {mu, nu};
        }
    }

    std::pair<double, double> ifs_pair() {
        while (true) {
            const double mu = uniform();
            const double nu = uniform();
            if (mu + nu <= 1.0) return {mu, nu};
        }
    }

    std::size_t universe_size(std::size_t lo = 1, std::size_t hi = 6) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    PfsSet pfs_set(const std::string& name, std::size_t n) {
        std::vector<PfsElement> elements;
        elements.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto [mu, nu] = pfs_pair();
            elements.emplace_back("x" + std::to_string(i + 1), mu, nu);
        }
        return PfsSet(name, std::move(elements));
    }

    PfsSet ifs_valid_set(const std::string& name, std::size_t n) {
        std::vector<PfsElement> elements;
        elements.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto [mu, nu] = ifs_pair();
            elements.emplace_back("x" + std::to_string(i + 1), mu, nu);
        }
        return PfsSet(name, std::move(elements));
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

}  // namespace pfsdist::testing

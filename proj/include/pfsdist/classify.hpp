#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfsdist/distance.hpp"

namespace pfsdist {

/// Named reference patterns, all conformable to one universe. Construction
/// rejects an empty list (EmptyLibraryError) and mismatched universes
/// (ConformabilityError).
class PatternLibrary {
public:
    explicit PatternLibrary(std::vector<PfsSet> patterns);

    std::span<const PfsSet> patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    const PfsSet& operator[](std::size_t i) const { return patterns_[i]; }

private:
    std::vector<PfsSet> patterns_;
};

struct ClassificationResult {
    std::string sample_name;
    /// One (pattern name, distance) entry per library pattern, library order.
    std::vector<std::pair<std::string, double>> distances;
    /// Index of the winning pattern; lowest index on exact ties.
    std::size_t winner_index = 0;
    /// All pattern indices within the tie tolerance of the minimum.
    /// Always contains winner_index.
    std::vector<std::size_t> tied;

    bool is_tie() const { return tied.size() > 1; }
    const std::string& winner_name() const { return distances[winner_index].first; }
};

/// Distances within this much of the minimum are reported as ties. The
/// winner is still the lowest-index minimizer, so results are deterministic,
/// but genuinely ambiguous assignments are never silent.
inline constexpr double kTieTolerance = 1e-9;

/// Nearest-pattern assignment: compute the distance from the sample to every
/// pattern under the chosen method and pick the argmin.
ClassificationResult classify(const PatternLibrary& lib, const PfsSet& sample,
                              const DistanceMethod& method);

/// Elementwise classify, order-preserving. Fails fast on the first sample
/// that is not conformable with the library.
std::vector<ClassificationResult> classify_batch(const PatternLibrary& lib,
                                                 std::span<const PfsSet> samples,
                                                 const DistanceMethod& method);

}  // namespace pfsdist

#include "pfsdist/classify.hpp"

namespace pfsdist {

PatternLibrary::PatternLibrary(std::vector<PfsSet> patterns)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty()) {
        throw EmptyLibraryError("pattern library must contain at least one pattern");
    }
    for (std::size_t i = 1; i < patterns_.size(); ++i) {
        require_conformable(patterns_[0], patterns_[i]);
    }
}

ClassificationResult classify(const PatternLibrary& lib, const PfsSet& sample,
                              const DistanceMethod& method) {
    require_conformable(lib[0], sample);

    ClassificationResult result;
    result.sample_name = sample.name();
    result.distances.reserve(lib.size());
    for (const auto& pattern : lib.patterns()) {
        result.distances.emplace_back(pattern.name(),
                                      distance(pattern, sample, method));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < result.distances.size(); ++i) {
        if (result.distances[i].second < result.distances[best].second) {
            best = i;
        }
    }
    result.winner_index = best;

    const double min = result.distances[best].second;
    for (std::size_t i = 0; i < result.distances.size(); ++i) {
        if (result.distances[i].second - min <= kTieTolerance) {
            result.tied.push_back(i);
        }
    }
    return result;
}

std::vector<ClassificationResult> classify_batch(const PatternLibrary& lib,
                                                 std::span<const PfsSet> samples,
                                                 const DistanceMethod& method) {
    std::vector<ClassificationResult> results;
    results.reserve(samples.size());
    for (const auto& sample : samples) {
        results.push_back(classify(lib, sample, method));
    }
    return results;
}

}  // namespace pfsdist

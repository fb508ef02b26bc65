#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pfsdist/core.hpp"

namespace pfsdist {

/// Parsed dataset file: an ordered universe plus named sets over it.
/// The universe carries element order, which every distance depends on; sets
/// keep the order in which they appear in the file.
struct Dataset {
    std::vector<std::string> universe;
    std::vector<PfsSet> sets;

    const PfsSet& find(std::string_view name) const;
};

/// Loads a UTF-8 JSON dataset:
///   { "universe": ["x1", ...],
///     "sets": { "name": { "x1": {"mu": 0.5, "nu": 0.4}, ... }, ... } }
/// Every set must cover exactly the universe labels. Validation failures are
/// reported with set name and label; syntax errors with the line number.
Dataset load_dataset(const std::filesystem::path& path,
                     const ValidationPolicy& policy = {});

/// Same parse applied to an in-memory document. `origin` names the source in
/// error messages.
Dataset parse_dataset(std::string_view text, std::string_view origin,
                      const ValidationPolicy& policy = {});

}  // namespace pfsdist

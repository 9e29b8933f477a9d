#pragma once

#include <cstdint>

#include "chem/dataset.hpp"

namespace chem {

// Generates a shareable synthetic dataset from a validated source.
// Numeric columns use rank-coupled empirical resampling (a shared template-row
// draw supplies each row's rank pattern, so pairwise rank correlations are
// approximately preserved); only observed values are emitted, so dictionary
// validity holds by construction. Categorical/date/text columns are sampled
// from empirical frequencies. uid values are freshly generated and disjoint
// from the source uids. Deterministic for a fixed seed.
ValidatedDataset synthesize_dataset(const ValidatedDataset& ds, std::size_t n_out,
                                    std::uint64_t seed);

} // namespace chem

#pragma once

#include <cstdint>
#include <vector>

#include "flatcheck/factor.hpp"
#include "flatcheck/ideal.hpp"

namespace flatcheck {

/// A primary ideal together with its (prime) radical.
struct PrimaryComponent {
  Ideal primary;
  Ideal prime;
};

struct DecompositionOptions {
  /// Seed for the generic coordinate changes.
  std::uint64_t seed = 1;
  /// Fresh coordinate draws allowed per zero-dimensional split.
  unsigned retry_budget = 8;
};

/// Reproducibility record of one decomposition.
struct DecompositionStats {
  std::uint64_t seed = 0;
  unsigned retries = 0;
};

/// Irredundant primary decomposition of a zero-dimensional ideal.
/// Throws NotZeroDimensional otherwise, GenericityFailure when no draw in
/// the retry budget puts a component in shape position.
std::vector<PrimaryComponent> zero_dim_decompose(const Ideal& ideal,
                                                 const DecompositionOptions& options = {},
                                                 DecompositionStats* stats = nullptr);

/// Irredundant primary decomposition (Gianni–Trager–Zacharias) of a proper
/// ideal in any dimension. Components are sorted by their primes.
std::vector<PrimaryComponent> decompose(const Ideal& ideal, const DecompositionOptions& options = {},
                                        DecompositionStats* stats = nullptr);

/// Primes of an irredundant decomposition, embedded ones included.
std::vector<Ideal> associated_primes(const Ideal& ideal, const DecompositionOptions& options = {},
                                     DecompositionStats* stats = nullptr);

struct RadicalResult {
  Ideal radical;
  std::vector<Ideal> minimal_primes;
};

RadicalResult radical_and_minimal(const Ideal& ideal, const DecompositionOptions& options = {},
                                  DecompositionStats* stats = nullptr);

/// The minimal elements (under inclusion) of a list of primes.
std::vector<Ideal> minimal_elements(const std::vector<Ideal>& primes);

}  // namespace flatcheck

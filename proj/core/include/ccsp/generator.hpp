#pragma once

#include <cstdint>
#include <random>

#include "ccsp/syntax.hpp"

namespace ccsp {

/// Relative constructor weights. Null and the auxiliary construct are never
/// generated; their weights exist only so a config can state that and must
/// stay zero.
struct GenWeights {
  double atom = 1, skip = 1, throw_ = 1, yield = 1;
  double seq = 1, choice = 1, par = 1, interrupt = 1, block = 1;
  double pair = 1, cseq = 1, cchoice = 1, cpar = 1;
  double null = 0, aux = 0;
};

struct GenConfig {
  std::uint64_t seed = 0;
  int max_depth = 4;
  Alphabet alphabet;
  TermKind kind = TermKind::Standard;
  GenWeights weights;
};

/// Throws std::invalid_argument unless max_depth >= 1, the alphabet is
/// nonempty, every constructor weight is positive and Null/Aux weigh zero.
void validate(const GenConfig& cfg);

/// Deterministic in the config. The chance of emitting a leaf rises with
/// depth and reaches one at max_depth.
AnyTerm gen_term(const GenConfig& cfg);
StdTerm gen_standard(const GenConfig& cfg);
CompTerm gen_compensable(const GenConfig& cfg);

/// SplitMix64 finaliser; derives independent per-case seeds from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace ccsp

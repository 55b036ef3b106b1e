#include "ccsp/generator.hpp"

#include <initializer_list>
#include <stdexcept>

namespace ccsp {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void validate(const GenConfig& cfg) {
  if (cfg.max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  if (cfg.alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
  const auto& w = cfg.weights;
  for (double x : {w.atom, w.skip, w.throw_, w.yield, w.seq, w.choice, w.par, w.interrupt, w.block, w.pair, w.cseq,
                   w.cchoice, w.cpar}) {
    if (!(x > 0)) throw std::invalid_argument("constructor weights must be positive");
  }
  if (w.null != 0 || w.aux != 0) throw std::invalid_argument("Null and Aux weights must be zero");
}

namespace {

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  StdTerm standard(int level) {
    if (leaf_here(level)) return std_leaf();
    const auto& w = cfg_.weights;
    auto choice = pick({w.seq, w.choice, w.par, w.interrupt, w.block});
    if (choice == 4) return StdTerm::block(compensable(level + 1));
    // Operands are drawn left to right so the result does not depend on
    // argument evaluation order.
    auto lhs = standard(level + 1);
    auto rhs = standard(level + 1);
    switch (choice) {
      case 0: return StdTerm::seq(std::move(lhs), std::move(rhs));
      case 1: return StdTerm::choice(std::move(lhs), std::move(rhs));
      case 2: return StdTerm::par(std::move(lhs), std::move(rhs));
      default: return StdTerm::interrupt(std::move(lhs), std::move(rhs));
    }
  }

  // Pairs are depth-transparent: their operands live on the pair's level.
  CompTerm compensable(int level) {
    if (leaf_here(level)) {
      auto forward = standard(level);
      auto compensation = standard(level);
      return CompTerm::pair(std::move(forward), std::move(compensation));
    }
    const auto& w = cfg_.weights;
    auto choice = pick({w.cseq, w.cchoice, w.cpar});
    auto lhs = compensable(level + 1);
    auto rhs = compensable(level + 1);
    switch (choice) {
      case 0: return CompTerm::seq(std::move(lhs), std::move(rhs));
      case 1: return CompTerm::choice(std::move(lhs), std::move(rhs));
      default: return CompTerm::par(std::move(lhs), std::move(rhs));
    }
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  bool leaf_here(int level) {
    if (level >= cfg_.max_depth) return true;
    return uniform() < static_cast<double>(level) / cfg_.max_depth;
  }

  std::size_t pick(std::initializer_list<double> weights) {
    double total = 0;
    for (double x : weights) total += x;
    double u = uniform() * total;
    std::size_t i = 0;
    for (double x : weights) {
      if (u < x) return i;
      u -= x;
      ++i;
    }
    return weights.size() - 1;
  }

  StdTerm std_leaf() {
    const auto& w = cfg_.weights;
    switch (pick({w.atom, w.skip, w.throw_, w.yield})) {
      case 0: return StdTerm::atom(cfg_.alphabet[rng_() % cfg_.alphabet.size()]);
      case 1: return StdTerm::skip();
      case 2: return StdTerm::throw_();
      default: return StdTerm::yield();
    }
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
};

}  // namespace

StdTerm gen_standard(const GenConfig& cfg) {
  validate(cfg);
  return Generator(cfg).standard(1);
}

CompTerm gen_compensable(const GenConfig& cfg) {
  validate(cfg);
  return Generator(cfg).compensable(1);
}

AnyTerm gen_term(const GenConfig& cfg) {
  if (cfg.kind == TermKind::Standard) return gen_standard(cfg);
  return gen_compensable(cfg);
}

}  // namespace ccsp

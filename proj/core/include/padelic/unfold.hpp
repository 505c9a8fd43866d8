#pragma once

#include <cstdint>
#include <vector>

#include "padelic/ball.hpp"
#include "padelic/fractal_string.hpp"

namespace padelic {

// Ball-level state of a p-adic construction after G generations: the balls
// kept at each generation plus the residual balls still to be subdivided.
// Kept and residual balls are pairwise disjoint and cover Z_p exactly.
struct GenerationUnfold {
  int generations = 0;
  std::vector<std::vector<PAdicBall>> kept;  // kept[g-1] = generation-g balls
  std::vector<PAdicBall> residual;

  std::vector<std::size_t> kept_counts() const;
  Rational kept_measure() const;
  Rational residual_measure() const;
};

inline constexpr std::size_t kDefaultBallLimit = 1'500'000;

/// Materializes G generations for rational_dim, cantor_p or cantor_2.
/// Throws std::invalid_argument for other families and ResourceError (with
/// the largest feasible G) when the predicted ball count exceeds the limit.
GenerationUnfold unfold(const FractalStringDesc& desc, int generations,
                        std::size_t ball_limit = kDefaultBallLimit);

/// Verifies balls(G+1) == generation-1 kept balls united with the images of
/// balls(G) under x -> a + p^m x over the recursion set, as ball multisets.
bool selfsimilar_check(const FractalStringDesc& desc, int generations,
                       std::size_t ball_limit = kDefaultBallLimit);

// Finite approximation of the adelic Cantor string over a chosen prime list
// (p = 2 contributes the 2-adic Cantor string factor).
struct AdelicApprox {
  std::vector<std::int64_t> primes;
  std::vector<GenerationUnfold> components;
  Rational residual_product;
  bool selfsimilar = false;
};

AdelicApprox adelic_approx(const std::vector<std::int64_t>& primes, int generations);

}  // namespace padelic

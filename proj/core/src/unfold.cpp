#include "padelic/unfold.hpp"

#include <algorithm>
#include <stdexcept>

#include "padelic/errors.hpp"

namespace padelic {
namespace {

struct Recursion {
  int width;                                // digits consumed per generation
  std::vector<std::int64_t> continue_blocks;  // subdivided further
  std::vector<std::int64_t> keep_blocks;      // become string substrings
};

Recursion recursion_of(const FractalStringDesc& d) {
  switch (d.family()) {
    case Family::rational_dim: {
      Recursion r;
      r.width = d.block_size();
      r.continue_blocks = d.recursion_set();
      std::int64_t blocks = 1;
      for (int i = 0; i < r.width; ++i) blocks *= d.prime();
      std::size_t next = 0;
      for (std::int64_t v = 0; v < blocks; ++v) {
        if (next < r.continue_blocks.size() && r.continue_blocks[next] == v)
          ++next;  // recursion_set is sorted
        else
          r.keep_blocks.push_back(v);
      }
      return r;
    }
    case Family::cantor_p: {
      Recursion r;
      r.width = 1;
      r.continue_blocks = d.recursion_set();  // even digits
      for (std::int64_t v = 1; v < d.prime(); v += 2) r.keep_blocks.push_back(v);
      return r;
    }
    case Family::cantor_2:
      return {1, {0}, {1}};
    default:
      throw std::invalid_argument(d.name() + ": no ball-level unfolding (family not in Z_p)");
  }
}

// kept + residual ball count after G generations; saturates at limit+1.
std::size_t predicted_balls(const Recursion& r, int generations, std::size_t limit) {
  std::size_t total = 0, residual = 1;
  const std::size_t cont = r.continue_blocks.size(), keep = r.keep_blocks.size();
  for (int g = 0; g < generations; ++g) {
    if (residual > (limit - total) / (keep + cont + 1)) return limit + 1;
    total += residual * keep;
    residual *= cont;
  }
  return total + residual;
}

}  // namespace

std::vector<std::size_t> GenerationUnfold::kept_counts() const {
  std::vector<std::size_t> out;
  out.reserve(kept.size());
  for (const auto& g : kept) out.push_back(g.size());
  return out;
}

Rational GenerationUnfold::kept_measure() const {
  Rational total(0);
  for (const auto& g : kept)
    for (const auto& b : g) total += b.measure();
  return total;
}

Rational GenerationUnfold::residual_measure() const {
  Rational total(0);
  for (const auto& b : residual) total += b.measure();
  return total;
}

GenerationUnfold unfold(const FractalStringDesc& desc, int generations,
                        std::size_t ball_limit) {
  if (generations < 1) throw std::invalid_argument("unfold: need at least one generation");
  const Recursion rec = recursion_of(desc);

  if (predicted_balls(rec, generations, ball_limit) > ball_limit) {
    int feasible = 0;
    while (feasible < generations &&
           predicted_balls(rec, feasible + 1, ball_limit) <= ball_limit)
      ++feasible;
    throw ResourceError(desc.name() + ": unfolding " + std::to_string(generations) +
                            " generations exceeds the ball limit; at most " +
                            std::to_string(feasible) + " feasible",
                        feasible);
  }

  GenerationUnfold out;
  out.generations = generations;
  std::vector<PAdicBall> residual{PAdicBall::unit(desc.prime())};
  for (int g = 0; g < generations; ++g) {
    std::vector<PAdicBall> kept_g, next;
    kept_g.reserve(residual.size() * rec.keep_blocks.size());
    next.reserve(residual.size() * rec.continue_blocks.size());
    for (const PAdicBall& b : residual) {
      for (std::int64_t v : rec.keep_blocks) kept_g.push_back(b.child(Int(v), rec.width));
      for (std::int64_t v : rec.continue_blocks) next.push_back(b.child(Int(v), rec.width));
    }
    out.kept.push_back(std::move(kept_g));
    residual = std::move(next);
  }
  out.residual = std::move(residual);
  return out;
}

bool selfsimilar_check(const FractalStringDesc& desc, int generations,
                       std::size_t ball_limit) {
  const Recursion rec = recursion_of(desc);
  const GenerationUnfold deep = unfold(desc, generations + 1, ball_limit);

  std::vector<PAdicBall> expected;
  if (!deep.kept.empty()) expected = deep.kept.front();  // generation 1
  for (int g = 0; g < generations; ++g)
    for (const PAdicBall& b : deep.kept[static_cast<std::size_t>(g)])
      for (std::int64_t a : rec.continue_blocks)
        expected.push_back(b.under_map(Int(a), rec.width));

  std::vector<PAdicBall> actual;
  for (const auto& g : deep.kept) actual.insert(actual.end(), g.begin(), g.end());

  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  return expected == actual;
}

AdelicApprox adelic_approx(const std::vector<std::int64_t>& primes, int generations) {
  if (primes.empty()) throw std::invalid_argument("adelic_approx: empty prime list");
  AdelicApprox out;
  out.primes = primes;
  std::sort(out.primes.begin(), out.primes.end());
  if (std::adjacent_find(out.primes.begin(), out.primes.end()) != out.primes.end())
    throw std::invalid_argument("adelic_approx: repeated prime");
  out.residual_product = 1;
  out.selfsimilar = true;
  for (std::int64_t p : out.primes) {
    const FractalStringDesc d =
        p == 2 ? FractalStringDesc::cantor_2() : FractalStringDesc::cantor_p(p);
    out.components.push_back(unfold(d, generations));
    out.residual_product *= out.components.back().residual_measure();
    out.selfsimilar = out.selfsimilar && selfsimilar_check(d, generations);
  }
  return out;
}

}  // namespace padelic

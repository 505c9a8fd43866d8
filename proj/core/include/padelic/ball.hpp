#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "padelic/rational.hpp"

namespace padelic {

enum class BallRelation { disjoint, first_inside_second, second_inside_first, equal };

// The coset center + p^scale * Z_p, with center reduced mod p^scale.
// Haar measure p^(-scale). Any two balls of the same prime are nested
// or disjoint.
class PAdicBall {
 public:
  PAdicBall(std::int64_t prime, int scale, Int center);

  static PAdicBall unit(std::int64_t prime) { return PAdicBall(prime, 0, 0); }

  std::int64_t prime() const { return prime_; }
  int scale() const { return scale_; }
  const Int& center() const { return center_; }
  Rational measure() const;

  /// The child coset center + block * p^scale + p^(scale+width) * Z_p.
  PAdicBall child(const Int& block, int width = 1) const;

  /// Image under x -> shift + p^width * x.
  PAdicBall under_map(const Int& shift, int width) const;

  friend bool operator==(const PAdicBall&, const PAdicBall&) = default;
  friend bool operator<(const PAdicBall& a, const PAdicBall& b) {
    if (a.prime_ != b.prime_) return a.prime_ < b.prime_;
    if (a.scale_ != b.scale_) return a.scale_ < b.scale_;
    return a.center_ < b.center_;
  }

 private:
  std::int64_t prime_;
  int scale_;
  Int center_;
};

/// Ultrametric dichotomy: compares centers mod p^min(scale_a, scale_b).
/// Throws std::invalid_argument on mismatched primes.
BallRelation ball_relation(const PAdicBall& a, const PAdicBall& b);

std::ostream& operator<<(std::ostream&, const PAdicBall&);

}  // namespace padelic

#include "padelic/ball.hpp"

#include <ostream>
#include <stdexcept>

#include "padelic/primes.hpp"

namespace padelic {

PAdicBall::PAdicBall(std::int64_t prime, int scale, Int center)
    : prime_(prime), scale_(scale), center_(std::move(center)) {
  require_prime(prime_, "PAdicBall");
  if (scale_ < 0) throw std::invalid_argument("PAdicBall: negative scale");
  const Int mod = int_pow(Int(prime_), static_cast<unsigned long>(scale_));
  center_ %= mod;
  if (center_ < 0) center_ += mod;
}

Rational PAdicBall::measure() const {
  return Rational(1, int_pow(Int(prime_), static_cast<unsigned long>(scale_)));
}

PAdicBall PAdicBall::child(const Int& block, int width) const {
  return PAdicBall(prime_, scale_ + width,
                   center_ + block * int_pow(Int(prime_), static_cast<unsigned long>(scale_)));
}

PAdicBall PAdicBall::under_map(const Int& shift, int width) const {
  return PAdicBall(prime_, scale_ + width,
                   shift + center_ * int_pow(Int(prime_), static_cast<unsigned long>(width)));
}

BallRelation ball_relation(const PAdicBall& a, const PAdicBall& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("ball_relation: mismatched primes");
  const int k = std::min(a.scale(), b.scale());
  const Int mod = int_pow(Int(a.prime()), static_cast<unsigned long>(k));
  if (a.center() % mod != b.center() % mod) return BallRelation::disjoint;
  if (a.scale() == b.scale())
    return a.center() == b.center() ? BallRelation::equal : BallRelation::disjoint;
  return a.scale() > b.scale() ? BallRelation::first_inside_second
                               : BallRelation::second_inside_first;
}

std::ostream& operator<<(std::ostream& os, const PAdicBall& b) {
  return os << b.center() << "+" << b.prime() << "^" << b.scale() << "Z";
}

}  // namespace padelic

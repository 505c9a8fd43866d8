#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "padelic/fractal_string.hpp"
#include "padelic/tube.hpp"
#include "padelic/zeta.hpp"

using namespace padelic;
using doctest::Approx;

namespace {

std::vector<FractalStringDesc> tube_families() {
  std::vector<FractalStringDesc> out;
  for (std::int64_t p : {2, 3, 5, 7, 11})
    for (int m = 1; m <= 3; ++m)
      for (int k = 0; k < m; ++k) out.push_back(FractalStringDesc::rational_dim(p, m, k));
  for (std::int64_t p : {3, 5, 7, 11}) out.push_back(FractalStringDesc::cantor_p(p));
  out.push_back(FractalStringDesc::cantor_2());
  for (std::int64_t p : {2, 3, 5}) out.push_back(FractalStringDesc::euler(p));
  return out;
}

// epsilon values spread across (0, 1), each at least a fifth of a period
// away from every jump in log scale
std::vector<double> off_jump_epsilons(const FractalStringDesc& d, int count) {
  const double lq = std::log(to_double(d.lattice().q));
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double level = 1 + (i % 7);
    const double frac = 0.25 + 0.5 * (static_cast<double>(i) / count);
    out.push_back(std::exp(-lq * (level + frac)));
  }
  return out;
}

}  // namespace

TEST_CASE("direct volume frozen values") {
  const auto cs3 = FractalStringDesc::cantor_p(3);
  CHECK(volume_direct(cs3, Rational(1, 9)) == Rational(2, 9));
  CHECK(volume_direct(cs3, Rational(1)) == Rational(1, 3));
  CHECK(volume_direct(cs3, Rational(1, 2)) == Rational(1, 3));

  const auto c2 = FractalStringDesc::cantor_2();
  for (int m = 1; m <= 8; ++m)
    CHECK(volume_direct(c2, rational_pow(Rational(1, 2), m)) ==
          rational_pow(Rational(1, 2), m));

  for (std::int64_t p : {3, 5, 7})
    CHECK(volume_direct(FractalStringDesc::cantor_p(p), Rational(1)) == Rational(1, p));

  // euler string includes the length-1 interval at eps = 1
  CHECK(volume_direct(FractalStringDesc::euler(2), Rational(1)) == Rational(1));
  CHECK(volume_direct(FractalStringDesc::euler(2), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("direct volume domain errors") {
  const auto cs3 = FractalStringDesc::cantor_p(3);
  CHECK_THROWS_AS(volume_direct(cs3, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(volume_direct(cs3, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(volume_direct(FractalStringDesc::smith(3), Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(volume_direct(FractalStringDesc::base_p_real(3), Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(volume_direct(FractalStringDesc::harmonic(), Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(volume_direct(FractalStringDesc::rational_dim(2, 2, 2), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("volume is nondecreasing and bounded by total/p") {
  for (const auto& d : tube_families()) {
    const Rational bound = *d.total_length() / Rational(d.prime());
    Rational prev(0);
    for (int i = 40; i >= 1; --i) {
      const Rational eps(i, 40);
      const Rational v = volume_direct(d, eps);
      CHECK(v <= bound);
      if (i < 40) CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("series route matches the direct route off jumps") {
  for (const auto& d : tube_families()) {
    for (double eps : off_jump_epsilons(d, 6)) {
      const double direct = to_double(volume_direct(d, Rational(eps)));
      const double series = volume_series(d, eps, 10'000, Smoothing::cesaro);
      CHECK(std::abs(series - direct) <= 1e-3 * direct);
    }
  }
}

TEST_CASE("single-term truncation is the n = 0 wave") {
  const auto d = FractalStringDesc::cantor_p(3);
  const auto z = zeta_of(d);
  const double eps = 0.05;
  const double dim = dimension(z).value;
  const double expect =
      residue_at(z).value() / 3.0 * std::pow(eps, 1 - dim) / (1 - dim);
  CHECK(volume_series(d, eps, 0) == Approx(expect).epsilon(1e-14));
}

TEST_CASE("series rejects jump points") {
  CHECK_THROWS_AS(volume_series(FractalStringDesc::cantor_p(3), 1.0 / 3.0, 100),
                  JumpPointError);
  CHECK_THROWS_AS(volume_series(FractalStringDesc::cantor_2(), 0.25, 100), JumpPointError);
  // eps = 1 is the n = 0 jump of the euler string
  CHECK_THROWS_AS(volume_series(FractalStringDesc::euler(2), 1.0, 100),
                  std::invalid_argument);
}

TEST_CASE("raw partial sums converge too, just more slowly") {
  const auto d = FractalStringDesc::cantor_p(3);
  const double eps = std::exp(-std::log(3.0) * 2.5);
  const double direct = to_double(volume_direct(d, Rational(eps)));
  const double raw = volume_series(d, eps, 10'000, Smoothing::none);
  CHECK(std::abs(raw - direct) <= 1e-2 * direct);
}

TEST_CASE("exact scaling identity") {
  for (const auto& d : tube_families()) CHECK(scaling_identity_check(d));

  // spot checks of V(eps/q) = (r/q) V(eps)
  const auto cs3 = FractalStringDesc::cantor_p(3);
  CHECK(volume_direct(cs3, Rational(1, 6)) ==
        Rational(2, 3) * volume_direct(cs3, Rational(1, 2)));
  const auto l2 = FractalStringDesc::rational_dim(2, 2, 1);
  CHECK(volume_direct(l2, Rational(1, 8)) ==
        Rational(1, 2) * volume_direct(l2, Rational(1, 2)));
  const auto c2 = FractalStringDesc::cantor_2();
  CHECK(volume_direct(c2, Rational(1, 6)) ==
        Rational(1, 2) * volume_direct(c2, Rational(1, 3)));
}

TEST_CASE("average content closed forms") {
  const auto cs3 = average_content_closed(FractalStringDesc::cantor_p(3));
  CHECK(cs3.value() == Approx(0.4110505770627386).epsilon(1e-12));
  CHECK(cs3.coefficient == Rational(2, 12));
  CHECK(cs3.log_arg == Rational(3, 2));

  // the paper's two family forms, symbolically
  for (std::int64_t p : {3, 5, 7, 11}) {
    const auto c = average_content_closed(FractalStringDesc::cantor_p(p));
    CHECK(c.coefficient == Rational(p - 1, p + p * p));
    CHECK(c.log_arg == Rational(2 * p, p + 1));
    CHECK_FALSE(c.dimension_zero);
  }
  for (std::int64_t p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m)
      for (int k = 0; k < m; ++k) {
        const auto c = average_content_closed(FractalStringDesc::rational_dim(p, m, k));
        const Int pmk = int_pow(Int(p), static_cast<unsigned long>(m - k));
        CHECK(c.coefficient == Rational(pmk - 1, Int(p)));
        CHECK(c.log_arg == Rational(pmk));
      }

  const auto l2 = average_content_closed(FractalStringDesc::rational_dim(2, 2, 1));
  CHECK(l2.value() == Approx(0.7213475204444817).epsilon(1e-12));

  const auto c2 = average_content_closed(FractalStringDesc::cantor_2());
  CHECK(c2.dimension_zero);
  CHECK(c2.value() == Approx(1.0 / (2 * std::log(2.0))).epsilon(1e-12));
}

TEST_CASE("numeric Cesaro average equals the closed form") {
  CHECK(average_content_numeric(FractalStringDesc::cantor_p(3), 2, 5) ==
        Approx(0.4110505770627386).epsilon(1e-11));
  CHECK(average_content_numeric(FractalStringDesc::rational_dim(2, 2, 1), 1, 1) ==
        Approx(0.7213475204444817).epsilon(1e-11));

  for (const auto& d : tube_families()) {
    const double closed = average_content_closed(d).value();
    for (int m0 : {1, 3, 5})
      for (int k : {1, 4, 10})
        CHECK(std::abs(average_content_numeric(d, m0, k) - closed) <= 1e-10);
  }
  CHECK_THROWS_AS(average_content_numeric(FractalStringDesc::cantor_p(3), 1, 0),
                  std::invalid_argument);
}

TEST_CASE("nonmeasurability witness") {
  const auto cs3 = nonmeasurability_witness(FractalStringDesc::cantor_p(3));
  CHECK(cs3.ratio == Rational(3, 2));
  CHECK(cs3.sup / cs3.inf == Approx(1.5).epsilon(1e-12));
  CHECK(cs3.verdict == "not measurable");
  CHECK(cs3.sup == Approx(0.5).epsilon(1e-12));
  CHECK(cs3.inf == Approx(1.0 / 3.0).epsilon(1e-12));

  const auto l2 = nonmeasurability_witness(FractalStringDesc::rational_dim(2, 2, 1));
  CHECK(l2.ratio == Rational(2));

  const auto c2 = nonmeasurability_witness(FractalStringDesc::cantor_2());
  CHECK(c2.ratio == Rational(2));
  CHECK(c2.dimension_zero);
  CHECK(c2.sup == Approx(1.0).epsilon(1e-12));
  CHECK(c2.inf == Approx(0.5).epsilon(1e-12));

  for (const auto& d : tube_families()) {
    const auto rep = nonmeasurability_witness(d);
    const auto [q, r, c] = d.lattice();
    CHECK(rep.ratio == Rational(q, r));
    CHECK(rep.ratio > 1);
    CHECK(rep.verdict == "not measurable");
    CHECK(std::abs(rep.m_av_numeric - rep.m_av_closed) <= 1e-10);
  }
}

TEST_CASE("wave table") {
  const auto cs3 = FractalStringDesc::cantor_p(3);
  const auto rep = nonmeasurability_witness(cs3);
  const auto rows = wave_table(cs3, {std::pow(3.0, -8), 1.0, 100});
  REQUIRE(rows.size() == 100);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].eps > rows[i - 1].eps);
  for (const auto& s : rows) {
    if (s.eps > 0.99) continue;  // top piece saturates at total/p
    CHECK(s.ratio >= rep.inf - 1e-9);
    CHECK(s.ratio <= rep.sup + 1e-9);
  }

  CHECK(wave_table(cs3, {0.5, 0.5, 1}).size() == 1);

  // dyadic grid points land exactly on CS_2 jumps and get flagged
  const auto c2rows = wave_table(FractalStringDesc::cantor_2(), {0.25, 0.25, 1});
  CHECK(c2rows[0].jump);
  CHECK(c2rows[0].volume == Approx(0.25).epsilon(1e-14));

  CHECK_THROWS_AS(wave_table(cs3, {0.0, 1.0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(wave_table(cs3, {0.5, 0.2, 5}), std::invalid_argument);
}

TEST_CASE("wave table is deterministic") {
  const auto a = wave_table(FractalStringDesc::cantor_p(5), {1e-4, 0.9, 64});
  const auto b = wave_table(FractalStringDesc::cantor_p(5), {1e-4, 0.9, 64});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].volume == b[i].volume);
    CHECK(a[i].ratio == b[i].ratio);
  }
}

#include "padelic/fractal_string.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "padelic/primes.hpp"

namespace padelic {
namespace {

std::int64_t checked_block_pow(std::int64_t p, int m) {
  std::int64_t v = 1;
  for (int i = 0; i < m; ++i) {
    if (v > (std::int64_t(1) << 40) / p)
      throw std::invalid_argument("block count p^m too large");
    v *= p;
  }
  return v;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::rational_dim: return "rational";
    case Family::cantor_p: return "cantor-p";
    case Family::cantor_2: return "cantor-2";
    case Family::smith_real: return "smith";
    case Family::base_p_real: return "base-p";
    case Family::euler_p: return "euler";
    case Family::harmonic: return "harmonic";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::rational_dim, Family::cantor_p, Family::cantor_2,
                   Family::smith_real, Family::base_p_real, Family::euler_p,
                   Family::harmonic})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

FractalStringDesc FractalStringDesc::rational_dim(std::int64_t p, int m, int k) {
  require_prime(p, "rational_dim");
  if (m < 1 || k < 0 || k > m)
    throw std::invalid_argument("rational_dim: need 1 <= m and 0 <= k <= m");
  const std::int64_t pk = checked_block_pow(p, k);
  std::vector<std::int64_t> s(static_cast<std::size_t>(pk));
  for (std::int64_t i = 0; i < pk; ++i) s[static_cast<std::size_t>(i)] = i;
  return rational_dim(p, m, k, std::move(s));
}

FractalStringDesc FractalStringDesc::rational_dim(std::int64_t p, int m, int k,
                                                  std::vector<std::int64_t> recursion_set) {
  require_prime(p, "rational_dim");
  if (m < 1 || k < 0 || k > m)
    throw std::invalid_argument("rational_dim: need 1 <= m and 0 <= k <= m");
  const std::int64_t pm = checked_block_pow(p, m);
  const std::int64_t pk = checked_block_pow(p, k);
  if (static_cast<std::int64_t>(recursion_set.size()) != pk)
    throw std::invalid_argument("rational_dim: |S| must be p^k");
  std::sort(recursion_set.begin(), recursion_set.end());
  if (std::adjacent_find(recursion_set.begin(), recursion_set.end()) != recursion_set.end())
    throw std::invalid_argument("rational_dim: S has repeated block values");
  for (std::int64_t v : recursion_set)
    if (v < 0 || v >= pm)
      throw std::invalid_argument("rational_dim: block value out of [0, p^m)");

  FractalStringDesc d;
  d.family_ = Family::rational_dim;
  d.world_ = World::nonarchimedean;
  d.p_ = p;
  d.m_ = m;
  d.k_ = k;
  d.recursion_ = std::move(recursion_set);
  d.degenerate_ = (k == m);
  return d;
}

FractalStringDesc FractalStringDesc::rational_dim_diagonal(std::int64_t p) {
  require_prime(p, "rational_dim_diagonal");
  std::vector<std::int64_t> s(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) s[static_cast<std::size_t>(j)] = j + j * p;
  return rational_dim(p, 2, 1, std::move(s));
}

FractalStringDesc FractalStringDesc::cantor_p(std::int64_t p) {
  require_prime(p, "cantor_p");
  if (p == 2)
    throw std::invalid_argument("cantor_p: p = 2 is the cantor_2 construction");
  FractalStringDesc d;
  d.family_ = Family::cantor_p;
  d.world_ = World::nonarchimedean;
  d.p_ = p;
  d.m_ = 1;
  for (std::int64_t v = 0; v < p; v += 2) d.recursion_.push_back(v);  // even digits
  return d;
}

FractalStringDesc FractalStringDesc::cantor_2() {
  FractalStringDesc d;
  d.family_ = Family::cantor_2;
  d.world_ = World::nonarchimedean;
  d.p_ = 2;
  d.m_ = 1;
  d.recursion_ = {0};
  return d;
}

FractalStringDesc FractalStringDesc::smith(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("smith: base must be >= 2");
  FractalStringDesc d;
  d.family_ = Family::smith_real;
  d.world_ = World::archimedean;
  d.p_ = m;
  d.m_ = 1;
  d.degenerate_ = (m == 2);  // single-length dyadic case
  return d;
}

FractalStringDesc FractalStringDesc::base_p_real(std::int64_t p) {
  require_prime(p, "base_p_real");
  if (p == 2) throw std::invalid_argument("base_p_real: p must be odd");
  FractalStringDesc d;
  d.family_ = Family::base_p_real;
  d.world_ = World::archimedean;
  d.p_ = p;
  d.m_ = 1;
  return d;
}

FractalStringDesc FractalStringDesc::euler(std::int64_t p) {
  require_prime(p, "euler");
  FractalStringDesc d;
  d.family_ = Family::euler_p;
  d.world_ = World::nonarchimedean;
  d.p_ = p;
  d.m_ = 1;
  return d;
}

FractalStringDesc FractalStringDesc::harmonic() {
  FractalStringDesc d;
  d.family_ = Family::harmonic;
  d.world_ = World::measure;
  d.p_ = 0;
  d.m_ = 1;
  return d;
}

LatticeParams FractalStringDesc::lattice() const {
  const Int p(p_);
  switch (family_) {
    case Family::rational_dim: {
      const Int qm = int_pow(p, static_cast<unsigned long>(m_));
      const Int pk = int_pow(p, static_cast<unsigned long>(k_));
      return {qm, pk, qm - pk};
    }
    case Family::cantor_p:
    case Family::base_p_real:
      return {p, (p + 1) / 2, (p - 1) / 2};
    case Family::cantor_2:
      return {Int(2), Int(1), Int(1)};
    case Family::smith_real:
      return {p, p - 1, Int(1)};
    case Family::euler_p:
      return {p, Int(1), Int(1)};
    case Family::harmonic:
      break;
  }
  throw std::domain_error("harmonic string has no lattice parameters");
}

LengthTerm FractalStringDesc::term(long n) const {
  if (n < first_index())
    throw std::invalid_argument(name() + ": no term at index " + std::to_string(n));
  LengthTerm t;
  t.index = n;
  if (family_ == Family::harmonic) {
    t.length = Rational(1, n);
    t.multiplicity = 1;
    return t;
  }
  const auto [q, r, c] = lattice();
  t.length = Rational(1, int_pow(q, static_cast<unsigned long>(n)));
  if (degenerate_ && family_ == Family::rational_dim) {
    t.multiplicity = 0;
    return t;
  }
  t.multiplicity = c * int_pow(r, static_cast<unsigned long>(n - first_index()));
  return t;
}

std::vector<LengthTerm> FractalStringDesc::terms(std::size_t count) const {
  std::vector<LengthTerm> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(term(first_index() + static_cast<long>(i)));
  return out;
}

std::optional<Rational> FractalStringDesc::total_length() const {
  if (family_ == Family::harmonic) return std::nullopt;
  if (degenerate_ && family_ == Family::rational_dim) return Rational(0);
  const auto [q, r, c] = lattice();
  Rational total(c, q - r);
  if (first_index() == 0) total *= Rational(q, 1);  // n = 0 term shifts the series
  return total;
}

Rational FractalStringDesc::tail_length(long after) const {
  if (family_ == Family::harmonic)
    throw std::domain_error("harmonic string length diverges");
  if (after < first_index() - 1)
    throw std::invalid_argument("tail_length: index before first term");
  if (degenerate_ && family_ == Family::rational_dim) return Rational(0);
  const LengthTerm next = term(after + 1);
  const auto [q, r, c] = lattice();
  const Rational x(r, q);  // term ratio, < 1 for every family here
  return Rational(next.multiplicity) * next.length / (1 - x);
}

std::string FractalStringDesc::name() const {
  switch (family_) {
    case Family::rational_dim:
      return "L_" + std::to_string(p_) + "(" + std::to_string(m_) + "," +
             std::to_string(k_) + ")";
    case Family::cantor_p: return "CS_" + std::to_string(p_);
    case Family::cantor_2: return "CS_2";
    case Family::smith_real: return "Smith_" + std::to_string(p_);
    case Family::base_p_real: return "CS*_" + std::to_string(p_);
    case Family::euler_p: return "E_" + std::to_string(p_);
    case Family::harmonic: return "h";
  }
  return "?";
}

nlohmann::json to_json(const FractalStringDesc& desc) {
  nlohmann::json j;
  j["family"] = family_name(desc.family());
  switch (desc.world()) {
    case World::nonarchimedean: j["world"] = "nonarchimedean"; break;
    case World::archimedean: j["world"] = "archimedean"; break;
    case World::measure: j["world"] = "measure"; break;
  }
  if (desc.family() != Family::harmonic && desc.family() != Family::cantor_2)
    j[desc.family() == Family::smith_real ? "m" : "p"] = desc.prime();
  if (desc.family() == Family::rational_dim) {
    j["m"] = desc.block_size();
    j["k"] = desc.kept_exponent();
    j["S"] = desc.recursion_set();
  }
  return j;
}

FractalStringDesc desc_from_json(const nlohmann::json& j) {
  if (!j.contains("family")) throw std::invalid_argument("descriptor: missing 'family'");
  const Family f = family_from_name(j.at("family").get<std::string>());
  const auto geti = [&](const char* key) -> std::int64_t {
    if (!j.contains(key))
      throw std::invalid_argument(std::string("descriptor: missing '") + key + "'");
    return j.at(key).get<std::int64_t>();
  };
  switch (f) {
    case Family::rational_dim: {
      const auto p = geti("p");
      const int m = static_cast<int>(geti("m"));
      const int k = static_cast<int>(geti("k"));
      if (j.contains("S"))
        return FractalStringDesc::rational_dim(p, m, k,
                                               j.at("S").get<std::vector<std::int64_t>>());
      return FractalStringDesc::rational_dim(p, m, k);
    }
    case Family::cantor_p: return FractalStringDesc::cantor_p(geti("p"));
    case Family::cantor_2: return FractalStringDesc::cantor_2();
    case Family::smith_real: return FractalStringDesc::smith(geti("m"));
    case Family::base_p_real: return FractalStringDesc::base_p_real(geti("p"));
    case Family::euler_p: return FractalStringDesc::euler(geti("p"));
    case Family::harmonic: return FractalStringDesc::harmonic();
  }
  throw std::invalid_argument("descriptor: unknown family");
}

}  // namespace padelic

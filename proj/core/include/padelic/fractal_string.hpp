#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padelic/rational.hpp"

namespace padelic {

enum class Family {
  rational_dim,  // p-adic string of dimension k/m inside Z_p
  cantor_p,      // p-adic Cantor string, odd p
  cantor_2,      // 2-adic Cantor string
  smith_real,    // general Cantor string in [0,1], base m
  base_p_real,   // archimedean twin of cantor_p
  euler_p,       // p-adic Euler string (lengths p^-n, n >= 0)
  harmonic,      // measure with lengths 1/n
};

enum class World { nonarchimedean, archimedean, measure };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct LengthTerm {
  long index = 1;
  Rational length;
  Int multiplicity;
};

// Every family except the harmonic string is lattice: l_n = q^-n and
// mu_n = c * r^(n - first_index).
struct LatticeParams {
  Int q;
  Int r;
  Int c;
};

// Immutable description of one string family: enough to generate the exact
// (length, multiplicity) sequence lazily and, for the p-adic families, to
// unfold the ball-level construction.
class FractalStringDesc {
 public:
  // S defaults to {0, ..., p^k - 1}; any set of p^k distinct blocks in
  // [0, p^m) is accepted. Degenerate k = m yields the empty string, flagged.
  static FractalStringDesc rational_dim(std::int64_t p, int m, int k);
  static FractalStringDesc rational_dim(std::int64_t p, int m, int k,
                                        std::vector<std::int64_t> recursion_set);
  /// The m = 2, k = 1 string with S on the diagonal {j + j*p}.
  static FractalStringDesc rational_dim_diagonal(std::int64_t p);

  static FractalStringDesc cantor_p(std::int64_t p);  // odd p only
  static FractalStringDesc cantor_2();
  static FractalStringDesc smith(std::int64_t m);  // m >= 2; m = 2 flagged degenerate
  static FractalStringDesc base_p_real(std::int64_t p);
  static FractalStringDesc euler(std::int64_t p);
  static FractalStringDesc harmonic();

  Family family() const { return family_; }
  World world() const { return world_; }

  /// The prime for p-adic families, the base m for smith_real.
  std::int64_t prime() const { return p_; }
  int block_size() const { return m_; }
  int kept_exponent() const { return k_; }
  /// Block values the construction recurses on (the set S for rational_dim).
  const std::vector<std::int64_t>& recursion_set() const { return recursion_; }
  bool degenerate() const { return degenerate_; }

  long first_index() const { return family_ == Family::euler_p ? 0 : 1; }
  LatticeParams lattice() const;  // throws std::domain_error for harmonic
  LengthTerm term(long n) const;
  std::vector<LengthTerm> terms(std::size_t count) const;

  /// sum mu_n l_n; 1 for the Z_p-filling families, p/(p-1) for Euler,
  /// nullopt for the divergent harmonic string, 0 when degenerate.
  std::optional<Rational> total_length() const;
  /// Exact geometric remainder sum_{n > after} mu_n l_n.
  Rational tail_length(long after) const;

  std::string name() const;  // "CS_3", "L_2(2,1)", "E_5", ...

  friend bool operator==(const FractalStringDesc&, const FractalStringDesc&) = default;

 private:
  FractalStringDesc() = default;

  Family family_ = Family::cantor_2;
  World world_ = World::nonarchimedean;
  std::int64_t p_ = 2;
  int m_ = 1;
  int k_ = 0;
  std::vector<std::int64_t> recursion_;
  bool degenerate_ = false;
};

nlohmann::json to_json(const FractalStringDesc& desc);
FractalStringDesc desc_from_json(const nlohmann::json& j);

}  // namespace padelic

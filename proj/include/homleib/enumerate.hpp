#ifndef HOMLEIB_ENUMERATE_HPP
#define HOMLEIB_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "homleib/algebra.hpp"
#include "homleib/opspaces.hpp"

namespace homleib {

enum class Sidedness { left, right, symmetric };

struct SearchConfig {
  std::size_t dim = 2;  // the scan is implemented for dimension 2
  std::int64_t p = 3;   // prime, >= 3
  Sidedness sidedness = Sidedness::left;
  bool require_multiplicative = true;
  std::uint64_t budget = default_budget();

  /// HOMLEIB_BUDGET env override, else 4e9 raw candidates.
  static std::uint64_t default_budget();
  void validate() const;  // throws on p = 2, non-prime p, dim != 2, budget excess
  std::uint64_t candidate_count() const;
};

/// One scanned (c, alpha) pair over F_p: eight structure constants
/// c_{ij}^k then four twisting-map entries a_{ij}, all row-major, in [0, p).
struct PackedAlgebra {
  std::array<std::uint8_t, 12> v{};
  friend auto operator<=>(const PackedAlgebra&, const PackedAlgebra&) = default;
  std::uint64_t encode(std::int64_t p) const;
  HomAlgebra to_algebra(std::int64_t p) const;
  static PackedAlgebra from_algebra(const HomAlgebra& a);
};

/// All (c, alpha) over F_p passing the configured checks. OpenMP kernel,
/// candidates partitioned by the leading structure constants; deterministic
/// (sorted) output.
std::vector<PackedAlgebra> enumerate_all(const SearchConfig& cfg);

/// Serial reference scanner kept for testing: independent iteration order
/// (twisting map outermost, reversed digit significance) and an independent
/// evaluation route (the Element-level identity checkers instead of the raw
/// residue kernel). Output in scan order, not sorted.
std::vector<PackedAlgebra> enumerate_all_reference(const SearchConfig& cfg);

/// Exhaustive GL_2(F_p) search for T with T[x,y]_A = [Tx,Ty]_B and
/// T alpha_A = alpha_B T; returns a witness or nothing.
std::optional<Matrix> hom_isomorphic(const HomAlgebra& a, const HomAlgebra& b);

/// Base change of the whole structure: bracket transported through T,
/// twisting map conjugated.
PackedAlgebra transform(const PackedAlgebra& a, const Matrix& t, std::int64_t p);

struct Fingerprint {
  std::size_t dim_der0 = 0, dim_gamma0 = 0, dim_zder0 = 0;
  bool symmetric = false;
  std::size_t alpha_rank = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const HomAlgebra& a);

struct IsoClass {
  PackedAlgebra representative;  // orbit minimum under encode()
  std::uint64_t orbit_size = 0;
  Fingerprint fp;
};

/// Partition of enumerate_all(cfg) into GL_2(F_p) base-change orbits.
std::vector<IsoClass> classify(const SearchConfig& cfg);

/// All invertible 2x2 matrices over F_p in lexicographic entry order.
std::vector<Matrix> gl2_elements(std::int64_t p);

}  // namespace homleib

#endif

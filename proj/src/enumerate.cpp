#include "homleib/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <map>

namespace homleib {

std::uint64_t SearchConfig::default_budget() {
  if (const char* env = std::getenv("HOMLEIB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 4ULL * 1000 * 1000 * 1000;
}

std::uint64_t SearchConfig::candidate_count() const {
  std::uint64_t total = 1;
  for (int i = 0; i < 12; ++i) total *= static_cast<std::uint64_t>(p);
  return total;
}

void SearchConfig::validate() const {
  if (dim != 2) throw PreconditionError("the scan is implemented for dimension 2");
  if (!is_prime(p) || p == 2) Field::prime(p);  // reuses the rejection messages
  if (candidate_count() > budget)
    throw PreconditionError("scan of " + std::to_string(candidate_count()) +
                            " candidates exceeds the budget of " + std::to_string(budget) +
                            " (raise HOMLEIB_BUDGET to override)");
}

std::uint64_t PackedAlgebra::encode(std::int64_t p) const {
  std::uint64_t key = 0;
  for (int i = 0; i < 12; ++i) key = key * static_cast<std::uint64_t>(p) + v[i];
  return key;
}

HomAlgebra PackedAlgebra::to_algebra(std::int64_t p) const {
  Field f = Field::prime(p);
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>> br;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::vector<Scalar> val{Scalar::from_int(f, v[(i * 2 + j) * 2]),
                              Scalar::from_int(f, v[(i * 2 + j) * 2 + 1])};
      br.emplace_back(i + 1, j + 1, val);
    }
  Matrix alpha = Matrix::from_ints(f, 2, 2, {v[8], v[9], v[10], v[11]});
  return HomAlgebra(f, 2, br, alpha);
}

PackedAlgebra PackedAlgebra::from_algebra(const HomAlgebra& a) {
  if (a.dim() != 2 || a.field().is_rational())
    throw PreconditionError("packing needs a 2-dimensional prime-field algebra");
  PackedAlgebra out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        out.v[(i * 2 + j) * 2 + k] = static_cast<std::uint8_t>(a.sc(i, j, k).residue());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out.v[8 + i * 2 + j] = static_cast<std::uint8_t>(a.alpha().at(i, j).residue());
  return out;
}

namespace {

// Raw residue kernel for the scan hot path. c[(i*2+j)*2+k] = c_{ij}^k,
// a[i*2+j] = alpha_{ij}; everything reduced mod p.
struct RawChecker {
  std::int64_t p;

  std::int64_t c(const std::uint8_t* v, int i, int j, int k) const {
    return v[(i * 2 + j) * 2 + k];
  }
  std::int64_t a(const std::uint8_t* v, int i, int j) const { return v[8 + i * 2 + j]; }

  bool multiplicative(const std::uint8_t* v) const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int s = 0; s < 2; ++s) {
          std::int64_t lhs = 0, rhs = 0;
          for (int k = 0; k < 2; ++k) lhs += a(v, s, k) * c(v, i, j, k);
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) rhs += a(v, k, i) * a(v, l, j) * c(v, k, l, s);
          if ((lhs - rhs) % p != 0) return false;
        }
    return true;
  }

  // [alpha(x),[y,z]]_s
  std::int64_t lhs_term(const std::uint8_t* v, int x, int y, int z, int s) const {
    std::int64_t acc = 0;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) acc += a(v, k, x) * c(v, y, z, l) * c(v, k, l, s);
    return acc;
  }
  // [[x,y],alpha(z)]_s
  std::int64_t rhs1_term(const std::uint8_t* v, int x, int y, int z, int s) const {
    std::int64_t acc = 0;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) acc += c(v, x, y, k) * a(v, l, z) * c(v, k, l, s);
    return acc;
  }
  // [alpha(y),[x,z]]_s
  std::int64_t rhs2_left(const std::uint8_t* v, int x, int y, int z, int s) const {
    std::int64_t acc = 0;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) acc += a(v, k, y) * c(v, x, z, l) * c(v, k, l, s);
    return acc;
  }
  // [[x,z],alpha(y)]_s
  std::int64_t rhs2_right(const std::uint8_t* v, int x, int y, int z, int s) const {
    std::int64_t acc = 0;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) acc += c(v, x, z, k) * a(v, l, y) * c(v, k, l, s);
    return acc;
  }

  bool left(const std::uint8_t* v) const {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          for (int s = 0; s < 2; ++s)
            if ((lhs_term(v, x, y, z, s) - rhs1_term(v, x, y, z, s) - rhs2_left(v, x, y, z, s)) %
                    p !=
                0)
              return false;  // prune on the first violated triple
    return true;
  }

  bool right(const std::uint8_t* v) const {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          for (int s = 0; s < 2; ++s)
            if ((lhs_term(v, x, y, z, s) - rhs1_term(v, x, y, z, s) + rhs2_right(v, x, y, z, s)) %
                    p !=
                0)
              return false;
    return true;
  }

  bool passes(const std::uint8_t* v, const SearchConfig& cfg) const {
    if (cfg.require_multiplicative && !multiplicative(v)) return false;
    switch (cfg.sidedness) {
      case Sidedness::left:
        return left(v);
      case Sidedness::right:
        return right(v);
      case Sidedness::symmetric:
        return left(v) && right(v);
    }
    return false;
  }
};

}  // namespace

std::vector<PackedAlgebra> enumerate_all(const SearchConfig& cfg) {
  cfg.validate();
  const std::int64_t p = cfg.p;
  RawChecker chk{p};
  std::uint64_t outer_total = 1;  // leading four structure constants
  for (int i = 0; i < 4; ++i) outer_total *= static_cast<std::uint64_t>(p);
  std::vector<std::vector<PackedAlgebra>> found(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t outer = 0; outer < static_cast<std::int64_t>(outer_total); ++outer) {
    PackedAlgebra cand;
    std::uint64_t rem = static_cast<std::uint64_t>(outer);
    for (int i = 3; i >= 0; --i) {
      cand.v[i] = static_cast<std::uint8_t>(rem % p);
      rem /= p;
    }
    std::vector<PackedAlgebra>& bucket = found[omp_get_thread_num()];
    // inner digits: remaining structure constants then the twisting map, lex order
    std::uint64_t inner_total = 1;
    for (int i = 0; i < 8; ++i) inner_total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t inner = 0; inner < inner_total; ++inner) {
      std::uint64_t rest = inner;
      for (int i = 11; i >= 4; --i) {
        cand.v[i] = static_cast<std::uint8_t>(rest % p);
        rest /= p;
      }
      if (chk.passes(cand.v.data(), cfg)) bucket.push_back(cand);
    }
  }
  std::vector<PackedAlgebra> out;
  for (auto& b : found) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PackedAlgebra> enumerate_all_reference(const SearchConfig& cfg) {
  cfg.validate();
  const std::int64_t p = cfg.p;
  const Field f = Field::prime(p);
  std::vector<PackedAlgebra> out;
  // twisting map outermost, digits in reversed significance relative to the kernel
  std::uint64_t alpha_total = 1;
  for (int i = 0; i < 4; ++i) alpha_total *= static_cast<std::uint64_t>(p);
  std::uint64_t c_total = 1;
  for (int i = 0; i < 8; ++i) c_total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t acode = 0; acode < alpha_total; ++acode) {
    PackedAlgebra cand;
    std::uint64_t rem = acode;
    for (int i = 8; i < 12; ++i) {  // least-significant digit first
      cand.v[i] = static_cast<std::uint8_t>(rem % p);
      rem /= p;
    }
    for (std::uint64_t ccode = 0; ccode < c_total; ++ccode) {
      std::uint64_t rest = ccode;
      for (int i = 0; i < 8; ++i) {
        cand.v[i] = static_cast<std::uint8_t>(rest % p);
        rest /= p;
      }
      HomAlgebra a = cand.to_algebra(p);
      if (cfg.require_multiplicative && !is_multiplicative(a).holds) continue;
      bool ok = false;
      switch (cfg.sidedness) {
        case Sidedness::left:
          ok = check_left_hom_leibniz(a).holds;
          break;
        case Sidedness::right:
          ok = check_right_hom_leibniz(a).holds;
          break;
        case Sidedness::symmetric:
          ok = check_symmetric(a).holds;
          break;
      }
      if (ok) out.push_back(cand);
    }
  }
  return out;
}

std::vector<Matrix> gl2_elements(std::int64_t p) {
  Field f = Field::prime(p);
  std::vector<Matrix> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) {
          if ((a * d - b * c) % p == 0) continue;
          out.push_back(Matrix::from_ints(f, 2, 2, {a, b, c, d}));
        }
  return out;
}

std::optional<Matrix> hom_isomorphic(const HomAlgebra& a, const HomAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatchError("isomorphism search needs one field");
  if (a.field().is_rational())
    throw PreconditionError("exhaustive isomorphism search works over prime fields");
  if (a.dim() != b.dim() || a.dim() != 2)
    throw PreconditionError("isomorphism search is implemented for dimension 2");
  for (const Matrix& t : gl2_elements(a.field().characteristic())) {
    if (t * a.alpha() != b.alpha() * t) continue;
    bool ok = true;
    for (std::size_t i = 0; i < 2 && ok; ++i)
      for (std::size_t j = 0; j < 2 && ok; ++j) {
        std::vector<Scalar> lhs = t.apply(a.bracket(a.basis_element(i), a.basis_element(j)).coords);
        Element rhs = b.bracket(Element{t.apply(a.basis_element(i).coords)},
                                Element{t.apply(a.basis_element(j).coords)});
        ok = lhs == rhs.coords;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

PackedAlgebra transform(const PackedAlgebra& a, const Matrix& t, std::int64_t p) {
  const Field f = t.field();
  HomAlgebra alg = a.to_algebra(p);
  // bracket transported through t: [x,y]' = t [t^{-1} x, t^{-1} y]
  const Scalar det = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
  Matrix tinv(f, 2, 2);
  const Scalar idet = det.inverse();
  tinv.set(0, 0, t.at(1, 1) * idet);
  tinv.set(0, 1, -t.at(0, 1) * idet);
  tinv.set(1, 0, -t.at(1, 0) * idet);
  tinv.set(1, 1, t.at(0, 0) * idet);
  PackedAlgebra out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Element v{t.apply(alg.bracket(Element{tinv.apply(alg.basis_element(i).coords)},
                                    Element{tinv.apply(alg.basis_element(j).coords)})
                            .coords)};
      for (std::size_t k = 0; k < 2; ++k)
        out.v[(i * 2 + j) * 2 + k] = static_cast<std::uint8_t>(v.coords[k].residue());
    }
  Matrix alpha2 = t * alg.alpha() * tinv;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out.v[8 + i * 2 + j] = static_cast<std::uint8_t>(alpha2.at(i, j).residue());
  return out;
}

Fingerprint fingerprint(const HomAlgebra& a) {
  Fingerprint fp;
  fp.dim_der0 = derivation_space(a, 0).dim();
  fp.dim_gamma0 = left_centroid_space(a, 0).dim();
  fp.dim_zder0 = central_derivation_space(a, 0).dim();
  fp.symmetric = check_symmetric(a).holds;
  fp.alpha_rank = rank(a.alpha());
  return fp;
}

std::vector<IsoClass> classify(const SearchConfig& cfg) {
  std::vector<PackedAlgebra> all = enumerate_all(cfg);
  const std::vector<Matrix> gl = gl2_elements(cfg.p);
  std::map<std::uint64_t, IsoClass> buckets;
  for (const auto& cand : all) {
    PackedAlgebra best = cand;
    for (const Matrix& t : gl) best = std::min(best, transform(cand, t, cfg.p));
    auto [it, inserted] = buckets.try_emplace(best.encode(cfg.p));
    if (inserted) it->second.representative = best;
    it->second.orbit_size += 1;
  }
  std::vector<IsoClass> out;
  for (auto& [key, cls] : buckets) {
    cls.fp = fingerprint(cls.representative.to_algebra(cfg.p));
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace homleib

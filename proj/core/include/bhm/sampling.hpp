#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "bhm/banded.hpp"
#include "bhm/scalar.hpp"
#include "bhm/two_sided.hpp"

namespace bhm {

struct ConstantLaw {
  ExactComplex value;
};

/// Finitely many atoms with rational weights summing to one.
struct AtomLaw {
  std::vector<ExactComplex> values;
  std::vector<Rational> probs;
};

/// Uniform law on the real interval [lo, hi].
struct UniformLaw {
  Rational lo;
  Rational hi;
};

/// A bounded law for one diagonal, with its modulus bound C.
class Distribution {
 public:
  using Law = std::variant<ConstantLaw, AtomLaw, UniformLaw>;

  static Distribution constant(ExactComplex value);
  static Distribution atoms(std::vector<ExactComplex> values, std::vector<Rational> probs);
  static Distribution uniform(Rational lo, Rational hi);
  /// Bernoulli +-1 with equal weights.
  static Distribution rademacher();

  const Law& law() const { return law_; }
  double bound() const { return bound_; }
  /// Replaces the bound; must not be smaller than the largest support modulus.
  void set_bound(double c);
  bool deterministic() const;

 private:
  explicit Distribution(Law law);
  Law law_;
  double bound_ = 0.0;
};

/// m_k = E[x^k].
ExactComplex exact_moment(const Distribution& d, int k);

struct EnsembleSpec {
  int p = 1;
  std::vector<Distribution> mus;  // mu_0 .. mu_p
  std::uint64_t seed = 0;

  /// Checks p >= 0 and mus.size() == p + 1.
  void validate() const;
  /// max_k C_k.
  double bound() const;
  bool deterministic() const;
};

/// What a stream of random numbers is used for. Distinct roles never share randomness.
enum class Role : std::uint32_t {
  lhs_matrix = 1,
  window = 2,
  collection_a = 3,
  collection_b = 4,
  collection_alpha = 5,
  weyl_plus = 6,
  weyl_shifted = 7,
  invariance_t = 8,
  invariance_x = 9,
  identity = 10,
  ew_phi = 11,
  ew_psi = 12,
  invariance_phi = 13,
};

struct StreamId {
  std::uint64_t trial = 0;
  Role role = Role::window;
};

/// Deterministic generator for one (seed, trial, role, lane) substream.
class Rng {
 public:
  Rng(std::uint64_t seed, StreamId stream, std::uint32_t lane = 0);
  std::uint64_t next() { return engine_(); }
  /// 53-bit mantissa; uniform on [0, 1).
  std::uint64_t next53() { return engine_() >> 11; }
  double uniform() { return static_cast<double>(next53()) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Precomputed sampler for one distribution.
class Sampler {
 public:
  explicit Sampler(const Distribution& d);
  ExactComplex draw_exact(Rng& rng) const;
  Complex draw(Rng& rng) const;

  template <class S>
  S draw_as(Rng& rng) const {
    if constexpr (ScalarTraits<S>::exact)
      return draw_exact(rng);
    else
      return draw(rng);
  }

 private:
  const Distribution* dist_;
  std::vector<std::uint64_t> thresholds_;  // ceil(cumulative * 2^53)
  std::vector<Complex> atom_values_;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// H_n diagonal sequences a_1..a_length, i.i.d. per diagonal.
template <class S>
DiagonalSequences<S> sample_one_sided(const EnsembleSpec& e, int length, StreamId stream);

/// i.i.d. two-sided window on sites [-L, L].
template <class S>
TwoSidedWindow<S> sample_window(const EnsembleSpec& e, int half_width, StreamId stream);

/// Window assembled from independent collections A (sites n >= 1), the triangular
/// array alpha (sites -k <= n <= 0 on diagonal k) and B (sites n <= -k-1), so that
/// w_0 of the window is W.
template <class S>
TwoSidedWindow<S> build_theorem_collections(const EnsembleSpec& e, int half_width,
                                            std::uint64_t trial);

}  // namespace bhm

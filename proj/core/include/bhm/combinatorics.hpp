#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bhm/scalar.hpp"

namespace bhm {

/// A vector of nonnegative integers with a fixed coordinate sum.
///
/// Used both for C(n) (p+1 parts, indexed k_0..k_p) and for the triangular
/// compositions over (p+1)(p+2)/2 slots. `operator[]` is 0-based;
/// `component()` is 1-based to match the slot numbering of the f/g array.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  std::size_t size() const { return parts_.size(); }
  int total() const { return total_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int component(std::size_t one_based) const;
  std::span<const int> parts() const { return parts_; }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Length-p vector of nonnegative integers (r, alpha(k), beta(k), eta(r, k)).
using IndexVector = std::vector<int>;

/// Every composition of n into m nonnegative parts, in lexicographic order.
std::vector<Composition> compositions(int n, int m);

/// Visits the compositions of n into m parts in lexicographic order without
/// materializing the list. The span passed to `fn` is only valid during the call.
template <class Fn>
void for_each_composition(int n, int m, Fn&& fn) {
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == m - 1) {
      parts[static_cast<std::size_t>(slot)] = remaining;
      fn(std::span<const int>(parts));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  if (m >= 1 && n >= 0) rec(rec, 0, n);
}

BigInt factorial(int n);

/// Binomial coefficient extended by C(n, -1) = [n == -1]; zero elsewhere out of range.
BigInt binomial_with_convention(long n, long k);

/// n! / prod k_i!; throws PreconditionViolation if sum(k) != n.
BigInt multinomial(int n, std::span<const int> k);
inline BigInt multinomial(int n, const Composition& k) { return multinomial(n, k.parts()); }

/// Number of slots f_{k,l}, 0 <= k <= l <= p.
constexpr int triangle_size(int p) { return (p + 1) * (p + 2) / 2; }

/// Slot of f_{k_row, ell} in the flattened triangle: ell(ell+1)/2 + k_row + 1 (1-based).
int flat_index(int k_row, int ell);

/// (alpha(k, j), beta(k, j)): the exponents of phi^+_{0,j} and phi^-_{0,j}
/// produced by the slot multiplicities k (1-based slots, length triangle_size(p)).
std::pair<int, int> alpha_beta_index(std::span<const int> k, int j, int p);
IndexVector alpha_vector(std::span<const int> k, int p);
IndexVector beta_vector(std::span<const int> k, int p);

/// eta(r, k) = (k_1 + r_2, ..., k_{p-1} + r_p, k_p) for r of length p and k = (k_0..k_p).
IndexVector eta_map(std::span<const int> r, std::span<const int> k);

/// Every vector in Z_{>=0}^p with entry sum <= max_total, grouped by total.
std::vector<IndexVector> index_vectors_up_to(int p, int max_total);

}  // namespace bhm

#include "bhm/combinatorics.hpp"

#include <numeric>
#include <string>

#include "bhm/errors.hpp"

namespace bhm {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_) {
    if (v < 0) throw PreconditionViolation("Composition: negative part");
    total_ += v;
  }
}

int Composition::component(std::size_t one_based) const {
  if (one_based == 0 || one_based > parts_.size()) {
    throw PreconditionViolation("Composition::component: index " + std::to_string(one_based) +
                                " out of 1.." + std::to_string(parts_.size()));
  }
  return parts_[one_based - 1];
}

std::vector<Composition> compositions(int n, int m) {
  if (n < 0 || m < 1) throw PreconditionViolation("compositions: need n >= 0 and m >= 1");
  std::vector<Composition> out;
  for_each_composition(n, m, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw PreconditionViolation("factorial: negative argument");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt binomial_with_convention(long n, long k) {
  if (k == -1) return BigInt(n == -1 ? 1 : 0);
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

BigInt multinomial(int n, std::span<const int> k) {
  long sum = 0;
  for (int v : k) {
    if (v < 0) throw PreconditionViolation("multinomial: negative part");
    sum += v;
  }
  if (sum != n) {
    throw PreconditionViolation("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(n));
  }
  // Product of binomials avoids the large intermediate n!.
  BigInt result(1);
  long running = 0;
  for (int v : k) {
    running += v;
    result *= binomial_with_convention(running, v);
  }
  return result;
}

int flat_index(int k_row, int ell) {
  if (k_row < 0 || ell < 0 || k_row > ell) {
    throw PreconditionViolation("flat_index: need 0 <= k <= ell");
  }
  return ell * (ell + 1) / 2 + k_row + 1;
}

std::pair<int, int> alpha_beta_index(std::span<const int> k, int j, int p) {
  if (p < 1) throw PreconditionViolation("alpha_beta_index: p must be >= 1");
  if (static_cast<int>(k.size()) != triangle_size(p)) {
    throw PreconditionViolation("alpha_beta_index: composition has " + std::to_string(k.size()) +
                                " parts, expected " + std::to_string(triangle_size(p)));
  }
  if (j < 1 || j > p) throw PreconditionViolation("alpha_beta_index: j out of 1..p");
  int alpha = 0;
  int beta = 0;
  for (int t = 1; t <= p - j + 1; ++t) {
    alpha += k[static_cast<std::size_t>((j + t) * (j + t + 1) / 2 - j - 1)];
    beta += k[static_cast<std::size_t>((j + t - 1) * (j + t) / 2 + j + 1 - 1)];
  }
  return {alpha, beta};
}

IndexVector alpha_vector(std::span<const int> k, int p) {
  IndexVector out(static_cast<std::size_t>(p));
  for (int j = 1; j <= p; ++j) out[static_cast<std::size_t>(j - 1)] = alpha_beta_index(k, j, p).first;
  return out;
}

IndexVector beta_vector(std::span<const int> k, int p) {
  IndexVector out(static_cast<std::size_t>(p));
  for (int j = 1; j <= p; ++j) out[static_cast<std::size_t>(j - 1)] = alpha_beta_index(k, j, p).second;
  return out;
}

IndexVector eta_map(std::span<const int> r, std::span<const int> k) {
  const std::size_t p = r.size();
  if (p == 0 || k.size() != p + 1) {
    throw PreconditionViolation("eta_map: need |r| = p >= 1 and |k| = p + 1");
  }
  IndexVector out(p);
  for (std::size_t i = 1; i < p; ++i) out[i - 1] = k[i] + r[i];
  out[p - 1] = k[p];
  return out;
}

std::vector<IndexVector> index_vectors_up_to(int p, int max_total) {
  std::vector<IndexVector> out;
  for (int total = 0; total <= max_total; ++total) {
    for_each_composition(total, p, [&](std::span<const int> parts) {
      out.emplace_back(parts.begin(), parts.end());
    });
  }
  return out;
}

}  // namespace bhm

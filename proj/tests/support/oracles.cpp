#include "oracles.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace oracle {

Matrix hessenberg(int n, const std::vector<std::vector<Q>>& diags) {
  Matrix a(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = 1;
  for (std::size_t k = 0; k < diags.size(); ++k)
    for (int j = 0; j + static_cast<int>(k) < n; ++j) a[j + k][j] = diags[k].at(j);
  return a;
}

Q determinant(Matrix a) {
  const std::size_t n = a.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<Q> char_poly(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Q> xs, ys;
  for (int z = 0; z <= n; ++z) {
    Matrix m = a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j ? Q(z) : Q(0)) - a[i][j];
    xs.push_back(z);
    ys.push_back(determinant(m));
  }
  // Lagrange basis expanded into monomials.
  std::vector<Q> out(n + 1, Q(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<Q> basis{Q(1)};
    Q denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Q> next(basis.size() + 1, Q(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] -= basis[t] * xs[j];
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (int t = 0; t <= n; ++t) out[t] += ys[i] * basis[t] / denom;
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Q>(n, Q(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix power(const Matrix& a, int s) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Q>(n, Q(0)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (int t = 0; t < s; ++t) r = multiply(r, a);
  return r;
}

Q trace(const Matrix& a) {
  Q t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

std::vector<std::vector<int>> compositions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(m, 0);
  while (true) {
    int sum = 0;
    for (int x : v) sum += x;
    if (sum == n) out.push_back(v);
    int i = m - 1;
    while (i >= 0 && v[i] == n) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Q moment(const Law& law, int k) {
  Q m = 0;
  for (std::size_t i = 0; i < law.values.size(); ++i) {
    Q v = 1;
    for (int t = 0; t < k; ++t) v *= law.values[i];
    m += law.probs[i] * v;
  }
  return m;
}

namespace {

// Steps from row i: to i + 1 with weight 1, or to i - k with weight a_{i-k}^{(k)}.
template <class Visit>
void walks(int p, int s, Visit&& visit) {
  std::map<std::pair<int, int>, int> uses;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (left == 0) {
      if (pos == 0) visit(uses);
      return;
    }
    // Return needs -pos up-steps or ceil(pos / p) down-steps.
    auto reachable = [&](int x, int l) { return x <= 0 ? -x <= l : (p > 0 && (x + p - 1) / p <= l); };
    if (reachable(pos + 1, left - 1)) rec(pos + 1, left - 1);
    for (int k = 0; k <= p; ++k) {
      if (!reachable(pos - k, left - 1)) continue;
      auto key = std::make_pair(k, pos - k);
      ++uses[key];
      rec(pos - k, left - 1);
      if (--uses[key] == 0) uses.erase(key);
    }
  };
  rec(0, s);
}

}  // namespace

Q closed_walk_moment(const std::vector<std::function<Q(int)>>& moments, int s) {
  const int p = static_cast<int>(moments.size()) - 1;
  Q total = 0;
  walks(p, s, [&](const std::map<std::pair<int, int>, int>& uses) {
    Q w = 1;
    for (const auto& [key, count] : uses) w *= moments[key.first](count);
    total += w;
  });
  return total;
}

Q closed_walk_moment(const std::vector<Law>& laws, int s) {
  std::vector<std::function<Q(int)>> moments;
  for (const auto& l : laws) moments.push_back([&l](int k) { return moment(l, k); });
  return closed_walk_moment(moments, s);
}

Q uniform_moment(const Q& lo, const Q& hi, int m) {
  Q a = 1;
  Q b = 1;
  for (int i = 0; i <= m; ++i) {
    a *= lo;
    b *= hi;
  }
  return (b - a) / (Q(m + 1) * (hi - lo));
}

long closed_walk_count(int p, int s) {
  long count = 0;
  walks(p, s, [&](const auto&) { ++count; });
  return count;
}

}  // namespace oracle

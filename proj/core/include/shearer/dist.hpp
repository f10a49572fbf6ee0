#pragma once

#include "shearer/errors.hpp"
#include "shearer/graph.hpp"
#include "shearer/numeric.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace shearer {

namespace transform {

/// In place f[S] <- sum_{T subset of S} f[T].
template <class T>
void subset_zeta(std::vector<T>& f, int n) {
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < f.size(); ++s)
      if (s >> i & 1) f[s] += f[s ^ (std::size_t(1) << i)];
}

template <class T>
void subset_moebius(std::vector<T>& f, int n) {
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < f.size(); ++s)
      if (s >> i & 1) f[s] -= f[s ^ (std::size_t(1) << i)];
}

/// In place f[S] <- sum_{T superset of S} f[T].
template <class T>
void superset_zeta(std::vector<T>& f, int n) {
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < f.size(); ++s)
      if (!(s >> i & 1)) f[s] += f[s | (std::size_t(1) << i)];
}

template <class T>
void superset_moebius(std::vector<T>& f, int n) {
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < f.size(); ++s)
      if (!(s >> i & 1)) f[s] -= f[s | (std::size_t(1) << i)];
}

}  // namespace transform

/// Dense law on binary configurations of n vertices; bit v of the index is
/// the value of Y_v.
template <class T>
struct Dist {
  int n = 0;
  std::vector<T> mass;

  Dist() = default;
  Dist(int n_, std::vector<T> mass_) : n(n_), mass(std::move(mass_)) {
    if (mass.size() != (std::size_t(1) << n)) throw PreconditionError("mass table size mismatch");
  }

  std::uint64_t configs() const { return std::uint64_t(1) << n; }

  /// Largest violation of nonnegativity (0 when none).
  T negativity() const {
    T worst(0);
    for (const T& m : mass)
      if (m < -worst) worst = -m;
    return worst;
  }

  T total() const {
    T t(0);
    for (const T& m : mass) t += m;
    return t;
  }

  bool valid(const T& tol) const {
    if (negativity() > tol) return false;
    T t = total() - T(1);
    return t <= tol && -t <= tol;
  }

  T marginal(int v) const {
    T t(0);
    for (std::uint64_t c = 0; c < configs(); ++c)
      if (c >> v & 1) t += mass[c];
    return t;
  }

  /// P(Y_W = 1) for every W at once (index = W).
  std::vector<T> all_ones_table() const {
    std::vector<T> f = mass;
    transform::superset_zeta(f, n);
    return f;
  }

  /// P(Y_W = 0) for every W at once (index = W).
  std::vector<T> all_zeros_table() const {
    std::vector<T> f = mass;
    transform::subset_zeta(f, n);
    // f[S] = P(Y <= complement of ... ) with index flip:
    std::vector<T> out(f.size());
    std::uint64_t full = configs() - 1;
    for (std::uint64_t w = 0; w < f.size(); ++w) out[w] = f[full & ~w];
    return out;
  }
};

using DistD = Dist<double>;
using DistQ = Dist<Rational>;

/// Law of a product field with the given marginals.
template <class T>
Dist<T> product_dist(const Vec<T>& c) {
  int n = static_cast<int>(c.size());
  if (n > kMeasureCap) throw CapExceeded("product law cap exceeded");
  std::vector<T> mass(std::size_t(1) << n, T(1));
  for (int v = 0; v < n; ++v) {
    std::uint64_t bit = std::uint64_t(1) << v;
    for (std::uint64_t s = 0; s < mass.size(); ++s) mass[s] *= (s & bit) ? c[v] : T(1) - c[v];
  }
  return Dist<T>(n, std::move(mass));
}

/// Law of the coordinatewise maximum of independent draws from a and b.
template <class T>
Dist<T> or_convolve(const Dist<T>& a, const Dist<T>& b) {
  if (a.n != b.n) throw PreconditionError("dimension mismatch");
  if (a.n > kComposeCap) throw CapExceeded("composition cap exceeded");
  std::vector<T> fa = a.mass, fb = b.mass;
  transform::subset_zeta(fa, a.n);
  transform::subset_zeta(fb, a.n);
  for (std::size_t s = 0; s < fa.size(); ++s) fa[s] *= fb[s];
  transform::subset_moebius(fa, a.n);
  return Dist<T>(a.n, std::move(fa));
}

/// Law of the coordinatewise minimum of independent draws from a and b.
template <class T>
Dist<T> and_convolve(const Dist<T>& a, const Dist<T>& b) {
  if (a.n != b.n) throw PreconditionError("dimension mismatch");
  if (a.n > kComposeCap) throw CapExceeded("composition cap exceeded");
  std::vector<T> fa = a.mass, fb = b.mass;
  transform::superset_zeta(fa, a.n);
  transform::superset_zeta(fb, a.n);
  for (std::size_t s = 0; s < fa.size(); ++s) fa[s] *= fb[s];
  transform::superset_moebius(fa, a.n);
  return Dist<T>(a.n, std::move(fa));
}

template <class T>
Dist<double> to_float_dist(const Dist<T>& d) {
  std::vector<double> mass(d.mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) mass[i] = to_double(d.mass[i]);
  return Dist<double>(d.n, std::move(mass));
}

/// mt19937_64 mapped to [0,1) the same way on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next_bits() {
    // xorshift64* keeps the stream reproducible without relying on
    // library-defined distributions.
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }
  double uniform() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// Independent draws by inverse CDF over the dense table.
std::vector<std::uint64_t> sample(const Dist<double>& d, std::uint64_t seed, int count);

}  // namespace shearer

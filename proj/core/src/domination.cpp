#include "shearer/domination.hpp"

#include <string>

namespace shearer {

CondOracle make_cond_oracle(Dist<double> d) {
  return [d = std::move(d)](std::uint64_t prefix, int len) {
    if (len >= d.n) throw PreconditionError("cond oracle: index beyond field");
    std::uint64_t low = (std::uint64_t(1) << len) - 1;
    double with = 0, without = 0;
    for (std::uint64_t c = 0; c < d.configs(); ++c) {
      if ((c & low) != prefix) continue;
      if (c >> len & 1)
        with += d.mass[c];
      else
        without += d.mass[c];
    }
    double denom = with + without;
    if (denom <= 0) throw PreconditionError("cond oracle: zero-probability prefix");
    return with / denom;
  };
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> russo_sample(
    const CondOracle& cond, const std::vector<double>& floor_p, std::uint64_t seed, int count) {
  int n = static_cast<int>(floor_p.size());
  Rng rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t z = 0, x = 0;
    for (int v = 0; v < n; ++v) {
      double a = cond(z, v);
      if (a < floor_p[v] - 1e-12)
        throw MinorationViolated(
            "conditional probability " + std::to_string(a) + " below floor " +
                std::to_string(floor_p[v]) + " at vertex " + std::to_string(v),
            z, v);
      double u = rng.uniform();
      if (u < a) z |= std::uint64_t(1) << v;
      if (u < floor_p[v]) x |= std::uint64_t(1) << v;
    }
    out.emplace_back(z, x);
  }
  return out;
}

}  // namespace shearer

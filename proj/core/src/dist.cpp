#include "shearer/dist.hpp"

#include <algorithm>

namespace shearer {

std::vector<std::uint64_t> sample(const Dist<double>& d, std::uint64_t seed, int count) {
  if (!d.valid(1e-9)) throw PreconditionError("sample: not a probability law");
  std::vector<double> cum(d.mass.size());
  double acc = 0;
  for (std::size_t i = 0; i < d.mass.size(); ++i) {
    acc += std::max(0.0, d.mass[i]);
    cum[i] = acc;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    double u = rng.uniform() * acc;
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    out.push_back(static_cast<std::uint64_t>(it - cum.begin()));
  }
  return out;
}

}  // namespace shearer

#pragma once

#include "shearer/dist.hpp"
#include "shearer/graph.hpp"
#include "shearer/measure.hpp"
#include "shearer/numeric.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace shearer {

enum class BoundKind { LowerBound, UpperBound, Sufficient, Exact };

const char* bound_kind_name(BoundKind k);

template <class T>
struct BoundReport {
  std::string name;
  T value;
  BoundKind kind;
  std::vector<std::pair<std::string, std::string>> inputs;
};

namespace detail {

template <class T>
T exact_root(const T& x, unsigned e) {
  if constexpr (scalar_traits<T>::exact) {
    Rational out;
    if (!rational_root(x, e, out))
      throw PreconditionError("closed form is not rational at these arguments");
    return out;
  } else {
    return std::pow(x, 1.0 / static_cast<double>(e));
  }
}

template <class T>
T ratio_power_dual(unsigned a, unsigned b) {
  // a^a / b^b as a scalar.
  if constexpr (scalar_traits<T>::exact) {
    return Rational(int_pow(BigInt(a), a), int_pow(BigInt(b), b));
  } else {
    return std::pow(double(a), double(a)) / std::pow(double(b), double(b));
  }
}

}  // namespace detail

/// Critical value of the D-regular tree: 1 - (D-1)^(D-1)/D^D.
template <class T>
BoundReport<T> p_sh_tree(int degree) {
  if (degree < 2) throw PreconditionError("p_sh_tree needs D >= 2");
  T v = T(1) - detail::ratio_power_dual<T>(degree - 1, degree);
  return {"p_sh_tree", v, BoundKind::Exact, {{"D", std::to_string(degree)}}};
}

/// Critical value of the k-fuzz of the integers: 1 - k^k/(k+1)^(k+1).
template <class T>
BoundReport<T> p_sh_kfuzz(int k) {
  if (k < 1) throw PreconditionError("p_sh_kfuzz needs k >= 1");
  T v = T(1) - detail::ratio_power_dual<T>(k, k + 1);
  return {"p_sh_kfuzz", v, BoundKind::Exact, {{"k", std::to_string(k)}}};
}

/// Lower bound on the critical value of the d-dimensional lattice.
template <class T>
BoundReport<T> zd_lower(int d) {
  if (d < 1) throw PreconditionError("zd_lower needs d >= 1");
  T v = T(1) - detail::ratio_power_dual<T>(d, d + 1);
  return {"zd_lower", v, BoundKind::LowerBound, {{"d", std::to_string(d)}}};
}

/// Uniform minoration of the dominated value on degree-D graphs:
/// (1 - (q/(D-1)^(D-1))^(1/D)) (1 - (q(D-1))^(1/D)).
template <class T>
BoundReport<T> lss_lower(int degree, const T& p) {
  if (degree < 2) throw PreconditionError("lss_lower needs D >= 2");
  T q = T(1) - p;
  T dd;
  if constexpr (scalar_traits<T>::exact)
    dd = Rational(int_pow(BigInt(degree - 1), degree - 1), 1);
  else
    dd = std::pow(double(degree - 1), double(degree - 1));
  T a = T(1) - detail::exact_root<T>(q / dd, degree);
  T b = T(1) - detail::exact_root<T>(q * T(degree - 1), degree);
  return {"lss_lower", a * b, BoundKind::LowerBound,
          {{"D", std::to_string(degree)}, {"p", std::to_string(to_double(p))}}};
}

/// Sharper minoration on the k-fuzz of the integers:
/// (1 - (q/k^k)^(1/(k+1))) (1 - (qk)^(1/(k+1))).
template <class T>
BoundReport<T> lss_kfuzz(int k, const T& p) {
  if (k < 1) throw PreconditionError("lss_kfuzz needs k >= 1");
  T q = T(1) - p;
  T kk;
  if constexpr (scalar_traits<T>::exact)
    kk = Rational(int_pow(BigInt(k), k), 1);
  else
    kk = std::pow(double(k), double(k));
  T a = T(1) - detail::exact_root<T>(q / kk, k + 1);
  T b = T(1) - detail::exact_root<T>(q * T(k), k + 1);
  return {"lss_kfuzz", a * b, BoundKind::LowerBound,
          {{"k", std::to_string(k)}, {"p", std::to_string(to_double(p))}}};
}

/// Jump of the dominated value at the k-fuzz critical point, from below.
template <class T>
BoundReport<T> jump_lower(int k) {
  if (k < 1) throw PreconditionError("jump_lower needs k >= 1");
  T v = T(k) / (T(k + 1) * T(k + 1));
  return {"jump_lower", v, BoundKind::LowerBound, {{"k", std::to_string(k)}}};
}

/// Pre-asymptotic upper chain for the same jump:
/// 1/(k+1) + (1 - (k+1)^(-1/(k+1))).
template <class T>
BoundReport<T> kfuzz_jump_upper(int k) {
  if (k < 1) throw PreconditionError("kfuzz_jump_upper needs k >= 1");
  T root = detail::exact_root<T>(T(1) / T(k + 1), k + 1);
  T v = T(1) / T(k + 1) + (T(1) - root);
  return {"kfuzz_jump_upper", v, BoundKind::UpperBound, {{"k", std::to_string(k)}}};
}

/// All-or-nothing field on the closed half-ball 0..k: all ones with the
/// k-fuzz critical probability, all zeros otherwise. Its strong dependency
/// graph is the k-fuzz window.
template <class T>
Dist<T> kfuzz_halfball_brf(int k) {
  if (k < 1) throw PreconditionError("halfball needs k >= 1");
  if (k + 1 > kFlowCap) throw CapExceeded("halfball cap exceeded");
  int n = k + 1;
  T pstar = p_sh_kfuzz<T>(k).value;
  std::vector<T> mass(std::size_t(1) << n, T(0));
  mass[(std::size_t(1) << n) - 1] = pstar;
  mass[0] = T(1) - pstar;
  return Dist<T>(n, std::move(mass));
}

/// The uniformly dominated vector: 1 at frozen vertices, the critical-
/// function form on finite components, q_v min q_w on components marked as
/// windows of infinite graphs. Components are taken in the subgraph induced
/// by the vertices with p_v < 1; each must be Interior.
VecD uniformly_dominated_vector(const Graph& g, const VecD& p, const VertexSubset& infinite_markers);

struct ConditionResult {
  bool holds = false;
  VecD s;
};

/// Classical sufficient condition q_v prod_{w in N+(v)} (1+s_w) <= s_v.
/// Without a supplied s, searches by monotone fixed-point iteration from
/// s = q and verifies the final iterate.
ConditionResult lll_check(const Graph& g, const VecD& q, const VecD* s = nullptr);

/// Neighbourhood-polynomial refinement q_v Xi_{G[N+(v)]}(-s) <= s_v, the
/// independent-set sum over the closed neighbourhood with weights +s.
ConditionResult fp_check(const Graph& g, const VecD& q, const VecD* s = nullptr);

}  // namespace shearer

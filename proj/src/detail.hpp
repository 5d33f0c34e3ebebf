#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "catmates/adjoint.hpp"

namespace catmates::detail {

using Tuple = std::vector<std::uint32_t>;

inline Permutation invert(const Permutation& p) {
  Permutation q(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

inline Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// First a, then b.
inline Permutation then(const Permutation& a, const Permutation& b) {
  Permutation q(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) q[x] = b[a[x]];
  return q;
}

inline bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline std::string label(std::span<const CategoryPtr> cats, std::span<const ObjId> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += cats[i]->object_name(t[i]);
  }
  return s + ")";
}

inline std::vector<CategoryPtr> pick(std::span<const CategoryPtr> cats, std::span<const std::size_t> slots) {
  std::vector<CategoryPtr> out;
  for (auto s : slots) out.push_back(cats[s]);
  return out;
}

}  // namespace catmates::detail

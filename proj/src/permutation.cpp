#include "numsg/permutation.hpp"

#include <string>

#include "numsg/errors.hpp"

namespace numsg {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto m = entries_.size();
  std::vector<bool> seen(m + 1, false);
  for (int e : entries_) {
    if (e < 1 || static_cast<std::size_t>(e) > m) {
      throw ValidationError("permutation entry " + std::to_string(e) + " outside 1.." +
                            std::to_string(m));
    }
    if (seen[e]) throw ValidationError("permutation repeats entry " + std::to_string(e));
    seen[e] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<int>(i + 1);
  return Permutation(std::move(e));
}

ConversionVector::ConversionVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int r = entries_[i];
    if (r < 0 || static_cast<std::size_t>(r) > i) {
      throw ValidationError("conversion vector entry " + std::to_string(i + 1) + " is " +
                            std::to_string(r) + ", must lie in 0.." + std::to_string(i));
    }
  }
}

ConversionVector conversion_vector(const Permutation& pi) {
  const auto p = pi.entries();
  std::vector<int> r(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p[j] < p[i]) ++r[i];
    }
  }
  return ConversionVector(std::move(r));
}

Permutation permutation_from_conversion(const ConversionVector& r) {
  std::vector<int> p;
  p.reserve(r.size());
  for (int ri : r.entries()) {
    for (int& e : p) {
      if (e > ri) ++e;
    }
    p.push_back(ri + 1);
  }
  return Permutation(std::move(p));
}

}  // namespace numsg

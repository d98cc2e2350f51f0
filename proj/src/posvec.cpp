#include "numsg/posvec.hpp"

#include <stdexcept>
#include <string>

#include "numsg/checked.hpp"

namespace numsg {
namespace {

// t_i = (v_i + t_{i-1}) mod i and floor((v_i + t_{i-1}) / i), computed
// without forming v_i + t_{i-1}.
struct Step {
  int t;
  Int quotient;
};

Step conversion_step(Int v, int t_prev, Int i) {
  const Int low = v % i + t_prev;
  return {static_cast<int>(low % i), v / i + low / i};
}

ConversionVector conversion_from_vector(const PositionVector& v) {
  std::vector<int> t(v.size(), 0);
  for (std::size_t i = 2; i <= v.size(); ++i) {
    t[i - 1] = conversion_step(v.at(i), t[i - 2], static_cast<Int>(i)).t;
  }
  return ConversionVector(std::move(t));
}

}  // namespace

PositionVector::PositionVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) {
      throw ValidationError("position vector entry " + std::to_string(i + 1) + " is " +
                            std::to_string(entries_[i]) + ", entries must be >= 1");
    }
  }
}

AperySet AperyDecomposition::to_apery() const {
  std::vector<Int> w{0};
  for (std::size_t i = 0; i < k.size(); ++i) {
    w.push_back(checked_add(checked_mul(modulus, k[i]), pi.entries()[i]));
  }
  return AperySet(modulus, std::move(w));
}

AperyDecomposition decompose(const AperySet& apery) {
  const Int n = apery.modulus();
  const auto w = apery.elements();
  AperyDecomposition out;
  out.modulus = n;
  std::vector<int> pi;
  for (std::size_t i = 1; i < w.size(); ++i) {
    out.k.push_back(w[i] / n);
    pi.push_back(static_cast<int>(w[i] % n));
  }
  out.pi = Permutation(std::move(pi));
  return out;
}

DecodeTrace decode_trace(const PositionVector& v) {
  const std::size_t m = v.size();
  const Int n = v.modulus();
  DecodeTrace out;
  if (m == 0) return out;

  std::vector<int> t(m, 0);
  std::vector<Int> l(m, 0);
  l[0] = v.at(1) - 1;
  for (std::size_t i = 2; i <= m; ++i) {
    const auto step = conversion_step(v.at(i), t[i - 2], static_cast<Int>(i));
    t[i - 1] = step.t;
    l[i - 1] = checked_add(l[i - 2], step.quotient);
  }
  out.t = ConversionVector(std::move(t));
  out.sigma = permutation_from_conversion(out.t);
  std::vector<Int> w{0};
  for (std::size_t i = 0; i < m; ++i) {
    w.push_back(checked_add(checked_mul(n, l[i]), out.sigma.entries()[i]));
  }
  out.l = std::move(l);
  out.apery = AperySet(n, std::move(w));
  return out;
}

AperySet decode(const PositionVector& v) { return decode_trace(v).apery; }

PositionVector encode(const AperySet& apery) {
  const auto d = decompose(apery);
  const auto r = conversion_vector(d.pi);
  const std::size_t m = d.k.size();
  std::vector<Int> v(m);
  if (m == 0) return PositionVector{};
  v[0] = checked_add(d.k[0], 1);
  for (std::size_t i = 2; i <= m; ++i) {
    const Int step = checked_mul(static_cast<Int>(i), d.k[i - 1] - d.k[i - 2]);
    v[i - 1] = checked_add(step, r.at(i) - r.at(i - 1));
  }
  return PositionVector(std::move(v));
}

PositionVector encode_numset(const NumericalSet& set, Int n) { return encode(apery_set(set, n)); }

ClassProfile class_profile(const PositionVector& v) {
  const std::size_t m = v.size();
  std::vector<Int> rep(m);
  std::vector<Int> u(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const Int idx = static_cast<Int>(i);
    rep[i - 1] = (v.at(i) - 1) % idx + 1;
    u[i - 1] = (v.at(i) - 1) / idx;
  }
  auto pi = permutation_from_conversion(conversion_from_vector(v));
  std::vector<int> gamma(m, 0);
  for (std::size_t i = 2; i <= m; ++i) gamma[i - 1] = pi.at(i - 1) > pi.at(i) ? 1 : 0;
  return ClassProfile{PositionVector(std::move(rep)), std::move(pi), std::move(gamma),
                      std::move(u)};
}

bool congruent(const PositionVector& v, const PositionVector& z) {
  if (v.size() != z.size()) {
    throw ValidationError("cannot compare position vectors of lengths " +
                          std::to_string(v.size()) + " and " + std::to_string(z.size()));
  }
  for (std::size_t i = 1; i <= v.size(); ++i) {
    const Int idx = static_cast<Int>(i);
    if (v.at(i) % idx != z.at(i) % idx) return false;
  }
  return true;
}

bool is_semigroup_vector(const PositionVector& v) {
  const std::size_t m = v.size();
  const Int n = v.modulus();
  const auto profile = class_profile(v);
  const auto pi = profile.permutation.entries();

  // K[i] = k_i, rebuilt from the floor decomposition k_i - k_{i-1} = u_i + gamma_i.
  std::vector<Int> K(m + 1, 0);
  for (std::size_t x = 1; x <= m; ++x) {
    K[x] = checked_add(K[x - 1], checked_add(profile.u[x - 1], profile.gamma[x - 1]));
  }
  std::vector<std::size_t> position(static_cast<std::size_t>(n), 0);
  for (std::size_t x = 1; x <= m; ++x) position[static_cast<std::size_t>(pi[x - 1])] = x;

  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i; j <= m; ++j) {
      const Int sum = pi[i - 1] + pi[j - 1];
      // Residue 0 belongs to w_0 only, so there is no l > j to compare with.
      if (sum % n == 0) continue;
      const std::size_t l = position[static_cast<std::size_t>(sum % n)];
      if (l <= j) continue;
      const Int numerator = sum - pi[l - 1];
      if (numerator != 0 && numerator != n) {
        throw std::logic_error("residue carry outside {0, 1} at (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(l) + ")");
      }
      const Int carry = numerator / n;
      if (K[i] + carry < K[l] - K[j]) return false;
    }
  }
  return true;
}

bool has_multiplicity_n(const PositionVector& v) { return v.size() == 0 || v.at(1) > 1; }

VectorEnumerator::VectorEnumerator(Int n, Int bound, VectorFilter filter)
    : bound_(bound), filter_(filter) {
  if (n < 1) throw ValidationError("modulus must be >= 1");
  if (bound < 1) throw ValidationError("bound must be >= 1");
  current_.assign(static_cast<std::size_t>(n - 1), 1);
}

bool VectorEnumerator::advance() {
  for (std::size_t pos = current_.size(); pos-- > 0;) {
    if (current_[pos] < bound_) {
      ++current_[pos];
      return true;
    }
    current_[pos] = 1;
  }
  return false;
}

std::optional<PositionVector> VectorEnumerator::next() {
  while (!exhausted_) {
    if (started_ && !advance()) {
      exhausted_ = true;
      break;
    }
    started_ = true;
    PositionVector v(current_);
    switch (filter_) {
      case VectorFilter::all:
        return v;
      case VectorFilter::semigroups:
        if (is_semigroup_vector(v)) return v;
        break;
      case VectorFilter::semigroups_with_multiplicity_n:
        if (has_multiplicity_n(v) && is_semigroup_vector(v)) return v;
        break;
    }
  }
  return std::nullopt;
}

std::vector<PositionVector> enumerate_vectors(Int n, Int bound, VectorFilter filter) {
  VectorEnumerator it(n, bound, filter);
  std::vector<PositionVector> out;
  while (auto v = it.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace numsg

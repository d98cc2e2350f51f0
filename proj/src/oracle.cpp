#include "numsg/oracle.hpp"

#include <string>

namespace numsg::oracle {
namespace {

void require_gamma(const NumericalSet& set, Int n) {
  if (n < 1) throw ValidationError("n must be positive");
  for (Int x = 0; x < set.conductor(); ++x) {
    if (set.contains(x) && !set.contains(x + n)) {
      throw PreconditionError("set is not closed under adding " + std::to_string(n));
    }
  }
}

bool closed_under_addition(const NumericalSet& set) {
  for (Int a = 1; a < set.conductor(); ++a) {
    if (!set.contains(a)) continue;
    for (Int b = a; b < set.conductor(); ++b) {
      if (set.contains(b) && !set.contains(a + b)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Int> apery_positions(const NumericalSet& set, Int n) {
  require_gamma(set, n);
  std::vector<Int> positions;
  Int index = 0;
  for (Int x = 0; static_cast<Int>(positions.size()) < n; ++x) {
    if (!set.contains(x)) continue;
    if (!set.contains(x - n)) positions.push_back(index);
    ++index;
  }
  return positions;
}

PositionVector pv_by_enumeration(const NumericalSet& set, Int n) {
  const auto x = apery_positions(set, n);
  std::vector<Int> v;
  for (std::size_t i = 1; i < x.size(); ++i) v.push_back(x[i] - x[i - 1]);
  return PositionVector(std::move(v));
}

AperySet apery_by_scan(const NumericalSet& set, Int n) {
  require_gamma(set, n);
  std::vector<Int> w;
  for (Int x = 0; static_cast<Int>(w.size()) < n; ++x) {
    if (set.contains(x) && !set.contains(x - n)) w.push_back(x);
  }
  return AperySet(n, std::move(w));
}

std::vector<std::pair<Int, Int>> closure_violations(const NumericalSet& set) {
  std::vector<std::pair<Int, Int>> out;
  const auto s = set.sporadic();
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!set.contains(s[i] + s[j])) out.emplace_back(s[i], s[j]);
    }
  }
  return out;
}

Int multiplicity(const NumericalSet& set) {
  Int x = 1;
  while (!set.contains(x)) ++x;
  return x;
}

std::vector<Int> minimal_generators(const NumericalSet& set) {
  if (!closed_under_addition(set)) throw PreconditionError("not a semigroup");
  // Anything >= conductor + multiplicity is the multiplicity plus a nonzero
  // member, except for N_0 where the bound itself is the generator 1.
  const Int limit = set.conductor() + multiplicity(set) + 1;
  std::vector<Int> out;
  for (Int s = 1; s < limit; ++s) {
    if (!set.contains(s)) continue;
    bool minimal = true;
    for (Int t = 1; t < s && minimal; ++t) {
      if (set.contains(t) && set.contains(s - t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

void for_each_numset(Int max_frobenius, bool semigroups_only,
                     const std::function<void(const NumericalSet&)>& visit) {
  if (max_frobenius < 0) throw ValidationError("max_frobenius must be >= 0");
  if (max_frobenius > kMaxEnumeratedFrobenius) {
    throw GuardError("max_frobenius " + std::to_string(max_frobenius) + " exceeds limit " +
                     std::to_string(kMaxEnumeratedFrobenius));
  }
  visit(NumericalSet{});
  for (Int f = 1; f <= max_frobenius; ++f) {
    // Bit b of mask marks b + 1 as a gap; F itself is always a gap.
    const std::uint32_t subsets = std::uint32_t{1} << (f - 1);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      std::vector<Int> sporadic{0};
      for (Int x = 1; x < f; ++x) {
        if (!((mask >> (x - 1)) & 1u)) sporadic.push_back(x);
      }
      NumericalSet set(f + 1, std::move(sporadic));
      if (!semigroups_only || closed_under_addition(set)) visit(set);
    }
  }
}

std::vector<NumericalSet> enumerate_numsets(Int max_frobenius, bool semigroups_only) {
  std::vector<NumericalSet> out;
  for_each_numset(max_frobenius, semigroups_only,
                  [&](const NumericalSet& s) { out.push_back(s); });
  return out;
}

}  // namespace numsg::oracle

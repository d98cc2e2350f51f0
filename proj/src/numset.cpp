#include "numsg/numset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "numsg/checked.hpp"

namespace numsg {
namespace {

void guard_size(Int value, const char* what) {
  if (value > kMaterializationLimit) {
    throw GuardError(std::string(what) + " " + std::to_string(value) + " exceeds limit " +
                     std::to_string(kMaterializationLimit));
  }
}

}  // namespace

NumericalSet::NumericalSet(Int conductor, std::vector<Int> sporadic)
    : conductor_(conductor), sporadic_(std::move(sporadic)) {
  if (conductor_ < 0) throw ValidationError("negative conductor");
  guard_size(conductor_, "conductor");
  std::sort(sporadic_.begin(), sporadic_.end());
  if (std::adjacent_find(sporadic_.begin(), sporadic_.end()) != sporadic_.end()) {
    throw ValidationError("duplicate sporadic element");
  }
  if (conductor_ == 0) {
    if (!sporadic_.empty()) throw ValidationError("N_0 has no sporadic elements");
    return;
  }
  if (sporadic_.empty() || sporadic_.front() != 0) {
    throw ValidationError("sporadic elements must include 0");
  }
  if (sporadic_.back() >= conductor_) {
    throw ValidationError("sporadic element " + std::to_string(sporadic_.back()) +
                          " not below conductor " + std::to_string(conductor_));
  }
  if (sporadic_.back() == conductor_ - 1) {
    throw ValidationError("conductor is not minimal: " + std::to_string(conductor_ - 1) +
                          " is a member");
  }
  below_conductor_.assign(static_cast<std::size_t>(conductor_), false);
  for (Int s : sporadic_) below_conductor_[static_cast<std::size_t>(s)] = true;
}

std::vector<Int> NumericalSet::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus()));
  for (Int x = 1; x < conductor_; ++x) {
    if (!below_conductor_[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

AperySet::AperySet(Int modulus, std::vector<Int> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ < 1) throw ValidationError("Apery modulus must be positive");
  guard_size(modulus_, "modulus");
  if (static_cast<Int>(elements_.size()) != modulus_) {
    throw ValidationError("Apery set mod " + std::to_string(modulus_) + " needs exactly " +
                          std::to_string(modulus_) + " elements, got " +
                          std::to_string(elements_.size()));
  }
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() != 0) throw ValidationError("Apery set must contain 0");
  by_residue_.assign(elements_.size(), -1);
  for (Int w : elements_) {
    const auto r = static_cast<std::size_t>(w % modulus_);
    if (by_residue_[r] != -1) {
      throw ValidationError("Apery elements " + std::to_string(by_residue_[r]) + " and " +
                            std::to_string(w) + " share a residue mod " +
                            std::to_string(modulus_));
    }
    by_residue_[r] = w;
  }
}

bool AperySet::generates(Int x) const noexcept {
  if (x < 0) return false;
  return x >= by_residue_[static_cast<std::size_t>(x % modulus_)];
}

NumericalSet from_gaps(std::span<const Int> gaps) {
  Int max_gap = 0;
  for (Int g : gaps) {
    if (g <= 0) throw ValidationError("gap " + std::to_string(g) + " is not a positive integer");
    max_gap = std::max(max_gap, g);
  }
  if (max_gap == 0) return NumericalSet{};
  const Int c = checked_add(max_gap, 1);
  guard_size(c, "conductor");
  std::vector<bool> is_gap(static_cast<std::size_t>(c), false);
  for (Int g : gaps) is_gap[static_cast<std::size_t>(g)] = true;
  std::vector<Int> sporadic;
  for (Int x = 0; x < c; ++x) {
    if (!is_gap[static_cast<std::size_t>(x)]) sporadic.push_back(x);
  }
  return NumericalSet(c, std::move(sporadic));
}

NumericalSet from_generators(std::span<const Int> gens) {
  if (gens.empty()) throw ValidationError("generator list is empty");
  Int g = 0;
  Int smallest = gens.front();
  for (Int a : gens) {
    if (a <= 0) throw ValidationError("generator " + std::to_string(a) + " is not positive");
    g = std::gcd(g, a);
    smallest = std::min(smallest, a);
  }
  if (g != 1) throw ValidationError("not cofinite: generators have gcd " + std::to_string(g));
  guard_size(smallest, "smallest generator");

  // Shortest paths on residues mod the smallest generator give its Apery set.
  const auto m = static_cast<std::size_t>(smallest);
  std::vector<Int> dist(m, -1);
  using Entry = std::pair<Int, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (Int a : gens) {
      const Int next = checked_add(d, a);
      const auto nr = static_cast<std::size_t>(next % smallest);
      if (dist[nr] == -1 || next < dist[nr]) {
        dist[nr] = next;
        queue.emplace(next, nr);
      }
    }
  }
  return numset_from_apery(AperySet(smallest, std::move(dist)));
}

bool in_gamma_n(const NumericalSet& set, Int n) {
  if (n < 1) throw ValidationError("n must be positive");
  if (n >= set.conductor()) return true;
  for (Int s : set.sporadic()) {
    if (!set.contains(s + n)) return false;
  }
  return true;
}

AperySet apery_set(const NumericalSet& set, Int n) {
  if (!in_gamma_n(set, n)) {
    throw PreconditionError("set is not closed under adding " + std::to_string(n));
  }
  guard_size(n, "modulus");
  std::vector<Int> least(static_cast<std::size_t>(n), -1);
  for (Int s : set.sporadic()) {
    auto& slot = least[static_cast<std::size_t>(s % n)];
    if (slot == -1) slot = s;
  }
  const Int c = set.conductor();
  for (Int r = 0; r < n; ++r) {
    auto& slot = least[static_cast<std::size_t>(r)];
    if (slot == -1) slot = c + floor_mod(r - c, n);
  }
  return AperySet(n, std::move(least));
}

NumericalSet numset_from_apery(const AperySet& apery) {
  const Int n = apery.modulus();
  // The largest gap is max(A) - n; it is -1 exactly when A = {0..n-1}.
  const Int c = apery.max() - n + 1;
  if (c <= 0) return NumericalSet{};
  guard_size(c, "conductor");
  std::vector<Int> sporadic;
  for (Int x = 0; x < c; ++x) {
    if (apery.generates(x)) sporadic.push_back(x);
  }
  return NumericalSet(c, std::move(sporadic));
}

bool apery_is_semigroup(const AperySet& apery) {
  const Int n = apery.modulus();
  const auto w = apery.elements();
  const std::size_t size = w.size();
  std::vector<std::size_t> index_of(size);
  for (std::size_t i = 0; i < size; ++i) index_of[static_cast<std::size_t>(w[i] % n)] = i;

  for (std::size_t i = 1; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      const Int residue = (w[i] % n + w[j] % n) % n;
      const std::size_t l = index_of[static_cast<std::size_t>(residue)];
      if (l <= j) continue;
      // w_i + w_j >= w_l, rearranged so nothing can overflow.
      if (w[i] < w[l] - w[j]) return false;
    }
  }
  return true;
}

std::optional<std::pair<Int, Int>> first_violation(const AperySet& apery) {
  // A minimal violating pair always consists of Apery elements: if a - n
  // were a member, (a - n, b) would violate too.
  const auto w = apery.elements();
  const Int n = apery.modulus();
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      const Int residue = (w[i] % n + w[j] % n) % n;
      if (w[i] < apery.with_residue(residue) - w[j]) return std::make_pair(w[i], w[j]);
    }
  }
  return std::nullopt;
}

bool is_semigroup(const NumericalSet& set) {
  const auto s = set.sporadic();
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!set.contains(s[i] + s[j])) return false;
    }
  }
  return true;
}

SemigroupSummary summary(const NumericalSet& set) {
  if (!is_semigroup(set)) throw PreconditionError("not a semigroup: set is not closed under addition");
  const auto s = set.sporadic();
  const Int multiplicity = s.size() > 1 ? s[1] : std::max<Int>(set.conductor(), 1);
  return summary(apery_set(set, multiplicity));
}

SemigroupSummary summary(const AperySet& apery) {
  if (!apery_is_semigroup(apery)) {
    throw PreconditionError("not a semigroup: Apery set fails the closure criterion");
  }
  const Int n = apery.modulus();
  const auto w = apery.elements();

  SemigroupSummary out;
  out.frobenius = apery.max() - n;
  out.genus = 0;
  for (Int wi : w) out.genus = checked_add(out.genus, wi / n);
  out.multiplicity = w.size() > 1 ? std::min(n, w[1]) : n;

  // Every member is n*k + (Apery element), so minimal generators lie in
  // {n} u Ap \ {0}. A candidate x is decomposable iff x = s + t with s a
  // nonzero Apery element below x and t a nonzero member.
  auto decomposable = [&](Int x) {
    for (std::size_t i = 1; i < w.size() && w[i] < x; ++i) {
      if (apery.generates(x - w[i])) return true;
    }
    return false;
  };
  out.minimal_generators.clear();
  if (!decomposable(n)) out.minimal_generators.push_back(n);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!decomposable(w[i])) out.minimal_generators.push_back(w[i]);
  }
  std::sort(out.minimal_generators.begin(), out.minimal_generators.end());
  out.embedding_dimension = static_cast<Int>(out.minimal_generators.size());
  return out;
}

}  // namespace numsg

#include "numsg/verify.hpp"

#include <string>

#include "numsg/closed_form.hpp"
#include "numsg/format.hpp"
#include "numsg/oracle.hpp"
#include "numsg/posvec.hpp"

namespace numsg::verify {
namespace {

void guard_grid(Int n, Int bound) {
  if (n < 1) throw ValidationError("n must be >= 1");
  if (bound < 1) throw ValidationError("bound must be >= 1");
  std::uint64_t size = 1;
  for (Int i = 1; i < n; ++i) {
    size *= static_cast<std::uint64_t>(bound);
    if (size > kMaxGridSize) {
      throw GuardError("grid of " + std::to_string(bound) + "^" + std::to_string(n - 1) +
                       " vectors exceeds limit " + std::to_string(kMaxGridSize));
    }
  }
}

void fail(SuiteReport& report, std::string what) {
  if (report.passed) report.counterexample = std::move(what);
  report.passed = false;
}

bool brute_force_semigroup(const AperySet& apery) {
  return oracle::closure_violations(numset_from_apery(apery)).empty();
}

std::string verdict(bool b) { return b ? "true" : "false"; }

}  // namespace

SuiteReport bijection(Int n, Int bound) {
  guard_grid(n, bound);
  SuiteReport report{"bijection", true, 0, "round trips", std::nullopt};
  VectorEnumerator grid(n, bound, VectorFilter::all);
  while (auto v = grid.next()) {
    ++report.checked;
    const auto back = encode(decode(*v));
    if (back != *v) fail(report, "v=" + join(v->entries()) + " re-encodes to " + join(back.entries()));
  }
  return report;
}

SuiteReport apery_criterion(Int max_frobenius, Int max_modulus) {
  if (max_modulus < 1) throw ValidationError("max modulus must be >= 1");
  SuiteReport report{"lemma31", true, 0, "Apery sets", std::nullopt};
  oracle::for_each_numset(max_frobenius, false, [&](const NumericalSet& set) {
    for (Int n = 1; n <= max_modulus; ++n) {
      if (!in_gamma_n(set, n)) continue;
      ++report.checked;
      const auto apery = apery_set(set, n);
      const bool fast = apery_is_semigroup(apery);
      const bool slow = brute_force_semigroup(apery);
      if (fast != slow) {
        fail(report, to_text(apery) + ": criterion " + verdict(fast) + ", closure " + verdict(slow));
      }
    }
  });
  return report;
}

SuiteReport vector_criterion(Int n, Int bound) {
  guard_grid(n, bound);
  SuiteReport report{"thm36", true, 0, "vectors", std::nullopt};
  VectorEnumerator grid(n, bound, VectorFilter::all);
  while (auto v = grid.next()) {
    ++report.checked;
    const bool fast = is_semigroup_vector(*v);
    const bool slow = brute_force_semigroup(decode(*v));
    if (fast != slow) {
      fail(report, "v=" + join(v->entries()) + ": predicate " + verdict(fast) + ", closure " +
                       verdict(slow));
    }
  }
  return report;
}

SuiteReport closed_forms(Int n, Int bound) {
  if (n < 2 || n > 5) throw ValidationError("closed forms cover only n = 2..5");
  guard_grid(n, bound);
  SuiteReport report{"tables", true, 0, "vectors", std::nullopt};

  // Coverage: each representative in {1} x {1,2} x ... appears exactly once.
  VectorEnumerator reps(n, n - 1, VectorFilter::all);
  while (auto r = reps.next()) {
    bool is_rep = true;
    for (std::size_t i = 1; i <= r->size(); ++i) is_rep = is_rep && r->at(i) <= static_cast<Int>(i);
    if (!is_rep) continue;
    const auto count = closed_form_row_count(r->entries());
    if (count != 1) {
      fail(report, "representative " + join(r->entries()) + " listed in " + std::to_string(count) +
                       " rows");
    }
  }

  VectorEnumerator grid(n, bound, VectorFilter::all);
  while (auto v = grid.next()) {
    ++report.checked;
    const bool table = is_semigroup_closed_form(*v);
    const bool general = is_semigroup_vector(*v);
    if (table != general) {
      fail(report, "v=" + join(v->entries()) + ": table " + verdict(table) + ", predicate " +
                       verdict(general));
    }
  }
  return report;
}

}  // namespace numsg::verify

#include "levdom/constructions.hpp"
#include "levdom/error.hpp"
#include "levdom/solver.hpp"

#include <doctest.h>

using namespace levdom;

namespace {

// Full grid search of the two-constraint program, without the scan cut-off.
std::uint64_t counting_oracle(const LevelGraphSpec& spec) {
  const std::uint64_t lower = binomial(spec.n(), spec.l());
  const std::uint64_t upper = binomial(spec.n(), spec.k());
  const std::uint64_t per_upper = binomial(spec.k(), spec.l());
  const std::uint64_t per_lower = binomial(spec.n() - spec.l(), spec.k() - spec.l());
  std::uint64_t best = upper + lower;
  for (std::uint64_t a = 0; a <= upper; ++a) {
    for (std::uint64_t b = 0; b <= lower; ++b) {
      if (a * per_upper + b >= lower && b * per_lower + a >= upper) best = std::min(best, a + b);
    }
  }
  return best;
}

void check_report(const SolveReport& r) {
  CHECK(r.witness.size() == r.value);
  CHECK(verify_certificate(r.witness).verified);
  CHECK(r.lower_bound <= r.value);
  if (r.proven_optimal) CHECK(r.lower_bound == r.value);
}

}  // namespace

TEST_CASE("counting lower bound") {
  // a=2 upper members cover all six pairs but only two 3-sets, so one lower
  // member is still needed.
  CHECK(counting_lower_bound(LevelGraphSpec(4, 3, 2)) == 3);
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = 1; l < k; ++l) {
        const LevelGraphSpec spec(n, k, l);
        const auto bound = counting_lower_bound(spec);
        CHECK(bound == counting_oracle(spec));
        CHECK(bound >= 2);
      }
    }
  }
  // Stays computable far beyond materialization.
  CHECK(counting_lower_bound(LevelGraphSpec(40, 21, 2)) >= 2);
}

TEST_CASE("brute force reference values") {
  const auto g432 = brute_force_gamma(LevelGraphSpec(4, 3, 2), 10);
  CHECK(g432.value == 3);
  CHECK(g432.proven_optimal);
  CHECK(g432.method == SolveMethod::BruteForce);
  check_report(g432);

  const auto g521 = brute_force_gamma(LevelGraphSpec(5, 2, 1), 10);
  CHECK(g521.value == 4);

  // Frozen from this oracle.
  const auto g642 = brute_force_gamma(LevelGraphSpec(6, 4, 2), 10);
  CHECK(g642.value == 6);
  check_report(g642);
  CHECK(brute_force_gamma(LevelGraphSpec(5, 3, 2), 10).value == 6);
  CHECK(brute_force_gamma(LevelGraphSpec(6, 3, 2), 12).value == 9);
}

TEST_CASE("brute force witness is the lexicographically least optimal set") {
  const LevelGraphSpec spec(4, 3, 2);
  const auto report = brute_force_gamma(spec, 5);
  const auto graph = materialize(spec);
  std::vector<std::uint32_t> indices;
  for (const auto& v : report.witness.members()) indices.push_back(graph.index_of(v));
  std::sort(indices.begin(), indices.end());

  // Scan all 3-subsets of the 10 vertices in lexicographic order.
  std::vector<std::uint32_t> first;
  for (std::uint32_t a = 0; a < 10 && first.empty(); ++a) {
    for (std::uint32_t b = a + 1; b < 10 && first.empty(); ++b) {
      for (std::uint32_t c = b + 1; c < 10 && first.empty(); ++c) {
        const DominationCertificate cert(
            spec, {graph.vertex_at(a), graph.vertex_at(b), graph.vertex_at(c)},
            Provenance::External);
        if (verify_certificate(cert).verified) first = {a, b, c};
      }
    }
  }
  CHECK(indices == first);
}

TEST_CASE("brute force budget") {
  const LevelGraphSpec spec(6, 3, 2);
  try {
    brute_force_gamma(spec, 12, 1000);
    FAIL("expected budget-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  try {
    brute_force_gamma(LevelGraphSpec(4, 3, 2), 2);
    FAIL("expected budget-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("greedy") {
  const auto r = greedy_dominate(LevelGraphSpec(4, 3, 2));
  CHECK(r.value <= 4);
  CHECK(r.value >= 3);
  CHECK(r.method == SolveMethod::Greedy);
  check_report(r);
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = 1; l < k; ++l) {
        const auto g = greedy_dominate(LevelGraphSpec(n, k, l));
        CHECK(g.value >= 2);
        check_report(g);
      }
    }
  }
  CHECK_THROWS_AS(greedy_dominate(LevelGraphSpec(20, 10, 2)), Error);
}

TEST_CASE("branch and bound agrees with brute force for n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = 1; l < k; ++l) {
        const LevelGraphSpec spec(n, k, l);
        CAPTURE(spec.to_string());
        const auto exact = branch_and_bound_gamma(spec);
        const auto brute = brute_force_gamma(spec, 64);
        CHECK(exact.proven_optimal);
        CHECK(exact.value == brute.value);
        check_report(exact);
        CHECK(counting_lower_bound(spec) <= exact.value);
        CHECK(greedy_dominate(spec).value >= exact.value);
      }
    }
  }
}

TEST_CASE("branch and bound on the k = n-1 family and frozen values") {
  const auto r = branch_and_bound_gamma(LevelGraphSpec(9, 8, 2));
  CHECK(r.value == 3);
  CHECK(r.proven_optimal);

  // Frozen from this solver. k = 4 = ceil(7/2) sits just outside the
  // construction's range, yet ceil(7/2)+6 = 10 still bounds it.
  const auto g742 = branch_and_bound_gamma(LevelGraphSpec(7, 4, 2));
  CHECK(g742.proven_optimal);
  CHECK(g742.value == 9);
  CHECK(g742.value <= 10);
  CHECK(branch_and_bound_gamma(LevelGraphSpec(7, 5, 2)).value <=
        theorem1_construct(7, 5).second.size());
}

TEST_CASE("branch and bound budget is a normal outcome") {
  BranchAndBoundOptions options;
  options.node_budget = 5;
  const auto r = branch_and_bound_gamma(LevelGraphSpec(7, 3, 2), options);
  CHECK_FALSE(r.proven_optimal);
  CHECK(r.lower_bound <= r.value);
  CHECK(r.lower_bound == counting_lower_bound(LevelGraphSpec(7, 3, 2)));
  check_report(r);
}

TEST_CASE("branch and bound is deterministic in single-worker mode") {
  const LevelGraphSpec spec(7, 4, 2);
  const auto a = to_json(branch_and_bound_gamma(spec), false).dump();
  const auto b = to_json(branch_and_bound_gamma(spec), false).dump();
  CHECK(a == b);

  BranchAndBoundOptions capped;
  capped.node_budget = 1000;
  const auto c = to_json(branch_and_bound_gamma(LevelGraphSpec(8, 3, 2), capped), false).dump();
  const auto d = to_json(branch_and_bound_gamma(LevelGraphSpec(8, 3, 2), capped), false).dump();
  CHECK(c == d);
}

TEST_CASE("parallel branch and bound matches the sequential verdict") {
  BranchAndBoundOptions parallel;
  parallel.workers = 3;
  for (const auto& spec : {LevelGraphSpec(6, 3, 2), LevelGraphSpec(7, 4, 2), LevelGraphSpec(8, 5, 2)}) {
    const auto seq = branch_and_bound_gamma(spec);
    const auto par = branch_and_bound_gamma(spec, parallel);
    CHECK(par.value == seq.value);
    CHECK(par.proven_optimal == seq.proven_optimal);
    CHECK(par.lower_bound == seq.lower_bound);
    check_report(par);
  }
}

TEST_CASE("solve report JSON") {
  const auto r = branch_and_bound_gamma(LevelGraphSpec(4, 3, 2));
  const auto doc = to_json(r);
  CHECK(doc["method"] == "branch_and_bound");
  CHECK(doc["value"] == 3);
  CHECK(doc["proven_optimal"] == true);
  CHECK(doc["spec"]["n"] == 4);
  CHECK(doc["witness"]["provenance"] == "exact");
  CHECK(doc.contains("elapsed_ms"));
  CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
  CHECK(certificate_from_json(doc["witness"]) == r.witness);
}

// One PASS/FAIL line per acceptance criterion. Tolerances live with the checks in verify.hpp.
#include <dunkl/verify.hpp>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>

using namespace dunkl;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> prefixes;
  double time_limit;  // seconds, 0 for none
};

bool matches(const std::string& id, const std::vector<std::string>& prefixes) {
  for (auto& p : prefixes)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

bool same_results(const std::vector<CheckResult>& a, const std::vector<CheckResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].check_id != b[i].check_id || a[i].status != b[i].status || a[i].note != b[i].note) return false;
    if (std::memcmp(&a[i].residual, &b[i].residual, sizeof(double)) != 0) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::uint64_t seed = 2024;
  const std::vector<Criterion> criteria = {
      {1, "Bernstein identity, exact", {"bernstein."}, 30},
      {2, "Jack normalizations, exact", {"jack_normalization."}, 0},
      {3, "type B pairing of L_eta(x^2), exact", {"b_pairing."}, 0},
      {4, "L_nu conjugation and type B kernel layers, exact", {"l_nu_conjugation.", "type_b_kernel_layers."}, 0},
      {5, "Laplace transforms of Jacks (n = 2)", {"laplace.n2."}, 60},
      {6, "Hankel kernel law and isometry", {"hankel_kernel_law.", "hankel_isometry."}, 0},
      {7, "K-Bessel classical, symmetry, limit, eigen", {"kbessel_classical.", "kbessel_symmetry.", "kbessel_limit.",
                                                         "kbessel_eigen.n2"}, 0},
      {8, "zeta continuation and zeta_0 = delta_0", {"zeta_gaussian.", "zeta_delta."}, 0},
      {9, "zeta functional equation", {"functional_equation."}, 300},
      {10, "Wallach discrete point", {"wallach_"}, 0},
  };

  const auto checks = build_checks(SuiteOptions{"all", seed, 0, {}});
  std::vector<CheckResult> first;
  std::map<std::string, double> seconds;
  for (auto& c : checks) {
    auto t0 = std::chrono::steady_clock::now();
    first.push_back(run_check(c));
    seconds[c.id] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto& r = first.back();
    std::printf("  %-44s %-5s residual %.3e tol %.0e %s\n", r.check_id.c_str(), r.status.c_str(), r.residual,
                r.tolerance, r.note.c_str());
  }

  bool all = true;
  for (auto& cr : criteria) {
    int count = 0, passed = 0;
    double worst = 0, elapsed = 0;
    for (auto& r : first)
      if (matches(r.check_id, cr.prefixes)) {
        ++count;
        if (r.status == "pass") ++passed;
        worst = std::max(worst, std::isfinite(r.residual) ? r.residual : INFINITY);
        elapsed += seconds[r.check_id];
      }
    bool ok = count > 0 && passed == count && (cr.time_limit == 0 || elapsed < cr.time_limit);
    all = all && ok;
    std::printf("criterion %d: %s  %s (%d/%d checks, worst residual %.3e, %.2f s)\n", cr.id, ok ? "PASS" : "FAIL",
                cr.title.c_str(), passed, count, worst, elapsed);
  }

  auto second = run_suite(SuiteOptions{"all", seed, 0, {}});
  bool repro = same_results(first, second);
  all = all && repro;
  std::printf("criterion 11: %s  identical results across two runs with seed %llu\n", repro ? "PASS" : "FAIL",
              static_cast<unsigned long long>(seed));

  int extra = 0, extra_ok = 0;
  for (auto& r : first)
    if (!std::any_of(criteria.begin(), criteria.end(), [&](const Criterion& c) { return matches(r.check_id, c.prefixes); })) {
      ++extra;
      if (r.status == "pass") ++extra_ok;
    }
  std::printf("supplementary checks: %d/%d pass\n", extra_ok, extra);
  return all && extra_ok == extra ? 0 : 1;
}

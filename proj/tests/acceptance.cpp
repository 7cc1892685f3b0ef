// Acceptance suite: every exit requirement as one pass/fail line. All value
// comparisons are exact; a criterion also fails if it exceeds its stated
// time budget (budget 0 = untimed).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fibdet/closedforms.hpp"
#include "fibdet/harness.hpp"
#include "fibdet/identities.hpp"
#include "fibdet/matrices.hpp"
#include "fibdet/sympoly.hpp"
#include "oracle_utils.hpp"

using namespace fibdet;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& err) {
        detail = std::string("exception: ") + err.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && elapsed > budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time budget exceeded");
    }
    if (!ok) ++g_failures;
    const std::string budget =
        budget_s > 0 ? " / " + std::to_string(static_cast<int>(budget_s)) + " s" : "";
    std::printf("[%s] criterion %2d: %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), elapsed, budget.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
}

ExactMatrix random_matrix(SplitMix64& rng, std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.uniform(-9, 9);
    return m;
}

}  // namespace

int main() {
    const RecurrenceParams fib = fibonacci_params();

    criterion(1, "3x3 squared-Fibonacci determinant is 2*(-1)^(n+1) on n in [-5,10], all engines",
              1.0, [&](std::string& detail) {
                  for (long n = -5; n <= 10; ++n) {
                      const ExactMatrix m = build_power_matrix({fib, 2, 0, 1, n});
                      const Rational expected = Rational(2) * sign_pow(n + 1);
                      if (det_cofactor(m) != expected || det_bareiss(m) != expected ||
                          det_dodgson(m) != expected) {
                          detail = "mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "5x5 fourth-power determinant equals the closed form 13824 on n in [0,5]", 1.0,
              [&](std::string& detail) {
                  for (long n = 0; n <= 5; ++n) {
                      const Rational det = det_bareiss(build_power_matrix({fib, 4, 0, 1, n}));
                      const Rational closed = power_det_fib(4, n);
                      if (closed != 13824 || det != closed) {
                          detail = "mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "offset/step closed form matches elimination for r in [0,4], s,k,n in [-2,3]",
              30.0, [&](std::string& detail) {
                  const VerificationReport report =
                      run_verification(GridSpec::defaults("eq2"), {"eq2"});
                  detail = std::to_string(report.total) + " cases";
                  return report.failed == 0 && report.total == 1080;
              });

    criterion(4, "general power determinant matches elimination over the full parameter grid",
              300.0, [&](std::string& detail) {
                  std::size_t cases = 0;
                  for (long a0 = -2; a0 <= 2; ++a0)
                      for (long a1 = -2; a1 <= 2; ++a1)
                          for (long c1 = -2; c1 <= 2; ++c1)
                              for (long c2 = -2; c2 <= 2; ++c2) {
                                  if (c2 == 0) continue;
                                  const RecurrenceParams params(a0, a1, c1, c2);
                                  HoradamSequence w(params);
                                  HoradamSequence u(fundamental_params(c1, c2));
                                  for (long r = 0; r <= 4; ++r)
                                      for (long s = -2; s <= 3; ++s)
                                          for (long k = -2; k <= 3; ++k)
                                              for (long n = -2; n <= 3; ++n) {
                                                  ++cases;
                                                  const PowerMatrixSpec spec{params, r, s, k, n};
                                                  if (power_det(spec, u) !=
                                                      det_bareiss(build_power_matrix(spec, w))) {
                                                      detail = "mismatch in case " +
                                                               std::to_string(cases);
                                                      return false;
                                                  }
                                              }
                              }
                  detail = std::to_string(cases) + " cases";
                  return cases == 540000;
              });

    criterion(5, "product determinant matches elimination on 500 sampled specs (fixed seed)",
              60.0, [&](std::string& detail) {
                  const VerificationReport report =
                      run_verification(GridSpec::defaults("thm7"), {"thm7"});
                  detail = std::to_string(report.total) + " cases";
                  return report.failed == 0 && report.total == 500;
              });

    criterion(6, "basic-power and stepped-product forms match their general instantiations", 0,
              [&](std::string& detail) {
                  std::size_t cases = 0;
                  for (long r = 0; r <= 3; ++r)
                      for (long s = -2; s <= 3; ++s)
                          for (long k = -2; k <= 3; ++k) {
                              const ProductMatrixSpec spec = basic_power_spec(r, s, k);
                              const Rational closed = basic_power_det(r, s, k);
                              ++cases;
                              if (closed != product_det(spec) ||
                                  closed != det_bareiss(build_product_matrix(spec)))
                                  return false;
                          }
                  const std::vector<RecurrenceParams> sweep = {
                      fib, RecurrenceParams(2, 1, 1, 1), RecurrenceParams(1, 1, 1, 2),
                      RecurrenceParams(-1, 2, -2, 1)};
                  for (const RecurrenceParams& params : sweep)
                      for (long r = 0; r <= 3; ++r)
                          for (long s = -2; s <= 3; ++s)
                              for (long k = -2; k <= 3; ++k)
                                  for (long n : {0L, 1L})
                                      for (long p = -2; p <= 3; ++p) {
                                          const ProductMatrixSpec spec =
                                              stepped_product_spec(params, r, s, k, n, p);
                                          const Rational closed =
                                              stepped_product_det(params, r, s, k, n, p);
                                          ++cases;
                                          if (closed != product_det(spec) ||
                                              closed != det_bareiss(build_product_matrix(spec)))
                                              return false;
                                      }
                  detail = std::to_string(cases) + " cases";
                  return true;
              });

    criterion(7, "generalized Catalan identity on the full grid (|params| <= 3, s,i,j in [-6,6])",
              60.0, [&](std::string& detail) {
                  std::size_t cases = 0;
                  for (long a0 = -3; a0 <= 3; ++a0)
                      for (long a1 = -3; a1 <= 3; ++a1)
                          for (long c1 = -3; c1 <= 3; ++c1)
                              for (long c2 = -3; c2 <= 3; ++c2) {
                                  if (c2 == 0) continue;
                                  HoradamSequence w(RecurrenceParams(a0, a1, c1, c2));
                                  HoradamSequence u(fundamental_params(c1, c2));
                                  for (long s = -6; s <= 6; ++s)
                                      for (long i = -6; i <= 6; ++i)
                                          for (long j = -6; j <= 6; ++j) {
                                              ++cases;
                                              if (!catalan_general(w, w, u, s, i, j).holds)
                                                  return false;
                                          }
                              }
                  detail = std::to_string(cases) + " instances";
                  return cases == 4521426;
              });

    criterion(8, "symbolic certificates hold on every supported size", 120.0,
              [&](std::string&) {
                  for (long r = 0; r <= 4; ++r)
                      if (!linear_power_det_check(r)) return false;
                  for (long r = 0; r <= 3; ++r)
                      if (!bilinear_power_det_check(r)) return false;
                  for (long r = 0; r <= 4; ++r)
                      if (!shifted_factor_det_check(r)) return false;
                  return true;
              });

    criterion(9, "Desnanot-Jacobi holds on 200 random matrices per dim plus zero-interior cases",
              0, [&](std::string& detail) {
                  SplitMix64 rng(0xacce97ULL);
                  for (std::size_t dim : {3, 4, 5})
                      for (int rep = 0; rep < 200; ++rep) {
                          const ExactMatrix m = random_matrix(rng, dim);
                          if (!desnanot_jacobi_check(m)) return false;
                          if (det_dodgson(m) != det_bareiss(m)) return false;
                      }
                  // planted zero interior minors force the condensation fallback
                  std::size_t constructed = 0;
                  for (std::size_t dim : {3, 4, 5})
                      for (int variant = 0; variant < 4; ++variant) {
                          ExactMatrix m = random_matrix(rng, dim);
                          switch (variant) {
                              case 0:
                                  m.at(1, 1) = 0;
                                  break;
                              case 1:  // singular center block with nonzero entries
                                  m.at(1, 1) = 1;
                                  m.at(1, 2) = 2;
                                  m.at(2, 1) = 2;
                                  m.at(2, 2) = 4;
                                  break;
                              case 2:  // zero center block
                                  m.at(1, 1) = 0;
                                  m.at(1, 2) = 0;
                                  m.at(2, 1) = 0;
                                  m.at(2, 2) = 0;
                                  break;
                              default:
                                  m.at(dim / 2, dim / 2) = 0;
                                  break;
                          }
                          ++constructed;
                          if (!desnanot_jacobi_check(m)) return false;
                          const Rational expected = det_bareiss(m);
                          if (det_dodgson(m) != expected) return false;
                          if (oracle::det_permsum(m) != expected) return false;
                      }
                  detail = "600 random + " + std::to_string(constructed) + " constructed";
                  return constructed >= 10;
              });

    criterion(10, "bench run to r = 12 agrees on every size and serializes cleanly", 0,
              [&](std::string& detail) {
                  const auto records = run_bench(12, fib, 0, 3, 5);
                  if (records.size() != 12) return false;
                  for (const BenchRecord& rec : records)
                      if (!rec.values_equal) return false;
                  const std::string text =
                      bench_to_json(records, fib, 0, 3, 5).dump(2);
                  const nlohmann::json parsed = nlohmann::json::parse(text);
                  if (parsed.at("schema_version") != 1) return false;
                  if (parsed.at("records").size() != 12) return false;
                  detail = "12 records";
                  return true;
              });

    if (g_failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

// One PASS/FAIL line per acceptance criterion. --only ACn runs a single one.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cliffgen/ckseries.hpp"
#include "cliffgen/fueter.hpp"
#include "cliffgen/verify.hpp"

using namespace cliffgen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome suites(std::initializer_list<const char*> names, bool verbose) {
  Outcome o;
  int count = 0, failed = 0;
  double worst = 0;
  std::string worst_id;
  for (const char* name : names) {
    run_suite(name, {}, [&](const VerificationReport& r) {
      ++count;
      if (!r.exact && r.max_abs_error > worst) {
        worst = r.max_abs_error;
        worst_id = std::string(name) + "/" + r.identity_id;
      }
      if (!r.passed) {
        ++failed;
        std::ostringstream p;
        for (const auto& [k, v] : r.params) p << k << "=" << v << " ";
        std::cout << "  fail " << name << "/" << r.identity_id << " " << p.str() << "err=" << r.max_abs_error
                  << " thr=" << r.threshold << " at " << r.worst_at << (r.error.empty() ? "" : " " + r.error) << "\n";
      } else if (verbose) {
        std::cout << "  ok " << name << "/" << r.identity_id << " err=" << r.max_abs_error << "\n";
      }
    });
  }
  o.pass = failed == 0 && count > 0;
  std::ostringstream d;
  d << count << " instances, " << failed << " failed, worst numeric " << worst;
  if (!worst_id.empty()) d << " (" << worst_id << ")";
  o.detail = d.str();
  return o;
}

// Gegenbauer series on the grid of the criterion against the convergent
// subregion |x0| <= (1 - r)/2, where sum x0^n/n! (...) converges.
void gegenbauer_diagnostics() {
  using LD = long double;
  for (double alpha : {0.5, 1.5, 2.0, -0.3}) {
    const FtResult closed = gegenbauer_gf_closed(3, 0, alpha, default_pk(3, 0));
    const auto s = ck_gegenbauer_series(3, 0, alpha, default_pk(3, 0), 25);
    LD all = 0, inside = 0;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        const LD x0 = -0.3L + 0.1L * i, r = 0.2L + 0.1L * j;
        const auto c = closed.radial(x0, r);
        const auto v = s.radial(x0, r);
        const LD e = std::max(std::abs(v.a - c.a) / std::max<LD>(1, std::abs(c.a)),
                              std::abs(v.b - c.b) / std::max<LD>(1, std::abs(c.b)));
        all = std::max(all, e);
        if (std::abs(x0) <= (1 - r) / 2 + 1e-12L) inside = std::max(inside, e);
      }
    }
    std::cout << "  m=3 k=0 alpha=" << alpha << " N=25: grid max err " << static_cast<double>(all)
              << ", |x0|<=(1-r)/2 max err " << static_cast<double>(inside) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only;
  bool verbose = false;
  app.add_option("--only", only, "run a single criterion, e.g. AC4");
  app.add_flag("-v,--verbose", verbose);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", [&] { return suites({"operators"}, verbose); }},
      {"AC2", [&] { return suites({"coeffs"}, verbose); }},
      {"AC3", [&] { return suites({"lemma1"}, verbose); }},
      {"AC4", [&] { return suites({"thm1"}, verbose); }},
      {"AC5",
       [&] {
         auto o = suites({"thm2", "thm3"}, verbose);
         gegenbauer_diagnostics();
         return o;
       }},
      {"AC6", [&] { return suites({"corollary3", "corollary4"}, verbose); }},
      {"AC7", [&] { return suites({"monogenicity"}, verbose); }},
      {"AC8", [&] { return suites({"classical-gf"}, verbose); }},
      {"AC9", [&] { return suites({"qpoly"}, verbose); }},
  };

  bool all = true, found = only.empty();
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && id != only) continue;
    found = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << " [" << ms << " ms]\n";
    all &= o.pass;
  }
  if (!found) {
    std::cerr << "unknown criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion, with wall time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "asmkit/combinatorics.hpp"
#include "asmkit/expansion.hpp"
#include "asmkit/group.hpp"
#include "asmkit/kernels.hpp"
#include "asmkit/recurrence.hpp"
#include "asmkit/verify.hpp"
#include "random_gen.hpp"

using namespace asmkit;
using asmkit::testing::Gen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Counts instances and keeps the first failure.
struct Log {
  long instances = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, first + " (" + std::to_string(failures) + " failures)"};
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failed_criteria = 0;

void criterion(int number, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = seconds_since(t0);
  if (o.ok && limit_s > 0 && s > limit_s) o = {false, o.detail + "; exceeded " + std::to_string(limit_s) + " s"};
  if (!o.ok) ++failed_criteria;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << number << ". " << name << ": " << o.detail << " [" << buf << "]"
            << std::endl;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs the listed checks over their default grids within the bounds.
Outcome suite(const std::vector<std::string>& ids, int max_k, int max_n) {
  Log log;
  long passed = 0;
  for (const auto& id : ids)
    for (const auto& p : default_grid(id, max_k, max_n, false)) {
      CheckResult r = run_check(id, p);
      if (r.status == CheckStatus::Pass) ++passed;
      log.expect(r.status == CheckStatus::Pass,
                 [&] { return id + " " + p.to_string() + " " + to_string(r.status) + ": " + r.witness; });
    }
  if (passed == 0) return {false, "no check ran"};
  return log.outcome(std::to_string(passed) + " checks pass");
}

Outcome tally(const std::vector<CheckResult>& results) {
  long pass = 0, fail = 0, skipped = 0;
  std::string first;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Skipped) ++skipped;
    if (r.status == CheckStatus::Fail && fail++ == 0) first = r.id + " " + r.params.to_string() + ": " + r.witness;
  }
  std::ostringstream s;
  s << results.size() << " checks: " << pass << " pass, " << fail << " fail, " << skipped << " skipped";
  if (fail) s << "; first failure " << first;
  return {fail == 0 && pass > 0, s.str()};
}

RatFun monomial_inverse(const std::vector<int>& a) {
  Monomial m;
  for (std::size_t i = 0; i < a.size(); ++i) m.e[i] = -a[i];
  return RatFun(Poly::monomial(m));
}

SignedPermutation plain(std::vector<int> pi) {
  std::vector<int> eps(pi.size(), 1);
  return {std::move(pi), std::move(eps)};
}

Outcome asm_counts() {
  const long expected[] = {1, 2, 7, 42, 429, 7436};
  Log log;
  for (int n = 1; n <= 6; ++n) {
    std::size_t c = enumerate_asm(n).size();
    log.expect(c == static_cast<std::size_t>(expected[n - 1]),
               [&] { return "n=" + std::to_string(n) + ": " + std::to_string(c); });
    log.expect(asm_number(n) == expected[n - 1], [&] { return "product formula at n=" + std::to_string(n); });
  }
  return log.outcome("A_1..A_6 = 1,2,7,42,429,7436");
}

Outcome equinumerous() {
  Log log;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      Integer b = count_magog(k, n), m = count_gog(k, n);
      log.expect(b == m, [&] { return "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + b.get_str() + " vs " + m.get_str(); });
    }
  log.expect(count_magog(3, 5) == 387, [] { return "b(3,5) != 387"; });
  log.expect(count_magog(1, 3) == 5, [] { return "b(1,3) != 5"; });
  log.expect(count_magog(2, 3) == 7, [] { return "b(2,3) != 7"; });
  return log.outcome("21 (k,n) pairs agree; (3,5)=387 (1,3)=5 (2,3)=7");
}

Outcome invariance_table() {
  Log log;
  auto run = [&](int k, int n, const std::vector<SignedPermutation>& elements) {
    std::vector<int> order = natural_order(k);
    Integer b = count_magog(k, n), m = count_gog(k, n);
    RatFun f = magog_res(k, n), F = gog_res(k, n);
    for (const auto& g : elements) {
      Rational rb = res_iterated(act(g, f), order), rm = res_iterated(act(g, F), order);
      std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " g=" + g.to_string();
      log.expect(rb == b, [&] { return at + ": Magog res " + rb.get_str() + " != " + b.get_str(); });
      log.expect(rm == m, [&] { return at + ": Gog res " + rm.get_str() + " != " + m.get_str(); });
    }
  };
  auto wb2 = group_elements(Group::Hyperoctahedral, 2);
  for (int n = 2; n <= 4; ++n) run(2, n, wb2);
  auto wb3 = fixed_wb3_elements();
  int flipped = 0;
  for (const auto& g : wb3)
    for (int e : g.eps)
      if (e < 0) {
        ++flipped;
        break;
      }
  log.expect(wb3.size() >= 6 && flipped >= 2, [] { return "fixed W(B_3) set too small"; });
  run(3, 3, wb3);
  return log.outcome("8 elements of W(B_2) at n=2..4 and " + std::to_string(wb3.size()) + " elements of W(B_3) (" +
                     std::to_string(flipped) + " with flips) at n=3");
}

Outcome schur_and_vandermonde() {
  Log log;
  for (int k = 1; k <= 4; ++k)
    log.expect(issai_lhs(k) == issai_rhs(k), [&] { return "antisymmetrization identity at k=" + std::to_string(k); });
  for (int k = 1; k <= 5; ++k) {
    Poly prod(1L);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) prod *= Poly::var(j) - Poly::var(i);
    log.expect(vandermonde(k) == prod && vandermonde_expansion(k) == prod,
               [&] { return "Vandermonde at k=" + std::to_string(k); });
  }
  return log.outcome("k<=4 and k<=5");
}

Outcome crucial_facts() {
  std::ostringstream summary;
  Log all;
  auto section = [&](const std::string& label, const std::function<void(Log&)>& body) {
    Log log;
    body(log);
    if (log.instances < 100) all.expect(false, [&] { return label + ": only " + std::to_string(log.instances) + " instances"; });
    if (log.failures) all.expect(false, [&] { return label + ": " + log.first; });
    summary << label << "=" << log.instances << " ";
  };

  section("aleph1", [](Log& log) {
    Gen g(101);
    for (int t = 0; t < 100; ++t) {
      int k = static_cast<int>(g.range(2, 3));
      RatFun h = g.structured(k);
      std::vector<int> pi = natural_order(k);
      for (int& p : pi) ++p;
      int i = static_cast<int>(g.range(0, k - 2));
      std::swap(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(i + 1)]);
      RatFun f = h - act(plain(pi), h);
      Rational c = ct_iterated(f, natural_order(k));
      log.expect(c == 0, [&] { return "antisymmetric input has CT " + c.get_str(); });
    }
  });

  section("aleph3", [](Log& log) {
    Gen g(103);
    for (int t = 0; t < 100; ++t) {
      int k = static_cast<int>(g.range(1, 3));
      RatFun f = g.admissible(k);
      Poly P = g.laurent(k, 3, -1, 2);
      std::vector<int> a;
      for (int i = 0; i < k; ++i) a.push_back(static_cast<int>(g.range(0, 2)));
      std::vector<int> order = natural_order(k);
      LatticeFunction F = [&](int, const std::vector<int>& b) { return ct_fast(f * monomial_inverse(b), order); };
      Rational lhs = apply_operator(inverse_shift(P), F, 0, a);
      Rational rhs = ct_fast(RatFun(P) * f * monomial_inverse(a), order);
      log.expect(lhs == rhs, [&] { return "shift bridge " + lhs.get_str() + " vs " + rhs.get_str(); });
    }
  });

  auto renaming = [](bool residue) {
    return [residue](Log& log) {
      Gen g(residue ? 105 : 104);
      for (int t = 0; t < 100; ++t) {
        int k = static_cast<int>(g.range(2, 3));
        RatFun f = g.structured(k);
        auto extract = [&](const RatFun& h) {
          return residue ? res_iterated(h, natural_order(k)) : ct_iterated(h, natural_order(k));
        };
        Rational base = extract(f);
        for (const auto& s : group_elements(Group::Symmetric, k)) {
          Rational v = extract(act(s, f));
          log.expect(v == base, [&] { return "renaming by " + s.to_string() + " changed " + base.get_str() + " to " + v.get_str(); });
        }
      }
      if (!residue) {
        RatFun w = RatFun::fraction(Poly::var(0), Poly::var(0) + Poly::var(1));
        log.expect(ct_iterated(w, {0, 1}) == 1 && ct_iterated(w, {1, 0}) == 0,
                   [] { return "x1/(x1+x2) does not depend on the order as expected"; });
      }
    };
  };
  section("aleph4", renaming(false));
  section("aleph4'", renaming(true));

  auto flip = [](bool residue) {
    return [residue](Log& log) {
      Gen g(residue ? 107 : 106);
      for (int t = 0; t < 100; ++t) {
        int A = static_cast<int>(g.range(0, 3));
        Poly p = g.polynomial(1, 2 * A + 1, 2 * A);
        RatFun den = RatFun::fraction(Poly(1L), Poly::bar(0).pow(A + 1));
        RatFun x = RatFun(Poly::monomial(Monomial::var(0, residue ? -A - 1 : -A)));
        auto extract = [&](const RatFun& h) { return residue ? res_iterated(h, {0}) : ct_iterated(h, {0}); };
        Rational lhs = extract(RatFun(p) * den * x), rhs = extract(RatFun(p.flip(0)) * den * x);
        log.expect(lhs == rhs, [&] { return "A=" + std::to_string(A) + ": " + lhs.get_str() + " vs " + rhs.get_str(); });
      }
    };
  };
  section("aleph5", flip(false));
  section("aleph5'", flip(true));

  section("aleph6", [](Log& log) {
    Gen g(108);
    for (int t = 0; t < 100; ++t) {
      int k = static_cast<int>(g.range(1, 3));
      RatFun f = g.structured(k);
      Poly all(1L);
      for (int i = 0; i < k; ++i) all *= Poly::var(i);
      Rational c = ct_iterated(f, natural_order(k)), r = res_iterated(f / RatFun(all), natural_order(k));
      log.expect(c == r, [&] { return "CT " + c.get_str() + " vs residue " + r.get_str(); });
    }
  });

  auto antisym = [](bool divisibility) {
    return [divisibility](Log& log) {
      Gen g(divisibility ? 110 : 109);
      for (int t = 0; t < 100; ++t) {
        int k = static_cast<int>(g.range(1, 3));
        Poly p = g.polynomial(k, 3, 3);
        Poly s = antisymmetrize(p, Group::Symmetric, k), w = antisymmetrize(p, Group::Hyperoctahedral, k);
        if (divisibility) {
          log.expect(divides_vandermonde(s, k), [&] { return "S_k antisymmetrizer not divisible, k=" + std::to_string(k); });
          log.expect(divides_delta(w, k), [&] { return "W(B_k) antisymmetrizer not divisible, k=" + std::to_string(k); });
        } else {
          log.expect(is_antisymmetric(RatFun(s), Group::Symmetric, k), [&] { return "S_k antisymmetrizer, k=" + std::to_string(k); });
          log.expect(is_antisymmetric(RatFun(w), Group::Hyperoctahedral, k),
                     [&] { return "W(B_k) antisymmetrizer, k=" + std::to_string(k); });
        }
      }
    };
  };
  section("aleph7/aleph7'", antisym(false));
  section("aleph8/aleph8'", antisym(true));

  std::string s = summary.str();
  if (!s.empty()) s.pop_back();
  return all.outcome(s);
}

Outcome engine_agreement() {
  Log log;
  Gen g(111);
  for (int t = 0; t < 250; ++t) {
    int k = static_cast<int>(g.range(1, 3));
    RatFun f = t % 2 ? g.admissible(k) : g.structured(k);
    if (!is_admissible(f)) {
      log.expect(false, [] { return "generator produced an inadmissible input"; });
      continue;
    }
    Rational a = ct_fast(f, natural_order(k)), b = ct_iterated(f, natural_order(k));
    log.expect(a == b, [&] { return "ct_fast " + a.get_str() + " vs ct_iterated " + b.get_str(); });
  }
  return log.outcome(std::to_string(log.instances) + " admissible inputs");
}

Outcome timed_run(bool heavy, double limit_s) {
  VerifyOptions o;
  o.threads = worker_count();
  o.heavy = heavy;
  auto t0 = Clock::now();
  Outcome r = tally(run_all(4, 5, "*", o));
  double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.1f s (limit %.0f s)", s, limit_s);
  r.detail = (heavy ? "heavy " : "default ") + r.detail + buf;
  if (s > limit_s) r.ok = false;
  return r;
}

Outcome full_suites() {
  Outcome d = timed_run(false, 900), h = timed_run(true, 3600);
  return {d.ok && h.ok, d.detail + "; " + h.detail};
}

}  // namespace

int main() {
  criterion(1, "ASM counts for n=1..6", 60, asm_counts);
  criterion(2, "Gog and Magog trapezoids equinumerous for 1<=k<=n<=6", 180, equinumerous);
  criterion(3, "constant-term formulas for the totals, k<=3 n<=5", 300, [] { return suite({"S11", "S12"}, 3, 5); });
  criterion(4, "border formulas C_k=B_k and H_k=tilde M_k, k<=3 n<=4", 0, [] { return suite({"S111", "S121"}, 3, 4); });
  criterion(5, "recurrences, tabulation and uniqueness, k<=3 n<=4", 0, [] {
    return suite({"S1111all", "S1112", "S1113", "S1211all", "S12121all", "S12122", "S12123", "S12124", "S1213"}, 3, 4);
  });
  criterion(6, "Delta_k times the Magog bracket equals (-1)^k Phi_k^2, k=1..4", 300, [] { return suite({"S15"}, 4, 5); });
  criterion(7, "W(B_k)-invariance of both residues", 0, invariance_table);
  criterion(8, "Schur antisymmetrization identity and Vandermonde expansion", 0, schur_and_vandermonde);
  criterion(9, "Omega_k and L_k specializations, degree bounds, vanishing, auxiliary identities", 0, [] {
    return suite({"S151", "S1511", "S1512", "S152", "S1521", "S1522", "S15221", "S1523"}, 4, 5);
  });
  criterion(10, "crucial-fact property suite", 0, crucial_facts);
  criterion(11, "ct_fast agrees with ct_iterated", 0, engine_agreement);
  criterion(12, "full default suite under 15 min and heavy suite under 60 min", 0, full_suites);
  std::cout << (failed_criteria ? "FAIL" : "PASS") << "  acceptance: " << failed_criteria << " failing" << std::endl;
  return failed_criteria ? 1 : 0;
}

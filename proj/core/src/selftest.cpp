#include "wittkit/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "wittkit/corpus.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/etale.hpp"
#include "wittkit/presentation.hpp"
#include "wittkit/sl2.hpp"
#include "wittkit/witt.hpp"

namespace wittkit::selftest {

namespace {

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 5) out += "; ... (" + std::to_string(failures_.size()) + " failures)";
    return out;
  }
  std::string note;

 private:
  std::vector<std::string> failures_;
};

std::string order_str(std::optional<int> n) { return n ? std::to_string(*n) : "none<=64"; }

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

void pointed_orders(Check& c) {
  const WittClassHandle z2(PreMetricGroup::cyclic(2, 1, 4));
  const WittClassHandle z3(PreMetricGroup::cyclic(3, 1, 3));
  const WittClassHandle z5a(PreMetricGroup::cyclic(5, 1, 5));
  const WittClassHandle z5b(PreMetricGroup::cyclic(5, 2, 5));
  const auto o2 = witt_order(z2);
  const auto o3 = witt_order(z3);
  const auto o5a = witt_order(z5a);
  const auto o5b = witt_order(z5b);
  const auto o5s = witt_order(witt_add(z5a, z5b));
  c.expect(o2 == 8, "order (Z/2,1/4) = " + order_str(o2));
  c.expect(o3 == 4, "order (Z/3,1/3) = " + order_str(o3));
  c.expect(o5a == 2, "order (Z/5,1/5) = " + order_str(o5a));
  c.expect(o5b == 2, "order (Z/5,2/5) = " + order_str(o5b));
  c.expect(o5s == 2, "order of sum of the Z/5 classes = " + order_str(o5s));
  c.note = "orders 8, 4, 2, 2, sum 2";
}

void wpt2_structure(Check& c) {
  const WittClassHandle a(PreMetricGroup::cyclic(2, 1, 4));
  std::vector<WittClassHandle> multiples_a;
  for (int m = 0; m < 8; ++m) multiples_a.push_back(witt_multiple(a, m));
  c.expect(witt_multiple(a, 8).is_trivial(), "8a != 0");
  c.expect(!multiples_a[4].is_trivial(), "4a == 0");
  auto in_a = [&](const WittClassHandle& x) {
    for (const auto& m : multiples_a)
      if (witt_equal(x, m)) return true;
    return false;
  };

  std::optional<PreMetricGroup> partner;
  for (const auto& form : enumerate_forms(FinAbGroup({4}))) {
    if (!form.is_nondegenerate()) continue;
    const WittClassHandle b(form);
    if (in_a(b) || !in_a(witt_multiple(b, 2))) continue;
    std::vector<WittClassHandle> combos;
    for (int m = 0; m < 8; ++m)
      for (int n = 0; n < 2; ++n) combos.push_back(witt_add(multiples_a[static_cast<std::size_t>(m)], witt_multiple(b, n)));
    bool distinct = true;
    for (std::size_t i = 0; i < combos.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < combos.size() && distinct; ++j) distinct = !witt_equal(combos[i], combos[j]);
    if (distinct) {
      partner = form;
      break;
    }
  }
  c.expect(partner.has_value(), "no nondegenerate form on Z/4 completes (Z/2,1/4) to Z/8 + Z/2");
  if (partner) c.note = "b = " + partner->to_string() + ", 16 classes distinct";
}

void ising_subgroup(Check& c) {
  const auto& sub = ising_pointed_subgroup();
  c.expect(sub.size() == 8, "subgroup has " + std::to_string(sub.size()) + " classes");
  auto member = [&](const WittClassHandle& x) {
    for (const auto& m : sub)
      if (witt_equal(x, m)) return true;
    return false;
  };
  bool cyclic = false;
  for (const auto& gen : sub) {
    if (witt_order(gen, 8) != 8) continue;
    bool closed = true;
    for (int n = 0; n < 8 && closed; ++n) closed = member(witt_multiple(gen, n));
    cyclic = cyclic || closed;
  }
  c.expect(cyclic, "no member generates the whole set as a cyclic group of order 8");
  c.note = std::to_string(sub.size()) + " classes, cyclic";
}

void super_witt(Check& c) {
  const auto o2 = switt_order(WittClassHandle(PreMetricGroup::cyclic(2, 1, 4)));
  const auto o3 = switt_order(WittClassHandle(PreMetricGroup::cyclic(3, 1, 3)));
  c.expect(o2 == 2, "super order (Z/2,1/4) = " + order_str(o2));
  c.expect(o3 == 4, "super order (Z/3,1/3) = " + order_str(o3));
  c.note = "super orders 2 and 4";
}

std::vector<PreMetricGroup> prodfp_corpus(bool quick) {
  std::vector<PreMetricGroup> corpus = forms_up_to_order(8, false);
  if (quick) return corpus;
  std::mt19937_64 rng(20241016);
  for (std::int64_t n = 9; n <= 64; ++n) {
    for (const auto& factors : abelian_groups_of_order(n)) {
      const FinAbGroup g(factors);
      corpus.push_back(random_form(g, rng));
      corpus.push_back(random_form(g, rng));
      if (auto nd = random_nondegenerate_form(g, rng)) corpus.push_back(*nd);
    }
  }
  return corpus;
}

void prodfp(Check& c, bool quick) {
  std::size_t forms = 0;
  std::size_t subgroups = 0;
  for (const auto& form : prodfp_corpus(quick)) {
    ++forms;
    const Subgroup rad = radical(form);
    for (const Subgroup& h : all_subgroups(form.group())) {
      ++subgroups;
      const Subgroup perp = orthogonal_complement(form, h);
      const std::uint64_t lhs = h.size() * perp.size();
      const std::uint64_t rhs = form.order() * intersect(h, rad).size();
      c.expect(lhs == rhs, form.to_string() + ": |H||H^perp| = " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    }
  }
  c.note = std::to_string(forms) + " forms, " + std::to_string(subgroups) + " subgroups";
}

void etale_corpus(Check& c, bool quick) {
  const auto forms = forms_up_to_order(quick ? 4 : 8, true);
  std::size_t pairs = 0;
  std::size_t algebras = 0;
  for (const auto& f1 : forms) {
    for (const auto& f2 : forms) {
      ++pairs;
      try {
        for (const auto& alg : enumerate_etale(f1, f2)) {
          ++algebras;
          c.expect(check_prdim(alg), "prdim fails in " + f1.to_string() + " x " + f2.to_string());
        }
      } catch (const TheoremViolation& e) {
        c.expect(false, std::string("TheoremViolation: ") + e.what());
      }
    }
  }
  const auto example = enumerate_etale(PreMetricGroup::cyclic(2, 1, 4), PreMetricGroup::cyclic(2, 3, 4));
  c.expect(example.size() == 2, "(Z/2,1/4) x (Z/2,3/4) has " + std::to_string(example.size()) + " etale algebras");
  c.note = std::to_string(pairs) + " pairs, " + std::to_string(algebras) + " algebras";
}

std::vector<int> fuse_multiset(int k, const std::vector<int>& lhs, int t) {
  std::vector<int> out;
  for (int x : lhs)
    for (int y : sl2::fusion(k, x, t)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

void sl2_data(Check& c) {
  for (int k = 1; k <= 12; ++k) {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        for (int t = 0; t <= k; ++t) {
          const auto left = fuse_multiset(k, sl2::fusion(k, i, j), t);
          const auto jt = sl2::fusion(k, j, t);
          std::vector<int> right;
          for (int y : jt)
            for (int z : sl2::fusion(k, i, y)) right.push_back(z);
          std::sort(right.begin(), right.end());
          if (left != right) {
            c.expect(false, "fusion not associative at k=" + std::to_string(k) + " (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(t) + ")");
          }
        }
      }
    }
  }
  for (int k = 1; k <= 100; ++k) {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += sl2::fpdim_object(k, j) * sl2::fpdim_object(k, j);
    const double closed = sl2::fpdim_category(k);
    c.expect(std::abs(sum - closed) <= 1e-9 * closed,
             "FPdim mismatch at k=" + std::to_string(k) + ": " + std::to_string(sum) + " vs " + std::to_string(closed));
    const auto cc = sl2::central_charge_additive(k);
    c.expect(cc == boost::rational<std::int64_t>(3 * k, k + 2), "c != 3k/(k+2) at k=" + std::to_string(k));
    const auto xi = cc / std::int64_t{8};
    c.expect(sl2::central_charge(k) == RationalMod1(3 * k, 8 * (k + 2)) &&
                 sl2::central_charge(k) == RationalMod1(xi.numerator(), xi.denominator()),
             "xi != c/8 at k=" + std::to_string(k));
  }
  c.expect(sl2::twist(2, 1) == RationalMod1(3, 16), "twist(2,1) = " + sl2::twist(2, 1).to_string());
  c.note = "associativity k<=12, FPdim and central charge k<=100";
}

void condensation_census(Check& c) {
  for (const auto& [k, expected] : {std::pair{4, 3}, std::pair{8, 4}}) {
    const auto set = sl2::local_modules(k);
    c.expect(static_cast<int>(set.simples.size()) == expected,
             "level " + std::to_string(k) + ": " + std::to_string(set.simples.size()) + " simples");
    const double target = sl2::fpdim_category(k) / 4.0;
    c.expect(std::abs(set.dim_sq_sum - target) <= 1e-9,
             "level " + std::to_string(k) + ": sum dim^2 = " + std::to_string(set.dim_sq_sum));
  }
  c.note = "3 and 4 simple local modules";
}

void presentation_engine(Check& c) {
  const auto p = sl2_witt_presentation(28);
  const auto s = analyze(p);
  c.expect(s.invariant_factors == std::vector<std::int64_t>{4, 8, 32}, "invariant factors differ from {4,8,32}");
  c.expect(s.free_rank == 21, "free rank " + std::to_string(s.free_rank));
  auto unit = [&](int level, std::size_t n) {
    std::vector<std::int64_t> v(n, 0);
    v[static_cast<std::size_t>(level - 1)] = 1;
    return v;
  };
  for (const auto& [level, order] :
       {std::pair{1, 8}, std::pair{2, 16}, std::pair{4, 4}, std::pair{6, 32}, std::pair{10, 16}}) {
    const auto o = element_order(s, unit(level, 28));
    c.expect(o == order, "order of x" + std::to_string(level) + " = " + (o ? std::to_string(*o) : "infinite"));
  }
  for (int max_level : {28, 50}) {
    const auto big = analyze(sl2_witt_presentation(max_level));
    for (int level = 1; level <= max_level; ++level) {
      const auto o = element_order(big, unit(level, static_cast<std::size_t>(max_level)));
      if (o) c.expect(is_power_of_two(*o), "x" + std::to_string(level) + " has order " + std::to_string(*o));
    }
    for (std::int64_t f : big.invariant_factors) c.expect(is_power_of_two(f), "invariant factor " + std::to_string(f));
  }
  c.note = "Z/4 + Z/8 + Z/32 + Z^21";
}

void pointed_parts(Check& c) {
  for (int l = 0; l <= 4; ++l) c.expect(pointed_part_consistency(l), "fails at l=" + std::to_string(l));
  c.note = "l = 0..4";
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;
  std::function<void(Check&, const Options&)> run;
};

}  // namespace

std::vector<CriterionResult> run_all(const Options& options) {
  const std::vector<Criterion> criteria = {
      {1, "pointed Witt orders", 0, [](Check& c, const Options&) { pointed_orders(c); }},
      {2, "W_pt(2) is Z/8 + Z/2", 60, [](Check& c, const Options&) { wpt2_structure(c); }},
      {3, "Ising pointed subgroup cyclic of order 8", 0, [](Check& c, const Options&) { ising_subgroup(c); }},
      {4, "super Witt orders", 0, [](Check& c, const Options&) { super_witt(c); }},
      {5, "|H||H^perp| = |A||H n rad|", 0, [](Check& c, const Options& o) { prodfp(c, o.quick); }},
      {6, "etale algebras in products decompose", 60, [](Check& c, const Options& o) { etale_corpus(c, o.quick); }},
      {7, "sl(2) modular data", 0, [](Check& c, const Options&) { sl2_data(c); }},
      {8, "condensation census at k = 4, 8", 0, [](Check& c, const Options&) { condensation_census(c); }},
      {9, "presentation of the sl(2) Witt subgroup", 0, [](Check& c, const Options&) { presentation_engine(c); }},
      {10, "pointed parts at odd levels", 30, [](Check& c, const Options&) { pointed_parts(c); }},
  };

  std::vector<CriterionResult> results;
  for (const auto& criterion : criteria) {
    CriterionResult r;
    r.id = criterion.id;
    r.title = criterion.title;
    r.time_limit = criterion.time_limit;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check, options);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.time_limit > 0 && r.seconds > r.time_limit) {
      check.expect(false, "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.time_limit) + " s");
    }
    r.passed = check.ok();
    r.detail = r.passed ? check.note : check.summary();
    results.push_back(std::move(r));
  }
  return results;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << " " << r.title << ": " << r.detail << " ("
        << secs.str() << " s)\n";
  }
  out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all;
}

}  // namespace wittkit::selftest

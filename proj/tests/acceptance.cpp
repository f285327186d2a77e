// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Independent reference computations live in oracles.hpp
// or inline below; the library is only ever the thing being checked.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "json.hpp"
#include "oracles.hpp"
#include "twinv/characters.hpp"
#include "twinv/cli.hpp"
#include "twinv/harness.hpp"
#include "twinv/involutions.hpp"
#include "twinv/number_theory.hpp"

using namespace twinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_time(Outcome& o, double elapsed, double limit) {
  if (elapsed >= limit) {
    o.fail("runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(limit) + " s");
  }
}

std::int64_t dihedral_t(std::int64_t l) { return l % 2 == 0 ? l + 2 : l + 1; }

// C1: table1 through the CLI, the published D_3 m-values.
Outcome table1() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = dispatch({"table1", "--format", "json"}, {out, err, false});
  const double elapsed = seconds_since(start);
  if (code != kExitOk) {
    o.fail("exit code " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto j = nlohmann::json::parse(out.str());
  const auto& recs = j.at("records");
  const std::vector<std::int64_t> expected{4, 1, 1, 4, 4, 4};
  if (recs.size() != expected.size()) {
    o.fail(std::to_string(recs.size()) + " rows");
    return o;
  }
  std::string ms;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto m = recs[i].at("m_brute").get<std::int64_t>();
    ms += (i ? "," : "") + std::to_string(m);
    if (m != expected[i]) o.fail("row " + std::to_string(i) + " m=" + std::to_string(m));
    const auto u = recs[i].at("u").get<std::int64_t>();
    const auto v = recs[i].at("v").get<std::int64_t>();
    if (oracle::twisted_count(3, u, v) != m) o.fail("row " + std::to_string(i) + " disagrees with oracle");
  }
  require_time(o, elapsed, 1.0);
  if (o.pass) o.detail = "m = (" + ms + "), " + std::to_string(elapsed) + " s";
  return o;
}

// C2: exhaustive |S_sigma| against the closed form, single-threaded.
Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t instances = 0, mismatches = 0;
  for (std::int64_t l = 3; l <= 60; ++l) {
    const Group g = Group::dihedral(l);
    for (const DihedralAut& a : enumerate_dihedral_auts(l)) {
      ++instances;
      if (twisted_involution_count(g, a) != count_closed_form(a).total) ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  std::int64_t expected = 0;
  for (std::int64_t l = 3; l <= 60; ++l) {
    for (std::int64_t u = 1; u < l; ++u) expected += oracle::gcd(u, l) == 1 ? l : 0;
  }
  if (instances != expected) o.fail(std::to_string(instances) + " instances, expected " + std::to_string(expected));
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  require_time(o, elapsed, 30.0);
  if (o.pass) o.detail = std::to_string(instances) + " instances, 0 mismatches, " + std::to_string(elapsed) + " s";
  return o;
}

CampaignConfig sweep_config() {
  CampaignConfig cfg;
  cfg.family = CampaignFamily::Dihedral;
  cfg.max_l = 200;
  cfg.brute_force_cap = 0;
  cfg.character_cap = 0;
  return cfg;
}

// C3: closed-form sweep to l = 200.
Outcome inequality_sweep() {
  Outcome o;
  const auto start = Clock::now();
  CampaignConfig cfg = sweep_config();
  cfg.records = RecordFilter::None;
  const CampaignReport rep = run_campaign(cfg);
  std::int64_t cases = 0;
  for (std::int64_t l = 3; l <= 200; ++l) {
    const std::int64_t t = dihedral_t(l);
    std::int64_t best = 0;
    for (const DihedralAut& a : enumerate_dihedral_auts(l)) {
      ++cases;
      const std::int64_t m = count_closed_form(a).total;
      best = std::max(best, m);
      if (m > t) o.fail("D:" + std::to_string(l) + " " + to_string(Automorphism{a}) + " m > T");
    }
    if (degree_sum(Group::dihedral(l)) != t) o.fail("T(D:" + std::to_string(l) + ") wrong");
    if (identity_involution_count(l) != t || best != t || max_twisted_count(l) != t) {
      o.fail("D:" + std::to_string(l) + ": max m, m_e and T differ");
    }
  }
  const double elapsed = seconds_since(start);
  if (!rep.ok()) o.fail(std::to_string(rep.violations.size()) + " campaign violations");
  if (rep.summary.cases != cases) o.fail("campaign saw " + std::to_string(rep.summary.cases) + " cases");
  require_time(o, elapsed, 10.0);
  if (o.pass) {
    o.detail = std::to_string(cases) + " cases, 0 violations, " + std::to_string(rep.summary.equality_cases) +
               " equality cases, " + std::to_string(elapsed) + " s";
  }
  return o;
}

// C4: solver against exhaustive search for every (a, c, n), n <= 200.
Outcome congruence() {
  Outcome o;
  std::int64_t triples = 0;
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      std::vector<std::vector<std::int64_t>> by_c(static_cast<std::size_t>(n));
      for (std::int64_t k = 0; k < n; ++k) by_c[static_cast<std::size_t>(a * k % n)].push_back(k);
      const std::int64_t g = oracle::gcd(a, n);
      for (std::int64_t c = 0; c < n; ++c) {
        ++triples;
        const auto& expect = by_c[static_cast<std::size_t>(c)];
        const CongruenceSolution sol = solve_linear_congruence(a, c, n);
        const std::int64_t rule = c % g == 0 ? g : 0;
        if (sol.count != static_cast<std::int64_t>(expect.size()) || sol.solutions != expect || sol.count != rule ||
            sol.solvable != !expect.empty() || sol.truncated) {
          o.fail(std::to_string(a) + "k = " + std::to_string(c) + " (mod " + std::to_string(n) + ")");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(triples) + " triples, 0 mismatches";
  return o;
}

// C5: both gcd inequalities and the neighbour rule, each checked against a
// direct evaluation with the standard library.
Outcome gcd_properties() {
  Outcome o;
  const auto lcm_ineq = [](std::int64_t a, std::int64_t b) { return a + b <= std::lcm(a, b) + std::gcd(a, b); };
  const auto triple_ineq = [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(a, b) + std::gcd(c, b) <= b + std::gcd(a, c);
  };
  std::int64_t checks = 0;
  const auto pair = [&](std::int64_t a, std::int64_t b) {
    ++checks;
    const bool got = check_gcd_lcm_inequality(a, b);
    if (!got || got != lcm_ineq(a, b)) o.fail("gcd/lcm at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  };
  const auto triple = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    ++checks;
    const bool got = check_gcd_triple_inequality(a, b, c);
    if (!got || got != triple_ineq(a, b, c)) {
      o.fail("triple at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  for (std::int64_t a = 1; a <= 60; ++a) {
    for (std::int64_t b = 1; b <= 60; ++b) {
      pair(a, b);
      for (std::int64_t c = 1; c <= 60; ++c) triple(a, b, c);
    }
  }
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::int64_t> pick(1, 1'000'000);
  for (int i = 0; i < 10'000; ++i) {
    const std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
    pair(a, b);
    triple(a, b, c);
  }
  for (std::int64_t x = 1; x <= 100'000; ++x) {
    ++checks;
    const std::int64_t expect = x % 2 == 1 ? 2 : 1;
    if (gcd_of_neighbors(x) != expect || std::gcd(x - 1, x + 1) != expect) {
      o.fail("neighbours at " + std::to_string(x));
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks, 0 violations";
  return o;
}

// C6: classical indicators by direct summation and the real-degree identity.
Outcome classical_indicators() {
  Outcome o;
  double worst = 0.0;
  for (std::int64_t l = 3; l <= 30; ++l) {
    const Group g = Group::dihedral(l);
    const CharacterTable t = character_table(g);
    std::int64_t real_degrees = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::complex<double> sum = 0.0;
      for (const Element& x : g.elements()) sum += t.value(i, g.mul(x, x));
      const double residual = std::abs(sum / static_cast<double>(g.order()) - 1.0);
      worst = std::max(worst, residual);
      if (residual >= kIntegralityTolerance) o.fail("D:" + std::to_string(l) + " " + t.labels[i] + " residual");
      if (fs_indicator(t, i) == 1) real_degrees += t.degrees[i];
    }
    std::int64_t involutions = 0;
    for (const Element& x : g.elements()) involutions += g.mul(x, x) == g.identity() ? 1 : 0;
    const std::int64_t m_e = oracle::twisted_count(static_cast<int>(l), 1, 0);
    if (real_degrees != involutions || involutions != m_e || m_e != dihedral_t(l)) {
      o.fail("D:" + std::to_string(l) + ": real degrees " + std::to_string(real_degrees) + ", involutions " +
             std::to_string(involutions) + ", m_e " + std::to_string(m_e));
    }
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    o.detail = std::string("l <= 30, max residual ") + buf;
  }
  return o;
}

// C7: weighted twisted indicators count S_sigma for every involutive sigma.
Outcome twisted_indicators() {
  Outcome o;
  std::int64_t checked = 0;
  for (std::int64_t l = 3; l <= 20; ++l) {
    const Group g = Group::dihedral(l);
    const CharacterTable t = character_table(g);
    for (const DihedralAut& a : enumerate_dihedral_auts(l)) {
      if (compose(a, a) != DihedralAut::identity(l)) continue;
      ++checked;
      std::int64_t weighted = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const TwistedIndicator ti = twisted_fs_indicator(t, i, a);
        if (!ti.integral || ti.value < -1 || ti.value > 1) o.fail("D:" + std::to_string(l) + " non-integral value");
        weighted += ti.value * t.degrees[i];
      }
      if (weighted != oracle::twisted_count(static_cast<int>(l), a.u, a.v)) {
        o.fail("D:" + std::to_string(l) + " " + to_string(Automorphism{a}) + ": sum " + std::to_string(weighted));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " involutive automorphisms, 0 violations";
  return o;
}

// C8: every group of order p, p^2 and 2p for the listed primes.
Outcome order_classes() {
  Outcome o;
  const auto start = Clock::now();
  CampaignConfig cfg;
  cfg.family = CampaignFamily::OrderClasses;
  cfg.primes = {2, 3, 5, 7, 11, 13};
  const CampaignReport rep = run_campaign(cfg);
  const double elapsed = seconds_since(start);
  if (!rep.ok()) o.fail(std::to_string(rep.violations.size()) + " violations");
  bool z3_identity = false;
  for (const InvolutionRecord& r : rep.records) {
    if (r.m() > r.degree_sum) o.fail(r.group + " " + to_string(r.aut) + ": m > T");
    const Group g = Group::parse(r.group);
    if (g.is_abelian() && r.degree_sum != g.order()) o.fail(r.group + ": T != |G|");
    if (r.group == "Z:3" && to_string(r.aut) == "1") z3_identity = r.m() == 1 && r.degree_sum == 3;
  }
  if (!z3_identity) o.fail("Z:3 identity case is not m = 1, T = 3");
  for (const std::string& note : rep.notes) {
    if (note.find("skipped") != std::string::npos) o.fail(note);
  }
  // GL(2, p) sizes for the Z_p x Z_p sweeps, from the matrix oracle for small p.
  for (std::int64_t p : {2, 3, 5}) {
    std::int64_t seen = 0;
    const std::string name = "Z:" + std::to_string(p) + "xZ:" + std::to_string(p);
    for (const InvolutionRecord& r : rep.records) seen += r.group == name ? 1 : 0;
    // Z:2xZ:2 is swept twice: as the order-p^2 and the order-2p non-cyclic group.
    const std::int64_t sweeps = p == 2 ? 2 : 1;
    if (seen != sweeps * oracle::invertible_matrix_count(p)) o.fail(name + ": " + std::to_string(seen) + " automorphisms");
  }
  require_time(o, elapsed, 60.0);
  if (o.pass) {
    o.detail = std::to_string(rep.summary.cases) + " automorphisms, Z:3 identity m=1 T=3, " +
               std::to_string(elapsed) + " s";
  }
  return o;
}

bool same_bytes(const std::filesystem::path& a, const std::filesystem::path& b) {
  if (std::filesystem::file_size(a) != std::filesystem::file_size(b)) return false;
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  std::vector<char> ba(1 << 20), bb(1 << 20);
  while (fa && fb) {
    fa.read(ba.data(), static_cast<std::streamsize>(ba.size()));
    fb.read(bb.data(), static_cast<std::streamsize>(bb.size()));
    if (fa.gcount() != fb.gcount() || !std::equal(ba.begin(), ba.begin() + fa.gcount(), bb.begin())) return false;
  }
  return true;
}

// C9: the C3 campaign twice, full records, different thread counts.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("twinv_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::uintmax_t json_size = 0;
  for (const ReportFormat fmt : {ReportFormat::Json, ReportFormat::Csv}) {
    const std::string ext = fmt == ReportFormat::Json ? ".json" : ".csv";
    for (int run = 0; run < 2; ++run) {
      CampaignConfig cfg = sweep_config();
      cfg.parallelism = run == 0 ? 1 : 4;
      const CampaignReport rep = run_campaign(cfg);
      std::ofstream os(dir / ("run" + std::to_string(run) + ext), std::ios::binary);
      write_report(rep, fmt, os);
    }
    if (!same_bytes(dir / ("run0" + ext), dir / ("run1" + ext))) o.fail(ext + " outputs differ");
    if (fmt == ReportFormat::Json) json_size = std::filesystem::file_size(dir / "run0.json");
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "JSON (" + std::to_string(json_size) + " bytes) and CSV identical across runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"table reproduction", table1},
      {"oracle equivalence, l <= 60", oracle_equivalence},
      {"inequality sweep, l <= 200", inequality_sweep},
      {"congruence solver vs exhaustive, n <= 200", congruence},
      {"gcd inequalities and neighbour rule", gcd_properties},
      {"classical indicators and real degree sum, l <= 30", classical_indicators},
      {"twisted indicator identity, l <= 20", twisted_indicators},
      {"groups of order p, p^2, 2p with p <= 13", order_classes},
      {"determinism of sweep output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}

#include "twinv/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "twinv/characters.hpp"
#include "twinv/errors.hpp"
#include "twinv/json_io.hpp"
#include "twinv/number_theory.hpp"

namespace twinv {

namespace {

constexpr std::int64_t kMaxDihedralL = 1000;
constexpr std::int64_t kMaxBruteForceL = 60;
constexpr std::int64_t kMaxIndicatorL = 20;
constexpr std::int64_t kMaxOrderPPrime = 313;
constexpr std::int64_t kMaxComposite = 31;
// Beyond this many kept records a full dump stops being a desk-scale file.
constexpr std::int64_t kMaxKeptRecords = 20'000'000;

struct Chunk {
  std::vector<InvolutionRecord> records;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::int64_t cases = 0;
  std::int64_t equality_cases = 0;
};

// Runs work(i) for i in [0, count) on a bounded pool. Results land in
// their own slots, so the merge order never depends on scheduling.
std::vector<Chunk> run_pool(std::size_t count, int jobs, const std::function<Chunk(std::size_t)>& work) {
  std::vector<Chunk> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = work(i);
  };
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return out;
}

CampaignReport assemble(const CampaignConfig& cfg, std::vector<Chunk> chunks,
                        std::chrono::steady_clock::time_point start) {
  CampaignReport report;
  report.config = cfg;
  for (Chunk& c : chunks) {
    report.summary.cases += c.cases;
    report.summary.equality_cases += c.equality_cases;
    std::move(c.records.begin(), c.records.end(), std::back_inserter(report.records));
    std::move(c.violations.begin(), c.violations.end(), std::back_inserter(report.violations));
    std::move(c.notes.begin(), c.notes.end(), std::back_inserter(report.notes));
  }
  report.summary.violations = static_cast<std::int64_t>(report.violations.size());
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool keep(RecordFilter filter, bool equality, bool violating) {
  switch (filter) {
    case RecordFilter::All: return true;
    case RecordFilter::Equality: return equality || violating;
    case RecordFilter::None: return violating;
  }
  return true;
}

std::string describe(const InvolutionRecord& rec) {
  std::ostringstream os;
  os << rec.group << " aut " << to_string(rec.aut) << ": m=" << rec.m();
  if (rec.m_brute) os << " brute=" << *rec.m_brute;
  if (rec.closed) os << " closed=" << rec.closed->total << " (rot " << rec.closed->rotations << ", refl "
                     << rec.closed->reflections << ")";
  os << " T=" << rec.degree_sum;
  return os.str();
}

// Adds one record's checks to the chunk.
void tally(Chunk& chunk, InvolutionRecord rec, RecordFilter filter) {
  ++chunk.cases;
  bool violating = false;
  if (!rec.counts_agree()) {
    chunk.violations.push_back({"oracle_equivalence", describe(rec)});
    violating = true;
  }
  if (!rec.inequality_holds()) {
    chunk.violations.push_back({"degree_sum_bound", describe(rec)});
    violating = true;
  }
  if (rec.equality()) ++chunk.equality_cases;
  if (keep(filter, rec.equality(), violating)) chunk.records.push_back(std::move(rec));
}

Chunk dihedral_chunk(std::int64_t l, const CampaignConfig& cfg) {
  Chunk chunk;
  const Group g = Group::dihedral(l);
  const std::int64_t t = degree_sum(g);
  const std::int64_t m_e = identity_involution_count(l);
  const bool brute = l <= cfg.brute_force_cap;
  const std::string name = g.name();

  std::int64_t max_m = 0;
  for (const DihedralAut& aut : enumerate_dihedral_auts(l)) {
    if (!brute && cfg.records != RecordFilter::All) {
      // Only materialize a record when it will be kept.
      const ClosedFormCount c = count_closed_form(aut);
      max_m = std::max(max_m, c.total);
      const bool equal = c.total == t;
      if (c.total > t || (equal && cfg.records == RecordFilter::Equality)) {
        tally(chunk, make_record(g, aut), cfg.records);
      } else {
        ++chunk.cases;
        if (equal) ++chunk.equality_cases;
      }
      continue;
    }
    InvolutionRecord rec = make_record(g, aut, {.brute_force = brute});
    max_m = std::max(max_m, rec.m());
    if (brute) {
      const auto bridge = solve_linear_congruence(aut.u - 1, -aut.v, l);
      if (bridge.count != rec.closed->reflections) {
        chunk.violations.push_back({"congruence_bridge", describe(rec) + " solver count " + std::to_string(bridge.count)});
      }
    }
    tally(chunk, std::move(rec), cfg.records);
  }

  if (count_closed_form(l, 1, 0).total != m_e) {
    chunk.violations.push_back({"identity_count", name + ": closed form at identity differs from " + std::to_string(m_e)});
  }
  if (m_e != t) {
    chunk.violations.push_back({"degree_sum_equals_identity_count", name + ": m_e=" + std::to_string(m_e) + " T=" + std::to_string(t)});
  }
  if (max_m != m_e) {
    chunk.violations.push_back({"identity_is_maximal", name + ": max m=" + std::to_string(max_m) + " m_e=" + std::to_string(m_e)});
  }
  if (l <= cfg.character_cap) {
    try {
      const RealDegreeCheck rc = real_degree_sum_check(g);
      if (rc.real_degree_sum != rc.involution_count || rc.involution_count != m_e) {
        chunk.violations.push_back({"real_degree_sum", name + ": real degree sum " + std::to_string(rc.real_degree_sum) +
                                                           ", involutions " + std::to_string(rc.involution_count) +
                                                           ", m_e " + std::to_string(m_e)});
      }
    } catch (const NumericalIntegrityError& e) {
      chunk.violations.push_back({"numerical_integrity", e.what()});
    }
  }
  return chunk;
}

void check_order(Chunk& chunk, const Group& g, const CampaignConfig& cfg) {
  const std::int64_t t = degree_sum(g);
  if (g.is_abelian()) {
    const auto classes = static_cast<std::int64_t>(conjugacy_classes(g).size());
    if (t != g.order() || classes != g.order()) {
      chunk.violations.push_back({"abelian_degree_sum", g.name() + ": T=" + std::to_string(t) + " |G|=" +
                                                            std::to_string(g.order()) + " classes=" + std::to_string(classes)});
    }
  }
  const bool dihedral = g.kind() == GroupKind::Dihedral;
  for (const Automorphism& aut : enumerate_automorphisms(g)) {
    tally(chunk, make_record(g, aut, {.brute_force = true, .closed_form = dihedral}), cfg.records);
  }
}

Chunk order_chunk(std::int64_t p, const CampaignConfig& cfg) {
  Chunk chunk;
  const CampaignFamily f = cfg.family;
  const bool all = f == CampaignFamily::OrderClasses;
  if (all || f == CampaignFamily::OrderP) check_order(chunk, Group::cyclic(p), cfg);
  if (all || f == CampaignFamily::OrderPSquared) {
    check_order(chunk, Group::cyclic(p * p), cfg);
    if (p <= cfg.two_cyclic_prime_cap) {
      check_order(chunk, Group::two_cyclic(p, p), cfg);
    } else {
      chunk.notes.push_back("Z:" + std::to_string(p) + "xZ:" + std::to_string(p) + " skipped: p exceeds two_cyclic_prime_cap " +
                            std::to_string(cfg.two_cyclic_prime_cap));
    }
  }
  if (all || f == CampaignFamily::Order2P) {
    check_order(chunk, Group::cyclic(2 * p), cfg);
    if (p >= 3) {
      check_order(chunk, Group::dihedral(p), cfg);
    } else if (cfg.two_cyclic_prime_cap >= 2) {
      // The non-cyclic group of order 4 is the Klein group.
      chunk.notes.push_back("order 4: the non-cyclic group is Z:2xZ:2");
      check_order(chunk, Group::two_cyclic(2, 2), cfg);
    }
  }
  return chunk;
}

Chunk indicator_chunk(std::int64_t l) {
  Chunk chunk;
  const Group g = Group::dihedral(l);
  const std::string name = g.name();
  try {
    const CharacterTable table = dihedral_character_table(l);
    if (const double defect = orthogonality_defect(table); defect >= 1e-9) {
      chunk.violations.push_back({"orthogonality", name + ": defect " + std::to_string(defect)});
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (const int eps = fs_indicator(table, i); eps != 1) {
        chunk.violations.push_back({"classical_indicator", name + " " + table.labels[i] + ": " + std::to_string(eps)});
      }
    }
    const RealDegreeCheck rc = real_degree_sum_check(table);
    if (rc.real_degree_sum != rc.involution_count || rc.involution_count != identity_involution_count(l)) {
      chunk.violations.push_back({"real_degree_sum", name + ": real degree sum " + std::to_string(rc.real_degree_sum) +
                                                         ", involutions " + std::to_string(rc.involution_count)});
    }
    for (const DihedralAut& aut : enumerate_dihedral_auts(l)) {
      InvolutionRecord rec = make_record(g, aut, {.brute_force = true});
      const auto m = static_cast<double>(rec.m());
      std::complex<double> weighted = 0.0;
      std::int64_t weighted_int = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        const TwistedIndicator tw = twisted_fs_indicator(table, i, aut);
        weighted += tw.raw * static_cast<double>(table.degrees[i]);
        weighted_int += tw.value * table.degrees[i];
      }
      if (is_involutive(aut)) {
        if (weighted_int != rec.m()) {
          chunk.violations.push_back({"twisted_identity", describe(rec) + " weighted indicator sum " + std::to_string(weighted_int)});
        }
        tally(chunk, std::move(rec), RecordFilter::All);
      } else if (std::abs(weighted - m) >= kIntegralityTolerance) {
        chunk.violations.push_back({"twisted_identity_raw", describe(rec) + " raw weighted sum " + std::to_string(weighted.real())});
      }
    }
  } catch (const NumericalIntegrityError& e) {
    chunk.violations.push_back({"numerical_integrity", e.what()});
  }
  return chunk;
}

struct Table1Row {
  const char* label;
  std::int64_t u;
  std::int64_t v;
  std::int64_t expected_m;
};

// phi(s) = s, rs, r^2 s, s, sr = r^2 s, sr^2 = r s.
constexpr std::array<Table1Row, 6> kTable1{{{"e", 1, 0, 4},
                                            {"sigma_1", 1, 1, 1},
                                            {"sigma_2", 1, 2, 1},
                                            {"sigma_3", 2, 0, 4},
                                            {"sigma_4", 2, 2, 4},
                                            {"sigma_5", 2, 1, 4}}};

// S_sigma read off a generator-extension automorphism rather than apply().
std::vector<std::string> oracle_members(const Group& g, const std::vector<ElementMap>& maps, std::int64_t u,
                                        std::int64_t v) {
  const std::size_t r = g.index_of(DihedralElement{1, false});
  const std::size_t s = g.index_of(DihedralElement{0, true});
  const std::size_t ru = g.index_of(DihedralElement{u, false});
  const std::size_t rvs = g.index_of(DihedralElement{v, true});
  for (const ElementMap& map : maps) {
    if (map[r] != ru || map[s] != rvs) continue;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < map.size(); ++i) {
      const Element x = g.element_at(i);
      if (map[i] == g.index_of(g.inv(x))) out.push_back(to_string(x));
    }
    return out;
  }
  return {};
}

}  // namespace

void validate(const CampaignConfig& cfg) {
  if (cfg.parallelism < 1) throw UsageError("parallelism must be >= 1");
  switch (cfg.family) {
    case CampaignFamily::Dihedral: {
      if (cfg.max_l < 3 || cfg.max_l > kMaxDihedralL) {
        throw UsageError("max_l must lie in [3, 1000] for the dihedral campaign, got " + std::to_string(cfg.max_l));
      }
      if (cfg.brute_force_cap > kMaxBruteForceL || cfg.character_cap > kMaxBruteForceL) {
        throw UsageError("brute-force and character caps must be <= 60");
      }
      if (cfg.records == RecordFilter::All) {
        std::int64_t total = 0;
        for (std::int64_t l = 3; l <= cfg.max_l; ++l) total += l * euler_phi(l);
        if (total > kMaxKeptRecords) {
          throw UsageError("max_l " + std::to_string(cfg.max_l) + " yields " + std::to_string(total) +
                           " records; keep only equality records for this range");
        }
      }
      break;
    }
    case CampaignFamily::Indicators:
      if (cfg.max_l < 3 || cfg.max_l > kMaxIndicatorL) {
        throw UsageError("max_l must lie in [3, 20] for the indicator campaign, got " + std::to_string(cfg.max_l));
      }
      break;
    case CampaignFamily::OrderP:
    case CampaignFamily::OrderPSquared:
    case CampaignFamily::Order2P:
    case CampaignFamily::OrderClasses: {
      if (cfg.primes.empty()) throw UsageError("prime list is empty");
      const std::int64_t limit = cfg.family == CampaignFamily::OrderP ? kMaxOrderPPrime : kMaxComposite;
      for (std::int64_t p : cfg.primes) {
        if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
        if (p > limit) throw UsageError("prime " + std::to_string(p) + " exceeds the limit " + std::to_string(limit));
      }
      break;
    }
    case CampaignFamily::Table1: break;
  }
}

CampaignReport run_dihedral_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const auto count = static_cast<std::size_t>(cfg.max_l - 2);
  auto chunks = run_pool(count, cfg.parallelism,
                         [&](std::size_t i) { return dihedral_chunk(static_cast<std::int64_t>(i) + 3, cfg); });
  return assemble(cfg, std::move(chunks), start);
}

CampaignReport run_order_class_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::int64_t> primes = cfg.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  auto chunks = run_pool(primes.size(), cfg.parallelism, [&](std::size_t i) { return order_chunk(primes[i], cfg); });
  return assemble(cfg, std::move(chunks), start);
}

CampaignReport run_table1(const CampaignConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Group g = Group::dihedral(3);
  const std::vector<ElementMap> maps = brute_force_auts(g);
  Chunk chunk;
  if (maps.size() != kTable1.size()) {
    chunk.violations.push_back({"automorphism_count", "D:3 has " + std::to_string(maps.size()) + " automorphisms"});
  }
  for (const Table1Row& row : kTable1) {
    InvolutionRecord rec = make_record(g, DihedralAut::make(3, row.u, row.v), {.list_members = true});
    rec.label = row.label;
    if (rec.m() != row.expected_m) {
      chunk.violations.push_back({"table_value", std::string(row.label) + ": m=" + std::to_string(rec.m()) +
                                                     " expected " + std::to_string(row.expected_m)});
    }
    if (rec.members != oracle_members(g, maps, row.u, row.v)) {
      chunk.violations.push_back({"member_oracle", std::string(row.label) + ": set differs from generator-extension oracle"});
    }
    chunk.notes.push_back(std::string(row.label) + ": phi(r) = " + to_string(DihedralElement{row.u, false}) +
                          ", phi(s) = " + to_string(DihedralElement{row.v, true}) + ", u,v = " + std::to_string(row.u) +
                          "," + std::to_string(row.v));
    tally(chunk, std::move(rec), RecordFilter::All);
  }
  std::vector<Chunk> chunks;
  chunks.push_back(std::move(chunk));
  CampaignConfig echo = cfg;
  echo.family = CampaignFamily::Table1;
  return assemble(echo, std::move(chunks), start);
}

CampaignReport run_indicator_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const auto count = static_cast<std::size_t>(cfg.max_l - 2);
  auto chunks = run_pool(count, cfg.parallelism,
                         [&](std::size_t i) { return indicator_chunk(static_cast<std::int64_t>(i) + 3); });
  return assemble(cfg, std::move(chunks), start);
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  switch (cfg.family) {
    case CampaignFamily::Dihedral: return run_dihedral_campaign(cfg);
    case CampaignFamily::Table1: return run_table1(cfg);
    case CampaignFamily::Indicators: return run_indicator_campaign(cfg);
    case CampaignFamily::OrderP:
    case CampaignFamily::OrderPSquared:
    case CampaignFamily::Order2P:
    case CampaignFamily::OrderClasses: return run_order_class_campaign(cfg);
  }
  throw UsageError("unknown campaign family");
}

std::string to_string(CampaignFamily family) {
  switch (family) {
    case CampaignFamily::Dihedral: return "dihedral";
    case CampaignFamily::OrderP: return "order_p";
    case CampaignFamily::OrderPSquared: return "order_p2";
    case CampaignFamily::Order2P: return "order_2p";
    case CampaignFamily::OrderClasses: return "orders";
    case CampaignFamily::Table1: return "table1";
    case CampaignFamily::Indicators: return "indicators";
  }
  return "unknown";
}

std::string to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return "text";
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
  }
  return "unknown";
}

std::string to_string(RecordFilter filter) {
  switch (filter) {
    case RecordFilter::All: return "all";
    case RecordFilter::Equality: return "equality";
    case RecordFilter::None: return "none";
  }
  return "unknown";
}

void write_json(const CampaignReport& report, std::ostream& os) {
  ordered_json head;
  head["tool_version"] = report.tool_version;
  head["campaign"] = to_string(report.config.family);
  head["config"] = to_json(report.config);
  head["summary"] = {{"cases", report.summary.cases},
                     {"violations", report.summary.violations},
                     {"equality_cases", report.summary.equality_cases}};
  head["notes"] = report.notes;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) violations.push_back({{"check", v.check}, {"detail", v.detail}});
  head["violations"] = std::move(violations);

  // One record per line, streamed.
  std::string text = head.dump();
  text.pop_back();  // closing brace
  os << text << ",\"records\":[";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << to_json(report.records[i]).dump();
  }
  os << "\n]}\n";
}

std::string csv_header() { return "group,u,v,m_closed,m_brute,rot,refl,T,ineq_holds,equality"; }

std::string csv_row(const InvolutionRecord& rec) {
  std::ostringstream os;
  os << rec.group << ',';
  if (const auto* d = std::get_if<DihedralAut>(&rec.aut)) {
    os << d->u << ',' << d->v;
  } else {
    const std::string lit = to_string(rec.aut);
    os << (lit.find(',') == std::string::npos ? lit : '"' + lit + '"') << ',';
  }
  os << ',';
  if (rec.closed) os << rec.closed->total;
  os << ',';
  if (rec.m_brute) os << *rec.m_brute;
  os << ',';
  if (rec.closed) os << rec.closed->rotations;
  os << ',';
  if (rec.closed) os << rec.closed->reflections;
  os << ',' << rec.degree_sum << ',' << (rec.inequality_holds() ? "true" : "false") << ','
     << (rec.equality() ? "true" : "false");
  return os.str();
}

void write_csv(const CampaignReport& report, std::ostream& os) {
  os << csv_header() << '\n';
  for (const InvolutionRecord& rec : report.records) os << csv_row(rec) << '\n';
}

namespace {

std::string paint(const std::string& text, const char* code, bool color) {
  return color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

void write_table1_text(const CampaignReport& report, std::ostream& os) {
  os << "Automorphisms of D:3 (u,v: r -> r^u, s -> r^v s)\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %-6s %-6s %-5s %-22s %s\n", "row", "phi(r)", "phi(s)", "u,v", "S_sigma", "m");
  os << line;
  for (const InvolutionRecord& rec : report.records) {
    const auto& aut = std::get<DihedralAut>(rec.aut);
    std::string set = "{";
    for (std::size_t i = 0; i < rec.members.size(); ++i) set += (i ? ", " : "") + rec.members[i];
    set += "}";
    std::snprintf(line, sizeof line, "%-8s %-6s %-6s %-5s %-22s %lld\n", rec.label.c_str(),
                  to_string(DihedralElement{aut.u, false}).c_str(), to_string(DihedralElement{aut.v, true}).c_str(),
                  to_string(rec.aut).c_str(), set.c_str(), static_cast<long long>(rec.m()));
    os << line;
  }
  os << "T(D:3) = " << (report.records.empty() ? 0 : report.records.front().degree_sum) << "\n";
}

}  // namespace

void write_text(const CampaignReport& report, std::ostream& os, bool color) {
  if (report.config.family == CampaignFamily::Table1) write_table1_text(report, os);
  os << "campaign " << to_string(report.config.family) << " (twinv " << report.tool_version << ")\n";
  os << "cases: " << report.summary.cases << "\n";
  os << "equality cases (m = T): " << report.summary.equality_cases << "\n";
  const std::string verdict = report.ok() ? "violations: 0" : "violations: " + std::to_string(report.summary.violations);
  os << paint(verdict, report.ok() ? "32" : "31", color) << "\n";
  constexpr std::size_t kShown = 50;
  for (std::size_t i = 0; i < std::min(kShown, report.violations.size()); ++i) {
    os << "  [" << report.violations[i].check << "] " << report.violations[i].detail << "\n";
  }
  if (report.violations.size() > kShown) os << "  ... " << report.violations.size() - kShown << " more\n";
  for (const std::string& note : report.notes) os << "note: " << note << "\n";
  char wall[64];
  std::snprintf(wall, sizeof wall, "wall time: %.3f s\n", report.wall_time_seconds);
  os << wall;
}

void write_report(const CampaignReport& report, ReportFormat format, std::ostream& os, bool color) {
  switch (format) {
    case ReportFormat::Text: write_text(report, os, color); break;
    case ReportFormat::Json: write_json(report, os); break;
    case ReportFormat::Csv: write_csv(report, os); break;
  }
}

ordered_json to_json(const InvolutionRecord& rec) {
  ordered_json j;
  j["group"] = rec.group;
  if (const auto* d = std::get_if<DihedralAut>(&rec.aut)) {
    j["u"] = d->u;
    j["v"] = d->v;
  } else {
    j["u"] = nullptr;
    j["v"] = nullptr;
    j["aut"] = to_string(rec.aut);
  }
  if (!rec.label.empty()) j["label"] = rec.label;
  j["m_brute"] = rec.m_brute ? ordered_json(*rec.m_brute) : ordered_json(nullptr);
  j["m_closed"] = rec.closed ? ordered_json(rec.closed->total) : ordered_json(nullptr);
  j["rot"] = rec.closed ? ordered_json(rec.closed->rotations) : ordered_json(nullptr);
  j["refl"] = rec.closed ? ordered_json(rec.closed->reflections) : ordered_json(nullptr);
  j["T"] = rec.degree_sum;
  j["m_e"] = rec.identity_count;
  j["ineq_holds"] = rec.inequality_holds();
  j["equality"] = rec.equality();
  if (!rec.members.empty()) j["S"] = rec.members;
  return j;
}

ordered_json to_json(const CongruenceSolution& sol, std::int64_t a, std::int64_t c, std::int64_t n) {
  return ordered_json{{"a", a},
                      {"c", c},
                      {"n", n},
                      {"solvable", sol.solvable},
                      {"count", sol.count},
                      {"solutions", sol.solutions},
                      {"truncated", sol.truncated}};
}

ordered_json to_json(const CampaignConfig& cfg) {
  ordered_json j;
  j["family"] = to_string(cfg.family);
  switch (cfg.family) {
    case CampaignFamily::Dihedral:
      j["max_l"] = cfg.max_l;
      j["brute_force_cap"] = cfg.brute_force_cap;
      j["character_cap"] = cfg.character_cap;
      break;
    case CampaignFamily::Indicators: j["max_l"] = cfg.max_l; break;
    case CampaignFamily::Table1: break;
    default:
      j["primes"] = cfg.primes;
      j["two_cyclic_prime_cap"] = cfg.two_cyclic_prime_cap;
      break;
  }
  j["records"] = to_string(cfg.records);
  // Format, output path and parallelism do not affect results; not echoed.
  return j;
}

}  // namespace twinv

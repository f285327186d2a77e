#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twinv/involutions.hpp"

namespace twinv {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CampaignFamily { Dihedral, OrderP, OrderPSquared, Order2P, OrderClasses, Table1, Indicators };
enum class ReportFormat { Text, Json, Csv };

// Which per-case records a campaign keeps. Every case is checked and
// counted regardless; filtering only bounds report size.
enum class RecordFilter { All, Equality, None };

struct CampaignConfig {
  CampaignFamily family = CampaignFamily::Dihedral;
  std::int64_t max_l = 60;
  // Dihedral campaign: brute force and character checks run for l <= these.
  std::int64_t brute_force_cap = 60;
  std::int64_t character_cap = 60;
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  // Z_p x Z_p automorphism sweeps skip primes above this.
  std::int64_t two_cyclic_prime_cap = 31;
  std::string output_path;
  ReportFormat format = ReportFormat::Text;
  RecordFilter records = RecordFilter::All;
  int parallelism = 1;
};

struct Violation {
  std::string check;
  std::string detail;
};

struct CampaignSummary {
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::int64_t equality_cases = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<InvolutionRecord> records;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  CampaignSummary summary;
  std::string tool_version = kToolVersion;
  double wall_time_seconds = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

// Throws UsageError for configurations outside the documented ranges.
void validate(const CampaignConfig& cfg);

// For every l in [3, max_l] and every automorphism of D_l: closed-form
// count, inequality m <= T and equality flag. Per l: m_e = T and
// max m = m_e. For l <= brute_force_cap also the exhaustive count and the
// congruence-solver reflection count; for l <= character_cap the real
// degree sum from Frobenius-Schur indicators.
CampaignReport run_dihedral_campaign(const CampaignConfig& cfg);

// For each prime p: Z_p (order p), Z_{p^2} and Z_p x Z_p (order p^2),
// Z_{2p} and D_p (order 2p), every automorphism, T(G) >= m.
CampaignReport run_order_class_campaign(const CampaignConfig& cfg);

// The six automorphisms of D_3 in the standard table order.
CampaignReport run_table1(const CampaignConfig& cfg);

// Classical and twisted Frobenius-Schur indicators for D_l, l <= max_l.
CampaignReport run_indicator_campaign(const CampaignConfig& cfg);

CampaignReport run_campaign(const CampaignConfig& cfg);

std::string to_string(CampaignFamily family);
std::string to_string(ReportFormat format);
std::string to_string(RecordFilter filter);

// JSON and CSV output depends only on config and results, never on
// timing, so equal inputs give byte-identical files.
void write_json(const CampaignReport& report, std::ostream& os);
void write_csv(const CampaignReport& report, std::ostream& os);
void write_text(const CampaignReport& report, std::ostream& os, bool color = false);
void write_report(const CampaignReport& report, ReportFormat format, std::ostream& os, bool color = false);

// CSV header and one row per record, shared with the CLI.
std::string csv_header();
std::string csv_row(const InvolutionRecord& rec);

}  // namespace twinv

#include "twinv/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "twinv/characters.hpp"
#include "twinv/errors.hpp"
#include "twinv/harness.hpp"
#include "twinv/json_io.hpp"

namespace twinv {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  return ReportFormat::Text;
}

RecordFilter parse_filter(const std::string& s) {
  if (s == "equality") return RecordFilter::Equality;
  if (s == "none") return RecordFilter::None;
  return RecordFilter::All;
}

// Writes to --output when given, otherwise to the command's stdout.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  fn(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string describe_aut(const Automorphism& aut) {
  if (const auto* d = std::get_if<DihedralAut>(&aut)) {
    return "r -> " + to_string(DihedralElement{d->u, false}) + ", s -> " + to_string(DihedralElement{d->v, true});
  }
  if (const auto* c = std::get_if<CyclicAut>(&aut)) return "x -> " + std::to_string(c->w) + "x";
  const auto& e = std::get<MatrixAut>(aut).entries;
  return "(x,y) -> (" + std::to_string(e[0]) + "x+" + std::to_string(e[1]) + "y, " + std::to_string(e[2]) + "x+" +
         std::to_string(e[3]) + "y)";
}

void write_record_text(const InvolutionRecord& rec, std::ostream& os) {
  os << "group=" << rec.group << "\n";
  os << "aut=" << to_string(rec.aut) << " (" << describe_aut(rec.aut) << ")\n";
  os << "m=" << rec.m() << "\n";
  if (rec.closed) {
    os << "m_closed=" << rec.closed->total << "\n";
    os << "rot=" << rec.closed->rotations << "\n";
    os << "refl=" << rec.closed->reflections << "\n";
  }
  if (rec.m_brute) os << "m_brute=" << *rec.m_brute << "\n";
  if (!rec.members.empty()) {
    os << "S={";
    for (std::size_t i = 0; i < rec.members.size(); ++i) os << (i ? ", " : "") << rec.members[i];
    os << "}\n";
  }
  os << "T=" << rec.degree_sum << "\n";
  os << "m_e=" << rec.identity_count << "\n";
  os << "ineq_holds=" << (rec.inequality_holds() ? "true" : "false") << "\n";
  os << "equality=" << (rec.equality() ? "true" : "false") << "\n";
}

std::string format_value(const TwistedIndicator& tw) {
  if (tw.integral) return std::to_string(tw.value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", tw.raw.real());
  return buf;
}

void add_aut_fields(ordered_json& j, const Automorphism& aut) {
  if (const auto* d = std::get_if<DihedralAut>(&aut)) {
    j["u"] = d->u;
    j["v"] = d->v;
  } else {
    j["u"] = nullptr;
    j["v"] = nullptr;
    j["aut"] = to_string(aut);
  }
}

int run_indicators(const Group& g, const std::vector<Automorphism>& sigmas, ReportFormat format, std::ostream& os) {
  const CharacterTable table = character_table(g);
  std::vector<int> eps(table.size());
  std::vector<std::vector<TwistedIndicator>> tw(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    eps[i] = fs_indicator(table, i);
    for (const Automorphism& s : sigmas) tw[i].push_back(twisted_fs_indicator(table, i, s));
  }

  // sum_chi eps_sigma(chi) deg(chi) against |S_sigma|
  bool consistent = true;
  std::vector<std::pair<double, std::int64_t>> sums;
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    double weighted = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) weighted += tw[i][k].raw.real() * static_cast<double>(table.degrees[i]);
    const std::int64_t m = twisted_involution_count(g, sigmas[k]);
    consistent = consistent && std::abs(weighted - static_cast<double>(m)) < kIntegralityTolerance;
    sums.emplace_back(weighted, m);
  }

  switch (format) {
    case ReportFormat::Json: {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < table.size(); ++i) {
        ordered_json twisted = ordered_json::array();
        for (std::size_t k = 0; k < sigmas.size(); ++k) {
          ordered_json t;
          add_aut_fields(t, sigmas[k]);
          t["value"] = tw[i][k].integral ? ordered_json(tw[i][k].value) : ordered_json(tw[i][k].raw.real());
          t["integral"] = tw[i][k].integral;
          twisted.push_back(std::move(t));
        }
        rows.push_back({{"irrep", table.labels[i]}, {"degree", table.degrees[i]}, {"epsilon", eps[i]}, {"twisted", twisted}});
      }
      os << rows.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv: {
      os << "irrep,degree,epsilon,aut,value,integral\n";
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (sigmas.empty()) os << table.labels[i] << ',' << table.degrees[i] << ',' << eps[i] << ",,,\n";
        for (std::size_t k = 0; k < sigmas.size(); ++k) {
          os << table.labels[i] << ',' << table.degrees[i] << ',' << eps[i] << ",\"" << to_string(sigmas[k]) << "\","
             << format_value(tw[i][k]) << ',' << (tw[i][k].integral ? "true" : "false") << '\n';
        }
      }
      break;
    }
    case ReportFormat::Text: {
      os << "indicators for " << g.name() << "\n";
      os << std::left << std::setw(14) << "irrep" << std::setw(8) << "degree" << std::setw(9) << "epsilon";
      for (const Automorphism& s : sigmas) os << std::setw(12) << ("[" + to_string(s) + "]");
      os << "\n";
      for (std::size_t i = 0; i < table.size(); ++i) {
        os << std::setw(14) << table.labels[i] << std::setw(8) << table.degrees[i] << std::setw(9) << eps[i];
        for (const TwistedIndicator& t : tw[i]) os << std::setw(12) << format_value(t);
        os << "\n";
      }
      for (std::size_t k = 0; k < sigmas.size(); ++k) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "[%s] sum eps*deg = %.6f, |S_sigma| = %lld\n", to_string(sigmas[k]).c_str(),
                      sums[k].first, static_cast<long long>(sums[k].second));
        os << buf;
      }
      break;
    }
  }
  return consistent ? kExitOk : kExitViolations;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, CliStreams streams) {
  CLI::App app{"Twisted involution counts and character degree sums for dihedral and small abelian groups", "twinv"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output;
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("-o,--output", output, "Write to this file instead of stdout");
  };

  CampaignConfig cfg;
  std::string records_name = "all";
  auto add_campaign = [&](CLI::App* cmd) {
    add_output(cmd);
    cmd->add_option("--records", records_name, "Which per-case records to keep")
        ->check(CLI::IsMember({"all", "equality", "none"}));
    cmd->add_option("-j,--jobs", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->require_subcommand(1);
  auto* v_dihedral = verify->add_subcommand("dihedral", "All automorphisms of D_l for 3 <= l <= max-l");
  v_dihedral->add_option("--max-l", cfg.max_l, "Largest l")->capture_default_str();
  v_dihedral->add_option("--brute-cap", cfg.brute_force_cap, "Exhaustive cross-check for l <= this")->capture_default_str();
  v_dihedral->add_option("--char-cap", cfg.character_cap, "Indicator cross-check for l <= this")->capture_default_str();
  add_campaign(v_dihedral);

  std::string order_class = "all";
  auto* v_orders = verify->add_subcommand("orders", "Groups of order p, p^2 and 2p");
  v_orders->add_option("--primes", cfg.primes, "Comma-separated primes")->delimiter(',')->capture_default_str();
  v_orders->add_option("--class", order_class, "Order class")->check(CLI::IsMember({"all", "p", "p2", "2p"}));
  v_orders->add_option("--two-cyclic-cap", cfg.two_cyclic_prime_cap, "Skip Z_p x Z_p above this p")
      ->capture_default_str();
  add_campaign(v_orders);

  std::int64_t indicator_max_l = 20;
  auto* v_indicators = verify->add_subcommand("indicators", "Classical and twisted indicators of D_l");
  v_indicators->add_option("--max-l", indicator_max_l, "Largest l")->capture_default_str();
  add_campaign(v_indicators);

  auto* table1 = app.add_subcommand("table1", "Automorphisms of D_3 with their twisted involutions");
  add_output(table1);

  std::string group_literal;
  std::string aut_literal;
  bool brute_force = false;
  auto* count = app.add_subcommand("count", "Twisted involution count for one automorphism");
  count->add_option("--group", group_literal, "D:<l>, Z:<n> or Z:<m>xZ:<n>")->required();
  count->add_option("--aut", aut_literal, "u,v (dihedral), w (cyclic) or a,b,c,d (matrix)")->required();
  count->add_flag("--brute-force", brute_force, "Also enumerate S_sigma exhaustively");
  add_output(count);

  auto* indicators = app.add_subcommand("indicators", "Frobenius-Schur indicators of one group");
  indicators->add_option("--group", group_literal, "Group literal")->required();
  indicators->add_option("--aut", aut_literal, "Twisting automorphism (default: every involutive one)");
  add_output(indicators);

  std::int64_t a = 0;
  std::int64_t c = 0;
  std::int64_t n = 1;
  std::size_t cap = kDefaultSolutionCap;
  auto* congruence = app.add_subcommand("congruence", "Solve a*k = c (mod n)");
  congruence->add_option("--a", a, "Coefficient")->required();
  congruence->add_option("--c", c, "Right-hand side")->required();
  congruence->add_option("--n", n, "Modulus")->required()->check(CLI::PositiveNumber);
  congruence->add_option("--cap", cap, "Maximum number of listed solutions")->capture_default_str();
  add_output(congruence);

  auto* aut_list = app.add_subcommand("aut-list", "Enumerate automorphisms");
  aut_list->add_option("--group", group_literal, "Group literal")->required();
  add_output(aut_list);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, streams.out, streams.err);
    streams.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const ReportFormat format = parse_format(format_name);
  cfg.format = format;
  cfg.records = parse_filter(records_name);
  cfg.output_path = output;

  try {
    auto finish_campaign = [&](const CampaignReport& report) {
      emit(output, streams.out, [&](std::ostream& os) { write_report(report, format, os, streams.color && output.empty()); });
      if (!output.empty() && format != ReportFormat::Text) {
        streams.out << "cases=" << report.summary.cases << " violations=" << report.summary.violations << "\n";
      }
      return report.ok() ? kExitOk : kExitViolations;
    };

    if (*v_dihedral) {
      cfg.family = CampaignFamily::Dihedral;
      return finish_campaign(run_dihedral_campaign(cfg));
    }
    if (*v_orders) {
      cfg.family = order_class == "p"    ? CampaignFamily::OrderP
                   : order_class == "p2" ? CampaignFamily::OrderPSquared
                   : order_class == "2p" ? CampaignFamily::Order2P
                                         : CampaignFamily::OrderClasses;
      return finish_campaign(run_order_class_campaign(cfg));
    }
    if (*v_indicators) {
      cfg.family = CampaignFamily::Indicators;
      cfg.max_l = indicator_max_l;
      return finish_campaign(run_indicator_campaign(cfg));
    }
    if (*table1) {
      cfg.family = CampaignFamily::Table1;
      return finish_campaign(run_table1(cfg));
    }
    if (*count) {
      const Group g = Group::parse(group_literal);
      const Automorphism aut = parse_automorphism(g, aut_literal);
      const InvolutionRecord rec = make_record(g, aut, {.brute_force = brute_force, .list_members = brute_force});
      emit(output, streams.out, [&](std::ostream& os) {
        switch (format) {
          case ReportFormat::Text: write_record_text(rec, os); break;
          case ReportFormat::Json: os << to_json(rec).dump(2) << "\n"; break;
          case ReportFormat::Csv: os << csv_header() << "\n" << csv_row(rec) << "\n"; break;
        }
      });
      return rec.counts_agree() && rec.inequality_holds() ? kExitOk : kExitViolations;
    }
    if (*indicators) {
      const Group g = Group::parse(group_literal);
      std::vector<Automorphism> sigmas;
      if (!aut_literal.empty()) {
        sigmas.push_back(parse_automorphism(g, aut_literal));
      } else {
        for (const Automorphism& s : enumerate_automorphisms(g)) {
          if (is_involutive(s)) sigmas.push_back(s);
        }
      }
      int code = kExitOk;
      emit(output, streams.out, [&](std::ostream& os) { code = run_indicators(g, sigmas, format, os); });
      return code;
    }
    if (*congruence) {
      const CongruenceSolution sol = solve_linear_congruence(a, c, n, cap);
      emit(output, streams.out, [&](std::ostream& os) {
        switch (format) {
          case ReportFormat::Json: os << to_json(sol, a, c, n).dump(2) << "\n"; break;
          case ReportFormat::Csv: {
            os << "a,c,n,solvable,count,solutions,truncated\n";
            os << a << ',' << c << ',' << n << ',' << (sol.solvable ? "true" : "false") << ',' << sol.count << ",\"";
            for (std::size_t i = 0; i < sol.solutions.size(); ++i) os << (i ? " " : "") << sol.solutions[i];
            os << "\"," << (sol.truncated ? "true" : "false") << "\n";
            break;
          }
          case ReportFormat::Text: {
            os << a << "*k = " << c << " (mod " << n << "): " << (sol.solvable ? "solvable" : "unsolvable") << "\n";
            os << "count=" << sol.count << "\n";
            os << "solutions=";
            for (std::size_t i = 0; i < sol.solutions.size(); ++i) os << (i ? "," : "") << sol.solutions[i];
            os << (sol.truncated ? ",..." : "") << "\n";
            break;
          }
        }
      });
      return kExitOk;
    }
    if (*aut_list) {
      const Group g = Group::parse(group_literal);
      const std::vector<Automorphism> auts = enumerate_automorphisms(g);
      emit(output, streams.out, [&](std::ostream& os) {
        switch (format) {
          case ReportFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const Automorphism& x : auts) {
              ordered_json j;
              add_aut_fields(j, x);
              if (j["u"].is_null()) j.erase("u"), j.erase("v");
              arr.push_back(std::move(j));
            }
            os << arr.dump() << "\n";
            break;
          }
          case ReportFormat::Csv:
            os << (g.kind() == GroupKind::Dihedral ? "u,v\n" : "aut\n");
            for (const Automorphism& x : auts) {
              const std::string lit = to_string(x);
              os << (g.kind() == GroupKind::TwoCyclic ? '"' + lit + '"' : lit) << "\n";
            }
            break;
          case ReportFormat::Text:
            if (g.kind() == GroupKind::Dihedral) {
              os << "# u,v means r -> r^u, s -> r^v s (u scales rotations, v shifts reflections)\n";
            }
            os << "# " << auts.size() << " automorphisms of " << g.name() << "\n";
            for (const Automorphism& x : auts) os << to_string(x) << "  " << describe_aut(x) << "\n";
            break;
        }
      });
      return kExitOk;
    }
  } catch (const UsageError& e) {
    streams.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedGroupError& e) {
    streams.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    streams.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalIntegrityError& e) {
    streams.err << "numerical integrity failure: " << e.what() << "\n";
    return kExitViolations;
  }
  return kExitUsage;
}

}  // namespace twinv

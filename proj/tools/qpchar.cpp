#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qp/basis_enum.hpp"
#include "qp/fermionic.hpp"
#include "qp/identities.hpp"

namespace {

struct WeightOptions {
  std::string family;
  int rank = 0;  // 0 picks the family default where the rank is fixed
  int k0 = 0;
  int kj = 0;
  int j = 0;
};

void add_weight_options(CLI::App* cmd, WeightOptions& o) {
  cmd->add_option("--family", o.family, "Algebra family: B, C, F4 or G2")->required();
  cmd->add_option("--rank", o.rank, "Rank (required for B and C; fixed for F4 and G2)");
  cmd->add_option("--k0", o.k0, "Multiplicity k0 of the affine fundamental weight");
  cmd->add_option("--kj", o.kj, "Multiplicity kj of the distinguished fundamental weight");
  cmd->add_option("--j", o.j, "Distinguished color j (required when --kj > 0)");
}

qp::WeightSpec resolve_weight(const WeightOptions& o) {
  const qp::Family f = qp::parse_family(o.family);
  int rank = o.rank;
  if (rank == 0) {
    if (f == qp::Family::F4)
      rank = 4;
    else if (f == qp::Family::G2)
      rank = 2;
    else
      throw std::invalid_argument("--rank is required for families B and C");
  }
  return qp::make_weight(qp::make_algebra(f, rank), o.k0, o.kj, o.j);
}

int resolve_threads() {
  const char* env = std::getenv("QPCHAR_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const std::string s(env);
  if (s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("QPCHAR_THREADS must be a nonnegative integer, got '" + s + "'");
  return std::stoi(s);
}

qp::CrossTerm parse_cross_term(const std::string& s) {
  if (s == "min") return qp::CrossTerm::Min;
  if (s == "literal") return qp::CrossTerm::Literal;
  throw std::invalid_argument("--cross-term must be 'min' or 'literal', got '" + s + "'");
}

void require_format(const std::string& format, const std::vector<std::string>& allowed) {
  for (const std::string& a : allowed)
    if (format == a) return;
  std::string list;
  for (const std::string& a : allowed) list += (list.empty() ? "" : ", ") + a;
  throw std::invalid_argument("--format must be one of {" + list + "}, got '" + format + "'");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << content << "\n";
}

std::string series_in_format(const qp::TruncatedSeries& s, const std::string& format) {
  if (format == "json") return qp::series_to_json(s);
  if (format == "csv") {
    std::string csv = qp::series_to_csv(s);
    if (!csv.empty() && csv.back() == '\n') csv.pop_back();
    return csv;
  }
  return qp::series_to_text(s);
}

std::string monomial_list_to_text(const qp::BasisCensus& census) {
  std::ostringstream out;
  bool first = true;
  for (const qp::Monomial& m : census.monomials) {
    if (!first) out << "\n";
    first = false;
    out << "q^" << m.total_energy() << ": " << qp::render_monomial(m);
  }
  return out.str();
}

std::string monomial_list_to_csv(const qp::BasisCensus& census) {
  std::ostringstream out;
  out << "q,monomial";
  for (const qp::Monomial& m : census.monomials)
    out << "\n" << m.total_energy() << "," << qp::render_monomial(m);
  return out.str();
}

std::string monomial_list_to_json(const qp::BasisCensus& census) {
  nlohmann::ordered_json root;
  root["max_degree"] = census.max_degree;
  root["num_colors"] = census.weight.rank();
  root["monomials"] = nlohmann::ordered_json::array();
  for (const qp::Monomial& m : census.monomials) {
    nlohmann::ordered_json entry;
    entry["q"] = m.total_energy();
    entry["colors"] = m.color_type();
    entry["monomial"] = qp::render_monomial(m);
    root["monomials"].push_back(std::move(entry));
  }
  return root.dump(2);
}

std::string identities_in_format(const qp::IdentityReport& r, const std::string& format) {
  if (format == "json") return qp::identity_report_to_json(r);
  std::string text = qp::identity_report_to_text(r);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded characters of principal subspaces from quasi-particle bases"};
  app.require_subcommand(1);

  WeightOptions character_w;
  long long character_degree = 0;
  std::string character_format = "text";
  std::string character_cross = "min";
  std::string character_output;
  CLI::App* character = app.add_subcommand(
      "character", "Evaluate the closed character sum up to a q-degree");
  add_weight_options(character, character_w);
  character->add_option("--max-degree", character_degree, "Truncation degree (inclusive)")
      ->required();
  character->add_option("--format", character_format, "Output format: json, csv or text");
  character->add_option("--cross-term", character_cross,
                        "Cross-term convention: min or literal");
  character->add_option("--output", character_output, "Write to a file instead of stdout");

  WeightOptions enumerate_w;
  long long enumerate_degree = 0;
  std::string enumerate_emit = "counts";
  std::string enumerate_format = "text";
  std::string enumerate_output;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "Enumerate the quasi-particle basis up to a q-degree");
  add_weight_options(enumerate_cmd, enumerate_w);
  enumerate_cmd->add_option("--max-degree", enumerate_degree, "Truncation degree (inclusive)")
      ->required();
  enumerate_cmd->add_option("--emit", enumerate_emit, "What to print: counts or list");
  enumerate_cmd->add_option("--format", enumerate_format, "Output format: json, csv or text");
  enumerate_cmd->add_option("--output", enumerate_output, "Write to a file instead of stdout");

  WeightOptions verify_w;
  long long verify_degree = 0;
  std::string verify_format = "text";
  std::string verify_cross = "min";
  std::string verify_output;
  CLI::App* verify = app.add_subcommand(
      "verify", "Compare the basis census against the closed sum coefficientwise");
  add_weight_options(verify, verify_w);
  verify->add_option("--max-degree", verify_degree, "Truncation degree (inclusive)")
      ->required();
  verify->add_option("--format", verify_format, "Output format: json or text");
  verify->add_option("--cross-term", verify_cross, "Cross-term convention: min or literal");
  verify->add_option("--output", verify_output, "Write to a file instead of stdout");

  WeightOptions identities_w;
  long long identities_samples = 1000;
  unsigned long long identities_seed = 1;
  std::string identities_format = "text";
  std::string identities_output;
  CLI::App* identities = app.add_subcommand(
      "identities", "Run randomized structural self-checks for a weight");
  add_weight_options(identities, identities_w);
  identities->add_option("--samples", identities_samples, "Random samples per check");
  identities->add_option("--seed", identities_seed, "Random seed");
  identities->add_option("--format", identities_format, "Output format: json or text");
  identities->add_option("--output", identities_output, "Write to a file instead of stdout");

  std::vector<int> diagram_charges;
  CLI::App* diagram = app.add_subcommand(
      "diagram", "Draw the column diagram of weakly increasing charges");
  diagram->add_option("charges", diagram_charges, "Charges, smallest first")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const int threads = resolve_threads();
    if (character->parsed()) {
      require_format(character_format, {"json", "csv", "text"});
      const qp::WeightSpec w = resolve_weight(character_w);
      const qp::TruncatedSeries s = qp::fermionic_character(
          w, character_degree, parse_cross_term(character_cross), threads);
      write_output(character_output, series_in_format(s, character_format));
      return 0;
    }
    if (enumerate_cmd->parsed()) {
      require_format(enumerate_format, {"json", "csv", "text"});
      if (enumerate_emit != "counts" && enumerate_emit != "list")
        throw std::invalid_argument("--emit must be 'counts' or 'list', got '" +
                                    enumerate_emit + "'");
      const qp::WeightSpec w = resolve_weight(enumerate_w);
      const qp::EmitMode mode =
          enumerate_emit == "list" ? qp::EmitMode::List : qp::EmitMode::Counts;
      const qp::BasisCensus census = qp::enumerate_basis(w, enumerate_degree, mode, threads);
      std::string rendered;
      if (mode == qp::EmitMode::Counts) {
        rendered = series_in_format(census.counts, enumerate_format);
      } else if (enumerate_format == "json") {
        rendered = monomial_list_to_json(census);
      } else if (enumerate_format == "csv") {
        rendered = monomial_list_to_csv(census);
      } else {
        rendered = monomial_list_to_text(census);
      }
      write_output(enumerate_output, rendered);
      return 0;
    }
    if (verify->parsed()) {
      require_format(verify_format, {"json", "text"});
      const qp::WeightSpec w = resolve_weight(verify_w);
      const qp::VerifyReport report =
          qp::verify_character(w, verify_degree, parse_cross_term(verify_cross), threads);
      write_output(verify_output, verify_format == "json" ? qp::verify_report_to_json(report)
                                                          : qp::verify_report_to_text(report));
      return report.equal ? 0 : 3;
    }
    if (identities->parsed()) {
      require_format(identities_format, {"json", "text"});
      const qp::WeightSpec w = resolve_weight(identities_w);
      const qp::IdentityReport report =
          qp::run_identity_suite(w, identities_samples, identities_seed);
      write_output(identities_output, identities_in_format(report, identities_format));
      return report.ok ? 0 : 3;
    }
    if (diagram->parsed()) {
      std::cout << qp::render_diagram(diagram_charges) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

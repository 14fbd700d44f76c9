#include "cayley2/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "cayley2/bounds.hpp"
#include "cayley2/cayley_graph.hpp"
#include "cayley2/construction.hpp"
#include "cayley2/covering.hpp"
#include "cayley2/difference_set.hpp"
#include "cayley2/group.hpp"

namespace cayley2::cli {

namespace {

std::vector<std::uint32_t> parse_csv_u32(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) {
      throw std::invalid_argument(std::string(what) + ": empty entry in list");
    }
    std::size_t used = 0;
    const auto v = std::stoull(tok, &used);
    if (used != tok.size() || v > 0xffffffffull) {
      throw std::invalid_argument(std::string(what) + ": bad entry '" + tok + "'");
    }
    out.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text,
                     const char* what) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(std::string(what) + ": cannot open " + path);
  f << text;
  if (!f) throw std::runtime_error(std::string(what) + ": write failed for " + path);
}

struct BuildArgs {
  std::string construction;
  unsigned m = 0;
  std::uint64_t q = 0;
  bool literal_config = false;
  std::uint64_t max_order = kDefaultMaxGroupOrder;
};

void add_build_options(CLI::App& sub, BuildArgs& a, bool required) {
  auto* c = sub.add_option("--construction", a.construction,
                           "Graph family: rds4, neofield, or dpds")
                ->check(CLI::IsMember({"rds4", "neofield", "dpds"}));
  if (required) c->required();
  sub.add_option("--m", a.m, "Degree parameter for rds4 (odd, group order 4^(m+1))");
  sub.add_option("--q", a.q, "Prime-power parameter for neofield/dpds");
  sub.add_flag("--use-literal-paper-config", a.literal_config,
               "Run neofield with the printed covering configuration instead of "
               "the corrected one (reports the covering failure)");
  sub.add_option("--max-group-order", a.max_order,
                 "Override the group size guard (default " +
                     std::to_string(kDefaultMaxGroupOrder) + ")");
}

GeneratingSpec build_from_args(const BuildArgs& a) {
  if (a.construction == "rds4") {
    if (a.m == 0) throw std::invalid_argument("rds4 requires --m >= 1");
    return build_rds4_graph(a.m, a.max_order);
  }
  if (a.q == 0) {
    throw std::invalid_argument(a.construction + " requires --q (prime power >= 3)");
  }
  if (a.construction == "neofield") {
    const auto config =
        a.literal_config ? literal_cover_config() : corrected_cover_config();
    return build_neofield_graph(a.q, config, a.max_order);
  }
  return build_dpds_graph(a.q, a.max_order);
}

int emit_certificate(const GeneratingSpec& spec, const std::string& cert_path,
                     const std::string& edges_path, std::ostream& out) {
  const auto cert = certify_spec(spec);
  out << certificate_text(cert);
  if (!cert_path.empty()) write_certificate(cert, cert_path);
  if (!edges_path.empty()) export_edges(cert, edges_path);
  return cert.diameter == 2 ? 0 : 1;
}

// Re-runs both diameter methods on a certificate loaded from disk and
// insists the file matches what the group actually does.
CayleyCertificate recheck_certificate(const CayleyCertificate& file) {
  const auto g = parse_group(file.group);
  const auto fresh = certify(g, file.generators, file.provenance, file.claimed_degree);
  if (fresh.order != file.order || fresh.degree != file.degree ||
      fresh.diameter != file.diameter) {
    throw std::runtime_error("certificate does not match its graph: " + file.group);
  }
  return fresh;
}

int cmd_build(const BuildArgs& a, const std::string& cert_path,
              const std::string& edges_path, std::ostream& out) {
  return emit_certificate(build_from_args(a), cert_path, edges_path, out);
}

int cmd_pad(const BuildArgs& a, std::uint64_t d, const std::string& cert_path,
            const std::string& edges_path, std::ostream& out) {
  const auto spec = a.construction.empty() ? best_for_degree(d)
                                           : pad_to_degree(build_from_args(a), d);
  return emit_certificate(spec, cert_path, edges_path, out);
}

int cmd_verify(const std::string& group_desc, const std::string& set_csv,
               const std::string& claim_csv,
               const std::vector<std::string>& subgroup_csvs,
               const std::string& exceptional_csv, const std::string& type_name,
               std::ostream& out) {
  GdsDescriptor d;
  d.group = parse_group(group_desc);
  d.set = parse_csv_u32(set_csv, "--set");
  std::sort(d.set.begin(), d.set.end());

  const auto claim = parse_csv_u32(claim_csv, "--claim");
  if (claim.size() != 3) {
    throw std::invalid_argument("--claim must be v,k,lambda");
  }
  d.claim.v = claim[0];
  d.claim.k = claim[1];
  d.claim.lambda = claim[2];

  for (const auto& csv : subgroup_csvs) {
    d.subgroups.emplace_back(d.group, parse_csv_u32(csv, "--subgroup"));
  }
  std::vector<std::uint32_t> lambdas(subgroup_csvs.size(), 0);
  if (!exceptional_csv.empty()) {
    lambdas = parse_csv_u32(exceptional_csv, "--exceptional");
    if (lambdas.size() != d.subgroups.size()) {
      throw std::invalid_argument(
          "--exceptional must list one multiplicity per --subgroup");
    }
  }
  for (std::size_t i = 0; i < d.subgroups.size(); ++i) {
    d.claim.exceptional.emplace_back(d.subgroups[i].elements.size(), lambdas[i]);
  }

  GdsReport report;
  if (type_name.empty()) {
    report = verify_gds(d);
  } else {
    static const std::map<std::string, DesignType> kTypes = {
        {"planar", DesignType::planar},
        {"relative", DesignType::relative},
        {"affine", DesignType::affine},
        {"direct_product", DesignType::direct_product},
        {"neofield", DesignType::neofield},
    };
    report = check_type_equation(d, kTypes.at(type_name));
  }
  out << report.to_text();
  return report.ok ? 0 : 1;
}

int cmd_search(const SearchLimits& limits, const std::string& out_path,
               std::ostream& out) {
  const auto hits = search_cover(limits);
  const auto tsv = search_hits_tsv(hits, limits.k);
  out << tsv;
  if (!out_path.empty()) write_text_file(out_path, tsv, "search");
  return 0;
}

int cmd_bounds(const std::string& range, const std::string& certs_dir,
               const std::string& out_path, std::ostream& out) {
  const auto colon = range.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--d must be a range like 6:30");
  }
  const auto lo = std::stoull(range.substr(0, colon));
  const auto hi = std::stoull(range.substr(colon + 1));

  std::vector<CayleyCertificate> certs;
  if (!certs_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(certs_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".cert") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    certs.reserve(files.size());
    for (const auto& f : files) {
      certs.push_back(recheck_certificate(read_certificate(f.string())));
    }
  }
  const auto tsv = table_tsv(table(lo, hi, certs));
  out << tsv;
  if (!out_path.empty()) write_text_file(out_path, tsv, "bounds");
  return 0;
}

int cmd_export(const std::string& cert_path, const std::string& edges_path) {
  export_edges(recheck_certificate(read_certificate(cert_path)), edges_path);
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs of diameter two from generalized difference sets"};
  app.require_subcommand(1);

  BuildArgs build_args;
  std::string cert_path, edges_path;
  auto* build = app.add_subcommand("build", "Construct and certify a graph");
  add_build_options(*build, build_args, /*required=*/true);
  build->add_option("--cert", cert_path, "Write the certificate to this file");
  build->add_option("--edges", edges_path, "Write the edge list to this file");

  BuildArgs pad_args;
  std::uint64_t pad_d = 0;
  std::string pad_cert_path, pad_edges_path;
  auto* pad = app.add_subcommand(
      "pad", "Pad a construction to an exact degree (largest fitting base "
             "construction when --construction is omitted)");
  add_build_options(*pad, pad_args, /*required=*/false);
  pad->add_option("--d", pad_d, "Target degree")->required();
  pad->add_option("--cert", pad_cert_path, "Write the certificate to this file");
  pad->add_option("--edges", pad_edges_path, "Write the edge list to this file");

  std::string v_group, v_set, v_claim, v_exceptional, v_type;
  std::vector<std::string> v_subgroups;
  auto* verify = app.add_subcommand("verify", "Verify a difference-set claim");
  verify->add_option("--group", v_group, "Group descriptor, e.g. z7 or z4xz4")
      ->required();
  verify->add_option("--set", v_set, "Comma-separated element indices")->required();
  verify->add_option("--claim", v_claim, "v,k,lambda")->required();
  verify->add_option("--subgroup", v_subgroups,
                     "Exceptional subgroup as comma-separated indices (repeatable)");
  verify->add_option("--exceptional", v_exceptional,
                     "Comma-separated multiplicities, one per --subgroup (default 0)");
  verify->add_option("--type", v_type, "Check the shaped equation for this design type")
      ->check(CLI::IsMember(
          {"planar", "relative", "affine", "direct_product", "neofield"}));

  SearchLimits limits;
  std::string search_out;
  auto* search = app.add_subcommand("search", "Scan covering configurations");
  search->add_option("--max-order", limits.max_order, "Largest auxiliary group order");
  search->add_option("--k", limits.k, "Number of Lambda blocks");
  search->add_option("--psi", limits.max_psi, "Largest |Psi|");
  search->add_option("--theta", limits.max_theta, "Largest |Lambda_i|");
  search->add_option("--results", limits.max_results, "Rows to keep");
  search->add_option("--threads", limits.threads, "Worker threads (0 = auto)");
  search->add_option("--max-configs", limits.max_configs,
                     "Refuse to start above this estimated configuration count");
  search->add_option("--out", search_out, "Write the table to this file");

  std::string b_range, b_certs, b_out;
  auto* bounds = app.add_subcommand("bounds", "Bound table for a degree range");
  bounds->add_option("--d", b_range, "Degree range lo:hi")->required();
  bounds->add_option("--certs", b_certs, "Directory of .cert files to recheck");
  bounds->add_option("--out", b_out, "Write the table to this file");

  std::string e_cert, e_edges;
  auto* exp = app.add_subcommand("export", "Re-verify a certificate, emit edges");
  exp->add_option("--cert", e_cert, "Certificate file")->required();
  exp->add_option("--edges", e_edges, "Edge-list output file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (build->parsed()) return cmd_build(build_args, cert_path, edges_path, out);
    if (pad->parsed()) {
      return cmd_pad(pad_args, pad_d, pad_cert_path, pad_edges_path, out);
    }
    if (verify->parsed()) {
      return cmd_verify(v_group, v_set, v_claim, v_subgroups, v_exceptional, v_type,
                        out);
    }
    if (search->parsed()) return cmd_search(limits, search_out, out);
    if (bounds->parsed()) return cmd_bounds(b_range, b_certs, b_out, out);
    if (exp->parsed()) return cmd_export(e_cert, e_edges);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand handled\n";
  return 1;
}

}  // namespace cayley2::cli

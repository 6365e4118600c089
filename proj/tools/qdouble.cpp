#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "qdouble/catalog.hpp"
#include "qdouble/chartable.hpp"
#include "qdouble/error.hpp"
#include "qdouble/fusion.hpp"
#include "qdouble/hopf.hpp"
#include "qdouble/io.hpp"
#include "qdouble/modular.hpp"

namespace fs = std::filesystem;
using namespace qdouble;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureTooLarge:
    case ErrorCode::NotABijection:
    case ErrorCode::SingularMatrix:
    case ErrorCode::NotASubgroup:
    case ErrorCode::UnknownEntry:
    case ErrorCode::ParameterOutOfRange:
    case ErrorCode::ParseError:
    case ErrorCode::GroupMismatch:
      return kExitInput;
    default:
      return kExitVerification;
  }
}

struct Checks {
  std::vector<std::pair<std::string, bool>> items;

  void add(const std::string& name, bool ok) { items.emplace_back(name, ok); }
  void add_all(const std::string& prefix, const std::vector<std::pair<std::string, bool>>& more) {
    for (const auto& [name, ok] : more) add(prefix + name, ok);
  }
  bool all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const auto& c) { return c.second; });
  }
  std::string text() const {
    std::ostringstream out;
    for (const auto& [name, ok] : items) out << (ok ? "PASS " : "FAIL ") << name << "\n";
    return out.str();
  }
};

struct ComputeConfig {
  std::string group_spec;
  std::string out_dir = "out";
  std::string format = "exact";
  std::string graph;
  std::string emit = "s,t,fusion,graphs,summary,chartables";
  bool oracle_check = false;
  bool hopf_check = false;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t threads = 1;
};

std::set<std::string> parse_emit(const std::string& text) {
  static const std::set<std::string> known = {"s", "t", "fusion", "graphs", "summary", "chartables"};
  std::set<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (!known.count(item)) throw Error(ErrorCode::ParseError, "unknown --emit item '" + item + "'");
    out.insert(item);
  }
  return out;
}

std::vector<std::size_t> parse_graph_selection(const std::string& text, std::size_t rank) {
  if (text.empty()) return {};
  std::vector<std::size_t> out;
  if (text == "all") {
    for (std::size_t i = 0; i < rank; ++i) out.push_back(i);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "--graph takes irrep indices or 'all', got '" + text + "'");
    }
    const std::size_t i = std::stoul(item);
    if (i >= rank) {
      throw Error(ErrorCode::ParameterOutOfRange,
                  "--graph index " + item + " out of range for rank " + std::to_string(rank));
    }
    out.push_back(i);
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string component_shape(const FusionGraph& graph, const std::vector<std::size_t>& component) {
  const IntMatrix sub = induced_subgraph(graph.adjacency, component);
  if (graph_isomorphic_to(sub, affine_e6())) return "affine E6";
  if (component.size() >= 3 && graph_isomorphic_to(sub, cycle_graph(component.size()))) {
    return std::to_string(component.size()) + "-cycle";
  }
  if (graph_isomorphic_to(sub, path_graph(component.size()))) return "path of " + std::to_string(component.size());
  return std::to_string(component.size()) + " vertices";
}

int run_compute(const ComputeConfig& cfg) {
  const fs::path out_dir(cfg.out_dir);
  try {
    const NumberFormat format = parse_number_format(cfg.format);
    const auto emit = parse_emit(cfg.emit);
    const std::size_t threads = std::max<std::size_t>(1, cfg.threads);

    FiniteGroup group = parse_group_spec(cfg.group_spec, cfg.max_order);
    const auto expected = spec_expectations(cfg.group_spec);
    const DoubleContext ctx = prepare_double(std::move(group), threads);
    const FiniteGroup& g = ctx.group;
    const CharacterTable table = character_table(g);
    const ModularData md = modular_data(ctx, {threads, cfg.oracle_check});
    const auto graph_ids = parse_graph_selection(cfg.graph, md.rank());

    Checks checks;
    if (cfg.oracle_check) checks.add("oracle_agreement", true);
    const ModularReport report = verify_modular(md, threads);
    checks.add_all("modular.", report.checks);

    const auto qdims = quantum_dimensions(md);
    const std::int64_t global = global_dimension(md);
    checks.add("global_dimension_is_order_squared",
               global == static_cast<std::int64_t>(g.order() * g.order()));
    checks.add("chartable_recovered", [&] {
      const auto recovered = character_table_from_modular_data(md);
      if (recovered.size() != table.irreps.size()) return false;
      for (std::size_t r = 0; r < recovered.size(); ++r) {
        if (recovered[r] != table.irreps[r].values) return false;
      }
      return true;
    }());

    if (expected) {
      checks.add("catalog.order", expected->order == g.order());
      if (expected->class_count) checks.add("catalog.class_count", *expected->class_count == ctx.classes.size());
      if (expected->double_rank) checks.add("catalog.double_rank", *expected->double_rank == md.rank());
      if (expected->block_sizes) checks.add("catalog.block_sizes", *expected->block_sizes == md.blocks);
    }

    std::optional<FusionRing> fusion;
    if (emit.count("fusion") || emit.count("graphs") || !graph_ids.empty()) {
      fusion = verlinde(md, threads);
      checks.add_all("fusion.", check_fusion_ring(*fusion, qdims, report.charge_conjugation).checks);
    }

    if (cfg.hopf_check) {
      const HopfReport hopf = check_hopf_axioms(g);
      checks.add_all("hopf.", hopf.checks);
    }

    std::vector<std::string> labels;
    for (const auto& r : md.irreps) labels.push_back(r.label);

    fs::create_directories(out_dir);
    if (emit.count("s") || emit.count("t")) {
      write_text_file(out_dir / "modular_data.json",
                      dump_json(modular_data_to_json(md, format, GroupInfo{cfg.group_spec, &ctx})));
    }
    if (fusion && emit.count("fusion")) write_text_file(out_dir / "fusion.json", dump_json(fusion_to_json(*fusion)));

    std::ostringstream graph_summary;
    if (fusion && emit.count("graphs")) {
      for (std::size_t i : graph_ids) {
        const FusionGraph graph = fusion_graph(*fusion, i);
        const std::string stem = "fusion_" + std::to_string(i);
        write_text_file(out_dir / "graphs" / (stem + ".edges"), graph_edges_text(graph, labels));
        write_text_file(out_dir / "graphs" / (stem + ".dot"), graph_dot_text(graph, labels));
        graph_summary << "fusion graph of irrep " << i << " " << labels[i] << ": " << graph.components.size()
                      << " components\n";
        for (const auto& comp : graph.components) {
          graph_summary << "  {" << join(comp) << "}  " << component_shape(graph, comp) << "\n";
        }
      }
    }

    if (emit.count("chartables")) {
      Json tables;
      tables["group"] = character_table_to_json(table, g);
      Json cents = Json::array();
      std::string text = "group\n" + character_table_text(table, g);
      for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
        const auto& data = ctx.centralizers[c];
        cents.push_back({{"class", c}, {"table", character_table_to_json(data.table, data.subgroup.group)}});
        text += "centralizer of class " + std::to_string(c) + "\n" +
                character_table_text(data.table, data.subgroup.group);
      }
      tables["centralizers"] = std::move(cents);
      write_text_file(out_dir / "chartables.json", dump_json(tables));
      write_text_file(out_dir / "chartables.txt", text);
    }

    if (emit.count("summary")) {
      std::ostringstream s;
      s << "group " << cfg.group_spec << "\n";
      s << "order " << g.order() << "\n";
      s << "classes " << ctx.classes.size() << "\n";
      for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
        const auto& cls = ctx.classes[c];
        s << "  class " << c << ": size " << cls.size() << ", element order " << cls.element_order
          << ", centralizer order " << cls.centralizer.size() << ", centralizer classes " << md.blocks[c]
          << ", representative " << g.label(cls.representative) << "\n";
      }
      s << "rank " << md.rank() << "\n";
      s << "blocks (" << join(md.blocks) << ")\n";
      s << "quantum dimensions\n";
      const auto starts = md.block_starts();
      for (std::size_t b = 0; b < md.blocks.size(); ++b) {
        s << "  block " << b << ":";
        for (std::size_t i = starts[b]; i < starts[b] + md.blocks[b]; ++i) s << " " << qdims[i];
        s << "\n";
      }
      s << "global dimension " << global << "\n";
      if (!report.charge_conjugation.empty()) {
        std::vector<std::size_t> moved;
        for (std::size_t i = 0; i < report.charge_conjugation.size(); ++i) {
          if (report.charge_conjugation[i] != i) moved.push_back(i);
        }
        s << "charge conjugation moves " << moved.size() << " irreps\n";
      }
      s << graph_summary.str();
      s << "verification\n" << checks.text();
      write_text_file(out_dir / "summary.txt", s.str());
    }

    std::cout << "group " << cfg.group_spec << ": order " << g.order() << ", rank " << md.rank() << ", blocks ("
              << join(md.blocks) << "), global dimension " << global << "\n"
              << checks.text() << graph_summary.str();
    if (!checks.all_pass()) {
      std::string failed;
      for (const auto& [name, ok] : checks.items) {
        if (!ok) failed += (failed.empty() ? "" : ", ") + name;
      }
      const Error e(ErrorCode::VerificationFailed, "failed checks: " + failed);
      write_text_file(out_dir / "error.json", dump_json(error_record(e, kExitVerification)));
      std::cerr << error_record(e, kExitVerification).dump() << "\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    std::cerr << error_record(e, code).dump() << "\n";
    try {
      write_text_file(out_dir / "error.json", dump_json(error_record(e, code)));
    } catch (const std::exception&) {
    }
    return code;
  }
}

int run_verify(const std::string& path_text, std::size_t threads) {
  try {
    fs::path path(path_text);
    if (fs::is_directory(path)) path /= "modular_data.json";
    const ModularData md = modular_data_from_json(read_json_file(path));
    Checks checks;
    const ModularReport report = verify_modular(md, std::max<std::size_t>(1, threads));
    checks.add_all("modular.", report.checks);

    auto guarded = [&](const std::string& name, auto&& fn) {
      try {
        fn();
        checks.add(name, true);
      } catch (const Error& e) {
        if (exit_code_for(e.code()) == kExitInput) throw;
        checks.add(name + " (" + std::string(error_name(e.code())) + ": " + e.what() + ")", false);
      }
    };
    std::vector<std::int64_t> qdims;
    guarded("quantum_dimensions", [&] { qdims = quantum_dimensions(md); });
    if (md.group_order > 0) guarded("global_dimension", [&] { global_dimension(md); });
    if (report.all_pass()) {
      guarded("verlinde_integrality", [&] {
        const FusionRing ring = verlinde(md, std::max<std::size_t>(1, threads));
        if (!qdims.empty()) checks.add_all("fusion.", check_fusion_ring(ring, qdims, report.charge_conjugation).checks);
      });
    }
    std::cout << path.string() << ": rank " << md.rank() << "\n" << checks.text();
    if (!checks.all_pass()) {
      std::string failed;
      for (const auto& [name, ok] : checks.items) {
        if (!ok) failed += (failed.empty() ? "" : ", ") + name;
      }
      std::cerr << error_record(Error(ErrorCode::VerificationFailed, "failed checks: " + failed), kExitVerification)
                       .dump()
                << "\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    std::cerr << error_record(e, code).dump() << "\n";
    return code;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular data, fusion rings and fusion graphs of Drinfeld doubles of finite groups"};
  app.require_subcommand(1);

  ComputeConfig cfg;
  auto* compute = app.add_subcommand("compute", "Compute S, T, fusion rules and graphs for a group");
  compute->add_option("group", cfg.group_spec, "Catalog name (cyclic:6, binary_tetrahedral, ...), perm:... or mat:...")
      ->required();
  compute->add_option("--out", cfg.out_dir, "Output directory (created if absent)");
  compute->add_option("--format", cfg.format, "exact or float:N (exact values plus float mirrors)");
  compute->add_flag("--oracle-check", cfg.oracle_check, "Cross-check S against the full centralizer sum");
  compute->add_flag("--hopf-check", cfg.hopf_check, "Check the Hopf algebra axioms exhaustively (|H| <= 6)");
  compute->add_option("--graph", cfg.graph, "Irrep index (0-based), comma list, or 'all' for fusion graph output");
  compute->add_option("--max-order", cfg.max_order, "Bound on group closure size")->check(CLI::PositiveNumber);
  compute->add_option("--threads", cfg.threads, "Worker threads for S and Verlinde")->check(CLI::PositiveNumber);
  compute->add_option("--emit", cfg.emit, "Comma list from s,t,fusion,graphs,summary,chartables");

  std::string verify_path;
  std::size_t verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "Re-check a modular_data.json file");
  verify->add_option("path", verify_path, "modular_data.json or a directory containing it")->required();
  verify->add_option("--threads", verify_threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list-groups", "List catalog groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  if (*compute) return run_compute(cfg);
  if (*verify) return run_verify(verify_path, verify_threads);
  if (*list) {
    std::cout << list_groups_text();
    return kExitOk;
  }
  return kExitInput;
}

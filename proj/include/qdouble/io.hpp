#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdouble/chartable.hpp"
#include "qdouble/error.hpp"
#include "qdouble/fusion.hpp"
#include "qdouble/modular.hpp"

namespace qdouble {

using Json = nlohmann::json;

/// exact, or exact plus floating mirrors with the given significant digits.
struct NumberFormat {
  bool exact = true;
  int digits = 0;
};

/// "exact" or "float:N" with N in [6, 18]; throws ParseError otherwise.
NumberFormat parse_number_format(const std::string& text);

/// {"conductor": N, "coeffs": [[k, "p/q"], ...]}
Json cyclotomic_to_json(const Cyclotomic& x);
/// Accepts the record form, a JSON integer, or a rational string "p/q".
Cyclotomic cyclotomic_from_json(const Json& j);
/// [re, im] rounded to `digits` significant digits.
Json cyclotomic_to_float_json(const Cyclotomic& x, int digits);

/// Group-level data exported alongside the matrices when available.
struct GroupInfo {
  std::string spec;
  const DoubleContext* context = nullptr;
};

/// S as a list of lists, |H| S as a list of lists, T as sparse [[i, i], value]
/// pairs, irrep records, blocks, quantum dimensions and the global dimension.
Json modular_data_to_json(const ModularData& md, const NumberFormat& format, const GroupInfo& info = {});
/// Reads back S, T, group order, irreps and blocks. Irreps and blocks may be
/// omitted (as in a hand-written file); throws ParseError on malformed input.
ModularData modular_data_from_json(const Json& j);

/// {"rank": n, "N": [[[i, j, k], value], ...]} listing the nonzero N_ij^k.
Json fusion_to_json(const FusionRing& ring);
FusionRing fusion_from_json(const Json& j);

Json character_table_to_json(const CharacterTable& table, const FiniteGroup& g);
/// Classes with sizes and element orders, then one row per irrep with degree,
/// indicator and values.
std::string character_table_text(const CharacterTable& table, const FiniteGroup& g);

/// One "u v multiplicity" line per nonzero adjacency entry.
std::string graph_edges_text(const FusionGraph& graph, const std::vector<std::string>& labels);
std::string graph_dot_text(const FusionGraph& graph, const std::vector<std::string>& labels);

Json error_record(const Error& e, int exit_code);

/// Stable pretty form ending in a newline: object keys sorted, one-space indent.
std::string dump_json(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qdouble

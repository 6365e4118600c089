#include "qdouble/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qdouble {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double rounded(long double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
  const double out = std::strtod(buf, nullptr);
  return out == 0.0 ? 0.0 : out;  // no negative zero
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty() || text.find_first_not_of("+-0123456789/") != std::string::npos) {
    parse_fail("bad rational '" + text + "'");
  }
  mpq_class q;
  try {
    q = mpq_class(text, 10);
  } catch (const std::invalid_argument&) {
    parse_fail("bad rational '" + text + "'");
  }
  if (q.get_den() == 0) parse_fail("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) parse_fail(what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

NumberFormat parse_number_format(const std::string& text) {
  if (text == "exact") return {};
  if (text.rfind("float:", 0) == 0) {
    const std::string digits = text.substr(6);
    if (!digits.empty() && digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string::npos) {
      const int n = std::stoi(digits);
      if (n >= 6 && n <= 18) return {false, n};
    }
  }
  throw Error(ErrorCode::ParseError, "format must be 'exact' or 'float:N' with 6 <= N <= 18, got '" + text + "'");
}

Json cyclotomic_to_json(const Cyclotomic& x) { return Json::parse(x.serialize()); }

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(mpq_class(j.get<long>()));
  if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
  if (!j.is_object()) parse_fail("expected a cyclotomic record, got " + j.dump());
  const Json& n = require(j, "conductor");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1 || n.get<std::int64_t>() > 100000) {
    parse_fail("conductor must be an integer in 1..100000");
  }
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) parse_fail("coeffs must be an array");
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (const auto& term : coeffs) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string()) {
      parse_fail("coefficient terms are [k, \"p/q\"], got " + term.dump());
    }
    terms.emplace_back(term[0].get<std::int64_t>(), parse_rational(term[1].get<std::string>()));
  }
  return Cyclotomic::from_terms(n.get<std::int64_t>(), terms);
}

Json cyclotomic_to_float_json(const Cyclotomic& x, int digits) {
  const auto z = x.to_complex(digits);
  return Json::array({rounded(z.real(), digits), rounded(z.imag(), digits)});
}

Json modular_data_to_json(const ModularData& md, const NumberFormat& format, const GroupInfo& info) {
  const std::size_t n = md.rank();
  Json out;
  out["format"] = format.exact ? "exact" : "float:" + std::to_string(format.digits);
  out["group_order"] = md.group_order;
  out["rank"] = n;
  if (!info.spec.empty()) out["group"] = info.spec;
  if (info.context != nullptr) {
    const auto& ctx = *info.context;
    Json classes = Json::array();
    for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
      const auto& cls = ctx.classes[c];
      classes.push_back({{"representative", ctx.group.label(cls.representative)},
                         {"size", cls.size()},
                         {"element_order", cls.element_order},
                         {"centralizer_order", cls.centralizer.size()}});
    }
    out["classes"] = classes;
  }

  Json irreps = Json::array();
  for (std::size_t i = 0; i < md.irreps.size(); ++i) {
    const auto& r = md.irreps[i];
    irreps.push_back({{"index", i},
                      {"label", r.label},
                      {"class", r.class_index},
                      {"centralizer_irrep", r.centirrep_index},
                      {"qdim", r.qdim}});
  }
  out["irreps"] = irreps;
  out["blocks"] = md.blocks;

  Json qdims = Json::array();
  std::int64_t global = 0;
  for (const auto& r : md.irreps) {
    qdims.push_back(r.qdim);
    global += r.qdim * r.qdim;
  }
  out["qdims"] = qdims;
  out["global_dimension"] = global;

  const mpq_class order(static_cast<unsigned long>(md.group_order));
  Json s = Json::array();
  Json scaled = Json::array();
  for (const auto& row : md.S) {
    Json r = Json::array();
    Json rs = Json::array();
    for (const auto& x : row) {
      r.push_back(cyclotomic_to_json(x));
      rs.push_back(cyclotomic_to_json(x.scaled(order)));
    }
    s.push_back(std::move(r));
    scaled.push_back(std::move(rs));
  }
  out["S"] = std::move(s);
  out["S_scale"] = md.group_order;
  out["S_scaled"] = std::move(scaled);

  Json t = Json::array();
  for (std::size_t i = 0; i < md.T.size(); ++i) t.push_back(Json::array({Json::array({i, i}), cyclotomic_to_json(md.T[i])}));
  out["T"] = std::move(t);

  if (!format.exact) {
    Json sf = Json::array();
    for (const auto& row : md.S) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(cyclotomic_to_float_json(x, format.digits));
      sf.push_back(std::move(r));
    }
    out["S_float"] = std::move(sf);
    Json tf = Json::array();
    for (std::size_t i = 0; i < md.T.size(); ++i) {
      tf.push_back(Json::array({Json::array({i, i}), cyclotomic_to_float_json(md.T[i], format.digits)}));
    }
    out["T_float"] = std::move(tf);
  }
  return out;
}

ModularData modular_data_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("modular data must be a JSON object");
  ModularData md;
  const Json& s = require(j, "S");
  if (!s.is_array()) parse_fail("S must be a list of lists");
  const std::size_t n = s.size();
  for (const auto& row : s) {
    if (!row.is_array() || row.size() != n) parse_fail("S must be a square list of lists");
    std::vector<Cyclotomic> r;
    for (const auto& x : row) r.push_back(cyclotomic_from_json(x));
    md.S.push_back(std::move(r));
  }

  const Json& t = require(j, "T");
  if (!t.is_array()) parse_fail("T must be a sparse array of [[i, i], value] pairs");
  md.T.assign(n, Cyclotomic());
  std::vector<bool> seen(n, false);
  for (const auto& entry : t) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || entry[0].size() != 2) {
      parse_fail("T entries are [[i, i], value], got " + entry.dump());
    }
    const std::size_t a = as_index(entry[0][0], "T index");
    const std::size_t b = as_index(entry[0][1], "T index");
    if (a != b) parse_fail("T must be diagonal");
    if (a >= n) parse_fail("T index " + std::to_string(a) + " out of range");
    if (seen[a]) parse_fail("T entry " + std::to_string(a) + " repeated");
    seen[a] = true;
    md.T[a] = cyclotomic_from_json(entry[1]);
  }

  if (j.contains("group_order")) {
    md.group_order = as_index(j.at("group_order"), "group_order");
  } else if (n > 0 && !md.S[0][0].is_zero()) {
    const auto inv = md.S[0][0].inverse().as_nonneg_integer();
    md.group_order = inv ? static_cast<std::size_t>(*inv) : 0;
  }

  if (j.contains("irreps")) {
    const Json& irreps = j.at("irreps");
    if (!irreps.is_array() || irreps.size() != n) parse_fail("irreps must list one record per row of S");
    for (std::size_t i = 0; i < n; ++i) {
      const Json& r = irreps[i];
      DoubleIrrep irrep;
      irrep.class_index = as_index(require(r, "class"), "class");
      irrep.centirrep_index = as_index(require(r, "centralizer_irrep"), "centralizer_irrep");
      irrep.qdim = static_cast<std::int64_t>(as_index(require(r, "qdim"), "qdim"));
      const Json& label = require(r, "label");
      if (!label.is_string()) parse_fail("label must be a string");
      irrep.label = label.get<std::string>();
      irrep.t_value = md.T[i];
      md.irreps.push_back(std::move(irrep));
    }
  }
  if (j.contains("blocks")) {
    const Json& blocks = j.at("blocks");
    if (!blocks.is_array()) parse_fail("blocks must be an array");
    std::size_t total = 0;
    for (const auto& b : blocks) {
      md.blocks.push_back(as_index(b, "block size"));
      total += md.blocks.back();
    }
    if (total != n) parse_fail("block sizes do not sum to the rank");
  }
  return md;
}

Json fusion_to_json(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  Json entries = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring(i, j, k) != 0) entries.push_back(Json::array({Json::array({i, j, k}), ring(i, j, k)}));
      }
    }
  }
  return {{"rank", n}, {"N", std::move(entries)}};
}

FusionRing fusion_from_json(const Json& j) {
  const std::size_t n = as_index(require(j, "rank"), "rank");
  if (n > 4096) parse_fail("rank too large");
  std::vector<std::int64_t> coeffs(n * n * n, 0);
  const Json& entries = require(j, "N");
  if (!entries.is_array()) parse_fail("N must be a sparse array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 3 || !e[1].is_number_integer()) {
      parse_fail("fusion entries are [[i, j, k], value], got " + e.dump());
    }
    const std::size_t a = as_index(e[0][0], "i");
    const std::size_t b = as_index(e[0][1], "j");
    const std::size_t c = as_index(e[0][2], "k");
    if (a >= n || b >= n || c >= n) parse_fail("fusion index out of range");
    coeffs[(a * n + b) * n + c] = e[1].get<std::int64_t>();
  }
  return FusionRing(n, std::move(coeffs));
}

Json character_table_to_json(const CharacterTable& table, const FiniteGroup& g) {
  Json classes = Json::array();
  for (const auto& cls : table.classes) {
    classes.push_back({{"representative", g.label(cls.representative)},
                       {"size", cls.size()},
                       {"element_order", cls.element_order}});
  }
  Json irreps = Json::array();
  for (const auto& chi : table.irreps) {
    Json values = Json::array();
    for (const auto& v : chi.values) values.push_back(cyclotomic_to_json(v));
    irreps.push_back({{"degree", chi.degree}, {"fs_indicator", chi.fs_indicator}, {"values", std::move(values)}});
  }
  return {{"group_order", table.group_order}, {"classes", std::move(classes)}, {"irreps", std::move(irreps)}};
}

std::string character_table_text(const CharacterTable& table, const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << table.group_order << ", " << table.size() << " classes\n";
  for (std::size_t c = 0; c < table.size(); ++c) {
    const auto& cls = table.classes[c];
    out << "  class " << c << ": size " << cls.size() << ", element order " << cls.element_order
        << ", representative " << g.label(cls.representative) << "\n";
  }
  for (std::size_t r = 0; r < table.irreps.size(); ++r) {
    const auto& chi = table.irreps[r];
    out << "  chi" << r << " degree " << chi.degree << " fs " << (chi.fs_indicator > 0 ? "+" : chi.fs_indicator < 0 ? "-" : "0")
        << " :";
    for (const auto& v : chi.values) out << " " << v.str();
    out << "\n";
  }
  return out.str();
}

std::string graph_edges_text(const FusionGraph& graph, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "# fusion graph of irrep " << graph.base_irrep;
  if (graph.base_irrep < labels.size()) out << " " << labels[graph.base_irrep];
  out << "\n# " << graph.adjacency.size() << " vertices, " << graph.components.size() << " components\n";
  for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
    for (std::size_t v = 0; v < graph.adjacency.size(); ++v) {
      if (graph.adjacency[u][v] != 0) out << u << " " << v << " " << graph.adjacency[u][v] << "\n";
    }
  }
  return out.str();
}

std::string graph_dot_text(const FusionGraph& graph, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph fusion_" << graph.base_irrep << " {\n";
  for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
    out << "  " << u << " [label=\"" << (u < labels.size() ? dot_escape(labels[u]) : std::to_string(u)) << "\"];\n";
  }
  for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
    for (std::size_t v = 0; v < graph.adjacency.size(); ++v) {
      const auto m = graph.adjacency[u][v];
      if (m == 0) continue;
      out << "  " << u << " -> " << v;
      if (m != 1) out << " [label=\"" << m << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json error_record(const Error& e, int exit_code) {
  return {{"error", error_name(e.code())}, {"message", e.what()}, {"exit_code", exit_code}};
}

std::string dump_json(const Json& j) { return j.dump(1) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Internal, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Internal, "error writing " + path.string());
}

}  // namespace qdouble

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavekit/linalg.hpp"
#include "wavekit/ring.hpp"
#include "wavekit/varieties.hpp"

namespace wavekit {

enum class OutputFormat { Text, Json, M2 };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "m2") return OutputFormat::M2;
  throw UsageError("unknown output format: " + s + " (expected text|json|m2)");
}

// Everything a command produces, in one declarative bundle; the emitters
// below render it. Round-trips losslessly through the JSON schema.
struct ResultDocument {
  std::vector<std::string> command;
  RingPtr ring;  // null for ring-less results (booleans, verify)
  std::optional<std::vector<std::string>> generators;
  std::optional<std::vector<std::vector<std::string>>> matrix;
  std::optional<std::string> matrix_name;
  std::optional<bool> boolean;
  std::optional<std::vector<std::string>> amplitude;          // verify: u
  std::optional<std::vector<std::vector<std::string>>> forms; // verify: L
  std::optional<std::vector<std::vector<std::string>>> support;
  std::string pipeline;
  std::optional<int> r;
  std::optional<std::vector<int>> patch;
  std::vector<std::string> saturation_steps;
  std::optional<double> timings_ms;
};

namespace detail {

inline std::string ring_text(const Ring& ring) {
  std::string out = "QQ";
  Block cur{};
  bool open = false;
  for (size_t i = 0; i < ring.size(); ++i) {
    if (!open || ring.block(i) != cur) {
      if (open) out += "]";
      out += "[";
      cur = ring.block(i);
      open = true;
    } else {
      out += ", ";
    }
    out += ring.name(i);
  }
  if (open) out += "]";
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) out.push_back(g.canonicalized().str());
  return out;
}

inline std::vector<std::vector<std::string>> matrix_strings(
    const std::vector<std::vector<Polynomial>>& m) {
  std::vector<std::vector<std::string>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<std::string> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(e.str());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<std::vector<std::string>> matrix_strings(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<std::string> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(e.str());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string emit_text(const ResultDocument& doc) {
  std::ostringstream os;
  os << "pipeline: " << doc.pipeline << "\n";
  if (doc.r) os << "r: " << *doc.r << "\n";
  if (doc.patch) {
    os << "patch:";
    for (int c : *doc.patch) os << " " << c;
    os << "\n";
  }
  if (doc.ring) os << "ring: " << detail::ring_text(*doc.ring) << "\n";
  if (!doc.saturation_steps.empty())
    os << "saturation: " << detail::join(doc.saturation_steps, "; ") << "\n";
  if (doc.boolean) os << "result: " << (*doc.boolean ? "true" : "false") << "\n";
  if (doc.generators) {
    if (doc.generators->empty()) {
      os << "generators: none (zero ideal)\n";
    } else {
      os << "generators (" << doc.generators->size() << "):\n";
      for (const auto& g : *doc.generators) os << "  " << g << "\n";
    }
  }
  if (doc.matrix) {
    os << (doc.matrix_name ? *doc.matrix_name : std::string("matrix")) << " ("
       << doc.matrix->size() << " x " << (doc.matrix->empty() ? 0 : (*doc.matrix)[0].size())
       << "):\n";
    for (const auto& row : *doc.matrix) os << "  " << detail::join(row, ", ") << "\n";
  }
  if (doc.amplitude) os << "u: (" << detail::join(*doc.amplitude, ", ") << ")\n";
  if (doc.forms) {
    os << "L (rows are the linear forms cutting out the support):\n";
    for (const auto& row : *doc.forms) os << "  " << detail::join(row, " ") << "\n";
  }
  if (doc.support) {
    os << "support basis:\n";
    for (const auto& row : *doc.support) os << "  " << detail::join(row, " ") << "\n";
  }
  if (doc.timings_ms) os << "timings_ms: " << *doc.timings_ms << "\n";
  return os.str();
}

inline std::string emit_json(const ResultDocument& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  if (doc.ring) {
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (size_t i = 0; i < doc.ring->size(); ++i)
      vars.push_back({{"name", doc.ring->name(i)}, {"block", block_name(doc.ring->block(i))}});
    j["ring"] = {{"variables", vars}};
  } else {
    j["ring"] = nullptr;
  }
  if (doc.generators) j["generators"] = *doc.generators;
  if (doc.matrix) {
    nlohmann::ordered_json m;
    m["name"] = doc.matrix_name ? *doc.matrix_name : std::string("matrix");
    m["entries"] = *doc.matrix;
    j["matrix"] = m;
  }
  if (doc.boolean) j["result"] = *doc.boolean;
  if (doc.amplitude) j["u"] = *doc.amplitude;
  if (doc.forms) j["L"] = *doc.forms;
  if (doc.support) j["support"] = *doc.support;
  nlohmann::ordered_json prov;
  prov["pipeline"] = doc.pipeline;
  prov["r"] = doc.r ? nlohmann::ordered_json(*doc.r) : nlohmann::ordered_json(nullptr);
  prov["patch"] = doc.patch ? nlohmann::ordered_json(*doc.patch) : nlohmann::ordered_json(nullptr);
  prov["saturation"] = doc.saturation_steps;
  j["provenance"] = prov;
  j["timings_ms"] =
      doc.timings_ms ? nlohmann::ordered_json(*doc.timings_ms) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

// Macaulay2-compatible script, for independent cross-checking. Output only;
// nothing in the toolkit executes it.
inline std::string emit_m2(const ResultDocument& doc) {
  std::ostringstream os;
  os << "-- " << doc.pipeline;
  if (doc.r) os << ", r = " << *doc.r;
  os << "\n";
  if (doc.ring) {
    os << "R = QQ[";
    for (size_t i = 0; i < doc.ring->size(); ++i) {
      if (i) os << ", ";
      os << doc.ring->name(i);
    }
    os << "];\n";
  }
  if (doc.generators) {
    if (doc.generators->empty()) {
      os << "I = ideal(0_R);\n";
    } else {
      os << "I = ideal(" << detail::join(*doc.generators, ", ") << ");\n";
    }
  }
  if (doc.matrix) {
    os << (doc.matrix_name ? *doc.matrix_name : std::string("M")) << " = matrix{";
    for (size_t i = 0; i < doc.matrix->size(); ++i) {
      if (i) os << ", ";
      os << "{" << detail::join((*doc.matrix)[i], ", ") << "}";
    }
    os << "};\n";
  }
  if (doc.boolean) os << "-- result: " << (*doc.boolean ? "true" : "false") << "\n";
  if (doc.amplitude) os << "u = vector{" << detail::join(*doc.amplitude, ", ") << "};\n";
  if (doc.forms) {
    os << "L = matrix{";
    for (size_t i = 0; i < doc.forms->size(); ++i) {
      if (i) os << ", ";
      os << "{" << detail::join((*doc.forms)[i], ", ") << "}";
    }
    os << "};\n";
  }
  return os.str();
}

inline std::string emit(const ResultDocument& doc, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: return emit_text(doc);
    case OutputFormat::Json: return emit_json(doc);
    case OutputFormat::M2: return emit_m2(doc);
  }
  return "";
}

// Inverse of emit_json; emit(from_json(emit(doc))) is byte-identical.
inline ResultDocument result_document_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ResultDocument doc;
  doc.command = j.at("command").get<std::vector<std::string>>();
  if (!j.at("ring").is_null()) {
    std::vector<std::pair<std::string, Block>> vars;
    for (const auto& v : j["ring"]["variables"]) {
      std::string bn = v.at("block").get<std::string>();
      Block b = bn == "Y"   ? Block::Y
                : bn == "Z" ? Block::Z
                : bn == "P" ? Block::P
                : bn == "S" ? Block::S
                : bn == "W" ? Block::W
                            : Block::T;
      vars.emplace_back(v.at("name").get<std::string>(), b);
    }
    doc.ring = Ring::make(std::move(vars));
  }
  if (j.contains("generators")) doc.generators = j["generators"].get<std::vector<std::string>>();
  if (j.contains("matrix")) {
    doc.matrix_name = j["matrix"].at("name").get<std::string>();
    doc.matrix = j["matrix"].at("entries").get<std::vector<std::vector<std::string>>>();
  }
  if (j.contains("result")) doc.boolean = j["result"].get<bool>();
  if (j.contains("u")) doc.amplitude = j["u"].get<std::vector<std::string>>();
  if (j.contains("L")) doc.forms = j["L"].get<std::vector<std::vector<std::string>>>();
  if (j.contains("support"))
    doc.support = j["support"].get<std::vector<std::vector<std::string>>>();
  const auto& prov = j.at("provenance");
  doc.pipeline = prov.at("pipeline").get<std::string>();
  if (!prov.at("r").is_null()) doc.r = prov["r"].get<int>();
  if (!prov.at("patch").is_null()) doc.patch = prov["patch"].get<std::vector<int>>();
  doc.saturation_steps = prov.at("saturation").get<std::vector<std::string>>();
  if (!j.at("timings_ms").is_null()) doc.timings_ms = j["timings_ms"].get<double>();
  return doc;
}

}  // namespace wavekit

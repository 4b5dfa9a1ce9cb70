#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavekit/builtin.hpp"
#include "wavekit/emit.hpp"
#include "wavekit/parse.hpp"
#include "wavekit/syzygy.hpp"
#include "wavekit/varieties.hpp"

namespace wavekit {

// Exit codes: 0 success, 2 usage, 3 parse, 4 precondition, 5 internal.
struct CommandResult {
  int code = 0;
  std::string out;
  std::string err;
};

namespace cli_detail {

struct SourceOptions {
  std::string input;
  std::string builtin;
  int p = 1;
  int n = 3;
  bool n_set = false;
  bool p_set = false;
};

inline void add_source_flags(CLI::App* cmd, SourceOptions& src) {
  auto* in = cmd->add_option("--input", src.input, "operator file path, or '-' for stdin");
  auto* bi = cmd->add_option("--builtin", src.builtin, "builtin operator name");
  in->excludes(bi);
  cmd->add_option("--p", src.p, "builtin parameter p")->check(CLI::PositiveNumber);
  cmd->add_option("--n", src.n, "builtin parameter n")->check(CLI::PositiveNumber);
}

inline Operator load_operator(const SourceOptions& src, std::istream& in) {
  if (!src.builtin.empty()) {
    std::map<std::string, int> params;
    params["p"] = src.p;
    params["n"] = src.n;
    return builtin_operator(src.builtin, params);
  }
  if (src.input.empty()) throw UsageError("an operator is required: use --input or --builtin");
  std::string text;
  if (src.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(src.input);
    if (!f) throw UsageError("cannot open input file: " + src.input);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  return parse_operator(text);
}

inline std::vector<int> parse_patch(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw UsageError("bad patch index: " + tok);
    }
  }
  if (out.empty()) throw UsageError("empty patch list");
  return out;
}

inline std::vector<Rational> parse_rational_vector(const std::string& s) {
  std::vector<Rational> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(Rational::from_string(tok));
  if (out.empty()) throw UsageError("empty rational vector");
  return out;
}

inline RationalMatrix parse_rational_matrix(const std::string& s) {
  RationalMatrix out;
  std::istringstream is(s);
  std::string row;
  while (std::getline(is, row, ';')) out.push_back(parse_rational_vector(row));
  if (out.empty()) throw UsageError("empty rational matrix");
  return out;
}

inline ResultDocument from_variety(const VarietyIdeal& v) {
  ResultDocument doc;
  doc.ring = v.ideal.ring();
  doc.generators = generator_strings(v.ideal);
  doc.pipeline = v.pipeline;
  if (v.r >= 0) doc.r = v.r;
  doc.patch = v.patch;
  doc.saturation_steps = v.saturation_steps;
  return doc;
}

}  // namespace cli_detail

// Parse and run one command line (argv without the program name). All output
// is returned, not printed; deterministic for fixed inputs unless --timings
// is requested.
inline CommandResult run_command(const std::vector<std::string>& args,
                                 std::istream& in = std::cin) {
  CommandResult result;
  CLI::App app{"wavekit - wave varieties of linear constant-coefficient PDE"};
  app.require_subcommand(1);
  app.fallthrough();

  cli_detail::SourceOptions src;
  std::string format = "text";
  bool timings = false;
  app.add_option("--format", format, "output format: text|json|m2")->capture_default_str();
  app.add_flag("--timings", timings, "include wall-clock timings in the output");

  int level_r = 0;
  std::string patch_str, z_str, s_str;
  int plucker_n = 0, plucker_r = 0;

  auto* support = app.add_subcommand("support", "support variety S_A");
  auto* incidence = app.add_subcommand("incidence", "incidence variety I_A");
  auto* wavepair = app.add_subcommand("wavepair", "wave pair variety P^r_A");
  auto* wave = app.add_subcommand("wave", "wave variety W^r_A");
  auto* obstruction = app.add_subcommand("obstruction", "obstruction variety O^r_A");
  auto* cmatrix = app.add_subcommand("cmatrix", "matrix C(z) with A(y)z = C(z)y (d = 1)");
  auto* syzygy_cmd = app.add_subcommand("syzygy", "syzygy matrix B with A B = 0");
  auto* potential = app.add_subcommand("potential-check", "does A admit a vector potential?");
  auto* compact =
      app.add_subcommand("compact-check", "does A have compactly supported solutions?");
  auto* fano = app.add_subcommand("fano", "Fano_r of the support variety");
  auto* plucker = app.add_subcommand("plucker", "Pluecker relations of Gr(n-r, n)");
  auto* verify = app.add_subcommand("verify", "check a rational wave pair (z, rowspace S)");

  for (auto* cmd : {support, incidence, wavepair, wave, obstruction, cmatrix, syzygy_cmd,
                    potential, compact, fano, verify})
    cli_detail::add_source_flags(cmd, src);
  for (auto* cmd : {wavepair, wave, obstruction, fano})
    cmd->add_option("--r", level_r, "variety level r")->required();
  wavepair->add_option("--patch", patch_str, "comma-separated identity columns of S");
  fano->add_option("--patch", patch_str, "comma-separated identity columns of S");
  plucker->add_option("--n", plucker_n, "ambient dimension n")->required();
  plucker->add_option("--r", plucker_r, "codimension r")->required();
  verify->add_option("--z", z_str, "amplitude, comma-separated rationals")->required();
  verify->add_option("--S", s_str, "rows of S, ';'-separated lists of rationals")->required();

  std::vector<std::string> argv_copy = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("wavekit"));
  for (auto& a : argv_copy) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    result.code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("error[usage]: ") + e.what() + "\n";
    result.code = 2;
    return result;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    ResultDocument doc;
    doc.command = args;
    std::optional<std::vector<int>> patch;
    if (!patch_str.empty()) patch = cli_detail::parse_patch(patch_str);
    if (patch)
      result.err +=
          "warning: patch restricts to an affine chart of the Grassmannian; components "
          "meeting {p_patch = 0} may be missing from the result\n";

    if (support->parsed()) {
      doc = cli_detail::from_variety(support_ideal(cli_detail::load_operator(src, in)));
    } else if (incidence->parsed()) {
      doc = cli_detail::from_variety(incidence_ideal(cli_detail::load_operator(src, in)));
    } else if (wavepair->parsed()) {
      doc = cli_detail::from_variety(
          wave_pair_ideal(cli_detail::load_operator(src, in), level_r, patch));
    } else if (wave->parsed()) {
      doc = cli_detail::from_variety(wave_ideal(cli_detail::load_operator(src, in), level_r));
    } else if (obstruction->parsed()) {
      doc = cli_detail::from_variety(
          obstruction_ideal(cli_detail::load_operator(src, in), level_r));
    } else if (cmatrix->parsed()) {
      Operator op = cli_detail::load_operator(src, in);
      auto c = first_order_c_matrix(op);
      doc.pipeline = "cmatrix";
      doc.ring = c.empty() || c[0].empty() ? nullptr : c[0][0].ring();
      doc.matrix = matrix_strings(c);
      doc.matrix_name = "C";
    } else if (syzygy_cmd->parsed()) {
      Operator op = cli_detail::load_operator(src, in);
      SyzygyMatrix b = syzygies(op);
      doc.pipeline = "syzygy";
      doc.ring = b.ring;
      std::vector<std::vector<Polynomial>> rows;
      for (size_t i = 0; i < b.rows; ++i) {
        std::vector<Polynomial> row;
        for (size_t j = 0; j < b.cols; ++j) row.push_back(b.entry(i, j));
        rows.push_back(std::move(row));
      }
      doc.matrix = matrix_strings(rows);
      doc.matrix_name = "B";
    } else if (potential->parsed()) {
      doc.pipeline = "potential-check";
      doc.boolean = admits_vector_potential(cli_detail::load_operator(src, in));
    } else if (compact->parsed()) {
      doc.pipeline = "compact-check";
      doc.boolean = has_compactly_supported_solutions(cli_detail::load_operator(src, in));
    } else if (fano->parsed()) {
      Operator op = cli_detail::load_operator(src, in);
      VarietyIdeal sup = support_ideal(op);
      doc = cli_detail::from_variety(
          fano_ideal(sup.ideal.generators(), op.frequency_ring(), level_r, patch));
    } else if (plucker->parsed()) {
      PlueckerContext ctx = plucker_context(plucker_n, plucker_r);
      doc.pipeline = "plucker";
      doc.r = plucker_r;
      doc.ring = ctx.ring();
      doc.generators = generator_strings(ctx.relations());
    } else if (verify->parsed()) {
      Operator op = cli_detail::load_operator(src, in);
      auto z = cli_detail::parse_rational_vector(z_str);
      auto s = cli_detail::parse_rational_matrix(s_str);
      WavePairCertificate cert = verify_wave_pair(op, z, s);
      doc.pipeline = "verify";
      doc.boolean = cert.verified;
      if (cert.verified) {
        std::vector<std::string> u;
        for (const auto& c : cert.amplitude) u.push_back(c.str());
        doc.amplitude = std::move(u);
        doc.forms = matrix_strings(cert.forms);
        doc.support = matrix_strings(cert.support);
      }
    }

    if (timings) {
      auto t1 = std::chrono::steady_clock::now();
      doc.timings_ms =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
    }
    result.out = emit(doc, parse_format(format));
    result.code = 0;
  } catch (const ParseError& e) {
    result.err += "error[parse/" + e.code() + "] line " + std::to_string(e.line()) + ", column " +
                  std::to_string(e.column()) + ": " + e.what() + "\n";
    result.code = 3;
  } catch (const PreconditionError& e) {
    result.err += std::string("error[precondition]: ") + e.what() + "\n";
    result.code = 4;
  } catch (const UsageError& e) {
    result.err += std::string("error[usage]: ") + e.what() + "\n";
    result.code = 2;
  } catch (const std::exception& e) {
    result.err += std::string("error[internal]: ") + e.what() + "\n";
    result.code = 5;
  }
  return result;
}

}  // namespace wavekit

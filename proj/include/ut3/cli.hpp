#pragma once

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ut3/verify.hpp"

namespace ut3::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// "a+bi" with entries below 1e-12 in magnitude printed as 0.
inline std::string format_complex(Complex z) {
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  const double re = clean(z.real());
  const double im = clean(z.imag());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%s%.12gi", re, im < 0 ? "-" : "+", std::abs(im));
  return buf;
}

inline std::string element_text(GroupElement g) {
  return std::to_string(g.a()) + " " + std::to_string(g.b()) + " " + std::to_string(g.c());
}

/// Integers print bare; anything else as "m+n*w".
inline std::string csv_value(Cyclotomic x) {
  return x.is_integer() ? std::to_string(x.one()) : x.to_string();
}

inline int cmd_table(const std::string& format, std::ostream& out) {
  const CharacterTable table = character_table();
  const auto labels = all_irreps();
  if (format == "json") {
    json::Json rows = json::Json::array();
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      json::Json values = json::Json::array();
      for (Cyclotomic x : table[c]) values.push_back(json::encode(x));
      rows.push_back(json::Json{{"class", c + 1},
                                {"representative", json::encode(kClassRepresentatives[c])},
                                {"values", std::move(values)}});
    }
    json::Json irreps = json::Json::array();
    for (IrrepLabel l : labels) irreps.push_back(l.name());
    out << json::Json{{"irreps", std::move(irreps)}, {"rows", std::move(rows)}}.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_value(row[i]);
      out << "\n";
    }
  } else {
    // Symbol columns are padded by display width, so count code points.
    auto width = [](const std::string& s) {
      int w = 0;
      for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
      return w;
    };
    auto pad = [&](const std::string& s, int w) { return s + std::string(static_cast<std::size_t>(std::max(0, w - width(s))), ' '); };
    out << pad("class", 6) << pad("rep", 10);
    for (IrrepLabel l : labels) out << pad(l.name(), 9);
    out << "\n";
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      std::ostringstream rep;
      rep << kClassRepresentatives[c];
      out << pad("C" + std::to_string(c + 1), 6) << pad(rep.str(), 10);
      for (Cyclotomic x : table[c]) out << pad(x.to_unicode(), 9);
      out << "\n";
    }
  }
  return kOk;
}

inline int cmd_classes(const std::string& format, std::ostream& out) {
  const auto classes = conjugacy_classes();
  if (format == "json") {
    json::Json list = json::Json::array();
    for (const auto& c : classes) {
      json::Json members = json::Json::array();
      for (GroupElement g : c.members) members.push_back(json::encode(g));
      list.push_back(json::Json{{"index", c.index}, {"representative", json::encode(c.representative)}, {"members", std::move(members)}});
    }
    out << list.dump(2) << "\n";
  } else if (format == "csv") {
    out << "index,size,representative,members\n";
    for (const auto& c : classes) {
      out << c.index << "," << c.size() << "," << element_text(c.representative) << ",";
      for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? ";" : "") << element_text(c.members[i]);
      out << "\n";
    }
  } else {
    for (const auto& c : classes) {
      out << "C" << c.index << " (size " << c.size() << ") rep " << c.representative << ":";
      for (GroupElement g : c.members) out << " " << g;
      out << "\n";
    }
  }
  return kOk;
}

inline int cmd_irreps(const std::string& label_text, const std::string& format, std::ostream& out, std::ostream& err) {
  if (!label_text.empty()) {
    const auto label = IrrepLabel::parse(label_text);
    if (!label) {
      err << "error: unknown irrep '" << label_text << "' (use rho(r,s), rho1, rho2 or 1..11)\n";
      return kUsage;
    }
    json::Json matrices = json::Json::object();
    for (GroupElement g : elements()) {
      const IrrepMatrix m = evaluate(*label, g);
      json::Json rows = json::Json::array();
      for (int i = 0; i < m.dim(); ++i) {
        json::Json row = json::Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(json::encode(m(i, j)));
        rows.push_back(std::move(row));
      }
      matrices[g.key()] = std::move(rows);
    }
    out << json::Json{{"label", label->name()}, {"index", label->number()}, {"dimension", label->dimension()},
                      {"matrices", std::move(matrices)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  if (format == "json") {
    json::Json list = json::Json::array();
    for (IrrepLabel l : all_irreps())
      list.push_back(json::Json{{"index", l.number()}, {"label", l.name()}, {"dimension", l.dimension()}});
    out << list.dump(2) << "\n";
  } else {
    for (IrrepLabel l : all_irreps()) out << l.number() << "\t" << l.name() << "\tdim " << l.dimension() << "\n";
  }
  return kOk;
}

struct DecomposeOptions {
  bool regular = false;
  std::string type;
  std::string rep_file;
  bool basis = false;
  std::string format = "json";
};

inline int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  const int sources = int(opt.regular) + int(!opt.type.empty()) + int(!opt.rep_file.empty());
  if (sources != 1) {
    err << "error: decompose needs exactly one of --regular, --type, --rep\n";
    return kUsage;
  }
  MatrixRep rep;
  if (opt.regular) {
    rep = regular_representation();
  } else if (!opt.type.empty()) {
    rep = canonical_rep(RepType::parse(opt.type));
  } else {
    rep = json::decode_matrix_rep(json::read_file(opt.rep_file));
    const double defect = rep.generator_residual();
    if (defect > 1e-8) {
      err << "error: " << opt.rep_file << " is not a representation (homomorphism residual " << defect << ")\n";
      return kUsage;
    }
  }
  json::Json result{{"dimension", rep.dimension()}};
  if (opt.basis) {
    const BlockBasis bb = block_basis(rep);
    result["type"] = json::encode(bb.type);
    result["basis"] = json::encode(bb.q);
    result["residual"] = bb.residual;
  } else {
    result["type"] = json::encode(type_of(rep));
  }
  if (opt.format == "json") {
    out << result.dump(2) << "\n";
  } else {
    out << "dimension " << rep.dimension() << "\ntype " << type_of(rep).to_string() << "\n";
    if (opt.basis) out << "block basis residual " << result["residual"].get<double>() << "\n";
  }
  return kOk;
}

inline int cmd_convolve(const std::string& input, const std::string& filter_file, const std::string& out_file,
                        std::ostream& out, std::ostream& err) {
  const FeatureMap f = json::decode_feature_map(json::read_file(input));
  const EquivariantFilter filter = json::decode_filter(json::read_file(filter_file));
  if (f.fiber_type() != filter.in_type()) {
    err << "error: feature map fiber type " << f.fiber_type().to_string() << " does not match filter in_type "
        << filter.in_type().to_string() << "\n";
    return kUsage;
  }
  const std::string text = json::encode(steerable_convolve(f, filter)).dump(2) + "\n";
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(out_file);
    if (!file) {
      err << "error: cannot write " << out_file << "\n";
      return kUsage;
    }
    file << text;
  }
  return kOk;
}

inline int cmd_example(const std::string& format, std::ostream& out) {
  const auto [nontrivial, trivial] = example_4_5();
  if (format == "json") {
    out << json::Json{{"nontrivial", json::encode(nontrivial)}, {"trivial", json::encode(trivial)}}.dump(2) << "\n";
  } else {
    out << "nontrivial: " << format_complex(nontrivial) << ", trivial: " << format_complex(trivial) << "\n";
  }
  return kOk;
}

inline bool color_enabled(const std::ostream& out) {
  const char* env = std::getenv("UT3_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, double tol, const std::string& format,
                      std::ostream& out, std::ostream& err) {
  const verify::VerifyReport report = verify::run_suite(suite, seed, tol);
  if (format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    const bool color = color_enabled(out);
    for (const auto& c : report.checks) {
      const char* tag = c.passed ? (color ? "\033[32mPASS\033[0m" : "PASS") : (color ? "\033[31mFAIL\033[0m" : "FAIL");
      out << tag << "  " << c.name;
      if (c.residual) out << "  (residual " << std::setprecision(3) << *c.residual << ")";
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    }
    out << (report.passed() ? "suite " + suite + ": pass" : "suite " + suite + ": FAIL") << "\n";
  }
  err << "wall time " << std::fixed << std::setprecision(3) << report.wall_seconds << " s\n";
  return report.passed() ? kOk : kVerifyFailed;
}

/// Entry point; argv[0] is the program name. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Representations of UT3(F3) and equivariant convolution on it", "ut3"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "print the character table");
  std::string table_format = "unicode";
  table->add_option("--format", table_format, "output format")->check(CLI::IsMember({"json", "csv", "unicode"}));

  auto* classes = app.add_subcommand("classes", "print the conjugacy classes");
  std::string classes_format = "text";
  classes->add_option("--format", classes_format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* irreps = app.add_subcommand("irreps", "list irreps or dump the 27 matrices of one");
  std::string irreps_label;
  std::string irreps_format = "text";
  irreps->add_option("--matrices", irreps_label, "irrep label: rho(r,s), rho1, rho2 or 1..11");
  irreps->add_option("--format", irreps_format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* decompose = app.add_subcommand("decompose", "decompose a representation into irreps");
  DecomposeOptions dopt;
  decompose->add_flag("--regular", dopt.regular, "the regular representation");
  decompose->add_option("--type", dopt.type, "canonical representation m1,...,m11");
  decompose->add_option("--rep", dopt.rep_file, "representation JSON file");
  decompose->add_flag("--basis", dopt.basis, "also print the block-diagonalizing basis");
  decompose->add_option("--format", dopt.format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* convolve = app.add_subcommand("convolve", "steerable convolution of a feature map with a filter");
  std::string conv_input, conv_filter, conv_out;
  convolve->add_option("--input", conv_input, "feature map JSON")->required();
  convolve->add_option("--filter", conv_filter, "filter JSON")->required();
  convolve->add_option("--out", conv_out, "output file (default: stdout)");

  auto* example = app.add_subcommand("example-4-5", "convolve the constant map with a nontrivial and the trivial character");
  std::string example_format = "text";
  example->add_option("--format", example_format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string verify_format = "text";
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--tol", tol, "tolerance for floating-point residuals")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(table_format, out);
    if (classes->parsed()) return cmd_classes(classes_format, out);
    if (irreps->parsed()) return cmd_irreps(irreps_label, irreps_format, out, err);
    if (decompose->parsed()) return cmd_decompose(dopt, out, err);
    if (convolve->parsed()) return cmd_convolve(conv_input, conv_filter, conv_out, out, err);
    if (example->parsed()) return cmd_example(example_format, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, tol, verify_format, out, err);
  } catch (const json::FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace ut3::cli

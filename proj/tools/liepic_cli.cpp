#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "liepic/acceptance.hpp"
#include "liepic/error.hpp"
#include "liepic/json_io.hpp"
#include "liepic/rep_theory.hpp"
#include "liepic/tables.hpp"
#include "liepic/verlinde.hpp"
#include "liepic/wps.hpp"

using namespace liepic;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidType:
    case ErrorKind::Usage:
      return 2;
    case ErrorKind::Domain:
    case ErrorKind::Shape:
    case ErrorKind::Resource:
    case ErrorKind::Unsupported:
      return 3;
    case ErrorKind::Precision:
    case ErrorKind::Consistency:
      return 4;
  }
  return 4;
}

void emit_error(const std::string& kind, const std::string& message) {
  Json e;
  e["error"] = Json{{"kind", kind}, {"message", message}};
  std::cerr << e.dump() << '\n';
}

std::vector<long> parse_list(const std::string& s, const char* what) {
  std::vector<long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      raise(ErrorKind::Usage, std::string("cannot parse ") + what + " '" + s + "' as comma-separated integers");
    }
  }
  if (out.empty()) raise(ErrorKind::Usage, std::string("empty ") + what);
  return out;
}

struct Options {
  int jobs = 0;
  std::string out;
  std::string format = "json";
  std::string type;
  int genus = 1;
  int level = 0;
  long precision_bits = 128;
  long max_precision_bits = 4096;
  std::string weight;
  std::string weights;
  long degree = 0;
  std::string table;
  std::string selftest_level = "quick";
};

std::string render(const Json& envelope, const std::string& format) {
  if (format == "text") return to_text(envelope);
  if (format == "json") return envelope.dump() + "\n";
  raise(ErrorKind::Usage, "format '" + format + "' is not available for this command (use json or text)");
}

std::string cmd_report(const Options& o) {
  const LieType lie = LieType::parse(o.type);
  const auto r = report(lie, o.genus);
  return render(envelope("report", Json{{"type", lie.name()}, {"genus", o.genus}}, to_json(r)), o.format);
}

std::string cmd_verlinde(const Options& o) {
  const LieType lie = LieType::parse(o.type);
  VerlindeOptions opt;
  opt.precision_bits = o.precision_bits;
  opt.max_precision_bits = o.max_precision_bits;
  opt.jobs = o.jobs;
  if (o.precision_bits < MPFR_PREC_MIN || o.precision_bits > o.max_precision_bits)
    raise(ErrorKind::Usage, "--precision-bits must lie in [" + std::to_string(MPFR_PREC_MIN) + ", " +
                                std::to_string(o.max_precision_bits) + "]");
  if (o.max_precision_bits > MPFR_PREC_MAX) raise(ErrorKind::Usage, "--max-precision-bits is too large");
  const auto r = verlinde_dim(RootDatum::build(lie), o.genus, o.level, opt);
  const Json inputs{{"type", lie.name()}, {"genus", o.genus}, {"level", o.level}, {"precision_bits", o.precision_bits}};
  return render(envelope("verlinde", inputs, to_json(r), r.precision_bits), o.format);
}

std::string cmd_index(const Options& o) {
  const LieType lie = LieType::parse(o.type);
  const auto d = RootDatum::build(lie);
  const auto coords = parse_list(o.weight, "weight");
  if (coords.size() != d.rank())
    raise(ErrorKind::Shape, "weight has " + std::to_string(coords.size()) + " coordinates, " + lie.name() + " has rank " +
                                std::to_string(d.rank()));
  WeightVec w(d.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) w[i] = static_cast<int>(coords[i]);
  const IrrepLabel lambda(w);
  Json result;
  result["highest_weight"] = coords;
  result["dimension"] = integer_json(weyl_dim(d, lambda));
  result["dynkin_index"] = integer_json(dynkin_index(d, lambda));
  return render(envelope("index", Json{{"type", lie.name()}, {"weight", coords}}, result), o.format);
}

WpsWeights wps_input(const Options& o) {
  if (!o.type.empty() && !o.weights.empty()) raise(ErrorKind::Usage, "give either --type or --weights, not both");
  if (!o.type.empty()) return wps_from_group(RootDatum::build(LieType::parse(o.type)));
  if (o.weights.empty()) raise(ErrorKind::Usage, "one of --type or --weights is required");
  return WpsWeights(parse_list(o.weights, "weights"));
}

Json wps_inputs(const Options& o, const WpsWeights& n) {
  Json in;
  if (!o.type.empty()) in["type"] = LieType::parse(o.type).name();
  in["weights"] = n.weights();
  return in;
}

std::string cmd_wps_hilbert(const Options& o) {
  const auto n = wps_input(o);
  Json in = wps_inputs(o, n);
  in["degree"] = o.degree;
  Json result{{"weights", n.weights()}, {"degree", o.degree}, {"dimension", integer_json(hilbert_dim(n, o.degree))}};
  return render(envelope("wps hilbert", in, result), o.format);
}

std::string cmd_wps_generator(const Options& o) {
  const auto n = wps_input(o);
  Json result{{"weights", n.weights()}, {"generator_degree", integer_json(generator_degree(n))}};
  return render(envelope("wps generator", wps_inputs(o, n), result), o.format);
}

std::string cmd_tables(const Options& o) {
  const Table t = table_by_name(o.table);
  if (o.format == "markdown") return to_markdown(t);
  if (o.format == "csv") return to_csv(t);
  if (o.format == "json") return envelope("tables", Json{{"table", t.name}}, to_json(t)).dump() + "\n";
  raise(ErrorKind::Usage, "format '" + o.format + "' is not available for tables (use json, markdown or csv)");
}

int cmd_selftest(const Options& o, std::ostream& out) {
  acceptance::Level level;
  if (o.selftest_level == "quick")
    level = acceptance::Level::Quick;
  else if (o.selftest_level == "full")
    level = acceptance::Level::Full;
  else
    raise(ErrorKind::Usage, "--level must be quick or full");
  int failed = 0, total = 0;
  acceptance::run(level, o.jobs, [&](const acceptance::CheckResult& r) {
    out << acceptance::format(r) << std::endl;
    failed += !r.passed;
    ++total;
  });
  out << total - failed << "/" << total << " checks passed\n";
  return failed ? 4 : 0;
}

void write(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) raise(ErrorKind::Usage, "cannot open '" + o.out + "' for writing");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Picard groups, Verlinde numbers and weighted projective models for simple Lie groups", "liepic"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--jobs", o.jobs, "Maximum number of worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out, "Write the output to this file instead of stdout");
  std::optional<int> rank;
  app.add_option("--rank", rank)->group("");

  auto add_type = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--type", o.type, "Lie type token such as E8, A3, G2");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub, const std::string& help) { sub->add_option("--format", o.format, help); };

  auto* report_cmd = app.add_subcommand("report", "Picard group report for the moduli space");
  add_type(report_cmd, true);
  report_cmd->add_option("--genus", o.genus, "Curve genus (>= 1)")->required();
  add_format(report_cmd, "json or text");

  auto* verlinde_cmd = app.add_subcommand("verlinde", "Certified Verlinde number");
  add_type(verlinde_cmd, true);
  verlinde_cmd->add_option("--genus", o.genus, "Curve genus (>= 1)")->required();
  verlinde_cmd->add_option("--level", o.level, "Level (>= 0)")->required();
  verlinde_cmd->add_option("--precision-bits", o.precision_bits, "Starting MPFR precision in bits");
  verlinde_cmd->add_option("--max-precision-bits", o.max_precision_bits, "Precision cap in bits");
  add_format(verlinde_cmd, "json or text");

  auto* index_cmd = app.add_subcommand("index", "Dynkin index of an irreducible representation");
  add_type(index_cmd, true);
  index_cmd->add_option("--weight", o.weight, "Highest weight as comma-separated fundamental-weight coordinates")
      ->required();
  add_format(index_cmd, "json or text");

  auto* wps_cmd = app.add_subcommand("wps", "Weighted projective space queries");
  wps_cmd->require_subcommand(1);
  auto* hilbert_cmd = wps_cmd->add_subcommand("hilbert", "Dimension of a graded piece");
  hilbert_cmd->add_option("--weights", o.weights, "Comma-separated weights");
  add_type(hilbert_cmd, false);
  hilbert_cmd->add_option("--degree", o.degree, "Degree")->required();
  add_format(hilbert_cmd, "json or text");
  auto* generator_cmd = wps_cmd->add_subcommand("generator", "Degree of the ample generator of the Picard group");
  generator_cmd->add_option("--weights", o.weights, "Comma-separated weights");
  add_type(generator_cmd, false);
  add_format(generator_cmd, "json or text");

  auto* tables_cmd = app.add_subcommand("tables", "Regenerate a reference table");
  tables_cmd->add_option("table", o.table, "prop23, wps or comarks")->required();
  add_format(tables_cmd, "json, markdown or csv");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance battery");
  selftest_cmd->add_option("--level", o.selftest_level, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 2;
  }

  try {
    if (rank) raise(ErrorKind::Usage, "--rank is not accepted; spell the rank in the type token, e.g. --type A3");
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    if (*selftest_cmd) {
      std::ostringstream buf;
      const int rc = cmd_selftest(o, o.out.empty() ? std::cout : buf);
      if (!o.out.empty()) write(o, buf.str());
      return rc;
    }
    std::string text;
    if (*report_cmd) text = cmd_report(o);
    else if (*verlinde_cmd) text = cmd_verlinde(o);
    else if (*index_cmd) text = cmd_index(o);
    else if (*hilbert_cmd) text = cmd_wps_hilbert(o);
    else if (*generator_cmd) text = cmd_wps_generator(o);
    else if (*tables_cmd) text = cmd_tables(o);
    write(o, text);
    return 0;
  } catch (const Error& e) {
    emit_error(std::string(to_string(e.kind())), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 4;
  }
}

#include "foxknot/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "foxknot/alexander.hpp"
#include "foxknot/error.hpp"
#include "foxknot/family.hpp"
#include "foxknot/rootcert.hpp"
#include "foxknot/words.hpp"

namespace foxknot::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file = "-";
  std::string via = "auto";
  std::string emit;
  bool json = false;
  bool tsv = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t n_max = 0;
  std::int64_t m_max = 0;
  double tol = kDefaultBisectionTol;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::string format_double(double x, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

std::string format_residual(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << x;
  return s.str();
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

void print_polynomial(std::ostream& out, const LaurentPoly& p, bool json) {
  if (json) {
    emit_json(out, to_json(p));
  } else {
    out << to_string(p) << '\n';
  }
}

int cmd_parse(const Options& o, std::istream& in, std::ostream& out) {
  const Presentation pres = parse_presentation(read_input(o.file, in));
  if (!o.json) {
    out << render(pres);
    return kOk;
  }
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : pres.relators()) rels.push_back(render(r, pres.generators()));
  nlohmann::json meridian = nullptr;
  if (pres.meridian()) meridian = pres.generators()[*pres.meridian()];
  emit_json(out, {{"generators", pres.generators()}, {"relators", rels}, {"meridian", meridian}});
  return kOk;
}

int cmd_alexander(const Options& o, std::istream& in, std::ostream& out) {
  const Presentation pres = parse_presentation(read_input(o.file, in));
  std::optional<GeneratorId> column;
  if (o.via != "auto") {
    column = pres.find(o.via);
    if (!column) throw UsageError("--via names unknown generator '" + o.via + "'");
  }
  print_polynomial(out, alexander_polynomial(pres, column), o.json);
  return kOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const FamilyParams params(o.n, o.m);
  if (o.emit == "presentation") {
    out << render(presentation(params));
  } else if (o.emit == "longitude") {
    const std::vector<std::string> names{"a", "w"};
    out << render(longitude(params), names) << '\n';
  } else {
    print_polynomial(out, closed_form_family(o.n, o.m), o.json);
  }
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const FamilyParams params(o.n, o.m);
  const RootCertificate cert = certify_family_root(params, o.tol);
  const double residual = verify_root_against_delta(params, cert);
  if (o.json) {
    emit_json(out, to_json(cert, residual));
    return kOk;
  }
  out << "kind: " << kind_name(cert.kind) << '\n'
      << "interval: (" << format_double(cert.theta_lo, 15) << ", " << format_double(cert.theta_hi, 15) << ")\n"
      << "theta_star: " << format_double(cert.theta_star, 15) << '\n'
      << "g(theta_lo): " << format_double(cert.g_at_lo, 15) << '\n'
      << "g(theta_hi): " << format_double(cert.g_at_hi, 15) << '\n'
      << "monotone: " << cert.monotone_witness.method << ", min slope bound "
      << format_double(cert.monotone_witness.min_slope_bound, 6) << '\n'
      << "residual: " << format_residual(residual) << '\n';
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const FamilyParams params(o.n, o.m);
  if (o.q == 0) throw UsageError("--q must be nonzero");
  const SurgerySlope slope(o.p, o.q);
  const SurgeryClassification c = classify_surgery(params, slope);
  if (o.json) {
    emit_json(out, {{"verdict", verdict_name(c.verdict)},
                    {"p", slope.p()},
                    {"q", slope.q()},
                    {"slope_bound", c.slope_bound},
                    {"near_zero_note", c.near_zero_note}});
    return kOk;
  }
  out << verdict_name(c.verdict) << " (bound " << c.slope_bound << ")";
  if (c.near_zero_note) out << "; slopes sufficiently close to 0 are left-orderable";
  out << '\n';
  return kOk;
}

struct TableRow {
  std::int64_t n;
  std::int64_t m;
  std::int64_t genus;
  std::int64_t bound;
  std::string span;
  std::string theta_star;
  std::string residual;
  std::optional<std::string> error;
};

std::string error_cell(const Error& e) { return "ERROR:" + std::string(errc_name(e.code())); }

TableRow table_row(std::int64_t n, std::int64_t m) {
  const FamilyParams params(n, m);
  TableRow row{n, m, genus(params), slope_bound(params), "-", "-", "-", std::nullopt};
  try {
    row.span = std::to_string(closed_form_family(n, m).span());
  } catch (const Error& e) {
    row.span = error_cell(e);
    row.error = row.span;
    return row;
  }
  try {
    const RootCertificate cert = certify_family_root(params);
    row.theta_star = format_double(cert.theta_star, 15);
    row.residual = format_residual(verify_root_against_delta(params, cert));
  } catch (const Error& e) {
    if (row.theta_star == "-") {
      row.theta_star = error_cell(e);
    } else {
      row.residual = error_cell(e);
    }
    row.error = error_cell(e);
  }
  return row;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<TableRow> rows;
  for (std::int64_t n = 1; n <= o.n_max; ++n) {
    for (std::int64_t m = 1; m <= o.m_max; ++m) rows.push_back(table_row(n, m));
  }
  const std::vector<std::string> header{"n", "m", "genus", "slope_bound", "span", "theta_star", "residual"};
  auto cells = [](const TableRow& r) {
    return std::vector<std::string>{std::to_string(r.n), std::to_string(r.m), std::to_string(r.genus),
                                    std::to_string(r.bound), r.span, r.theta_star, r.residual};
  };

  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json obj;
      const auto c = cells(r);
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = c[i];
      for (std::size_t i = 0; i < 4; ++i) obj[header[i]] = std::stoll(c[i]);
      arr.push_back(std::move(obj));
    }
    emit_json(out, arr);
  } else if (o.tsv) {
    auto line = [&](const std::vector<std::string>& c) {
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "\t" : "") << c[i];
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(cells(r));
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows) {
      const auto c = cells(r);
      for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], c[i].size());
    }
    auto line = [&](const std::vector<std::string>& c) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << "  ";
        out << std::setw(static_cast<int>(width[i])) << c[i];
      }
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(cells(r));
  }

  for (const auto& r : rows) {
    if (r.error) {
      err << "error: " << r.error->substr(6) << ": table cell (n=" << r.n << ", m=" << r.m << ") failed\n";
      return kDomainError;
    }
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomials from knot group presentations, twisted torus knots K(n,m), "
               "unit-circle root certificates and surgery slope classification",
               "foxknot"};
  app.require_subcommand(1);
  Options o;

  auto add_nm = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Twist parameter n >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "Torus parameter m >= 1")->required()->check(CLI::PositiveNumber);
  };

  auto* parse = app.add_subcommand("parse", "Validate a presentation and print its canonical form");
  parse->add_option("--file", o.file, "Presentation file, '-' for stdin");
  parse->add_flag("--json", o.json, "JSON output");

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a presentation");
  alexander->add_option("--file", o.file, "Presentation file, '-' for stdin")->required();
  alexander->add_option("--via", o.via, "Generator whose column is removed, or 'auto'");
  alexander->add_flag("--json", o.json, "JSON output");

  auto* family = app.add_subcommand("family", "Data for the twisted torus knot K(n,m)");
  add_nm(family);
  family->add_option("--emit", o.emit, "What to print")
      ->required()
      ->check(CLI::IsMember({"presentation", "longitude", "alexander"}));
  family->add_flag("--json", o.json, "JSON output (alexander only)");

  auto* certify = app.add_subcommand("certify", "Certify a simple unit-circle root of the Alexander polynomial");
  add_nm(certify);
  certify->add_option("--tol", o.tol, "Bisection width")->check(CLI::PositiveNumber);
  certify->add_flag("--json", o.json, "JSON output");

  auto* classify = app.add_subcommand("classify", "Classify the p/q surgery slope");
  add_nm(classify);
  classify->add_option("--p", o.p, "Slope numerator")->required();
  classify->add_option("--q", o.q, "Slope denominator (nonzero)")->required();
  classify->add_flag("--json", o.json, "JSON output");

  auto* table = app.add_subcommand("table", "Summary table over 1 <= n <= n-max, 1 <= m <= m-max");
  table->add_option("--n-max", o.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--m-max", o.m_max, "Largest m")->required()->check(CLI::PositiveNumber);
  table->add_flag("--tsv", o.tsv, "Tab-separated output");
  table->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, in, out);
    if (alexander->parsed()) return cmd_alexander(o, in, out);
    if (family->parsed()) return cmd_family(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (table->parsed()) return cmd_table(o, out, err);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: IOError: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace foxknot::cli

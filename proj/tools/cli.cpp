#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "resolvent/blaschke.hpp"
#include "resolvent/errors.hpp"
#include "resolvent/model_operator.hpp"
#include "resolvent/toeplitz_norm.hpp"
#include "resolvent/verifier.hpp"

namespace resolvent::cli {

namespace {

using nlohmann::json;

constexpr const char* kTableHeader = "n,r,exact,asymptotic,ratio,lower,upper,davies_simon";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string format_complex(Complex z) {
  std::string s = format_number(z.real());
  if (z.imag() != 0.0) {
    if (!std::signbit(z.imag())) s += '+';
    s += format_number(z.imag()) + "i";
  }
  return s;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_json(const BoundReport& r) {
  return {{"n", r.n},           {"r", r.r},         {"exact", r.exact},
          {"asymptotic", r.asymptotic}, {"ratio", r.ratio}, {"lower", r.lower_fejer},
          {"upper", r.upper_sum},       {"davies_simon", r.davies_simon}};
}

OutputFormat to_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return OutputFormat::human;
}

void check_r(double r) {
  if (!(r > 0.0 && r < 1.0)) throw UsageError("--r must lie in (0, 1)");
}

void check_n(std::size_t n) {
  if (n == 0) throw UsageError("--n must be a positive integer");
}

// bound -------------------------------------------------------------------

void emit_bound(const BoundReport& rep, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json:
      out << report_json(rep).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      write_table_csv(std::span(&rep, 1), out);
      break;
    case OutputFormat::human:
      out << "n            " << rep.n << '\n'
          << "r            " << format_number(rep.r) << '\n'
          << "exact        " << format_number(rep.exact) << "   R(n,r) = |X_{1+r}|/(1-r)\n"
          << "asymptotic   " << format_number(rep.asymptotic) << "   (2/pi)(1+r)/(1-r) n\n"
          << "ratio        " << format_number(rep.ratio) << '\n'
          << "lower        " << format_number(rep.lower_fejer) << "   (n(1+r)+1-r)/(2(1-r))\n"
          << "upper        " << format_number(rep.upper_sum) << "   n(1+r)/(1-r)\n"
          << "davies_simon " << format_number(rep.davies_simon) << "   cot(pi/(4n))\n";
      break;
  }
}

// verify ------------------------------------------------------------------

struct SuiteResult {
  std::string suite;
  TrialReport report;
};

json suite_json(const SuiteResult& s) {
  json j = {{"suite", s.suite},
            {"passed", s.report.passed},
            {"failed", s.report.failed},
            {"checks", s.report.checks()}};
  j["worst_margin"] = std::isfinite(s.report.worst_margin) ? json(s.report.worst_margin) : json(nullptr);
  j["worst_case"] = s.report.worst_case;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void emit_suites(const std::vector<SuiteResult>& results, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& s : results) arr.push_back(suite_json(s));
      out << (results.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "suite,passed,failed,worst_margin,worst_case\n";
      for (const auto& s : results)
        out << s.suite << ',' << s.report.passed << ',' << s.report.failed << ','
            << format_number(s.report.worst_margin) << ',' << csv_quote(s.report.worst_case) << '\n';
      break;
    case OutputFormat::human:
      for (const auto& s : results) {
        out << s.suite << ": " << (s.report.failed == 0 ? "PASS" : "FAIL") << "  passed=" << s.report.passed
            << " failed=" << s.report.failed << " worst_margin=" << format_number(s.report.worst_margin)
            << '\n';
        if (!s.report.worst_case.empty()) out << "  worst case: " << s.report.worst_case << '\n';
      }
      break;
  }
}

// model -------------------------------------------------------------------

void print_matrix(const std::string& title, const ComplexMatrix& m, std::ostream& out) {
  out << title << " (" << m.rows() << "x" << m.cols() << ")\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << format_complex(m(i, j));
    out << "]\n";
  }
}

void emit_model(const ComplexMatrix& model, const ComplexMatrix& res, double residual, Complex zeta,
                OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json:
      out << json{{"zeta", {zeta.real(), zeta.imag()}},
                  {"model_matrix", matrix_json(model)},
                  {"resolvent", matrix_json(res)},
                  {"residual", residual}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::csv:
      out << "matrix,i,j,re,im\n";
      for (const auto& [name, m] : {std::pair{"model", &model}, std::pair{"resolvent", &res}})
        for (std::size_t i = 0; i < m->rows(); ++i)
          for (std::size_t j = 0; j < m->cols(); ++j)
            out << name << ',' << i << ',' << j << ',' << format_number((*m)(i, j).real()) << ','
                << format_number((*m)(i, j).imag()) << '\n';
      out << "residual,,," << format_number(residual) << ",0\n";
      break;
    case OutputFormat::human:
      print_matrix("model matrix", model, out);
      print_matrix("resolvent (zeta - M)^-1 at zeta = " + format_complex(zeta), res, out);
      out << "max |closed form - numeric inverse| = " << format_number(residual) << '\n';
      break;
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_real(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading and not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? std::string() : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_table_csv(std::span<const BoundReport> rows, std::ostream& out) {
  out << kTableHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << format_number(r.r) << ',' << format_number(r.exact) << ','
        << format_number(r.asymptotic) << ',' << format_number(r.ratio) << ',' << format_number(r.lower_fejer)
        << ',' << format_number(r.upper_sum) << ',' << format_number(r.davies_simon) << '\n';
}

void write_table_json(std::span<const BoundReport> rows, std::ostream& out) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(report_json(r));
  out << arr.dump(2) << '\n';
}

void write_table_human(std::span<const BoundReport> rows, std::ostream& out) {
  const char* names[] = {"n", "r", "exact", "asymptotic", "ratio", "lower", "upper", "davies_simon"};
  for (const char* name : names) out << std::setw(18) << name;
  out << '\n';
  for (const auto& r : rows) {
    out << std::setw(18) << r.n;
    for (double v : {r.r, r.exact, r.asymptotic, r.ratio, r.lower_fejer, r.upper_sum, r.davies_simon})
      out << std::setw(18) << format_number(v);
    out << '\n';
  }
}

std::vector<BoundReport> read_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTableHeader) throw std::runtime_error("table: bad CSV header");
  std::vector<BoundReport> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) throw std::runtime_error("table: expected 8 columns in '" + line + "'");
    BoundReport r{};
    r.n = static_cast<std::size_t>(std::stoull(cells[0]));
    r.r = parse_real(cells[1]);
    r.exact = parse_real(cells[2]);
    r.asymptotic = parse_real(cells[3]);
    r.ratio = parse_real(cells[4]);
    r.lower_fejer = parse_real(cells[5]);
    r.upper_sum = parse_real(cells[6]);
    r.davies_simon = parse_real(cells[7]);
    rows.push_back(r);
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp resolvent bounds for n x n contractions with spectral radius <= r"};
  app.require_subcommand(1);

  std::string format = "human";
  const std::vector<std::string> formats{"json", "csv", "human"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };

  // bound
  std::size_t bound_n = 0;
  double bound_r = 0.0;
  auto* bound = app.add_subcommand("bound", "R(n,r) with its asymptotic law and interpolation bounds");
  bound->add_option("--n", bound_n, "Matrix size")->required();
  bound->add_option("--r", bound_r, "Spectral radius bound in (0,1)")->required();
  add_format(bound);

  // table
  std::vector<std::size_t> table_n;
  std::vector<double> table_r;
  std::string out_path;
  auto* table = app.add_subcommand("table", "Sweep of bound reports over n and r lists");
  table->add_option("--n", table_n, "Comma-separated sizes")->required()->delimiter(',');
  table->add_option("--r", table_r, "Comma-separated radii")->required()->delimiter(',');
  table->add_option("--out", out_path, "Output file (default: stdout)");
  add_format(table);

  // xnorm
  std::size_t xnorm_n = 0;
  double xnorm_beta = 0.0;
  auto* xnorm = app.add_subcommand("xnorm", "Spectral norm of X_beta and the root theta*");
  xnorm->add_option("--n", xnorm_n, "Matrix size")->required();
  xnorm->add_option("--beta", xnorm_beta, "Subdiagonal value in [0,2]")->required();
  add_format(xnorm);

  // verify
  std::string suite = "all";
  std::size_t verify_n = 8;
  double verify_r = 0.5;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-7;
  std::size_t rays = 32;
  std::size_t radii = 16;
  std::size_t models = 20;
  auto* verify = app.add_subcommand("verify", "Randomized verification suites");
  verify->add_option("suite", suite, "extremal | dominance | boundary | all")
      ->check(CLI::IsMember({"extremal", "dominance", "boundary", "all"}));
  verify->add_option("--n", verify_n, "Matrix size");
  verify->add_option("--r", verify_r, "Spectral radius bound in (0,1)");
  verify->add_option("--trials", trials, "Random trials per suite");
  verify->add_option("--seed", seed, "Master seed")->required();
  verify->add_option("--tolerance", tolerance, "Relative tolerance");
  verify->add_option("--rays", rays, "Boundary suite: rays");
  verify->add_option("--radii", radii, "Boundary suite: radial samples in [1,5]");
  verify->add_option("--models", models, "Boundary suite: random model matrices");
  add_format(verify);

  // model
  std::string sigma_text;
  std::string zeta_text;
  auto* model = app.add_subcommand("model", "Model matrix and closed-form resolvent for a spectrum");
  model->add_option("--sigma", sigma_text, "Comma-separated complex points, e.g. 0.5,0.1-0.2i")->required();
  model->add_option("--zeta", zeta_text, "Complex point off the spectrum")->required();
  add_format(model);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const OutputFormat fmt = to_format(format);

  try {
    if (*bound) {
      check_n(bound_n);
      check_r(bound_r);
      emit_bound(make_bound_report(bound_n, bound_r), fmt, out);
      return kExitOk;
    }

    if (*table) {
      for (auto n : table_n) check_n(n);
      for (auto r : table_r) check_r(r);
      std::vector<BoundReport> rows;
      for (auto r : table_r)
        for (auto n : table_n) rows.push_back(make_bound_report(n, r));
      std::ofstream file;
      std::ostream& sink = open_output(out_path, file, out);
      if (fmt == OutputFormat::csv)
        write_table_csv(rows, sink);
      else if (fmt == OutputFormat::json)
        write_table_json(rows, sink);
      else
        write_table_human(rows, sink);
      sink.flush();
      if (!sink) throw IoError("write to '" + out_path + "' failed");
      return kExitOk;
    }

    if (*xnorm) {
      check_n(xnorm_n);
      if (!(xnorm_beta >= 0.0 && xnorm_beta <= 2.0)) throw UsageError("--beta must lie in [0, 2]");
      const XBetaSpec spec(xnorm_n, xnorm_beta);
      const double norm = x_beta_norm(spec);
      json j = {{"n", xnorm_n}, {"beta", xnorm_beta}, {"norm", norm}};
      if (xnorm_beta > 0.0) {
        const auto root = theta_star(spec);
        j["theta"] = root.theta;
        j["pi_minus_theta"] = root.complement;
        j["residual"] = root.residual;
        j["iterations"] = root.iterations;
        j["bracket"] = {root.bracket_lo, root.bracket_hi};
      }
      if (fmt == OutputFormat::json) {
        out << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::csv) {
        out << "n,beta,norm,theta,residual\n"
            << xnorm_n << ',' << format_number(xnorm_beta) << ',' << format_number(norm) << ','
            << (j.contains("theta") ? format_number(j["theta"].get<double>()) : "") << ','
            << (j.contains("residual") ? format_number(j["residual"].get<double>()) : "") << '\n';
      } else {
        out << "|X_beta|   " << format_number(norm) << '\n';
        if (j.contains("theta"))
          out << "theta*     " << format_number(j["theta"].get<double>()) << '\n'
              << "pi-theta*  " << format_number(j["pi_minus_theta"].get<double>()) << '\n'
              << "residual   " << format_number(j["residual"].get<double>()) << '\n'
              << "iterations " << j["iterations"].get<std::size_t>() << '\n';
        else
          out << "(beta = 0: X_beta is the identity)\n";
      }
      return kExitOk;
    }

    if (*verify) {
      check_n(verify_n);
      check_r(verify_r);
      if (trials == 0) throw UsageError("--trials must be positive");
      std::vector<SuiteResult> results;
      TrialConfig cfg;
      cfg.n = verify_n;
      cfg.r = verify_r;
      cfg.trials = trials;
      cfg.master_seed = seed;
      cfg.tolerance = tolerance;
      if (suite == "extremal" || suite == "all") results.push_back({"extremal", verify_extremal(cfg)});
      if (suite == "dominance" || suite == "all") results.push_back({"dominance", verify_dominance(cfg)});
      if (suite == "boundary" || suite == "all") {
        BoundaryConfig bc;
        bc.n = verify_n;
        bc.r = verify_r;
        bc.ray_count = rays;
        bc.radial_samples = radii;
        bc.random_models = models;
        bc.master_seed = seed;
        bc.tolerance = tolerance;
        results.push_back({"boundary", verify_boundary_max(bc)});
      }
      emit_suites(results, fmt, out);
      for (const auto& s : results)
        if (s.report.failed > 0) return kExitVerificationFailed;
      return kExitOk;
    }

    if (*model) {
      std::vector<Complex> pts;
      Complex zeta;
      try {
        pts = parse_complex_list(sigma_text);
        zeta = parse_complex(zeta_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("cannot parse complex literal: ") + e.what());
      }
      for (const auto& p : pts)
        if (!(std::abs(p) < 1.0 - Spectrum::kInteriorGuard))
          throw UsageError("--sigma point " + format_complex(p) + " is not inside the unit disk");
      const Spectrum sigma(pts);
      std::unique_ptr<ResolventQuery> query;
      try {
        query = std::make_unique<ResolventQuery>(sigma, zeta);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      const ComplexMatrix m = model_matrix(sigma);
      const ComplexMatrix res = resolvent_closed_form(*query);
      const ComplexMatrix numeric = solve(shifted(zeta, m), ComplexMatrix::identity(m.rows()));
      emit_model(m, res, max_abs_diff(res, numeric), zeta, fmt, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace resolvent::cli

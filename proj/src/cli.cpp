#include "wrt/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wrt/lens.hpp"

namespace wrt {

namespace {

double default_tolerance() {
  if (const char* env = std::getenv("WRT_TOLERANCE")) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 1e-9;
}

std::vector<long long> parse_levels(const std::string& spec) {
  std::vector<long long> rs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) rs.push_back(std::stoll(item));
  }
  if (rs.empty()) throw DomainError("empty level list");
  return rs;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Composite levels r = 1 (mod 4) are accepted but outside the verified
// family; say so once per invocation.
void warn_composite(const std::vector<long long>& levels, std::ostream& err) {
  for (long long r : levels) {
    if (r >= 5 && r % 4 == 1 && !is_prime(r)) {
      err << "note: composite level r=" << r
          << " is experimental (verified grids use prime levels)\n";
    }
  }
}

void print_invariant_text(std::ostream& out, const InvariantResult& res) {
  out << std::setprecision(15);
  out << res.method << ": " << res.numeric.real()
      << (res.numeric.imag() < 0 ? " - " : " + ")
      << std::abs(res.numeric.imag()) << "i\n";
}

std::string cf_text(const std::vector<long long>& entries) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i];
  }
  os << ')';
  return os.str();
}

template <class B>
nlohmann::json rep_matrix_json(const RepMatrix<B>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (long long j = 1; j <= m.dim; ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (long long l = 1; l <= m.dim; ++l) {
      if constexpr (B::kExact) {
        row.push_back(nlohmann::json::parse(m.at(j, l).to_json()));
      } else {
        row.push_back(
            {{"re", m.at(j, l).real()}, {"im", m.at(j, l).imag()}});
      }
    }
    rows.push_back(row);
  }
  return rows;
}

int cmd_invariant(long long p, long long q, long long r,
                  const std::string& method, bool exact,
                  const std::string& output, double tolerance,
                  std::ostream& out, std::ostream& err) {
  warn_composite({r}, err);
  LensSpace ls = normalize_lens(p, q);
  if (ls.p != p || ls.q != q) {
    err << "note: normalized L(" << p << "," << q << ") to L(" << ls.p << ","
        << ls.q << ")\n";
  }
  std::vector<InvariantResult> results;
  auto run = [&](const std::string& m) {
    if (exact) {
      return m == "oracle" ? wrt_oracle<ExactBackend>(ls.p, ls.q, r)
                           : wrt_closed<ExactBackend>(ls.p, ls.q, r);
    }
    return m == "oracle" ? wrt_oracle<NumericBackend>(ls.p, ls.q, r)
                         : wrt_closed<NumericBackend>(ls.p, ls.q, r);
  };
  if (method == "both" || method == "oracle") results.push_back(run("oracle"));
  if (method == "both" || method == "closed") results.push_back(run("closed"));

  if (output == "json") {
    if (results.size() == 1) {
      out << results[0].to_json() << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& res : results)
        arr.push_back(nlohmann::json::parse(res.to_json()));
      out << arr.dump() << "\n";
    }
  } else {
    out << "L(" << ls.p << "," << ls.q << ") at r=" << r << "\n";
    out << "  cf: " << cf_text(results[0].cf) << "  phi: " << results[0].phi
        << "  weight: " << results[0].weight << "\n";
    for (const auto& res : results) {
      out << "  ";
      print_invariant_text(out, res);
    }
    if (results.size() == 2) {
      double dev = std::abs(results[0].numeric - results[1].numeric);
      out << "  |closed - oracle| = " << dev << "\n";
      if (exact && results[0].exact && results[1].exact) {
        out << "  exact canonical forms "
            << (*results[0].exact == *results[1].exact ? "equal"
                                                       : "DIFFERENT")
            << "\n";
      }
      if (dev > tolerance) {
        err << "warning: paths disagree beyond tolerance " << tolerance
            << "\n";
      }
    }
  }
  return 0;
}

int cmd_rep(long long p, long long q, long long r, bool exact,
            const std::string& output, std::ostream& out, std::ostream& err) {
  warn_composite({r}, err);
  LensSpace ls = normalize_lens(p, q);
  if (ls.p != p || ls.q != q) {
    err << "note: normalized L(" << p << "," << q << ") to L(" << ls.p << ","
        << ls.q << ")\n";
  }
  auto [cf, u] = cf_for_lens(ls.p, ls.q);
  nlohmann::json j;
  j["r"] = r;
  j["cf"] = cf.entries();
  j["u"] = {{"a", u.a}, {"b", u.b}, {"c", u.c}, {"d", u.d}};
  if (exact) {
    RepMatrix<ExactBackend> m = rep_bruteforce<ExactBackend>(r, cf);
    j["matrix"] = rep_matrix_json(m);
  } else {
    RepMatrix<NumericBackend> m = rep_bruteforce<NumericBackend>(r, cf);
    j["matrix"] = rep_matrix_json(m);
  }
  if (output == "json") {
    out << j.dump() << "\n";
  } else {
    out << "R(U) for L(" << ls.p << "," << ls.q << ") at r=" << r
        << ", cf " << cf_text(cf.entries()) << "\n";
    RepMatrix<NumericBackend> m = rep_bruteforce<NumericBackend>(r, cf);
    out << std::setprecision(6) << std::fixed;
    for (long long jj = 1; jj <= m.dim; ++jj) {
      out << "  ";
      for (long long l = 1; l <= m.dim; ++l) {
        std::complex<double> v = m.at(jj, l);
        out << std::setw(10) << v.real() << (v.imag() < 0 ? "-" : "+")
            << std::abs(v.imag()) << "i  ";
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_cf(const std::string& frac, std::ostream& out, std::ostream& err) {
  auto slash = frac.find('/');
  long long num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = std::stoll(frac);
    } else {
      num = std::stoll(frac.substr(0, slash));
      den = std::stoll(frac.substr(slash + 1));
    }
  } catch (const std::exception&) {
    err << "usage: cf expects NUM or NUM/DEN\n";
    return 64;
  }
  ContinuedFraction cf = cf_expand(num, den);
  out << cf_text(cf.entries()) << "\n";
  return 0;
}

int cmd_verify(long long p_max, const std::string& levels, bool exact,
               double tolerance, const std::string& output, std::ostream& out,
               std::ostream& err) {
  warn_composite(parse_levels(levels), err);
  VerifyReport report =
      verify_grid(p_max, parse_levels(levels),
                  exact ? BackendKind::kExact : BackendKind::kNumeric,
                  tolerance);
  if (output == "json") {
    out << report.to_json() << "\n";
  } else {
    out << report.summary() << "\n";
    if (!report.all_phi_ok) out << "phi cross-check FAILED\n";
    if (report.max_homeo_deviation > tolerance)
      out << "homeomorphism invariance FAILED: max deviation "
          << report.max_homeo_deviation << "\n";
  }
  return report.pass ? 0 : 2;
}

int cmd_table(long long p_max, const std::string& levels, double tolerance,
              std::ostream& out) {
  VerifyReport report = verify_grid(p_max, parse_levels(levels),
                                    BackendKind::kNumeric, tolerance);
  out << report.to_csv();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Witten-Reshetikhin-Turaev SO(3) invariants of lens spaces"};
  app.require_subcommand(1);

  double tolerance = default_tolerance();

  long long p = 1, q = 0, r = 5;
  std::string method = "both", output = "text", frac, levels = "5";
  bool exact = false;
  long long p_max = 10;

  CLI::App* inv = app.add_subcommand("invariant", "compute <L(p,q)>_r");
  inv->add_option("-p", p, "p of L(p,q)")->required();
  inv->add_option("-q", q, "q of L(p,q)")->required();
  inv->add_option("-r", r, "level, r = 1 (mod 4)")->required();
  inv->add_option("--method", method, "oracle|closed|both")
      ->check(CLI::IsMember({"oracle", "closed", "both"}));
  inv->add_flag("--exact", exact, "exact cyclotomic backend");
  inv->add_option("--output", output, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  inv->add_option("--tolerance", tolerance, "comparison tolerance");

  CLI::App* rep = app.add_subcommand("rep", "print the R(U) matrix");
  rep->add_option("-p", p, "p of L(p,q)")->required();
  rep->add_option("-q", q, "q of L(p,q)")->required();
  rep->add_option("-r", r, "level")->required();
  rep->add_flag("--exact", exact, "exact cyclotomic backend");
  rep->add_option("--output", output, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* cf = app.add_subcommand("cf", "normal-form continued fraction");
  cf->add_option("fraction", frac, "rational as NUM/DEN")->required();

  CLI::App* verify = app.add_subcommand("verify", "cross-path verification");
  verify->add_option("--pmax", p_max, "largest p")->required();
  verify->add_option("--r", levels, "comma-separated levels")->required();
  verify->add_flag("--exact", exact, "exact cyclotomic backend");
  verify->add_option("--tolerance", tolerance, "comparison tolerance");
  verify->add_option("--output", output, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* table = app.add_subcommand("table", "CSV table of invariants");
  table->add_option("--pmax", p_max, "largest p")->required();
  table->add_option("--r", levels, "comma-separated levels")->required();
  table->add_option("--tolerance", tolerance, "comparison tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& pe) {
    err << pe.what() << "\n";
    return 64;
  }

  try {
    if (inv->parsed())
      return cmd_invariant(p, q, r, method, exact, output, tolerance, out,
                           err);
    if (rep->parsed()) return cmd_rep(p, q, r, exact, output, out, err);
    if (cf->parsed()) return cmd_cf(frac, out, err);
    if (verify->parsed())
      return cmd_verify(p_max, levels, exact, tolerance, output, out, err);
    if (table->parsed()) return cmd_table(p_max, levels, tolerance, out);
  } catch (const DomainError& de) {
    err << "domain error: " << de.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 64;
}

}  // namespace wrt

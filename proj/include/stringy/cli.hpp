#pragma once

// Command dispatch for the stringycalc tool. Kept in a header so the test suites
// can drive the exact same code path in-process.
//
// Exit codes: 0 success, 1 internal consistency failure, 2 usage error,
// 3 unreadable or malformed input file.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stringy/io.hpp"
#include "stringy/partitions.hpp"
#include "stringy/qbinomial.hpp"
#include "stringy/render.hpp"
#include "stringy/stringy.hpp"

namespace stringy::cli {

enum class Format { plain, json, latex };

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rendered output plus the outcome of the command's internal checks.
struct CommandResult {
  std::string text;
  bool consistent = true;
  std::string diagnostic;
};

inline Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw UsageError("unknown format '" + s + "'");
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline CommandResult cmd_qbinom(std::uint32_t n, std::uint32_t k, Format format) {
  if (k > n) throw UsageError("qbinom: need 0 <= k <= n");
  const Polynomial p = gaussian_binomial(n, k);
  const render::VariableStyle var;
  switch (format) {
    case Format::plain:
      return {render::polynomial(p, render::TermOrder::ascending, render::Spacing::spaced, var, render::Markup::plain) + "\n",
              true, {}};
    case Format::latex:
      return {"\\binom{" + std::to_string(n) + "}{" + std::to_string(k) + "}_q = " +
              render::polynomial(p, render::TermOrder::ascending, render::Spacing::spaced, var, render::Markup::latex) + "\n",
              true, {}};
    case Format::json:
      break;
  }
  io::OutputRecord rec{"qbinom", {std::to_string(n), std::to_string(k)}, io::ResultKind::polynomial,
                       {{"coefficients", io::encode_polynomial(p)}}, {}};
  return {io::emit(rec), true, {}};
}

struct GrassmannianVerdict {
  bool gcd_criterion;
  bool agree;
};

inline CommandResult render_stringy(const std::vector<std::string>& params, const FactoredRationalFunction& f,
                                    std::optional<GrassmannianVerdict> verdict, bool bivariate, Format format) {
  const render::VariableStyle var{f.scale(), bivariate};
  CommandResult result;
  if (verdict && !verdict->agree) {
    result.consistent = false;
    result.diagnostic = "polynomiality disagrees with the gcd criterion";
  }

  std::string checks = "polynomial: " + yes_no(f.is_polynomial());
  if (verdict) checks += " ; gcd-criterion: " + yes_no(verdict->gcd_criterion) + " ; agree: " + yes_no(verdict->agree);

  switch (format) {
    case Format::plain:
      result.text = render::rational_function(f, var, render::Markup::plain) + " ; " + checks + "\n";
      return result;
    case Format::latex:
      result.text = std::string(bivariate ? "E_{st}(X;u,v) = " : "E_{st}(X;q) = ") +
                    render::rational_function(f, var, render::Markup::latex) + "\n% " + checks + "\n";
      return result;
    case Format::json:
      break;
  }
  io::json payload = io::encode_rational_function(f);
  if (verdict) {
    payload["gcd_criterion"] = verdict->gcd_criterion;
    payload["agree"] = verdict->agree;
  }
  io::OutputRecord rec{"stringy", params, io::ResultKind::rational_function, std::move(payload),
                       {f.scale() == 1 ? "q" : "t", f.scale(), bivariate}};
  result.text = io::emit(rec);
  return result;
}

inline CommandResult cmd_stringy_grassmannian(const GrassmannianSpec& spec, bool bivariate, Format format) {
  const FactoredRationalFunction f = stringy_cone_grassmannian(spec);
  const bool predicted = predict_polynomial_gcd(spec);
  return render_stringy({"grassmannian", std::to_string(spec.k()), std::to_string(spec.n())}, f,
                        GrassmannianVerdict{predicted, predicted == is_polynomial(f)}, bivariate, format);
}

inline CommandResult cmd_stringy_fano(const std::string& e_poly_file, std::uint32_t n, bool bivariate, Format format) {
  if (n == 0) throw UsageError("stringy fano: n must be positive");
  const Polynomial e_v = io::load_e_poly_file(e_poly_file);
  return render_stringy({"fano", e_poly_file, std::to_string(n)}, stringy_cone_fano(e_v, n), std::nullopt, bivariate,
                        format);
}

inline CommandResult cmd_stringy_qgorenstein(const std::string& e_poly_file, std::uint32_t k, std::uint32_t l,
                                             bool bivariate, Format format) {
  if (k == 0 || l == 0) throw UsageError("stringy qgorenstein: k and l must be positive");
  const Polynomial e_v = io::load_e_poly_file(e_poly_file);
  return render_stringy({"qgorenstein", e_poly_file, std::to_string(k), std::to_string(l)},
                        stringy_qgorenstein_cone({e_v, k, l}), std::nullopt, bivariate, format);
}

inline CommandResult cmd_stringy_snc(const std::string& strata_file, bool bivariate, Format format) {
  const SncData data = io::load_strata_file(strata_file);
  return render_stringy({"snc", strata_file}, stringy_snc(data), std::nullopt, bivariate, format);
}

inline CommandResult render_euler(const std::vector<std::string>& params, const BigRational& value,
                                  std::optional<std::uint64_t> staircase, Format format) {
  CommandResult result;
  const bool agree = !staircase || value == BigRational(*staircase);
  if (!agree) {
    result.consistent = false;
    result.diagnostic = "stringy Euler characteristic differs from the staircase count";
  }
  std::string extra;
  if (staircase) extra = "|UP| = " + std::to_string(*staircase) + " ; agree: " + yes_no(agree);

  switch (format) {
    case Format::plain:
      result.text = render::rational(value, render::Markup::plain) + (extra.empty() ? "" : " ; " + extra) + "\n";
      return result;
    case Format::latex:
      result.text = "e_{st}(X) = " + render::rational(value, render::Markup::latex) + "\n" +
                    (extra.empty() ? "" : "% " + extra + "\n");
      return result;
    case Format::json:
      break;
  }
  io::json payload{{"value", io::encode_rational(value)}};
  if (staircase) {
    payload["staircase_count"] = std::to_string(*staircase);
    payload["agree"] = agree;
  }
  result.text = io::emit({"euler", params, io::ResultKind::rational_number, std::move(payload), {}});
  return result;
}

inline CommandResult cmd_euler(const GrassmannianSpec& spec, Format format) {
  const BigRational value = stringy_euler(stringy_cone_grassmannian(spec));
  std::optional<std::uint64_t> staircase;
  if (spec.gcd() == 1) staircase = count_staircase(spec);
  return render_euler({std::to_string(spec.k()), std::to_string(spec.n())}, value, staircase, format);
}

inline CommandResult cmd_euler_from_strata(const std::string& strata_file, Format format) {
  const SncData data = io::load_strata_file(strata_file);
  return render_euler({"--from-strata", strata_file}, stringy_euler(stringy_snc(data)), std::nullopt, format);
}

struct SweepRow {
  std::uint32_t k;
  std::uint32_t n;
  std::uint32_t gcd;
  bool polynomial;
  BigRational euler;
  std::optional<std::uint64_t> staircase;
};

/// Every singular Grassmannian cone with n <= n_max, checked three ways:
/// polynomiality against the gcd criterion, e_st against C(n,k)/n, and
/// (for coprime k, n) e_st against the staircase count.
inline CommandResult cmd_sweep(std::uint32_t n_max, Format format) {
  std::vector<SweepRow> rows;
  CommandResult result;
  auto fail = [&](const SweepRow& r, const std::string& what) {
    result.consistent = false;
    result.diagnostic += "(k,n)=(" + std::to_string(r.k) + "," + std::to_string(r.n) + "): " + what + "\n";
  };
  for (std::uint32_t n = 4; n <= n_max; ++n) {
    for (std::uint32_t k = 2; k + 1 < n; ++k) {
      const GrassmannianSpec spec(k, n);
      const FactoredRationalFunction f = stringy_cone_grassmannian(spec);
      SweepRow row{k, n, spec.gcd(), is_polynomial(f), stringy_euler(f), std::nullopt};
      if (row.polynomial != predict_polynomial_gcd(spec)) fail(row, "polynomiality disagrees with gcd criterion");
      if (row.euler != BigRational(binomial(n, k), n)) fail(row, "e_st differs from C(n,k)/n");
      if (row.gcd == 1) {
        row.staircase = count_staircase(spec);
        if (row.euler != BigRational(*row.staircase)) fail(row, "e_st differs from the staircase count");
      }
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream os;
  switch (format) {
    case Format::plain:
      os << "k\tn\tgcd\tpolynomial\te_st\t|UP|\n";
      for (const auto& r : rows) {
        os << r.k << '\t' << r.n << '\t' << r.gcd << '\t' << yes_no(r.polynomial) << '\t'
           << render::rational(r.euler, render::Markup::plain) << '\t'
           << (r.staircase ? std::to_string(*r.staircase) : "-") << '\n';
      }
      break;
    case Format::latex:
      os << "\\begin{tabular}{rrrlll}\n"
         << "$k$ & $n$ & $\\gcd(k,n)$ & polynomial & $e_{st}$ & $|UP_{n,k}|$ \\\\\n\\hline\n";
      for (const auto& r : rows) {
        os << r.k << " & " << r.n << " & " << r.gcd << " & " << yes_no(r.polynomial) << " & $"
           << render::rational(r.euler, render::Markup::latex) << "$ & "
           << (r.staircase ? std::to_string(*r.staircase) : "--") << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
    case Format::json: {
      io::json table_rows = io::json::array();
      for (const auto& r : rows) {
        table_rows.push_back({std::to_string(r.k), std::to_string(r.n), std::to_string(r.gcd), yes_no(r.polynomial),
                              render::rational(r.euler, render::Markup::plain),
                              r.staircase ? io::json(std::to_string(*r.staircase)) : io::json(nullptr)});
      }
      io::json payload{{"columns", {"k", "n", "gcd", "polynomial", "e_st", "UP"}},
                       {"rows", std::move(table_rows)},
                       {"all_agree", result.consistent}};
      os << io::emit({"sweep", {std::to_string(n_max)}, io::ResultKind::table, std::move(payload), {}});
      break;
    }
  }
  result.text = os.str();
  return result;
}

inline std::string partition_text(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

inline CommandResult cmd_staircase(const GrassmannianSpec& spec, Format format) {
  const auto parts = enumerate_staircase(spec);
  std::ostringstream os;
  switch (format) {
    case Format::plain:
      for (const auto& p : parts) os << partition_text(p) << '\n';
      break;
    case Format::latex: {
      os << "\\mathcal{UP}_{" << spec.n() << "," << spec.k() << "} = \\{";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? ", " : "") << (parts[i].empty() ? "\\emptyset" : partition_text(parts[i]));
      }
      os << "\\}\n";
      break;
    }
    case Format::json: {
      io::json list = io::json::array();
      for (const auto& p : parts) list.push_back(io::encode_partition(p));
      io::json payload{{"partitions", std::move(list)}, {"count", std::to_string(parts.size())}};
      os << io::emit({"staircase", {std::to_string(spec.k()), std::to_string(spec.n())}, io::ResultKind::partition_list,
                      std::move(payload), {}});
      break;
    }
  }
  return {os.str(), true, {}};
}

/// Parses `args` (without the program name), runs the command and writes to `out`/`err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stringy E-functions of affine cones over Fano varieties and Grassmannians", "stringycalc"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  bool bivariate = false;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
  };
  auto add_bivariate = [&](CLI::App* cmd) {
    cmd->add_flag("--bivariate", bivariate, "Render q = uv in the variables u, v");
  };

  std::uint32_t n = 0, k = 0, l = 0;
  std::string file;

  auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n choose k]_q");
  qbinom->add_option("n", n)->required();
  qbinom->add_option("k", k)->required();
  add_format(qbinom);

  auto* stringy = app.add_subcommand("stringy", "Stringy E-function of a cone");
  stringy->require_subcommand(1);
  auto* grass = stringy->add_subcommand("grassmannian", "Cone over Gr(k, n)");
  grass->add_option("k", k)->required();
  grass->add_option("n", n)->required();
  auto* fano = stringy->add_subcommand("fano", "Cone over V with omega_V = L^-n");
  fano->add_option("e_poly_file", file)->required();
  fano->add_option("n", n)->required();
  auto* qgor = stringy->add_subcommand("qgorenstein", "Cone over V with omega_V^-l = L^k");
  qgor->add_option("e_poly_file", file)->required();
  qgor->add_option("k", k)->required();
  qgor->add_option("l", l)->required();
  auto* snc = stringy->add_subcommand("snc", "Stringy E-function from snc strata");
  snc->add_option("strata_file", file)->required();
  for (auto* cmd : {grass, fano, qgor, snc}) {
    add_format(cmd);
    add_bivariate(cmd);
  }

  auto* euler = app.add_subcommand("euler", "Stringy Euler characteristic");
  std::vector<std::uint32_t> euler_kn;
  auto* euler_pos = euler->add_option("k_n", euler_kn, "k n")->expected(2);
  euler->add_option("--from-strata", file, "Strata file")->excludes(euler_pos);
  add_format(euler);

  auto* sweep = app.add_subcommand("sweep", "Check all singular Grassmannian cones up to n_max");
  sweep->add_option("n_max", n)->required();
  add_format(sweep);

  auto* staircase = app.add_subcommand("staircase", "List the staircase partitions for Gr(k, n)");
  staircase->add_option("k", k)->required();
  staircase->add_option("n", n)->required();
  add_format(staircase);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    CommandResult result;
    if (qbinom->parsed()) {
      result = cmd_qbinom(n, k, format);
    } else if (grass->parsed()) {
      result = cmd_stringy_grassmannian(GrassmannianSpec(k, n), bivariate, format);
    } else if (fano->parsed()) {
      result = cmd_stringy_fano(file, n, bivariate, format);
    } else if (qgor->parsed()) {
      result = cmd_stringy_qgorenstein(file, k, l, bivariate, format);
    } else if (snc->parsed()) {
      result = cmd_stringy_snc(file, bivariate, format);
    } else if (euler->parsed()) {
      if (!file.empty()) {
        result = cmd_euler_from_strata(file, format);
      } else if (euler_kn.size() == 2) {
        result = cmd_euler(GrassmannianSpec(euler_kn[0], euler_kn[1]), format);
      } else {
        throw UsageError("euler: give k n or --from-strata FILE");
      }
    } else if (sweep->parsed()) {
      result = cmd_sweep(n, format);
    } else if (staircase->parsed()) {
      result = cmd_staircase(GrassmannianSpec(k, n), format);
    }
    out << result.text;
    if (!result.consistent) {
      err << "consistency check failed: " << result.diagnostic << "\n";
      return kExitAssertion;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StringyError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitAssertion;
  }
}

}  // namespace stringy::cli

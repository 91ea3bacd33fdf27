#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "appell/appell_vector.hpp"
#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/verify.hpp"
#include "document.hpp"

namespace appell::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string alpha;
  std::string gamma_bar;
  std::string coeffs;
};

Rat parse_rational(const std::string& text, const char* what) {
  try {
    return Rat::parse(text);
  } catch (const AppellError&) {
    throw UsageError(std::string("invalid rational for ") + what + ": '" + text + "'");
  }
}

RatVector parse_rational_list(const std::string& text, const char* what) {
  RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item, what));
  return out;
}

FamilySpec make_spec(const std::string& name, const FamilyArgs& args) {
  const auto kind = parse_family_kind(name);
  if (!kind) throw UsageError("unknown family '" + name + "'");
  const bool wants_alpha = *kind == FamilyKind::LaguerreModified;
  const bool wants_gamma_bar = *kind == FamilyKind::GeneralizedEuler;
  const bool wants_coeffs = *kind == FamilyKind::Custom;
  if (!args.alpha.empty() && !wants_alpha) throw UsageError("--alpha applies to laguerre-modified only");
  if (!args.gamma_bar.empty() && !wants_gamma_bar) {
    throw UsageError("--gamma-bar applies to generalized-euler only");
  }
  if (!args.coeffs.empty() && !wants_coeffs) throw UsageError("--coeffs applies to custom only");
  try {
    switch (*kind) {
      case FamilyKind::LaguerreModified:
        if (args.alpha.empty()) throw UsageError("laguerre-modified requires --alpha");
        return FamilySpec::laguerre_modified(parse_rational(args.alpha, "--alpha"));
      case FamilyKind::GeneralizedEuler:
        if (args.gamma_bar.empty()) throw UsageError("generalized-euler requires --gamma-bar");
        return FamilySpec::generalized_euler(parse_rational(args.gamma_bar, "--gamma-bar"));
      case FamilyKind::Custom:
        if (args.coeffs.empty()) throw UsageError("custom requires --coeffs c0,c1,...");
        return FamilySpec::custom(parse_rational_list(args.coeffs, "--coeffs"));
      default:
        return FamilySpec::simple(*kind);
    }
  } catch (const AppellError& e) {
    throw UsageError(e.what());
  }
}

nlohmann::ordered_json spec_params(const FamilySpec& spec) {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  if (spec.alpha()) p["alpha"] = spec.alpha()->str();
  if (spec.gamma_bar()) p["gamma_bar"] = spec.gamma_bar()->str();
  if (spec.custom_coeffs()) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (const Rat& r : *spec.custom_coeffs()) c.push_back(r.str());
    p["coeffs"] = std::move(c);
  }
  return p;
}

RatVector classical_values(const FamilySpec& spec, std::size_t m, const Rat& x) {
  switch (spec.kind()) {
    case FamilyKind::HermiteMonic: return classical_hermite(m, x);
    case FamilyKind::LaguerreModified: return classical_laguerre(m, *spec.alpha(), x).generalized;
    case FamilyKind::LegendreModified: return classical_legendre(m, x);
    case FamilyKind::ChebyshevFirstModified: return classical_chebyshev1(m, x);
    case FamilyKind::ChebyshevSecondModified: return classical_chebyshev2(m, x);
    default:
      throw UsageError("--classical is available for hermite-monic, laguerre-modified, "
                       "legendre-modified, chebyshev1-modified and chebyshev2-modified");
  }
}

void emit(const OutputDocument& doc, const std::string& format, const std::string& out_path,
          std::ostream& out) {
  const std::string text = serialize(doc, format == "json" ? Format::Json : Format::Csv);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + out_path + "'");
  file << text;
}

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--alpha", args.alpha, "Laguerre parameter alpha (p/q)");
  cmd->add_option("--gamma-bar", args.gamma_bar, "generalized Euler parameter (p/q)");
  cmd->add_option("--coeffs", args.coeffs, "custom family Taylor data c0,c1,... (p/q each)");
}

void add_output_options(CLI::App* cmd, std::string& format, std::string& out_path) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("csv");
  cmd->add_option("--out", out_path, "write to FILE instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Appell polynomial families via creation and transfer matrices", "appell"};
  app.require_subcommand(1);

  std::string family;
  std::size_t m = 0;
  std::string x_text;
  std::string format = "csv";
  std::string out_path;
  bool classical = false;
  FamilyArgs fargs;

  auto* table = app.add_subcommand("table", "print the transfer matrix (row n = coefficients of p_n)");
  table->add_option("family", family, "family name")->required();
  table->add_option("m", m, "degree bound")->required()->check(CLI::NonNegativeNumber);
  add_family_options(table, fargs);
  add_output_options(table, format, out_path);

  auto* eval = app.add_subcommand("eval", "evaluate p_0(x)..p_m(x)");
  eval->add_option("family", family, "family name")->required();
  eval->add_option("m", m, "degree bound")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("x", x_text, "evaluation point p/q")->required();
  eval->add_flag("--classical", classical, "print the classical (unmodified) polynomial values");
  add_family_options(eval, fargs);
  add_output_options(eval, format, out_path);

  auto* gamma = app.add_subcommand("gamma", "print gamma_0..gamma_m of the inverse transfer matrix");
  gamma->add_option("family", family, "family name")->required();
  gamma->add_option("m", m, "degree bound")->required()->check(CLI::NonNegativeNumber);
  add_family_options(gamma, fargs);
  add_output_options(gamma, format, out_path);

  std::size_t m_max = 16;
  std::uint64_t seed = 42;
  std::string families_text;
  auto* verify_cmd = app.add_subcommand("verify", "run the exact identity suite");
  verify_cmd->add_option("--m-max", m_max, "largest degree bound")
      ->check(CLI::NonNegativeNumber)
      ->default_val(16);
  verify_cmd->add_option("--seed", seed, "random rational generator seed")->default_val(42);
  verify_cmd->add_option("--families", families_text, "comma-separated family names (default: all)");
  add_family_options(verify_cmd, fargs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      verify::Options options;
      options.m_max = m_max;
      options.seed = seed;
      if (!families_text.empty()) {
        std::stringstream ss(families_text);
        std::string name;
        while (std::getline(ss, name, ',')) {
          FamilyArgs defaults = fargs;
          const auto kind = parse_family_kind(name);
          if (kind == FamilyKind::LaguerreModified && defaults.alpha.empty()) defaults.alpha = "1/2";
          if (kind == FamilyKind::GeneralizedEuler && defaults.gamma_bar.empty()) {
            defaults.gamma_bar = "1/3";
          }
          if (kind != FamilyKind::LaguerreModified) defaults.alpha.clear();
          if (kind != FamilyKind::GeneralizedEuler) defaults.gamma_bar.clear();
          if (kind != FamilyKind::Custom) defaults.coeffs.clear();
          options.families.push_back(make_spec(name, defaults));
        }
      }
      const verify::Report report = verify::run(options);
      out << verify::format_report(report);
      return report.passed() ? kOk : kVerificationFailed;
    }

    const FamilySpec spec = make_spec(family, fargs);
    OutputDocument doc;
    doc.family = std::string(spec.name());
    doc.m = m;
    doc.params = spec_params(spec);

    if (table->parsed()) {
      doc.kind = "transfer_matrix";
      doc.data = transfer_matrix(spec, m).matrix;
    } else if (eval->parsed()) {
      const Rat x = parse_rational(x_text, "x");
      doc.params["x"] = x.str();
      doc.params["classical"] = classical;
      if (classical) {
        doc.kind = "classical_values";
        doc.data = classical_values(spec, m, x);
      } else {
        doc.kind = "values";
        doc.data = evaluate(appell_vector(spec, m), x);
      }
    } else {
      doc.kind = "gamma";
      doc.data = gamma_coefficients(spec, m);
    }
    emit(doc, format, out_path, out);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AppellError& e) {
    switch (e.kind()) {
      case ErrorKind::DomainError:
        err << "error: " << e.what() << '\n';
        return kDomain;
      case ErrorKind::NotInvertible:
      case ErrorKind::SingularMatrix:
        err << "error: transfer matrix singular (" << e.what() << ")\n";
        return kSingular;
      default:
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"appell"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace appell::cli

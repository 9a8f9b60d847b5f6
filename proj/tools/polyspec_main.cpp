// polyspec command-line tool: analyze polytope/spectrum files, form tensor
// products and free sums, and fuzz the whole pipeline with random polytopes.
//
// Exit codes: 0 = success and all applicable checks passed, 1 = a check
// failed or a mathematical precondition (like the reflexivity guard) was
// violated, 2 = the input could not be read or validated.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "polyspec/polyspec.hpp"

namespace {

using namespace polyspec;

struct CommonFlags {
  std::string format = "text";
  std::string output;
};

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

FractionalSpectrum load_spectrum_any(const std::string& path) {
  const Json j = read_json_file(path);
  if (detect_kind(j) == InputKind::polytope)
    return spectrum_from_polytope(polytope_from_json(j));
  return spectrum_from_json(j);
}

int cmd_analyze(const std::string& input, const std::string& kind, const AnalyzeOptions& opts,
                const CommonFlags& flags) {
  const Json j = read_json_file(input);
  InputKind k;
  if (kind == "auto")
    k = detect_kind(j);
  else if (kind == "polytope")
    k = InputKind::polytope;
  else
    k = InputKind::spectrum;

  const AnalysisReport report = (k == InputKind::polytope)
                                    ? analyze_polytope(polytope_from_json(j), opts)
                                    : analyze_spectrum(spectrum_from_json(j), opts);
  if (flags.format == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
  if (!flags.output.empty()) write_json_file(flags.output, report_to_json(report));
  return report.all_applicable_pass() ? 0 : 1;
}

int cmd_tensor(const std::string& f1, const std::string& f2, bool force,
               const CommonFlags& flags) {
  const FractionalSpectrum s1 = load_spectrum_any(f1);
  const FractionalSpectrum s2 = load_spectrum_any(f2);
  const FractionalSpectrum product = spectrum_product(s1, s2);

  const ThetaFamily t1 = ThetaFamily::from_spectrum(s1);
  const ThetaFamily t2 = ThetaFamily::from_spectrum(s2);
  const bool r1 = reflexivity_kind(t1) == ReflexivityKind::reflexive;
  const bool r2 = reflexivity_kind(t2) == ReflexivityKind::reflexive;
  if (!r1 && !r2 && !force)
    throw ReflexivityRequired(
        "theta-level product needs at least one reflexive factor; "
        "pass --force for the spectrum-level product only");

  Json doc{{"schema", 1},
           {"kind", "tensor"},
           {"dim", product.n},
           {"spectrum", spectrum_to_json(product)}};
  bool checks_ok = true;
  if (r1 || r2) {
    const ThetaFamily tp = theta_product(t1, t2);
    Json classes = Json::array();
    for (const auto& [alpha, vec] : tp.classes) {
      Json entry{{"alpha", rat_to_json(alpha)}, {"vector", Json::array()}};
      for (const Int& x : vec) entry["vector"].push_back(x.str());
      classes.push_back(std::move(entry));
    }
    Json total = Json::array();
    for (const Int& x : tp.theta_total()) total.push_back(x.str());
    doc["theta"] = Json{{"classes", std::move(classes)}, {"total", std::move(total)}};
    doc["theta_level"] = "computed";
    if (r1 && r2) {
      const Verdict v = ehr_product_check(t1, t2);
      checks_ok = v.all_pass();
      doc["series_product_check"] = Json{{"pass", v.all_pass()}, {"detail", v.summary()}};
    }
  } else {
    doc["theta_level"] = "skipped: no reflexive factor (forced spectrum-level product)";
  }

  if (flags.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "product spectrum (dim " << product.n << "): " << product.to_string()
              << "\n";
    std::cout << "mu: " << product.mu() << "\n";
    if (r1 || r2) {
      std::cout << "theta total: (";
      const IntVector total = theta_product(t1, t2).theta_total();
      for (std::size_t i = 0; i < total.size(); ++i)
        std::cout << (i ? ", " : "") << total[i];
      std::cout << ")\n";
    } else {
      std::cout << "theta level skipped: no reflexive factor\n";
    }
    if (doc.contains("series_product_check"))
      std::cout << "series product check: "
                << (checks_ok ? "pass" : doc["series_product_check"]["detail"].get<std::string>())
                << "\n";
  }
  if (!flags.output.empty()) write_json_file(flags.output, spectrum_to_json(product));
  return checks_ok ? 0 : 1;
}

int cmd_freesum(const std::string& f1, const std::string& f2, const CommonFlags& flags) {
  const LatticePolytope p1 = polytope_from_json(read_json_file(f1));
  const LatticePolytope p2 = polytope_from_json(read_json_file(f2));
  const LatticePolytope sum = free_sum(p1, p2);
  const Json j = polytope_to_json(sum);
  if (!flags.output.empty()) write_json_file(flags.output, j);
  if (flags.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "free sum: dim " << sum.dim() << ", " << sum.vertices().size()
              << " vertices, normalized volume " << sum.normalized_volume() << "\n";
    if (!flags.output.empty()) std::cout << "written to " << flags.output << "\n";
  }
  return 0;
}

int cmd_fuzz(std::uint64_t seed, int count, int dim_max) {
  const FuzzResult result = run_fuzz(seed, count, dim_max, std::cout);
  std::cout << "fuzz: " << result.generated << " instances, " << result.failed
            << " failures\n";
  return result.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ehrhart and spectrum analysis for lattice polytopes"};
  app.require_subcommand(1);

  CommonFlags flags;
  AnalyzeOptions opts;
  std::string input, kind = "auto", file1, file2;
  bool force = false;
  std::uint64_t seed = 0;
  int count = 50, dim_max = 3;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a polytope or spectrum file");
  analyze->add_option("input", input, "JSON input file")->required();
  analyze->add_option("--kind", kind, "input kind: auto, polytope, spectrum")
      ->check(CLI::IsMember({"auto", "polytope", "spectrum"}));
  analyze->add_option("--format", flags.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--trunc", opts.trunc, "series truncation order (default: dim + 3)");
  analyze->add_option("--mmax", opts.mmax, "evaluation range for reciprocity checks");
  analyze->add_option("--tol", opts.tol, "root-location tolerance");
  analyze->add_option("-o,--output", flags.output, "also write the JSON report here");

  CLI::App* tensor = app.add_subcommand("tensor", "tensor product of two spectra");
  tensor->add_option("first", file1, "first spectrum or polytope file")->required();
  tensor->add_option("second", file2, "second spectrum or polytope file")->required();
  tensor->add_flag("--force", force,
                   "compute the spectrum-level product even without a reflexive factor");
  tensor->add_option("--format", flags.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  tensor->add_option("-o,--output", flags.output, "write the product spectrum here");

  CLI::App* freesum = app.add_subcommand("freesum", "free sum of two polytopes");
  freesum->add_option("first", file1, "first polytope file")->required();
  freesum->add_option("second", file2, "second polytope file")->required();
  freesum->add_option("--format", flags.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  freesum->add_option("-o,--output", flags.output, "write the free-sum polytope here");

  CLI::App* fuzz = app.add_subcommand("fuzz", "random polytopes through the full analysis");
  fuzz->add_option("--seed", seed, "random seed")->required();
  fuzz->add_option("--count", count, "number of instances");
  fuzz->add_option("--dim-max", dim_max, "maximum dimension")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad command line is an input error
  }

  try {
    if (*analyze) return cmd_analyze(input, kind, opts, flags);
    if (*tensor) return cmd_tensor(file1, file2, force, flags);
    if (*freesum) return cmd_freesum(file1, file2, flags);
    return cmd_fuzz(seed, count, dim_max);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool input_error =
        dynamic_cast<const InputError*>(&e) || dynamic_cast<const OriginNotInterior*>(&e) ||
        dynamic_cast<const NotFullDimensional*>(&e) ||
        dynamic_cast<const InvalidPolytope*>(&e) ||
        dynamic_cast<const ExponentOutOfRange*>(&e) ||
        dynamic_cast<const DegreeTooLarge*>(&e);
    return input_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}

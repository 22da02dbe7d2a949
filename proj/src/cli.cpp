#include "torcoh/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "torcoh/catalog.hpp"
#include "torcoh/errors.hpp"
#include "torcoh/report.hpp"

namespace torcoh {
namespace {

struct Resolved {
  const CatalogEntry* entry = nullptr;      // set when the target is a catalog name
  std::optional<ArrangementInput> input;    // geometry, absent for combinatorial entries
};

Resolved resolve(const std::string& target) {
  Resolved r;
  for (const std::string& name : catalog_names()) {
    if (name != target) continue;
    r.entry = &catalog_get(name);
    if (r.entry->geometric) r.input = r.entry->parse();
    return r;
  }
  std::ifstream file(target);
  if (!file) throw InputError("unknown entry or unreadable file '" + target + "'");
  std::ostringstream text;
  text << file.rdbuf();
  std::string name = target;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  r.input = parse_arrangement_file(text.str(), name);
  return r;
}

int run_command(const std::string& command, const std::string& target, const RenderOptions& opt,
                std::ostream& out) {
  Resolved r = resolve(target);
  if (!r.input) {
    if (command == "betti") {
      render_combinatorial_betti(out, *r.entry, opt);
      return 0;
    }
    throw InputError("entry '" + r.entry->name +
                     "' is combinatorial; only `betti` and `verify` apply to it");
  }
  PipelineResult result = run_pipeline(std::move(*r.input));
  if (command == "betti") {
    render_betti(out, result, opt);
  } else if (command == "poset") {
    render_poset(out, result, opt);
  } else if (command == "spectral") {
    render_spectral(out, result, opt);
  } else {
    render_equivariant(out, result, opt);
  }
  return 0;
}

int run_verify(const std::string& target, bool all, const RenderOptions& opt, std::ostream& out) {
  std::vector<std::string> names;
  if (all) {
    for (const std::string& name : catalog_names())
      if (!catalog_get(name).negative_control) names.push_back(name);
  } else {
    names.push_back(catalog_get(target).name);
  }
  bool ok = true;
  for (const std::string& name : names) {
    std::vector<std::string> mismatches;
    bool good = verify_entry(catalog_get(name), mismatches);
    ok = ok && good;
    if (opt.quiet) continue;
    if (opt.format == OutputFormat::structured) {
      out << "verify." << name << " = " << (good ? "ok" : "fail") << "\n";
      for (const std::string& m : mismatches) out << "diff." << name << " = " << m << "\n";
    } else {
      out << name << ": " << (good ? "ok" : "MISMATCH") << "\n";
      for (const std::string& m : mismatches) out << "  " << m << "\n";
    }
  }
  if (!opt.quiet && opt.format == OutputFormat::structured)
    out << "verify = " << (ok ? "ok" : "fail") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cohomology of complements of affine subtorus arrangements in T^N"};
  app.name("torcoh");
  std::string format = "text";
  bool quiet = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--quiet", quiet, "print nothing; rely on the exit code");
  app.require_subcommand(1);

  app.add_subcommand("list", "list the catalog entries")->fallthrough();
  std::string target;
  for (const char* name : {"betti", "poset", "spectral", "equivariant"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) + " report for a catalog entry or arrangement file");
    sub->add_option("entry", target, "catalog entry name or file path")->required();
    sub->fallthrough();
  }
  CLI::App* verify = app.add_subcommand("verify", "recompute pinned results and compare");
  bool all = false;
  verify->add_flag("--all", all, "verify every entry except negative controls");
  verify->add_option("entry", target, "catalog entry name");
  verify->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RenderOptions opt;
  opt.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;
  opt.quiet = quiet;

  try {
    std::string command = app.get_subcommands().front()->get_name();
    if (command == "list") {
      render_list(out, opt);
      return 0;
    }
    if (command == "verify") {
      if (!all && target.empty())
        throw InputError("verify needs an entry name or --all");
      return run_verify(target, all, opt, out);
    }
    return run_command(command, target, opt, out);
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace torcoh

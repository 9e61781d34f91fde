#include <iostream>

#include <nlohmann/json.hpp>

#include "common.hpp"
#include "qwit/error.hpp"

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

int report(const qwit::cli::Global& g, const std::string& kind, const std::string& message, int code) {
  if (g.error_json) {
    std::cerr << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  } else {
    std::cerr << "qwit: " << message << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement witnesses for QAOA states"};
  app.set_version_flag("--version", QWIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  qwit::cli::Global g;
  app.add_option("--seed", g.seed, "Master RNG seed");
  app.add_option("--samples", g.samples, "Monte Carlo sample count");
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", g.tolerance, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  app.add_flag("--error-json", g.error_json, "Report errors as JSON on stderr");

  qwit::cli::register_witness(app, g);
  qwit::cli::register_qaoa(app, g);
  qwit::cli::register_potency(app, g);
  qwit::cli::register_tomography(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(g, "usage", e.what(), kUsage);
  } catch (const qwit::SchemaError& e) {
    return report(g, "schema", e.what(), kDomain);
  } catch (const qwit::Error& e) {
    return report(g, "domain", e.what(), kDomain);
  } catch (const nlohmann::json::exception& e) {
    return report(g, "schema", e.what(), kDomain);
  }
  return kOk;
}

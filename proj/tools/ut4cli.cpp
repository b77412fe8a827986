// Command-line front end over the C API. Reads a JSON payload (or a full
// request for `run`) from a file or standard input and prints the JSON response.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ut4.h"

namespace {

constexpr int kExitIo = 7;
constexpr int kExitUsage = 64;

const char* kCommands[] = {"classify", "irreducible", "stratum",  "equivalent", "isolator",
                           "ranks",    "f-equivalents", "verify", "enumerate",  "run"};

bool read_input(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return !std::cin.bad();
  }
  std::ifstream f(path);
  if (!f) return false;
  out.assign(std::istreambuf_iterator<char>(f), {});
  return !f.bad();
}

std::string quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible monomial representations of UT(4,Z)"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", ut4_version());

  std::string input;
  int64_t radius = -1, box = -1, limit = -1, numeric_q = -1;
  double tolerance = -1;
  bool pretty = false, compact = false;

  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) == "run" ? "run a full request {command, payload, options}"
                                         : std::string("run the ") + name + " command on a payload");
    sub->add_option("input", input, "JSON file; standard input when omitted or '-'");
    sub->fallthrough();
  }
  app.add_option("--radius", radius, "oracle ball radius")->check(CLI::Range(0, 12));
  app.add_option("--box", box, "half-width of parameter sweeps")->check(CLI::Range(0, 50));
  app.add_option("--limit", limit, "maximum number of listed items")->check(CLI::PositiveNumber);
  app.add_option("--numeric-q", numeric_q, "largest root-of-unity order tried when lifting")
      ->check(CLI::Range(1, 100000));
  app.add_option("--tolerance", tolerance, "numeric equality tolerance, in (0, 1e-3]");
  auto* pj = app.add_flag("--json", compact, "compact JSON (default)");
  app.add_flag("--pretty", pretty, "indented JSON")->excludes(pj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "cannot read " << (input.empty() ? "standard input" : input) << "\n";
    return kExitIo;
  }
  const std::string request =
      cmd == "run" ? text : "{\"command\": " + quote(cmd) + ", \"payload\": " + text + "}";

  ut4_context* ctx = nullptr;
  if (ut4_context_new(&ctx) != UT4_OK) return UT4_E_INTERNAL;
  struct Opt {
    const char* key;
    int64_t v;
  };
  for (Opt o : {Opt{"radius", radius}, Opt{"box", box}, Opt{"limit", limit}, Opt{"numeric_q", numeric_q}})
    if (o.v >= 0 && ut4_context_set_int(ctx, o.key, o.v) != UT4_OK) {
      std::cerr << "invalid --" << o.key << "\n";
      ut4_context_free(ctx);
      return kExitUsage;
    }
  if (tolerance != -1 && ut4_context_set_tolerance(ctx, tolerance) != UT4_OK) {
    std::cerr << "--tolerance must lie in (0, 1e-3]\n";
    ut4_context_free(ctx);
    return kExitUsage;
  }

  ut4_result* res = nullptr;
  ut4_status st = ut4_run(ctx, request.c_str(), &res);
  if (res) {
    std::cout << ut4_result_json(res, pretty ? 2 : -1) << "\n";
    ut4_result_free(res);
  }
  ut4_context_free(ctx);
  return static_cast<int>(st);
}

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quiverforge.h"

namespace {

// exit codes: 0 success, 1 verification failure, 2 usage, 3 file,
// 4 parse, 5 domain, 6 internal
enum {
  EXIT_OK = 0,
  EXIT_VERIFY = 1,
  EXIT_USAGE = 2,
  EXIT_FILE = 3,
  EXIT_PARSE = 4,
  EXIT_DOMAIN = 5,
  EXIT_INTERNAL = 6
};

int exit_code(int rc) {
  switch (rc) {
  case QF_OK:
    return EXIT_OK;
  case QF_ERR_PARSE:
    return EXIT_PARSE;
  case QF_ERR_DOMAIN:
    return EXIT_DOMAIN;
  case QF_ERR_VERIFY:
    return EXIT_VERIFY;
  default:
    return EXIT_INTERNAL;
  }
}

void error_line(std::string const &code, std::string const &msg) {
  std::string m;
  for (char c : msg) {
    if (c == '"' || c == '\\') m += '\\';
    m += c == '\n' ? ' ' : c;
  }
  std::cerr << "{\"code\":\"" << code << "\",\"message\":\"" << m << "\"}"
            << std::endl;
}

struct FileError {
  std::string path;
};

std::string read_file(std::string const &path) {
  std::ifstream in(path);
  if (!in) throw FileError{path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// prints the payload on success (and for verify reports, which are emitted
// even when a check fails); otherwise forwards the error line to stderr
int finish_with_last_error(int rc, char *out) {
  if (out && (rc == QF_OK || rc == QF_ERR_VERIFY)) std::cout << out;
  if (out) qf_string_free(out);
  if (rc != QF_OK && !(rc == QF_ERR_VERIFY && out))
    std::cerr << qf_last_error() << std::endl;
  return exit_code(rc);
}

struct Quiver {
  qf_quiver *q = nullptr;
  ~Quiver() { qf_quiver_free(q); }
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact toolkit for ribbon and triangulation quivers and their "
               "symmetric algebras"};
  app.require_subcommand(1);

  bool pretty = false;
  unsigned chr = 0;
  unsigned long long seed = 1;
  int trunc = -1;
  if (char const *env = std::getenv("QUIVERFORGE_TRUNCATION"))
    trunc = std::atoi(env);
  app.add_flag("--pretty", pretty, "indented human-readable JSON");
  app.add_option("--char", chr, "field characteristic (0 = rationals)");
  app.add_option("--seed", seed, "seed for randomized searches");
  app.add_option("--truncation", trunc,
                 "path-length cutoff (default: derived from the data)");

  int vertices = 0, vertex = 0, arc = 0, max_r = 4;
  std::string file, data_file, kind = "triangulation", format = "json";
  std::string fam_name, fam_params = "{}";
  bool extended = false;

  auto *c_enum = app.add_subcommand("enumerate",
                                    "triangulation quivers up to isomorphism");
  c_enum->add_option("--vertices", vertices, "number of vertices")->required();

  auto *c_analyze = app.add_subcommand("analyze", "cycle and block structure");
  c_analyze->add_option("file", file, "quiver or triangulation JSON")
      ->required();

  auto *c_mutate = app.add_subcommand("mutate", "mutation at a vertex");
  c_mutate->add_option("file", file)->required();
  c_mutate->add_option("--vertex", vertex)->required();
  c_mutate->add_option("--data", data_file, "g-invariant data JSON");

  auto *c_flip = app.add_subcommand("flip", "flip an arc of a triangulation");
  c_flip->add_option("file", file)->required();
  c_flip->add_option("--arc", arc)->required();

  auto *c_present = app.add_subcommand("present", "relation lists");
  c_present->add_option("file", file)->required();
  c_present->add_option("--data", data_file)->required();
  c_present->add_option("--kind", kind, "brauer or triangulation");
  c_present->add_flag("--extended", extended, "extended relation list");

  auto *c_cartan = app.add_subcommand("cartan", "Cartan matrix and invariants");
  c_cartan->add_option("file", file)->required();
  c_cartan->add_option("--data", data_file)->required();

  auto *c_verify = app.add_subcommand("verify", "certificate suite");
  c_verify->add_option("file", file)->required();
  c_verify->add_option("--data", data_file)->required();

  auto *c_period = app.add_subcommand("period", "syzygy orbits of the simples");
  c_period->add_option("file", file)->required();
  c_period->add_option("--data", data_file)->required();
  c_period->add_option("--max-r", max_r, "largest syzygy power tested");

  auto *c_family = app.add_subcommand("family", "known-family constructors");
  c_family->add_option("name", fam_name)->required();
  c_family->add_option("--params", fam_params, "parameters as a JSON object");

  auto *c_export = app.add_subcommand("export", "re-emit a quiver");
  c_export->add_option("file", file)->required();
  c_export->add_option("--format", format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    error_line("UsageError", e.what());
    return EXIT_USAGE;
  }

  try {
    char *out = nullptr;
    int rc = QF_OK;
    if (c_enum->parsed()) {
      rc = qf_enumerate(vertices, pretty, &out);
    } else if (c_family->parsed()) {
      rc = qf_family(fam_name.c_str(), fam_params.c_str(), chr, trunc, pretty,
                     &out);
    } else if (c_flip->parsed()) {
      std::string text = read_file(file);
      rc = qf_flip(text.c_str(), arc, pretty, &out);
    } else {
      std::string text = read_file(file);
      Quiver q;
      rc = qf_quiver_parse(text.c_str(), nullptr, &q.q);
      if (rc == QF_OK) {
        std::string data;
        if (!data_file.empty()) data = read_file(data_file);
        const char *dptr = data_file.empty() ? nullptr : data.c_str();
        if (c_analyze->parsed())
          rc = qf_analyze(q.q, pretty, &out);
        else if (c_mutate->parsed())
          rc = qf_mutate(q.q, vertex, dptr, chr, pretty, &out);
        else if (c_present->parsed())
          rc = qf_present(q.q, dptr, kind.c_str(), extended, chr, trunc,
                          pretty, &out);
        else if (c_cartan->parsed())
          rc = qf_cartan(q.q, dptr, pretty, &out);
        else if (c_verify->parsed())
          rc = qf_verify(q.q, dptr, chr, trunc, seed, pretty, &out);
        else if (c_period->parsed())
          rc = qf_period(q.q, dptr, chr, trunc, max_r, seed, pretty, &out);
        else if (c_export->parsed()) {
          if (format == "dot")
            rc = qf_quiver_to_dot(q.q, &out);
          else if (format == "json")
            rc = qf_quiver_to_json(q.q, pretty, &out);
          else {
            error_line("UsageError", "format must be dot or json");
            return EXIT_USAGE;
          }
        }
      }
    }
    return finish_with_last_error(rc, out);
  } catch (FileError const &e) {
    error_line("FileError", "cannot read " + e.path);
    return EXIT_FILE;
  }
}

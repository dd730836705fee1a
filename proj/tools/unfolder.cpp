// Command-line front end; talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "unfolder/unfolder.h"

namespace {

constexpr int kChecksFailed = 1;
constexpr int kInputError = 2;

struct Failure {
  std::string message;
};

void check(unf_status s) {
  if (s != UNF_OK) throw Failure{unf_last_error()};
}

struct Complex {
  unf_complex* ptr = nullptr;
  Complex() = default;
  Complex(const Complex&) = delete;
  Complex& operator=(const Complex&) = delete;
  ~Complex() { unf_complex_free(ptr); }
};

struct Unfolding {
  unf_unfolding* ptr = nullptr;
  Unfolding() = default;
  Unfolding(const Unfolding&) = delete;
  Unfolding& operator=(const Unfolding&) = delete;
  ~Unfolding() { unf_unfolding_free(ptr); }
};

std::string take(char* s) {
  std::string out(s);
  unf_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{"cannot write '" + path + "'"};
}

void load(const std::string& path, Complex& c) { check(unf_parse(read_input(path).c_str(), &c.ptr)); }

std::string emit(const Complex& c) {
  char* text = nullptr;
  check(unf_emit(c.ptr, &text));
  return take(text);
}

std::string component_path(const std::string& out, int k) {
  std::filesystem::path p(out);
  auto name = p.stem().string() + ".component" + std::to_string(k) + ".json";
  return (p.parent_path() / name).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups of projectivities and unfoldings of simplicial complexes"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  int base = 0;

  auto* analyze = app.add_subcommand("analyze", "Print invariants of a complex");
  analyze->add_option("file", input, "Input document, '-' for stdin")->required();
  analyze->add_option("--base", base, "Base facet index");

  std::string mode = "complete";
  int component = -1;
  auto* unfold = app.add_subcommand("unfold", "Complete or partial unfolding");
  unfold->add_option("file", input, "Input document, '-' for stdin")->required();
  unfold->add_option("--mode", mode, "complete or partial")->check(CLI::IsMember({"complete", "partial"}));
  unfold->add_option("--base", base, "Base facet index");
  unfold->add_option("--component", component, "Write only this component of a partial unfolding");
  unfold->add_option("-o,--output", output, "Output document, '-' for stdout");

  std::string kind;
  int iterations = 1;
  auto* subdivide = app.add_subcommand("subdivide", "Barycentric, anti-prismatic or stellar subdivision");
  subdivide->add_option("file", input, "Input document, '-' for stdin")->required();
  subdivide->add_option("--kind", kind, "barycentric, antiprismatic or stellar[:facet]")->required();
  subdivide->add_option("-n", iterations, "Number of rounds");
  subdivide->add_option("-o,--output", output, "Output document (default stdout)");

  std::string name;
  auto* gallery = app.add_subcommand("gallery", "Emit a named example");
  gallery->add_option("name", name,
                      "boundary-simplex-n, starred-triangle, hexagon-cone, cycle-n, figure3, torus-z3, "
                      "nonsimplicial, knot-nbhd:n:orientable|klein, surface:g")
      ->required();
  gallery->add_option("-o,--output", output, "Output document (default stdout)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the invariant and reproduction checks");
  verify->add_option("--suite", suite, "all, props or paper")->check(CLI::IsMember({"all", "props", "paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze) {
      Complex c;
      load(input, c);
      char* report = nullptr;
      check(unf_analyze(c.ptr, base, &report));
      std::cout << take(report);
    } else if (*unfold) {
      Complex c;
      load(input, c);
      Unfolding u;
      check(unf_unfold(c.ptr, mode == "partial" ? UNF_PARTIAL : UNF_COMPLETE, base, &u.ptr));
      Complex total;
      check(unf_unfolding_total(u.ptr, &total.ptr));
      int count = unf_unfolding_component_count(u.ptr);
      std::vector<int> sizes;
      for (int k = 0; k < count; ++k) {
        Complex comp;
        check(unf_unfolding_component(u.ptr, k, &comp.ptr));
        sizes.push_back(unf_facet_count(comp.ptr));
      }
      std::ostringstream summary;
      summary << "facets: " << unf_facet_count(total.ptr) << "\n";
      summary << "components: " << count << " (sizes ";
      for (std::size_t k = 0; k < sizes.size(); ++k) summary << (k ? ", " : "") << sizes[k];
      summary << ")\n";
      if (component >= count) throw Failure{"component index out of range"};

      bool to_stdout = output == "-";
      (to_stdout ? std::cerr : std::cout) << summary.str();
      if (!output.empty()) {
        if (component >= 0) {
          Complex comp;
          check(unf_unfolding_component(u.ptr, component, &comp.ptr));
          write_output(output, emit(comp));
        } else {
          write_output(output, emit(total));
          if (mode == "partial" && !to_stdout) {
            for (int k = 0; k < count; ++k) {
              Complex comp;
              check(unf_unfolding_component(u.ptr, k, &comp.ptr));
              write_output(component_path(output, k), emit(comp));
            }
          }
        }
      }
    } else if (*subdivide) {
      unf_subdivision how;
      int facet = -1;
      if (kind == "barycentric") {
        how = UNF_BARYCENTRIC;
      } else if (kind == "antiprismatic") {
        how = UNF_ANTIPRISMATIC;
      } else if (kind == "stellar") {
        how = UNF_STELLAR;
      } else if (kind.rfind("stellar:", 0) == 0) {
        how = UNF_STELLAR;
        try {
          std::size_t used = 0;
          facet = std::stoi(kind.substr(8), &used);
          if (used != kind.size() - 8 || facet < 0) throw std::invalid_argument("facet");
        } catch (const std::exception&) {
          throw Failure{"bad facet index in '" + kind + "'"};
        }
      } else {
        throw Failure{"unknown subdivision kind '" + kind + "'"};
      }
      Complex c;
      load(input, c);
      Complex out;
      check(unf_subdivide(c.ptr, how, facet, iterations, &out.ptr));
      write_output(output, emit(out));
    } else if (*gallery) {
      Complex c;
      check(unf_gallery(name.c_str(), &c.ptr));
      write_output(output, emit(c));
    } else if (*verify) {
      char* report = nullptr;
      int passed = 0;
      check(unf_verify(suite.c_str(), &report, &passed));
      std::cout << take(report);
      return passed ? 0 : kChecksFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kInputError;
  }
  return 0;
}

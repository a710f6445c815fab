// Command-line front end. Talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vsr/vsr.h"

namespace {

// Exit codes: 0 answered, 1 usage, 2 input, 3 resource cap, 4 internal.
int exit_code(vsr_status status) {
  switch (status) {
    case VSR_OK:
      return 0;
    case VSR_ERR_USAGE:
      return 1;
    case VSR_ERR_INPUT:
    case VSR_ERR_CONTRACT:
    case VSR_ERR_NOT_SP:
      return 2;
    case VSR_ERR_RESOURCE:
      return 3;
    case VSR_ERR_INTERNAL:
      return 4;
  }
  return 4;
}

struct Failure {
  vsr_status status;
};

void check(vsr_status status) {
  if (status != VSR_OK) {
    std::cerr << "error: " << vsr_status_name(status) << ": " << vsr_last_error() << '\n';
    throw Failure{status};
  }
}

struct StringDeleter {
  void operator()(char* p) const { vsr_free_string(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

void emit(char* text) {
  OwnedString owned(text);
  std::cout << (owned ? owned.get() : "");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    throw Failure{VSR_ERR_INPUT};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string parent_dir(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string{} : path.substr(0, slash);
}

using Instance = std::unique_ptr<vsr_instance, decltype(&vsr_instance_free)>;
using GraphHandle = std::unique_ptr<vsr_graph, decltype(&vsr_graph_free)>;
using Solution = std::unique_ptr<vsr_solution, decltype(&vsr_solution_free)>;

Instance load_instance(const std::string& path) {
  vsr_instance* raw = nullptr;
  check(vsr_instance_load(path.c_str(), &raw));
  return {raw, vsr_instance_free};
}

GraphHandle load_graph(const std::string& path) {
  vsr_graph* raw = nullptr;
  check(vsr_graph_load(path.c_str(), &raw));
  return {raw, vsr_graph_free};
}

int print_solution(const vsr_instance* instance, vsr_solve_options& options, bool with_sequence) {
  vsr_solution* raw = nullptr;
  check(vsr_solve(instance, &options, &raw));
  Solution solution(raw, vsr_solution_free);
  char* text = nullptr;
  check(vsr_solution_format(solution.get(), with_sequence ? 1 : 0, &text));
  emit(text);
  return vsr_solution_verdict(solution.get()) == VSR_UNKNOWN ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex separator reconfiguration under TS, TJ and TAR"};
  app.require_subcommand(1);

  vsr_solve_options options;
  vsr_solve_options_init(&options);
  std::string engine = "auto";
  std::string input;
  bool with_sequence = false;

  auto* solve = app.add_subcommand("solve", "Decide an instance; --sequence prints the certificate");
  solve->add_option("instance", input, "Instance file")->required();
  solve->add_option("--engine", engine, "auto, oracle, tame, 3p1d or sp");
  solve->add_flag("--sequence", with_sequence, "Print one state per line on YES");
  solve->add_option("--state-cap", options.state_cap, "Oracle state cap");
  solve->add_option("--family-cap", options.family_cap, "Minimal separator family cap");

  std::string verify_path;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search, or check a certificate with --verify");
  oracle->add_option("instance", input, "Instance file")->required();
  oracle->add_option("--verify", verify_path, "Sequence file to check against the instance");
  oracle->add_flag("--sequence", with_sequence, "Print a shortest sequence on YES");
  oracle->add_option("--state-cap", options.state_cap, "Oracle state cap");

  int s = -1;
  int t = -1;
  auto* separators = app.add_subcommand("separators", "List all minimal st-separators");
  separators->add_option("graph", input, "Graph file")->required();
  separators->add_option("s", s, "Terminal s")->required();
  separators->add_option("t", t, "Terminal t")->required();
  separators->add_option("--family-cap", options.family_cap, "Family cap");

  std::string sequence_path;
  auto* convert = app.add_subcommand("convert", "TJ -> TAR(k+1) or TAR(k) -> TJ, optionally with a certificate");
  convert->add_option("instance", input, "Instance file")->required();
  convert->add_option("--sequence", sequence_path, "Certificate of the input instance to translate");

  std::string direction;
  auto* reduce = app.add_subcommand("reduce", "Independent set <-> separator reconfiguration");
  reduce->add_option("file", input, "ISR file or instance file")->required();
  reduce->add_option("--direction", direction, "isr-to-vsr or vsr-to-isr")
      ->required()
      ->check(CLI::IsMember({"isr-to-vsr", "vsr-to-isr"}));

  std::string cls;
  auto* recognize = app.add_subcommand("recognize", "Class membership test");
  recognize->add_option("graph", input, "Graph file")->required();
  recognize->add_option("--class", cls, "3p1-diamond, peanut or sp")
      ->required()
      ->check(CLI::IsMember({"3p1-diamond", "peanut", "sp"}));

  auto* decompose = app.add_subcommand("decompose", "PS-trees of the 2-connected blocks");
  decompose->add_option("graph", input, "Graph file")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Reconfiguration graph in DOT");
  export_dot->add_option("instance", input, "Instance file")->required();
  export_dot->add_option("--state-cap", options.state_cap, "State cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    char* text = nullptr;
    if (solve->parsed()) {
      options.engine = engine.c_str();
      auto instance = load_instance(input);
      return print_solution(instance.get(), options, with_sequence);
    }
    if (oracle->parsed()) {
      auto instance = load_instance(input);
      if (verify_path.empty()) {
        options.engine = "oracle";
        return print_solution(instance.get(), options, with_sequence);
      }
      int ok = 0;
      check(vsr_verify_sequence_text(instance.get(), slurp(verify_path).c_str(), &ok, &text));
      OwnedString reason(text);
      if (ok) {
        std::cout << "VALID\n";
        return 0;
      }
      std::cout << "INVALID " << reason.get() << '\n';
      return 2;
    }
    if (separators->parsed()) {
      auto graph = load_graph(input);
      check(vsr_enumerate_separators_text(graph.get(), s, t, options.family_cap, &text));
    } else if (convert->parsed()) {
      auto instance = load_instance(input);
      if (sequence_path.empty()) {
        check(vsr_convert_instance(instance.get(), &text));
      } else {
        check(vsr_convert_sequence(instance.get(), slurp(sequence_path).c_str(), &text));
      }
    } else if (reduce->parsed()) {
      if (direction == "isr-to-vsr") {
        check(vsr_reduce_isr_text(slurp(input).c_str(), parent_dir(input).c_str(), &text));
      } else {
        auto instance = load_instance(input);
        check(vsr_reduce_vsr(instance.get(), &text));
      }
    } else if (recognize->parsed()) {
      auto graph = load_graph(input);
      check(vsr_recognize(graph.get(), cls.c_str(), &text));
    } else if (decompose->parsed()) {
      auto graph = load_graph(input);
      check(vsr_decompose(graph.get(), &text));
    } else if (export_dot->parsed()) {
      auto instance = load_instance(input);
      check(vsr_export_dot(instance.get(), options.state_cap, &text));
    }
    emit(text);
    return 0;
  } catch (const Failure& f) {
    return exit_code(f.status);
  }
}

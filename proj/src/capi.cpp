#include "vsr/vsr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "vsr/bipartite.hpp"
#include "vsr/class_3p1_diamond.hpp"
#include "vsr/error.hpp"
#include "vsr/io.hpp"
#include "vsr/minimal_separators.hpp"
#include "vsr/oracle.hpp"
#include "vsr/series_parallel.hpp"
#include "vsr/solve.hpp"
#include "vsr/tar_tj.hpp"

struct vsr_graph {
  vsr::Graph graph;
};

struct vsr_instance {
  vsr::ReconfigInstance instance;
};

struct vsr_solution {
  vsr::SolveOutcome outcome;
  std::string engine;
};

namespace {

thread_local std::string last_error;

vsr_status fail(vsr_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
vsr_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return VSR_OK;
  } catch (const vsr::NotSeriesParallel& e) {
    return fail(VSR_ERR_NOT_SP, e.what());
  } catch (const vsr::InputError& e) {
    return fail(VSR_ERR_INPUT, e.what());
  } catch (const vsr::ResourceLimit& e) {
    return fail(VSR_ERR_RESOURCE, e.what());
  } catch (const vsr::ContractViolation& e) {
    return fail(VSR_ERR_CONTRACT, e.what());
  } catch (const vsr::NotInScope& e) {
    return fail(VSR_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VSR_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(VSR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VSR_ERR_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw vsr::InputError(std::string("null argument: ") + what);
}

std::string lines_of(const std::vector<vsr::Vertex>& ids) { return vsr::SeparatorState(ids).to_string(); }

std::string recognize_text(const vsr::Graph& g, std::string_view cls) {
  std::ostringstream out;
  if (cls == "3p1-diamond") {
    auto c = vsr::characterize(g);
    out << (vsr::in_class(c) ? "yes" : "no") << '\n' << vsr::describe(c) << '\n';
  } else if (cls == "peanut") {
    if (auto w = vsr::is_peanut_like(g)) {
      out << "yes\nfoci " << w->u << ' ' << w->v << "\nside-a " << lines_of(w->side_a) << "\nside-b "
          << lines_of(w->side_b) << '\n';
    } else {
      out << "no\n";
    }
  } else if (cls == "sp") {
    try {
      auto d = vsr::recognize_and_decompose(g);
      out << "yes\nblocks " << d.blocks.size() << '\n';
    } catch (const vsr::NotSeriesParallel& e) {
      out << "no\nblock " << e.block_index() << ' ' << lines_of(e.block_vertices()) << '\n';
    }
  } else {
    throw vsr::InputError("unknown class '" + std::string(cls) + "' (3p1-diamond, peanut, sp)");
  }
  return out.str();
}

// TAR(k) certificate of the original instance -> TJ certificate of the
// converted instance.
vsr::ReconfigSequence tar_to_tj_certificate(const vsr::TarToTjConversion& conversion,
                                            const vsr::ReconfigSequence& seq) {
  vsr::ReconfigSequence full(conversion.source_bridge.rbegin(), conversion.source_bridge.rend());
  full.insert(full.end(), seq.begin() + 1, seq.end());
  full.insert(full.end(), conversion.target_bridge.begin() + 1, conversion.target_bridge.end());
  const auto& tj = conversion.tj;
  int tokens = static_cast<int>(tj.source().size());
  auto normalized = vsr::normalize_tar_sequence(tj.graph(), tj.s(), tj.t(), full, tokens);
  return vsr::tar_to_tj_sequence(tj.graph(), tj.s(), tj.t(), normalized, tokens);
}

}  // namespace

extern "C" {

const char* vsr_last_error(void) { return last_error.c_str(); }

void vsr_free_string(char* text) { std::free(text); }

const char* vsr_status_name(vsr_status status) {
  switch (status) {
    case VSR_OK:
      return "ok";
    case VSR_ERR_USAGE:
      return "usage error";
    case VSR_ERR_INPUT:
      return "input error";
    case VSR_ERR_RESOURCE:
      return "resource limit";
    case VSR_ERR_CONTRACT:
      return "precondition violated";
    case VSR_ERR_NOT_SP:
      return "not series-parallel";
    case VSR_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

vsr_status vsr_graph_parse(const char* text, vsr_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new vsr_graph{vsr::parse_graph(text)};
  });
}

vsr_status vsr_graph_load(const char* path, vsr_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new vsr_graph{vsr::load_graph(path)};
  });
}

int vsr_graph_vertex_count(const vsr_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

size_t vsr_graph_edge_count(const vsr_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

void vsr_graph_free(vsr_graph* graph) { delete graph; }

vsr_status vsr_instance_parse(const char* text, const char* base_dir, vsr_instance** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new vsr_instance{vsr::parse_instance(text, base_dir ? base_dir : "")};
  });
}

vsr_status vsr_instance_load(const char* path, vsr_instance** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new vsr_instance{vsr::load_instance(path)};
  });
}

vsr_status vsr_instance_format(const vsr_instance* instance, char** out) {
  return guarded([&] {
    need(instance, "instance");
    need(out, "out");
    *out = duplicate(vsr::format_instance(instance->instance));
  });
}

const char* vsr_instance_rule(const vsr_instance* instance) {
  if (!instance) return "";
  return vsr::rule_name(instance->instance.rule()).data();
}

void vsr_instance_free(vsr_instance* instance) { delete instance; }

void vsr_solve_options_init(vsr_solve_options* options) {
  if (!options) return;
  options->engine = "auto";
  options->state_cap = vsr::OracleOptions{}.state_cap;
  options->family_cap = vsr::EnumerationOptions{}.family_cap;
}

vsr_status vsr_solve(const vsr_instance* instance, const vsr_solve_options* options, vsr_solution** out) {
  return guarded([&] {
    need(instance, "instance");
    need(out, "out");
    vsr_solve_options defaults;
    vsr_solve_options_init(&defaults);
    if (!options) options = &defaults;
    vsr::Engine engine = vsr::parse_engine(options->engine ? options->engine : "auto");
    vsr::SolveOptions solve_options;
    solve_options.oracle.state_cap = options->state_cap;
    solve_options.enumeration.family_cap = options->family_cap;
    auto outcome = vsr::solve(instance->instance, engine, solve_options);
    std::string name(vsr::engine_name(outcome.engine));
    *out = new vsr_solution{std::move(outcome), std::move(name)};
  });
}

vsr_verdict vsr_solution_verdict(const vsr_solution* solution) {
  if (!solution) return VSR_UNKNOWN;
  switch (solution->outcome.verdict) {
    case vsr::Verdict::Yes:
      return VSR_YES;
    case vsr::Verdict::No:
      return VSR_NO;
    case vsr::Verdict::Unknown:
      return VSR_UNKNOWN;
  }
  return VSR_UNKNOWN;
}

const char* vsr_solution_engine(const vsr_solution* solution) { return solution ? solution->engine.c_str() : ""; }

size_t vsr_solution_length(const vsr_solution* solution) {
  if (!solution || !solution->outcome.sequence) return 0;
  return solution->outcome.sequence->size();
}

const int* vsr_solution_state(const vsr_solution* solution, size_t index, size_t* size) {
  if (!solution || !solution->outcome.sequence || index >= solution->outcome.sequence->size()) {
    if (size) *size = 0;
    return nullptr;
  }
  const auto& members = (*solution->outcome.sequence)[index].members();
  if (size) *size = members.size();
  return members.data();
}

vsr_status vsr_solution_format(const vsr_solution* solution, int with_sequence, char** out) {
  return guarded([&] {
    need(solution, "solution");
    need(out, "out");
    std::string text(vsr::verdict_name(solution->outcome.verdict));
    text += '\n';
    if (with_sequence && solution->outcome.sequence) text += vsr::format_sequence(*solution->outcome.sequence);
    *out = duplicate(text);
  });
}

void vsr_solution_free(vsr_solution* solution) { delete solution; }

vsr_status vsr_verify_sequence_text(const vsr_instance* instance, const char* sequence_text, int* ok,
                                    char** reason) {
  return guarded([&] {
    need(instance, "instance");
    need(sequence_text, "sequence_text");
    need(ok, "ok");
    auto report = vsr::verify_sequence(instance->instance, vsr::parse_sequence(sequence_text));
    *ok = report.ok() ? 1 : 0;
    if (reason) {
      *reason = report.ok() ? nullptr
                            : duplicate(std::string(vsr::verify_failure_name(report.reason)) + " at index " +
                                        std::to_string(report.index));
    }
  });
}

vsr_status vsr_enumerate_separators_text(const vsr_graph* graph, int s, int t, size_t family_cap, char** out) {
  return guarded([&] {
    need(graph, "graph");
    need(out, "out");
    auto family = vsr::enumerate_minimal_separators(graph->graph, s, t, {family_cap});
    *out = duplicate(vsr::format_sequence(family.members));
  });
}

vsr_status vsr_export_dot(const vsr_instance* instance, size_t state_cap, char** out) {
  return guarded([&] {
    need(instance, "instance");
    need(out, "out");
    *out = duplicate(vsr::to_dot(vsr::export_reconfig_graph(instance->instance, {state_cap})));
  });
}

vsr_status vsr_convert_instance(const vsr_instance* instance, char** out) {
  return guarded([&] {
    need(instance, "instance");
    need(out, "out");
    const auto& inst = instance->instance;
    switch (inst.rule()) {
      case vsr::Rule::TJ:
        *out = duplicate(vsr::format_instance(vsr::tj_to_tar_instance(inst)));
        return;
      case vsr::Rule::TAR:
        *out = duplicate(vsr::format_instance(vsr::tar_to_tj_instance(inst).tj));
        return;
      case vsr::Rule::TS:
        throw vsr::InputError("convert: TS instances have no TAR counterpart");
    }
  });
}

vsr_status vsr_convert_sequence(const vsr_instance* instance, const char* sequence_text, char** out) {
  return guarded([&] {
    need(instance, "instance");
    need(sequence_text, "sequence_text");
    need(out, "out");
    const auto& inst = instance->instance;
    auto seq = vsr::parse_sequence(sequence_text);
    if (auto report = vsr::verify_sequence(inst, seq); !report) {
      throw vsr::InputError("convert: sequence rejected (" + std::string(vsr::verify_failure_name(report.reason)) +
                            " at index " + std::to_string(report.index) + ")");
    }
    switch (inst.rule()) {
      case vsr::Rule::TJ:
        *out = duplicate(vsr::format_sequence(vsr::tj_to_tar_sequence(seq)));
        return;
      case vsr::Rule::TAR:
        *out = duplicate(vsr::format_sequence(tar_to_tj_certificate(vsr::tar_to_tj_instance(inst), seq)));
        return;
      case vsr::Rule::TS:
        throw vsr::InputError("convert: TS instances have no TAR counterpart");
    }
  });
}

vsr_status vsr_reduce_isr_text(const char* isr_text, const char* base_dir, char** out) {
  return guarded([&] {
    need(isr_text, "isr_text");
    need(out, "out");
    auto isr = vsr::parse_isr(isr_text, base_dir ? base_dir : "");
    *out = duplicate(vsr::format_instance(vsr::isr_to_vsr(isr).vsr));
  });
}

vsr_status vsr_reduce_vsr(const vsr_instance* instance, char** out) {
  return guarded([&] {
    need(instance, "instance");
    need(out, "out");
    // ISR carries TS and TJ only; TAR goes through its TJ equivalent first.
    const auto& inst = instance->instance.rule() == vsr::Rule::TAR ? vsr::tar_to_tj_instance(vsr::with_binding_bound(instance->instance)).tj
                                                                    : instance->instance;
    auto witness = vsr::peanut_witness_for(inst.graph(), inst.s(), inst.t());
    if (!witness) witness = vsr::peanut_witness_for(inst.graph(), inst.t(), inst.s());
    if (!witness) throw vsr::ContractViolation("reduce: the terminals are not the foci of a peanut-like graph");
    *out = duplicate(vsr::format_isr(vsr::vsr_to_isr(inst, *witness).isr));
  });
}

vsr_status vsr_recognize(const vsr_graph* graph, const char* cls, char** out) {
  return guarded([&] {
    need(graph, "graph");
    need(cls, "cls");
    need(out, "out");
    *out = duplicate(recognize_text(graph->graph, cls));
  });
}

vsr_status vsr_decompose(const vsr_graph* graph, char** out) {
  return guarded([&] {
    need(graph, "graph");
    need(out, "out");
    std::string text;
    for (const auto& block : vsr::recognize_and_decompose(graph->graph).blocks) {
      if (block.tree) {
        text += block.tree->to_string() + '\n';
      } else {
        text += "bridge " + std::to_string(block.vertices[0]) + "-" + std::to_string(block.vertices[1]) + '\n';
      }
    }
    *out = duplicate(text);
  });
}

}  // extern "C"

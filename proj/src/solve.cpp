#include "vsr/solve.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "vsr/class_3p1_diamond.hpp"
#include "vsr/error.hpp"
#include "vsr/series_parallel.hpp"
#include "vsr/tar_tj.hpp"

namespace vsr {

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::Auto:
      return "auto";
    case Engine::Oracle:
      return "oracle";
    case Engine::Tame:
      return "tame";
    case Engine::Class3p1d:
      return "3p1d";
    case Engine::SeriesParallel:
      return "sp";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Engine e : {Engine::Auto, Engine::Oracle, Engine::Tame, Engine::Class3p1d, Engine::SeriesParallel}) {
    if (engine_name(e) == lower) return e;
  }
  throw InputError("unknown engine '" + std::string(text) + "' (auto, oracle, tame, 3p1d, sp)");
}

std::string_view verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::Unknown:
      return "UNKNOWN(resource)";
  }
  return "?";
}

namespace {

SolveOutcome yes(ReconfigSequence seq, Engine engine) { return {Verdict::Yes, std::move(seq), engine}; }
SolveOutcome no(Engine engine) { return {Verdict::No, std::nullopt, engine}; }

SolveOutcome run_oracle(const ReconfigInstance& instance, const SolveOptions& options) {
  try {
    auto r = solve_bfs(instance, options.oracle);
    return r.reachable ? yes(std::move(*r.sequence), Engine::Oracle) : no(Engine::Oracle);
  } catch (const ResourceLimit&) {
    return {Verdict::Unknown, std::nullopt, Engine::Oracle};
  }
}

// Throws ResourceLimit on a cap hit; callers decide what that means.
SolveOutcome run_tame(const ReconfigInstance& instance, const SolveOptions& options) {
  TameAnswer answer;
  switch (instance.rule()) {
    case Rule::TAR:
      answer = tame_solve(instance, options.enumeration);
      break;
    case Rule::TJ:
      answer = tame_solve_tj(instance, options.enumeration);
      break;
    case Rule::TS:
      throw NotInScope("the tame solver handles TJ and TAR only");
  }
  return answer.reachable ? yes(std::move(*answer.sequence), Engine::Tame) : no(Engine::Tame);
}

SolveOutcome run_class(const ReconfigInstance& instance) {
  auto answer = instance.rule() == Rule::TS ? solve_ts_3p1d(instance) : solve_tar_tj_3p1d(instance);
  return answer.reachable ? yes(std::move(*answer.sequence), Engine::Class3p1d) : no(Engine::Class3p1d);
}

SolveOutcome run_sp(const ReconfigInstance& instance) {
  switch (instance.rule()) {
    case Rule::TS:
      throw NotInScope("the series-parallel solver handles TJ and TAR only");
    case Rule::TJ:
      return yes(sp_solve_tj(instance), Engine::SeriesParallel);
    case Rule::TAR:
      break;
  }
  recognize_and_decompose(instance.graph());
  if (instance.source() == instance.target()) return yes({instance.source()}, Engine::SeriesParallel);
  if (is_trivially_negative_tar(instance)) return no(Engine::SeriesParallel);
  auto conversion = tar_to_tj_instance(with_binding_bound(instance));
  return yes(lift_tj_solution(conversion, sp_solve_tj(conversion.tj)), Engine::SeriesParallel);
}

}  // namespace

SolveOutcome solve(const ReconfigInstance& instance, Engine engine, const SolveOptions& options) {
  switch (engine) {
    case Engine::Oracle:
      return run_oracle(instance, options);
    case Engine::Tame:
      try {
        return run_tame(instance, options);
      } catch (const ResourceLimit&) {
        return {Verdict::Unknown, std::nullopt, Engine::Tame};
      }
    case Engine::Class3p1d:
      return run_class(instance);
    case Engine::SeriesParallel:
      return run_sp(instance);
    case Engine::Auto:
      break;
  }

  const Graph& g = instance.graph();
  auto in_scope = [&] { return g.vertex_count() >= 4 && in_class(characterize(g)); };
  if (instance.rule() == Rule::TS) return in_scope() ? run_class(instance) : run_oracle(instance, options);

  if (instance.source() == instance.target()) return yes({instance.source()}, Engine::Auto);
  if (instance.rule() == Rule::TAR && is_trivially_negative_tar(instance)) return no(Engine::Auto);
  if (in_scope()) return run_class(instance);
  if (is_series_parallel(g)) return run_sp(instance);
  try {
    return run_tame(instance, options);
  } catch (const ResourceLimit&) {
    return run_oracle(instance, options);
  }
}

}  // namespace vsr

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vsr/minimal_separators.hpp"
#include "vsr/oracle.hpp"

namespace vsr {

enum class Engine { Auto, Oracle, Tame, Class3p1d, SeriesParallel };

std::string_view engine_name(Engine engine) noexcept;
/// "auto", "oracle", "tame", "3p1d" or "sp". Throws InputError.
Engine parse_engine(std::string_view text);

enum class Verdict { Yes, No, Unknown };

std::string_view verdict_name(Verdict verdict) noexcept;

struct SolveOptions {
  OracleOptions oracle;
  EnumerationOptions enumeration;
};

struct SolveOutcome {
  Verdict verdict = Verdict::Unknown;
  /// Present on YES.
  std::optional<ReconfigSequence> sequence;
  /// The engine that produced the answer.
  Engine engine = Engine::Auto;
};

/// Auto dispatch. TS: class solver on {3P1, diamond}-free graphs, otherwise
/// the oracle. TJ/TAR: identical endpoints and trivially negative TAR are
/// answered directly; then the class solver, the series-parallel solver,
/// the tame solver and finally the oracle. A cap hit in the tame solver
/// moves on to the oracle; a cap hit there gives Unknown.
///
/// A forced engine that does not apply throws NotInScope (or
/// NotSeriesParallel); its cap hits give Unknown.
SolveOutcome solve(const ReconfigInstance& instance, Engine engine = Engine::Auto,
                   const SolveOptions& options = {});

}  // namespace vsr

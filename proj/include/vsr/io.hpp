#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vsr/bipartite.hpp"
#include "vsr/instance.hpp"

namespace vsr {

// Text formats. Lines starting with '#' and blank lines are ignored
// everywhere; tokens are whitespace separated.
//
// Graph:     "n m" followed by m lines "a b".
// Instance:  keyword lines
//              graph <path> | graph inline <n> a b a b ...
//              s <id> / t <id> / rule TS|TJ|TAR / k <int> (TAR only)
//              source <ids...> / target <ids...>   ("-" for the empty set)
//            Relative graph paths are resolved against `base_dir`.
// ISR:       graph ..., part <ids of side A>, rule TS|TJ, source, target.
// Sequence:  one state per line, ids ascending, "-" for the empty state.

Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

ReconfigInstance parse_instance(std::string_view text, const std::filesystem::path& base_dir = {});
ReconfigInstance load_instance(const std::filesystem::path& path);
/// Self-contained text with the graph inline.
std::string format_instance(const ReconfigInstance& instance);

IsrInstance parse_isr(std::string_view text, const std::filesystem::path& base_dir = {});
IsrInstance load_isr(const std::filesystem::path& path);
std::string format_isr(const IsrInstance& isr);

SeparatorState parse_state(std::string_view line);
ReconfigSequence parse_sequence(std::string_view text);
std::string format_sequence(const ReconfigSequence& seq);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace vsr

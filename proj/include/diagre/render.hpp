#pragma once

#include <string>

#include "diagre/term.hpp"

namespace diagre {

/// Schematic monospace drawing of a term: wires flow left to right, one
/// row per wire position; sequential stages are laid out side by side,
/// parallel blocks stacked. Generators are boxes, single-wire swaps are
/// drawn as crossings; wider swaps as labelled boxes. Output-only and
/// best-effort.
std::string render_term(const TermPtr& t);

}  // namespace diagre

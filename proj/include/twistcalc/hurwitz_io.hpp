#pragma once

// Plain-text formats for tuples, move sequences and matrices.
//
// Tuple file:   `genus <g>` on the first non-comment line, then one entry per
//               line, `gen <i>` (chain curve c_i) or `class a,b,...` (2g ints).
// Moves file:   whitespace separated `L<k>` / `R<k>` tokens, 1-based.
// Matrix file:  one row per line, entries comma separated.
// `#` starts a comment in every format.

#include <filesystem>
#include <string>
#include <string_view>

#include "twistcalc/hurwitz.hpp"

namespace twistcalc {

TwistTuple parse_tuple(std::string_view text);
TwistTuple load_tuple(const std::filesystem::path& path);
/// Entries equal to a chain class are written as `gen <i>`.
std::string format_tuple(const TwistTuple& t);

HurwitzMove parse_move(std::string_view token);
MoveSequence parse_moves(std::string_view text);
MoveSequence load_moves(const std::filesystem::path& path);
/// Tokens separated by single spaces, 20 per line.
std::string format_moves(const MoveSequence& q);

IntMatrix parse_matrix(std::string_view text);
IntMatrix load_matrix(const std::filesystem::path& path);

void save_text(const std::filesystem::path& path, std::string_view contents);

}  // namespace twistcalc

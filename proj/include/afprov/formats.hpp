#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "afprov/af.hpp"

namespace afprov {

/// ASPARTIX: `arg(a).` and `att(a,b).` statements, whitespace anywhere
/// between tokens, `%` line comments. Throws SyntaxError.
ArgumentationFramework parse_apx(std::string_view text);

/// Trivial Graph Format: one node id per line, a `#` line, then one
/// `source target` pair per line. Trailing tokens on a line are labels and
/// ignored. Throws SyntaxError (MissingSeparator when `#` never appears).
ArgumentationFramework parse_tgf(std::string_view text);

std::string write_apx(const ArgumentationFramework& af);
std::string write_tgf(const ArgumentationFramework& af);

enum class InputFormat { Apx, Tgf, Json };

std::optional<InputFormat> parse_input_format(std::string_view name) noexcept;
/// By file extension (.apx / .tgf / .json).
std::optional<InputFormat> sniff_format(std::string_view path) noexcept;

}  // namespace afprov

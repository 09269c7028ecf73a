#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "quandle/finite_group.hpp"
#include "quandle/finite_quandle.hpp"

namespace quandle {

/// Parses `<keyword> <n>` followed by n rows of n whitespace-separated
/// indices. Only the syntax is checked here (ParseError); axioms are left to
/// FiniteGroup::verify / FiniteQuandle::verify.
Table parse_table(std::string_view text, std::string_view keyword);

/// Group table file: `group <n>` then the Cayley table.
FiniteGroup parse_group(std::string_view text);
/// Quandle table file: `quandle <n>` then rows x of entries x*y.
FiniteQuandle parse_quandle(std::string_view text);

std::string format_table(const Table& table, std::string_view keyword);
std::string format_quandle(const FiniteQuandle& q);
std::string format_group(const FiniteGroup& g);

/// Whole file contents; throws IoError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace quandle

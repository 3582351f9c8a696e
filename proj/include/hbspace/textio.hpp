#pragma once

// Plain-text formats shared by the library and the CLI.
//
// Coefficient file: one complex number per line as "re im", index order
// 0..N. Documents (pairs, reports) are "key value" scalar lines followed by
// named coefficient blocks, each introduced by a "[name]" line.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbspace/series.hpp"

namespace hb::io {

/// Shortest round-trippable form, 17 significant digits.
std::string format_double(double x);

void write_coefficients(std::ostream& out, const TruncatedSeries& f);
TruncatedSeries parse_coefficients(std::string_view text);

TruncatedSeries read_coefficients_file(const std::filesystem::path& path);
void write_coefficients_file(const std::filesystem::path& path, const TruncatedSeries& f);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

struct Document {
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<std::pair<std::string, TruncatedSeries>> blocks;

  void set(std::string key, std::string value);
  void set(std::string key, double value);
  void set(std::string key, long long value);
  void add_block(std::string name, TruncatedSeries series);

  bool has(std::string_view key) const;
  const std::string& scalar(std::string_view key) const;
  double number(std::string_view key) const;
  long long integer(std::string_view key) const;
  const TruncatedSeries& block(std::string_view name) const;
};

std::string render(const Document& doc);
Document parse_document(std::string_view text);

}  // namespace hb::io

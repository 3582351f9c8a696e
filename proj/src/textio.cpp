#include "hbspace/textio.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hbspace/error.hpp"

namespace hb::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view tok, std::size_t line) {
  // strtod accepts the same spellings we write (inf/nan are rejected later).
  std::string buf(tok);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE) {
    throw ParseError(line, "bad number '" + buf + "'");
  }
  return v;
}

cplx parse_complex_line(std::string_view line, std::size_t lineno) {
  const auto toks = split_ws(line);
  if (toks.size() != 2) throw ParseError(lineno, "expected 're im' on coefficient line");
  return {parse_number(toks[0], lineno), parse_number(toks[1], lineno)};
}

template <class F>
void for_each_line(std::string_view text, F&& fn) {
  std::size_t lineno = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    fn(trim(raw), lineno);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++lineno;
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_coefficients(std::ostream& out, const TruncatedSeries& f) {
  for (const cplx& c : f.coeffs()) out << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
}

TruncatedSeries parse_coefficients(std::string_view text) {
  std::vector<cplx> c;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (line.empty() || line.front() == '#') return;
    c.push_back(parse_complex_line(line, lineno));
  });
  if (c.empty()) throw ParseError(0, "coefficient file holds no coefficients");
  return TruncatedSeries(std::move(c));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::IoError, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename onto '" + path.string() + "': " + ec.message());
}

TruncatedSeries read_coefficients_file(const std::filesystem::path& path) {
  return parse_coefficients(read_file(path));
}

void write_coefficients_file(const std::filesystem::path& path, const TruncatedSeries& f) {
  std::ostringstream ss;
  write_coefficients(ss, f);
  write_file_atomic(path, ss.str());
}

void Document::set(std::string key, std::string value) {
  for (auto& [k, v] : scalars) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  scalars.emplace_back(std::move(key), std::move(value));
}

void Document::set(std::string key, double value) { set(std::move(key), format_double(value)); }

void Document::set(std::string key, long long value) { set(std::move(key), std::to_string(value)); }

void Document::add_block(std::string name, TruncatedSeries series) {
  blocks.emplace_back(std::move(name), std::move(series));
}

bool Document::has(std::string_view key) const {
  for (const auto& [k, v] : scalars)
    if (k == key) return true;
  return false;
}

const std::string& Document::scalar(std::string_view key) const {
  for (const auto& [k, v] : scalars)
    if (k == key) return v;
  throw Error(ErrorCode::ParseError, "missing field '" + std::string(key) + "'");
}

double Document::number(std::string_view key) const { return parse_number(scalar(key), 0); }

long long Document::integer(std::string_view key) const {
  const std::string& s = scalar(key);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "' is not an integer");
  }
  return v;
}

const TruncatedSeries& Document::block(std::string_view name) const {
  for (const auto& [n, s] : blocks)
    if (n == name) return s;
  throw Error(ErrorCode::ParseError, "missing block '[" + std::string(name) + "]'");
}

std::string render(const Document& doc) {
  std::ostringstream ss;
  for (const auto& [k, v] : doc.scalars) ss << k << ' ' << v << '\n';
  for (const auto& [name, series] : doc.blocks) {
    ss << '[' << name << "]\n";
    write_coefficients(ss, series);
  }
  return ss.str();
}

Document parse_document(std::string_view text) {
  Document doc;
  std::string current;
  std::vector<cplx> coeffs;
  bool in_block = false;
  auto flush = [&](std::size_t lineno) {
    if (!in_block) return;
    if (coeffs.empty()) throw ParseError(lineno, "block '[" + current + "]' is empty");
    doc.add_block(current, TruncatedSeries(std::move(coeffs)));
    coeffs = {};
  };
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (line.empty() || line.front() == '#') return;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, "unterminated block header");
      flush(lineno);
      current = std::string(line.substr(1, line.size() - 2));
      in_block = true;
      return;
    }
    if (in_block) {
      coeffs.push_back(parse_complex_line(line, lineno));
      return;
    }
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw ParseError(lineno, "expected 'key value'");
    doc.set(std::string(line.substr(0, sp)), std::string(trim(line.substr(sp + 1))));
  });
  flush(0);
  return doc;
}

}  // namespace hb::io

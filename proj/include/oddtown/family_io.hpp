#pragma once

// Plain-text family files:
//
//   # comment
//   n=5
//   1 2 3
//   empty
//
// The header line gives the ground size. Each following non-empty line is one
// set of 1-based labels; `empty` denotes the empty set.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddtown/errors.hpp"
#include "oddtown/set_family.hpp"

namespace oddtown {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::size_t parse_count(const std::string& text, std::size_t line, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a non-negative integer for " + what + ", got '" + text + "'");
  }
  if (pos != text.size() || text.front() == '-')
    throw ParseError(line, "expected a non-negative integer for " + what + ", got '" + text + "'");
  return static_cast<std::size_t>(v);
}

// Parses `key=value` tokens of a header line.
inline std::map<std::string, std::size_t> parse_header(const std::string& text, std::size_t line) {
  std::map<std::string, std::size_t> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw ParseError(line, "malformed header token '" + tok + "'");
    const auto key = tok.substr(0, eq);
    if (out.count(key)) throw ParseError(line, "repeated header key '" + key + "'");
    out[key] = parse_count(tok.substr(eq + 1), line, key);
  }
  return out;
}

inline BitSubset parse_set_line(const std::string& text, std::size_t n, std::size_t line) {
  BitSubset s(n);
  if (text == "empty") return s;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const std::size_t label = parse_count(tok, line, "element");
    if (label == 0 || label > n)
      throw ParseError(line, "element " + tok + " outside [1," + std::to_string(n) + "]");
    if (s.test(label - 1)) throw ParseError(line, "element " + tok + " repeated");
    s.set(label - 1);
  }
  return s;
}

struct BlockFile {
  std::map<std::string, std::size_t> header;
  std::vector<std::pair<std::size_t, BitSubset>> sets;  // (line, set)
};

inline BlockFile read_block_file(std::istream& in, const std::vector<std::string>& required_keys) {
  BlockFile f;
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!have_header) {
      f.header = parse_header(text, line);
      for (const auto& k : required_keys)
        if (!f.header.count(k)) throw ParseError(line, "header is missing '" + k + "='");
      for (const auto& [k, v] : f.header)
        if (std::find(required_keys.begin(), required_keys.end(), k) == required_keys.end())
          throw ParseError(line, "unknown header key '" + k + "'");
      n = f.header.at("n");
      if (n == 0) throw ParseError(line, "ground size must be at least 1");
      have_header = true;
      continue;
    }
    f.sets.emplace_back(line, parse_set_line(text, n, line));
  }
  if (!have_header) throw ParseError(line == 0 ? 1 : line, "missing header line");
  return f;
}

inline void write_set_line(std::ostream& out, const BitSubset& s) {
  if (s.none()) {
    out << "empty\n";
    return;
  }
  bool first = true;
  for (std::size_t e : s.elements()) {
    if (!first) out << ' ';
    out << e + 1;
    first = false;
  }
  out << '\n';
}

}  // namespace detail

inline SetFamily read_family(std::istream& in) {
  auto f = detail::read_block_file(in, {"n"});
  SetFamily fam(f.header.at("n"));
  for (auto& [line, s] : f.sets) {
    if (fam.contains(s)) throw ParseError(line, "duplicate set " + s.to_string());
    fam.add(std::move(s));
  }
  return fam;
}

inline SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_family(in);
}

inline void write_family(std::ostream& out, const SetFamily& family) {
  out << "n=" << family.ground_size() << '\n';
  for (const auto& s : family) detail::write_set_line(out, s);
}

inline void save_family(const std::string& path, const SetFamily& family) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_family(out, family);
}

}  // namespace oddtown

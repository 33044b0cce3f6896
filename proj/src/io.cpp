#include "latcov/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace latcov {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& msg) {
  throw Error(name + ":" + std::to_string(line) + ": " + msg);
}

/// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{n, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::optional<Coord> parse_int(const std::string& s) {
  Coord v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

Coord parse_coord(const std::string& tok, const std::string& name, std::size_t line) {
  auto v = parse_int(tok);
  if (!v) fail(name, line, "expected an integer, got '" + tok + "'");
  if (*v > kInputLimit || *v < -kInputLimit) fail(name, line, "coordinate out of range: " + tok);
  return *v;
}

/// Consumes a leading "dim <d>" line if present.
std::optional<std::size_t> read_header(const std::vector<Line>& lines, std::size_t& pos,
                                       const std::string& name) {
  if (pos >= lines.size() || lines[pos].tokens[0] != "dim") return std::nullopt;
  const Line& h = lines[pos++];
  if (h.tokens.size() != 2) fail(name, h.number, "header must be 'dim <d>'");
  auto d = parse_int(h.tokens[1]);
  if (!d || *d < 1 || *d > static_cast<Coord>(kMaxDim)) {
    fail(name, h.number, "dimension must be between 1 and " + std::to_string(kMaxDim));
  }
  return static_cast<std::size_t>(*d);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ":0: cannot open file");
  return in;
}

}  // namespace

LatticeSet read_points(std::istream& in, const std::string& name) {
  const auto lines = tokenize(in);
  std::size_t pos = 0;
  const std::size_t dim = read_header(lines, pos, name).value_or(2);
  std::vector<LatticeVector> pts;
  std::vector<std::size_t> origin;
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.tokens.size() != dim) {
      fail(name, l.number, "expected " + std::to_string(dim) + " integers, got " +
                               std::to_string(l.tokens.size()));
    }
    LatticeVector p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = parse_coord(l.tokens[i], name, l.number);
    pts.push_back(p);
    origin.push_back(l.number);
  }
  if (pts.empty()) fail(name, lines.empty() ? 0 : lines.back().number, "no points");
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (pts[order[i]] == pts[order[i - 1]]) {
      fail(name, origin[order[i]], "duplicate point " + to_string(pts[order[i]]));
    }
  }
  return LatticeSet(std::move(pts));
}

LatticeSet load_points(const std::string& path) {
  auto in = open(path);
  return read_points(in, path);
}

void write_points(std::ostream& out, const LatticeSet& k) {
  out << "dim " << k.dim() << '\n';
  for (const auto& p : k) {
    for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  }
}

std::string format_points(const LatticeSet& k) {
  std::ostringstream os;
  write_points(os, k);
  return os.str();
}

Covariogram read_covariogram(std::istream& in, const std::string& name) {
  const auto lines = tokenize(in);
  std::size_t pos = 0;
  const auto dim = read_header(lines, pos, name);
  if (!dim) fail(name, lines.empty() ? 0 : lines.front().number, "missing 'dim <d>' header");
  std::vector<CovEntry> entries;
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.tokens.size() != *dim + 1) {
      fail(name, l.number, "expected " + std::to_string(*dim + 1) + " integers, got " +
                               std::to_string(l.tokens.size()));
    }
    LatticeVector u(*dim);
    for (std::size_t i = 0; i < *dim; ++i) u[i] = parse_coord(l.tokens[i], name, l.number);
    auto count = parse_int(l.tokens[*dim]);
    if (!count || *count <= 0) fail(name, l.number, "count must be a positive integer");
    if (!entries.empty() && !(entries.back().offset < u)) {
      fail(name, l.number, "entries must be strictly sorted by vector");
    }
    entries.push_back({u, *count});
  }
  try {
    return Covariogram::from_entries(*dim, std::move(entries));
  } catch (const Error& e) {
    throw Error(name + ":0: " + e.what());
  }
}

Covariogram load_covariogram(const std::string& path) {
  auto in = open(path);
  return read_covariogram(in, path);
}

void write_covariogram(std::ostream& out, const Covariogram& g) {
  out << "dim " << g.dim() << '\n';
  for (const auto& e : g.entries()) {
    for (Coord c : e.offset.coords()) out << c << ' ';
    out << e.count << '\n';
  }
}

std::string format_covariogram(const Covariogram& g) {
  std::ostringstream os;
  write_covariogram(os, g);
  return os.str();
}

LatticeVector parse_vector_arg(const std::string& text, std::size_t dim) {
  std::vector<Coord> parts;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    auto v = parse_int(tok);
    if (!v) throw Error("invalid vector '" + text + "'");
    parts.push_back(*v);
  }
  if (parts.size() != dim) {
    throw Error("vector '" + text + "' must have " + std::to_string(dim) + " components");
  }
  return LatticeVector::from_span(parts);
}

}  // namespace latcov

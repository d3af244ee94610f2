#include "semigraph/io.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semigraph {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits into non-empty lines of tokens with comments removed.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t from = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > from) line.tokens.push_back({raw.substr(from, i - from), from + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void syntax(std::size_t line, std::size_t column, const std::string& detail) {
  throw Error(ErrorCode::SyntaxError, detail).at({line, column});
}

std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::int64_t> parse_signed(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) syntax(1, 0, "missing header 'n <count>'");
  const Line& h = lines.front();
  if (h.tokens[0].text != "n" || h.tokens.size() != 2) {
    syntax(h.number, h.tokens[0].column, "expected header 'n <count>'");
  }
  const auto n = parse_unsigned(h.tokens[1].text);
  if (!n || *n == 0) syntax(h.number, h.tokens[1].column, "vertex count must be a positive integer");
  return static_cast<std::size_t>(*n);
}

constexpr std::int64_t kQuarterLimit = std::numeric_limits<std::int64_t>::max() / 8;

// Value in quarters, or nullopt when the token is a number that is not a
// multiple of 1/4. Non-numeric tokens are syntax errors.
std::optional<std::int64_t> parse_quarters(const Token& tok, std::size_t line) {
  std::string_view s = tok.text;
  auto bad = [&] { syntax(line, tok.column, "'" + std::string(s) + "' is not a number"); };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_signed(s.substr(0, slash));
    const auto den = parse_unsigned(s.substr(slash + 1));
    if (!num || !den) bad();
    if (*den == 0) syntax(line, tok.column, "zero denominator in '" + std::string(s) + "'");
    if (std::abs(*num) > kQuarterLimit) syntax(line, tok.column, "entry out of range");
    const std::int64_t scaled = *num * 4;
    if (scaled % static_cast<std::int64_t>(*den) != 0) return std::nullopt;
    return scaled / static_cast<std::int64_t>(*den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) bad();
    const auto w = whole.empty() ? std::optional<std::uint64_t>(0) : parse_unsigned(whole);
    const auto f = frac.empty() ? std::optional<std::uint64_t>(0) : parse_unsigned(frac);
    if (!w || !f || (!whole.empty() && whole.front() == '+') || (!frac.empty() && frac.front() == '+')) bad();
    if (*w > static_cast<std::uint64_t>(kQuarterLimit)) syntax(line, tok.column, "entry out of range");
    // Fraction digits beyond the second must be zero for a quarter value.
    std::string_view digits = frac;
    while (digits.size() > 2 && digits.back() == '0') digits.remove_suffix(1);
    if (digits.size() > 2) return std::nullopt;
    std::uint64_t hundredths = 0;
    for (std::size_t k = 0; k < 2; ++k) hundredths = hundredths * 10 + (k < digits.size() ? digits[k] - '0' : 0);
    if (hundredths % 25 != 0) return std::nullopt;
    const std::int64_t q = static_cast<std::int64_t>(*w) * 4 + static_cast<std::int64_t>(hundredths / 25);
    return negative ? -q : q;
  }
  const auto v = parse_signed(s);
  if (!v) bad();
  if (std::abs(*v) > kQuarterLimit) syntax(line, tok.column, "entry out of range");
  return *v * 4;
}

struct RawMatrix {
  SquareMatrix matrix;
  std::vector<TextLocation> where;  // row-major token positions
};

RawMatrix read_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines);
  if (lines.size() - 1 < n) {
    const std::size_t at = lines.empty() ? 1 : lines.back().number;
    syntax(at, 0, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > n) syntax(lines[n + 1].number, 0, "unexpected row beyond the declared size");

  RawMatrix out{SquareMatrix(n), std::vector<TextLocation>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = lines[i + 1];
    if (line.tokens.size() != n) {
      syntax(line.number, 0, "row " + std::to_string(i + 1) + " has " + std::to_string(line.tokens.size()) +
                                 " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Token& tok = line.tokens[j];
      const auto q = parse_quarters(tok, line.number);
      if (!q) {
        throw Error(ErrorCode::IllegalEntry, "'" + std::string(tok.text) + "' is not a multiple of 1/4")
            .at({line.number, tok.column});
      }
      out.matrix.set(i, j, QScalar::from_quarters(*q));
      out.where[i * n + j] = {line.number, tok.column};
    }
  }
  return out;
}

}  // namespace

Semigraph parse_smg(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines);
  std::vector<std::vector<std::size_t>> edges;
  std::vector<std::size_t> edge_lines;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0].text != "e") {
      syntax(line.number, line.tokens[0].column,
             "unknown record '" + std::string(line.tokens[0].text) + "', expected 'e'");
    }
    std::vector<std::size_t> edge;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const auto v = parse_unsigned(line.tokens[t].text);
      if (!v) syntax(line.number, line.tokens[t].column, "vertex label must be a positive integer");
      if (*v == 0 || *v > n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::string(line.tokens[t].text) + " outside 1.." + std::to_string(n))
            .at({line.number, line.tokens[t].column});
      }
      edge.push_back(static_cast<std::size_t>(*v - 1));
    }
    edges.push_back(std::move(edge));
    edge_lines.push_back(line.number);
  }
  try {
    return build_semigraph(n, edges);
  } catch (const Error& err) {
    if (err.edge_indices().empty()) throw;
    throw err.at({edge_lines[err.edge_indices().back()], 0});
  }
}

std::string emit_smg(const Semigraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e";
    for (VertexId v : e.vertices()) out += " " + std::to_string(v.index() + 1);
    out += "\n";
  }
  return out;
}

SquareMatrix parse_qmat_raw(std::string_view text) { return read_matrix(text).matrix; }

SymMatrix parse_qmat(std::string_view text) {
  const RawMatrix raw = read_matrix(text);
  const SquareMatrix& m = raw.matrix;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_adjacency_alphabet(m.at(i, j))) {
        throw Error(ErrorCode::IllegalEntry,
                    "entry " + m.at(i, j).to_string() + " is outside {0, 1/4, 1/2, 1, 2, ...}")
            .at(raw.where[i * n + j]);
      }
    }
  }
  if (auto bad = find_structural_violation(m)) {
    const std::string detail =
        bad->code == ErrorCode::NonzeroDiagonal
            ? "diagonal entry is " + bad->value.to_string()
            : "entry is " + bad->value.to_string() + " but its mirror at row " + std::to_string(bad->col + 1) +
                  " is " + bad->mirror.to_string();
    throw Error(bad->code, detail).at(raw.where[bad->row * n + bad->col]);
  }
  return SymMatrix(m);
}

std::string emit_qmat(const SquareMatrix& m) {
  std::string out = "n " + std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += " ";
      out += m.at(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

std::string emit_qmat(const SymMatrix& m) { return emit_qmat(m.square()); }

}  // namespace semigraph

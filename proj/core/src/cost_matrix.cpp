#include "permsort/cost_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "permsort/error.hpp"

namespace permsort {

CostMatrix::CostMatrix(std::size_t n, Cost fill, CostKind kind)
    : n_(n), cost_(n * n, fill), kind_(kind) {
  if (n == 0) throw ContractError("cost matrix needs n >= 1");
  if (std::isnan(fill) || fill < 0) {
    throw ContractError("cost fill value must be non-negative");
  }
  for (std::size_t i = 0; i < n; ++i) cost_[i * n + i] = 0;
}

void CostMatrix::set(Label a, Label b, Cost value) {
  const auto n = static_cast<Label>(n_);
  if (a == b || a < 1 || b < 1 || a > n || b > n) {
    throw ContractError("invalid pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ") for n=" + std::to_string(n_));
  }
  if (std::isnan(value) || value < 0) {
    throw ContractError("negative or NaN cost for (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
  }
  cost_[index(a, b)] = value;
  cost_[index(b, a)] = value;
}

CostMatrix CostMatrix::with_kind(CostKind kind) const {
  CostMatrix out = *this;
  out.kind_ = kind;
  return out;
}

Cost CostMatrix::max_finite() const {
  Cost best = 0;
  bool any = false;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Cost c = cost_[i * n_ + j];
      if (is_finite(c)) {
        best = any ? std::max(best, c) : c;
        any = true;
      }
    }
  }
  return any ? best : kInfinity;
}

Cost CostMatrix::min_finite() const {
  Cost best = kInfinity;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) best = std::min(best, cost_[i * n_ + j]);
  }
  return best;
}

bool CostMatrix::all_finite_integral() const {
  return std::all_of(cost_.begin(), cost_.end(), [](Cost c) {
    return !is_finite(c) || std::floor(c) == c;
  });
}

Cost decomposition_cost(const Decomposition& d, const CostMatrix& costs) {
  Cost total = 0;
  for (const Transposition& t : d) total += costs(t);
  return total;
}

void DefiningPath::check() const {
  const auto n = order.size();
  if (n < 2) throw ContractError("defining path needs at least two vertices");
  if (weights.size() != n - 1) {
    throw ContractError("defining path on " + std::to_string(n) +
                        " vertices needs " + std::to_string(n - 1) +
                        " weights, got " + std::to_string(weights.size()));
  }
  std::vector<bool> seen(n + 1, false);
  for (Label v : order) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw ContractError("defining path order is not a permutation of 1.." +
                          std::to_string(n));
    }
    seen[v] = true;
  }
  for (Cost w : weights) {
    if (std::isnan(w) || w < 0 || !is_finite(w)) {
      throw ContractError("defining path weights must be finite and >= 0");
    }
  }
}

CostMatrix from_pairs(std::size_t n, std::span<const CostEntry> entries) {
  CostMatrix m(n);
  std::vector<bool> given(n * n, false);
  for (const CostEntry& e : entries) {
    const bool in_range = e.a >= 1 && e.b >= 1 &&
                          static_cast<std::size_t>(e.a) <= n &&
                          static_cast<std::size_t>(e.b) <= n;
    if (in_range && e.a != e.b) {
      const auto key = static_cast<std::size_t>(std::min(e.a, e.b) - 1) * n +
                       static_cast<std::size_t>(std::max(e.a, e.b) - 1);
      if (given[key] && m(e.a, e.b) != e.value) {
        throw ContractError("conflicting values for pair (" +
                            std::to_string(e.a) + "," + std::to_string(e.b) +
                            ")");
      }
      given[key] = true;
    }
    m.set(e.a, e.b, e.value);  // validates range and sign
  }
  return m;
}

CostMatrix metric_path(const DefiningPath& path) {
  path.check();
  const auto n = path.size();
  CostMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Cost run = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      run += path.weights[j - 1];
      m.set(path.order[i], path.order[j], run);
    }
  }
  return m;
}

CostMatrix extended_metric_path(const DefiningPath& path) {
  path.check();
  CostMatrix m(path.size());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    m.set(path.order[i], path.order[i + 1], path.weights[i]);
  }
  return m;
}

bool is_metric(const CostMatrix& costs, Cost tolerance) {
  const auto n = static_cast<Label>(costs.size());
  for (Label a = 1; a <= n; ++a) {
    for (Label c = a + 1; c <= n; ++c) {
      const Cost direct = costs(a, c);
      for (Label b = 1; b <= n; ++b) {
        if (b == a || b == c) continue;
        const Cost via = costs(a, b) + costs(b, c);
        if (direct > via + tolerance) return false;
      }
    }
  }
  return true;
}

namespace {

// Splits text into (line number, content) pairs with comments and blank lines
// removed.
std::vector<std::pair<int, std::string>> significant_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::any_of(line.begin(), line.end(),
                    [](unsigned char ch) { return !std::isspace(ch); })) {
      out.emplace_back(line_no, std::move(line));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

Cost parse_value(const std::string& tok, int line) {
  if (tok == "inf" || tok == "+inf" || tok == "infinity") return kInfinity;
  Cost v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || std::isnan(v) ||
      std::isinf(v)) {
    throw ParseError(line, "bad cost value '" + tok + "'");
  }
  if (v < 0) throw ParseError(line, "negative cost '" + tok + "'");
  return v;
}

long parse_int(const std::string& tok, int line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return v;
}

CostMatrix parse_pairs_body(const std::vector<std::pair<int, std::string>>& lines) {
  const auto& [first_no, first] = lines.front();
  const auto head = tokens(first);
  if (head.size() != 2 || head[0] != "n") {
    throw ParseError(first_no, "expected header 'n <N>'");
  }
  const long n = parse_int(head[1], first_no);
  if (n < 1) throw ParseError(first_no, "n must be >= 1");
  std::vector<CostEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, text] = lines[i];
    const auto toks = tokens(text);
    if (toks.size() != 3) throw ParseError(no, "expected '<a> <b> <value>'");
    const long a = parse_int(toks[0], no);
    const long b = parse_int(toks[1], no);
    if (a == b || a < 1 || b < 1 || a > n || b > n) {
      throw ParseError(no, "pair out of range or degenerate");
    }
    entries.push_back({static_cast<Label>(a), static_cast<Label>(b),
                       parse_value(toks[2], no)});
    // Report duplicate conflicts against the offending line.
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
      const auto& e = entries[k];
      const auto& cur = entries.back();
      if (std::minmax(e.a, e.b) == std::minmax(cur.a, cur.b) &&
          e.value != cur.value) {
        throw ParseError(no, "conflicting duplicate pair");
      }
    }
  }
  return from_pairs(static_cast<std::size_t>(n), entries);
}

DefiningPath parse_path_body(const std::vector<std::pair<int, std::string>>& lines) {
  if (lines.size() != 3) {
    const int no = lines.size() > 3 ? lines[3].first : lines.back().first;
    throw ParseError(no, "path file needs exactly: header, vertex order, weights");
  }
  DefiningPath path;
  for (const auto& tok : tokens(lines[1].second)) {
    path.order.push_back(static_cast<Label>(parse_int(tok, lines[1].first)));
  }
  for (const auto& tok : tokens(lines[2].second)) {
    path.weights.push_back(parse_value(tok, lines[2].first));
  }
  try {
    path.check();
  } catch (const ContractError& e) {
    throw ParseError(lines[1].first, e.what());
  }
  return path;
}

}  // namespace

ParsedCosts parse_cost_text(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty cost file");
  const auto head = tokens(lines.front().second);
  if (head.size() == 1 && (head[0] == "path" || head[0] == "extended-path")) {
    DefiningPath path = parse_path_body(lines);
    CostMatrix m =
        head[0] == "path" ? metric_path(path) : extended_metric_path(path);
    // Only a metric path admits the exact construction.
    if (head[0] == "path") return {std::move(m), std::move(path)};
    return {std::move(m), std::nullopt};
  }
  return {parse_pairs_body(lines), std::nullopt};
}

CostMatrix parse_cost_file(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty cost file");
  return parse_pairs_body(lines);
}

DefiningPath parse_path_file(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty path file");
  if (tokens(lines.front().second) != std::vector<std::string>{"path"}) {
    throw ParseError(lines.front().first, "expected header 'path'");
  }
  return parse_path_body(lines);
}

std::string format_cost(Cost c) {
  if (!is_finite(c)) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c);
  return std::string(buf, ptr);
}

std::string serialize_cost_file(const CostMatrix& costs) {
  std::string out = "n " + std::to_string(costs.size()) + "\n";
  const auto n = static_cast<Label>(costs.size());
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      out += std::to_string(a) + " " + std::to_string(b) + " " +
             format_cost(costs(a, b)) + "\n";
    }
  }
  return out;
}

}  // namespace permsort

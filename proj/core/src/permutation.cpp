#include "permsort/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "permsort/error.hpp"

namespace permsort {

Transposition::Transposition(Label x, Label y)
    : a_(std::min(x, y)), b_(std::max(x, y)) {
  if (x == y) {
    throw ContractError("transposition needs two distinct labels, got (" +
                        std::to_string(x) + " " + std::to_string(y) + ")");
  }
}

Cycle::Cycle(std::vector<Label> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ContractError("empty cycle");
  std::vector<Label> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractError("cycle repeats an element");
  }
  auto min_it = std::min_element(elements_.begin(), elements_.end());
  std::rotate(elements_.begin(), min_it, elements_.end());
}

Decomposition concat(const Decomposition& left, const Decomposition& right) {
  Decomposition out = left;
  out.append(right);
  return out;
}

Permutation::Permutation(std::vector<Label> images)
    : images_(std::move(images)) {
  const auto n = images_.size();
  if (n == 0) throw ContractError("permutation must have n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (Label v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw ContractError("images are not a bijection on {1.." +
                          std::to_string(n) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw ContractError("permutation must have n >= 1");
  std::vector<Label> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Label>(i + 1);
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     std::span<const Cycle> cycle_list) {
  std::vector<Label> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Label>(i + 1);
  std::vector<bool> used(n + 1, false);
  for (const Cycle& c : cycle_list) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Label x = c[i];
      if (x < 1 || static_cast<std::size_t>(x) > n) {
        throw ContractError("cycle element " + std::to_string(x) +
                            " out of range 1.." + std::to_string(n));
      }
      if (used[x]) {
        throw ContractError("cycles are not disjoint at " + std::to_string(x));
      }
      used[x] = true;
      images[x - 1] = c.next(i);
    }
  }
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::from_transposition(std::size_t n,
                                            const Transposition& t) {
  return apply_transposition(identity(n), t);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Label>(i + 1)) return false;
  }
  return true;
}

Permutation compose(const Permutation& p2, const Permutation& p1) {
  if (p1.size() != p2.size()) {
    throw ContractError("compose: size mismatch " + std::to_string(p2.size()) +
                        " vs " + std::to_string(p1.size()));
  }
  std::vector<Label> images(p1.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = p2(p1.images_[i]);
  }
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Label> images(p.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[p.images_[i] - 1] = static_cast<Label>(i + 1);
  }
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

std::vector<Cycle> cycles(const Permutation& p) {
  const auto n = p.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<Cycle> out;
  // Scanning starts in increasing order, so each cycle is discovered from its
  // minimum and the list comes out sorted by minimum.
  for (Label start = 1; static_cast<std::size_t>(start) <= n; ++start) {
    if (seen[start]) continue;
    std::vector<Label> elems;
    for (Label x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      elems.push_back(x);
    }
    out.emplace_back(std::move(elems));
  }
  return out;
}

std::size_t cycle_count(const Permutation& p) { return cycles(p).size(); }

std::vector<Cycle> nontrivial_cycles(const Permutation& p) {
  std::vector<Cycle> out;
  for (Cycle& c : cycles(p)) {
    if (c.size() >= 2) out.push_back(std::move(c));
  }
  return out;
}

std::size_t inversion_count(const Permutation& p) {
  std::size_t count = 0;
  const auto img = p.images();
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] > img[j]) ++count;
    }
  }
  return count;
}

Parity parity(const Permutation& p) {
  return inversion_count(p) % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

Permutation apply_transposition(const Permutation& p, const Transposition& t) {
  const auto n = static_cast<Label>(p.size());
  if (t.a() < 1 || t.b() > n) {
    throw ContractError("transposition (" + std::to_string(t.a()) + " " +
                        std::to_string(t.b()) + ") out of range 1.." +
                        std::to_string(n));
  }
  std::vector<Label> images = p.images_;
  for (Label& v : images) {
    if (v == t.a()) {
      v = t.b();
    } else if (v == t.b()) {
      v = t.a();
    }
  }
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation product(const Decomposition& d, std::size_t n) {
  Permutation acc = Permutation::identity(n);
  for (auto it = d.written().rbegin(); it != d.written().rend(); ++it) {
    acc = apply_transposition(acc, *it);
  }
  return acc;
}

bool validate_decomposition(const Decomposition& d, const Permutation& target) {
  const auto n = static_cast<Label>(target.size());
  for (const Transposition& t : d) {
    if (t.a() < 1 || t.b() > n) return false;
  }
  const Parity length_parity = d.size() % 2 == 0 ? Parity::kEven : Parity::kOdd;
  if (length_parity != parity(target)) return false;
  return product(d, target.size()) == target;
}

std::size_t cayley_length(const Permutation& p) {
  return p.size() - cycle_count(p);
}

namespace {

std::vector<Label> parse_labels(std::string_view text, int line) {
  std::vector<Label> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Label v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw ParseError(line, "expected an integer label near '" +
                                 std::string(text.substr(i, 8)) + "'");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation parse_one_line(std::string_view text) {
  auto labels = parse_labels(text, 1);
  try {
    return Permutation(std::move(labels));
  } catch (const ContractError& e) {
    throw ParseError(1, e.what());
  }
}

std::string format_one_line(const Permutation& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p.images()[i];
  }
  return os.str();
}

Permutation parse_cycle_notation(std::string_view text, std::size_t n) {
  std::vector<Cycle> parsed;
  std::size_t i = 0;
  try {
    while (i < text.size()) {
      const char ch = text[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (ch != '(') throw ParseError(1, "expected '(' in cycle notation");
      const auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw ParseError(1, "unterminated cycle");
      }
      auto labels = parse_labels(text.substr(i + 1, close - i - 1), 1);
      if (!labels.empty()) parsed.emplace_back(std::move(labels));
      i = close + 1;
    }
    return Permutation::from_cycles(n, parsed);
  } catch (const ContractError& e) {
    throw ParseError(1, e.what());
  }
}

std::string format_cycle(const Cycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string format_cycle_notation(const Permutation& p) {
  std::string out;
  for (const Cycle& c : nontrivial_cycles(p)) out += format_cycle(c);
  return out.empty() ? "()" : out;
}

std::string format_transpositions(const Decomposition& d) {
  const bool compact = std::all_of(d.begin(), d.end(), [](const Transposition& t) {
    return t.b() <= 9;
  });
  std::string out;
  for (const Transposition& t : d) {
    out += '(';
    out += std::to_string(t.a());
    if (!compact) out += ' ';
    out += std::to_string(t.b());
    out += ')';
  }
  return out;
}

}  // namespace permsort

#include "klrpoly/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "klrpoly/error.hpp"

namespace klrpoly {

Transposition::Transposition(int i, int j) : i_(i), j_(j) {
  if (i < 1 || j <= i) {
    throw DomainError("transposition (" + std::to_string(i) + "," + std::to_string(j) +
                      ") needs 1 <= i < j");
  }
}

std::string to_string(const Transposition &t) {
  return "(" + std::to_string(t.i()) + "," + std::to_string(t.j()) + ")";
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) {
    throw DomainError("permutation must have n >= 1");
  }
  std::vector<bool> seen(n + 1, false);
  for (int x : entries_) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) {
      throw DomainError("entries are not a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation must have n >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw DomainError("permutation must have n >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.rbegin(), e.rend(), 1);
  return Permutation(std::move(e), Unchecked{});
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Permutation checked(std::vector<int> entries, std::string_view text) {
  try {
    return Permutation(std::move(entries));
  } catch (const DomainError &) {
    throw ParseError("'" + std::string(text) + "' is not a permutation of 1..n");
  }
}

} // namespace

Permutation parse_permutation(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) {
    throw ParseError("empty permutation");
  }

  if (body.front() == '[') {
    if (body.back() != ']') {
      throw ParseError("unterminated bracketed permutation '" + std::string(text) + "'");
    }
    std::string_view rest = body.substr(1, body.size() - 2);
    std::vector<int> entries;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      int value = 0;
      const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
        throw ParseError("bad entry '" + std::string(item) + "' in '" + std::string(text) + "'");
      }
      entries.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return checked(std::move(entries), text);
  }

  std::vector<int> entries;
  for (char c : body) {
    if (c < '1' || c > '9') {
      throw ParseError("compact permutation '" + std::string(text) +
                       "' may only contain digits 1-9; use [a,b,...] for n >= 10");
    }
    entries.push_back(c - '0');
  }
  return checked(std::move(entries), text);
}

std::string format_permutation_bracketed(const Permutation &w) {
  std::string out = "[";
  for (int p = 1; p <= w.size(); ++p) {
    if (p > 1) out += ',';
    out += std::to_string(w(p));
  }
  out += ']';
  return out;
}

std::string format_permutation(const Permutation &w) {
  if (w.size() > 9) return format_permutation_bracketed(w);
  std::string out;
  for (int x : w.entries()) out += static_cast<char>('0' + x);
  return out;
}

int length(const Permutation &w) {
  const auto e = w.entries();
  int inv = 0;
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (e[a] > e[b]) ++inv;
    }
  }
  return inv;
}

Permutation multiply_right(const Permutation &w, const Transposition &t) {
  if (t.j() > w.size()) {
    throw DomainError(to_string(t) + " is not a transposition of S_" + std::to_string(w.size()));
  }
  std::vector<int> e(w.entries().begin(), w.entries().end());
  std::swap(e[static_cast<std::size_t>(t.i() - 1)], e[static_cast<std::size_t>(t.j() - 1)]);
  return Permutation(std::move(e), Permutation::Unchecked{});
}

std::vector<int> right_descents(const Permutation &w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw DomainError("permutation must have n >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(e, Permutation::Unchecked{}));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

void require_same_size(const Permutation &u, const Permutation &v) {
  if (u.size() != v.size()) {
    throw DomainError("permutations of different sizes (" + std::to_string(u.size()) + " vs " +
                      std::to_string(v.size()) + ")");
  }
}

} // namespace klrpoly

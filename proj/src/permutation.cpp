#include "geoposet/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace geoposet {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw InputError("permutation must have at least one symbol");
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n)
      throw InputError("symbol " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw InputError("symbol " + std::to_string(v) + " repeated; word is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InputError("empty permutation text");

  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw InputError("unexpected character '" + std::string(1, c) + "' in permutation");
      word.push_back(c - '0');
    }
    if (word.size() > 9)
      throw InputError("contiguous-digit form is limited to n <= 9; use commas");
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = trim(text.substr(start, comma - start));
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("bad symbol '" + std::string(tok) + "' in permutation");
      word.push_back(value);
      start = comma + 1;
    }
  }
  return Permutation(std::move(word));
}

std::string to_string(const Permutation& p) {
  std::string out;
  const bool digits = p.size() <= 9;
  for (int k = 1; k <= p.size(); ++k) {
    if (!digits && k > 1) out += ',';
    out += std::to_string(p(k));
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) w[static_cast<std::size_t>(p(k) - 1)] = k;
  return Permutation(std::move(w));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InputError("compose: size mismatch");
  std::vector<int> w(static_cast<std::size_t>(inner.size()));
  for (int k = 1; k <= inner.size(); ++k) w[static_cast<std::size_t>(k - 1)] = outer(inner(k));
  return Permutation(std::move(w));
}

int inversion_count(const Permutation& p) {
  int count = 0;
  auto w = p.word();
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++count;
  return count;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_rank(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::size_t rank = 0;
  for (int a = 0; a < n; ++a) {
    int smaller_after = 0;
    for (int b = a + 1; b < n; ++b)
      if (word[static_cast<std::size_t>(b)] < word[static_cast<std::size_t>(a)]) ++smaller_after;
    rank = rank * static_cast<std::size_t>(n - a) + static_cast<std::size_t>(smaller_after);
  }
  return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(pool.size());
  for (int a = n; a >= 1; --a) {
    const std::size_t f = factorial(a - 1);
    const std::size_t idx = rank / f;
    rank %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(w));
}

}  // namespace geoposet

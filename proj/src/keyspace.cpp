#include "graybox/keyspace.hpp"

#include <algorithm>
#include <sstream>

#include "graybox/error.hpp"
#include "graybox/rng.hpp"

namespace graybox::keyspace {

namespace {

std::vector<int> divisors_of(int n) {
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

// f[n] = number of compositions of n into parts dividing dim.
std::vector<BigInt> composition_table(int dim) {
  const auto ds = divisors_of(dim);
  std::vector<BigInt> f(static_cast<std::size_t>(dim) + 1);
  f[0] = 1;
  for (int n = 1; n <= dim; ++n)
    for (int d : ds)
      if (d <= n) f[n] += f[n - d];
  return f;
}

// Uniform BigInt in [0, bound) by rejection over the bit length of bound-1.
BigInt uniform_big(SplitMix64& rng, const BigInt& bound) {
  if (bound <= 1) return 0;
  const std::size_t bits = boost::multiprecision::msb(bound - 1) + 1;
  for (;;) {
    BigInt x = 0;
    std::size_t filled = 0;
    while (filled < bits) {
      x <<= 64;
      x |= rng.next_u64();
      filled += 64;
    }
    x >>= (filled - bits);
    if (x < bound) return x;
  }
}

}  // namespace

Key validate_key(const std::vector<int>& parts, int dim) {
  if (parts.empty()) throw Error("EmptyKey", "key must have at least one part");
  if (dim < 2) throw Error("EmptyKey", "image dimension must be at least 2");
  long long sum = 0;
  for (int p : parts) {
    if (p <= 0 || dim % p != 0)
      throw Error("NonDivisorPart",
                  "part " + std::to_string(p) + " does not divide dimension " + std::to_string(dim));
    sum += p;
  }
  if (sum != dim)
    throw Error("WrongSum", "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(dim));
  return Key{parts, dim};
}

KeyCount count_keys(int dim) {
  auto f = composition_table(dim);
  return KeyCount{dim, f[dim] - 1};
}

BigInt count_keys_of_length(int dim, int length) {
  if (length < 1) return 0;
  const auto ds = divisors_of(dim);
  // g[m][n] = compositions of n into exactly m divisor parts
  std::vector<BigInt> cur(static_cast<std::size_t>(dim) + 1), next(cur.size());
  cur[0] = 1;
  for (int m = 0; m < length; ++m) {
    std::fill(next.begin(), next.end(), BigInt(0));
    for (int n = 0; n <= dim; ++n) {
      if (cur[n] == 0) continue;
      for (int d : ds)
        if (n + d <= dim) next[n + d] += cur[n];
    }
    std::swap(cur, next);
  }
  return length == 1 ? BigInt(0) : cur[dim];  // the length-1 key (N) is trivial
}

std::vector<Key> enumerate_keys(int dim) {
  if (dim > 16) throw Error("DimTooLarge", "enumerate_keys is limited to dim <= 16");
  validate_key({dim}, dim);
  const auto ds = divisors_of(dim);
  std::vector<Key> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      if (acc.size() > 1) out.push_back(Key{acc, dim});
      return;
    }
    for (int d : ds) {
      if (d > rem) break;
      acc.push_back(d);
      self(self, rem - d);
      acc.pop_back();
    }
  };
  rec(rec, dim);
  return out;
}

Key sample_key(int dim, std::uint64_t seed) {
  validate_key({dim}, dim);
  const auto ds = divisors_of(dim);
  const auto f = composition_table(dim);
  SplitMix64 rng(derive_seed(seed, "keyspace.sample"));

  std::vector<int> parts;
  int rem = dim;
  bool first = true;
  while (rem > 0) {
    BigInt total = f[rem];
    if (first) total -= 1;  // exclude the single-part (trivial) completion
    BigInt r = uniform_big(rng, total);
    for (int d : ds) {
      if (d > rem) break;
      if (first && d == rem) continue;
      const BigInt& w = f[rem - d];
      if (r < w) {
        parts.push_back(d);
        rem -= d;
        break;
      }
      r -= w;
    }
    first = false;
  }
  return Key{parts, dim};
}

Key sample_key_of_length(int dim, int length, std::uint64_t seed) {
  validate_key({dim}, dim);
  if (length == 1) return Key{{dim}, dim};
  if (count_keys_of_length(dim, length) == 0)
    throw Error("NoKeyOfLength",
                "no key of length " + std::to_string(length) + " exists for dim " + std::to_string(dim));
  const auto ds = divisors_of(dim);
  // g[m][n] = compositions of n into exactly m divisor parts, m = 0..length
  std::vector<std::vector<BigInt>> g(static_cast<std::size_t>(length) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(dim) + 1));
  g[0][0] = 1;
  for (int m = 1; m <= length; ++m)
    for (int n = 1; n <= dim; ++n)
      for (int d : ds)
        if (d <= n) g[m][n] += g[m - 1][n - d];

  SplitMix64 rng(derive_seed(seed, "keyspace.sample_len", static_cast<std::uint64_t>(length)));
  std::vector<int> parts;
  int rem = dim;
  for (int m = length; m >= 1; --m) {
    BigInt r = uniform_big(rng, g[m][rem]);
    for (int d : ds) {
      if (d > rem) break;
      const BigInt& w = g[m - 1][rem - d];
      if (r < w) {
        parts.push_back(d);
        rem -= d;
        break;
      }
      r -= w;
    }
  }
  return Key{parts, dim};
}

Key sample_key_avoiding(int dim, std::uint64_t seed, const Key& forbidden) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Key k = sample_key(dim, derive_seed(seed, "keyspace.avoid", attempt));
    if (!(k == forbidden)) return k;
    if (attempt > 1000)
      throw Error("KeyCollision", "could not sample a key different from the forbidden one");
  }
}

std::string to_string(const Key& key) {
  std::ostringstream os;
  for (std::size_t i = 0; i < key.parts.size(); ++i) {
    if (i) os << ',';
    os << key.parts[i];
  }
  return os.str();
}

Key parse_key(const std::string& text, int dim) {
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error("EmptyKey", "malformed key text '" + text + "'");
    }
  }
  return validate_key(parts, dim);
}

}  // namespace graybox::keyspace

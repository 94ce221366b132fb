#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graybox::keyspace {

using BigInt = boost::multiprecision::cpp_int;

// A Baker-map key: an ordered composition of the image dimension N into
// parts that each divide N. The single-part key (N) is the trivial key; its
// permutation is the identity.
struct Key {
  std::vector<int> parts;
  int dim = 0;

  bool trivial() const { return parts.size() == 1; }
  int length() const { return static_cast<int>(parts.size()); }
  bool operator==(const Key&) const = default;
};

struct KeyCount {
  int dim = 0;
  BigInt count;  // nontrivial keys only: compositions minus the trivial key
};

// Throws Error with kind EmptyKey, NonDivisorPart or WrongSum.
Key validate_key(const std::vector<int>& parts, int dim);

// Exact count of nontrivial keys via the composition recurrence
// f(n) = sum over divisors d of N with d <= n of f(n - d), f(0) = 1,
// answer f(N) - 1.
KeyCount count_keys(int dim);

// Count of keys with exactly `length` parts (used by the key-length sweep).
BigInt count_keys_of_length(int dim, int length);

// All nontrivial keys in lexicographic order. Guarded to dim <= 16
// (throws DimTooLarge) since the count explodes beyond that.
std::vector<Key> enumerate_keys(int dim);

// Uniform sample over the nontrivial keys, by DP-weighted sequential part
// selection with exact big-integer weights. Deterministic given seed.
Key sample_key(int dim, std::uint64_t seed);

// Uniform sample over keys with exactly `length` parts.
// Throws NoKeyOfLength when no such key exists.
Key sample_key_of_length(int dim, int length, std::uint64_t seed);

// Like sample_key but re-draws while the result equals `forbidden`
// (the attacker's key must differ from the defender's).
Key sample_key_avoiding(int dim, std::uint64_t seed, const Key& forbidden);

// "1,8,4,2,1" <-> Key. parse_key validates against dim.
std::string to_string(const Key& key);
Key parse_key(const std::string& text, int dim);

}  // namespace graybox::keyspace

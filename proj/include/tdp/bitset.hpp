#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tdp {

// Dynamic bit set over 64-bit words. Sized at construction; all binary
// operations require equal sizes. Bits past `size()` in the last word are
// always zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {
    if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
  }

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (int i = 0; i < nbits; ++i) b.set(i);
    return b;
  }

  static Bitset from_vertices(int nbits, std::span<const int> vs) {
    Bitset b(nbits);
    for (int v : vs) b.set(v);
    return b;
  }

  int size() const { return nbits_; }

  bool test(int i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  Bitset& operator|=(const Bitset& o) {
    check_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    check_size(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == nbits_; }

  // Low word; valid as a complete mask only when size() <= 64.
  std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<int> to_vertices() const {
    std::vector<int> vs;
    for (int i = 0; i < nbits_; ++i)
      if (test(i)) vs.push_back(i);
    return vs;
  }

  bool operator==(const Bitset&) const = default;

 private:
  void check_index(int i) const {
    if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: index out of range");
  }
  void check_size(const Bitset& o) const {
    if (o.nbits_ != nbits_) throw std::invalid_argument("Bitset: size mismatch");
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tdp

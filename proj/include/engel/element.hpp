#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace engel {

enum class Backend : std::uint8_t {
  permutation = 1,
  matrix = 2,
  semilinear = 3,
  metacyclic = 4,
};

const char* backend_name(Backend b);

// A group element of one concrete backend: a tag plus a fixed number of 16-bit payload words.
// The layout of the payload is owned by the backend's Arithmetic (permutation images, matrix
// entries, semilinear triples, metacyclic exponent pairs).
//
// Ordering and equality follow the canonical encoding: tag byte, then the payload words in
// big-endian order. Elements of one group always have the same payload length, so comparing
// (tag, words) lexicographically agrees byte for byte with comparing encodings.
class Element {
 public:
  static constexpr std::size_t kCapacity = 40;

  Element() = default;
  Element(Backend backend, std::span<const std::uint16_t> words);
  Element(Backend backend, std::initializer_list<std::uint16_t> words)
      : Element(backend, std::span<const std::uint16_t>(words.begin(), words.size())) {}

  Backend backend() const { return backend_; }
  std::size_t size() const { return size_; }
  std::span<const std::uint16_t> words() const { return {words_.data(), size_}; }
  std::span<std::uint16_t> words() { return {words_.data(), size_}; }
  std::uint16_t operator[](std::size_t i) const { return words_[i]; }
  std::uint16_t& operator[](std::size_t i) { return words_[i]; }

  std::vector<std::uint8_t> encoding() const;
  std::uint64_t hash() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.backend_ == b.backend_ && a.size_ == b.size_ &&
           std::equal(a.words_.begin(), a.words_.begin() + a.size_, b.words_.begin());
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.backend_ <=> b.backend_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.begin() + a.size_, b.words_.begin(),
                                                  b.words_.begin() + b.size_);
  }

 private:
  Backend backend_ = Backend::permutation;
  std::uint8_t size_ = 0;
  std::array<std::uint16_t, kCapacity> words_{};
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return static_cast<std::size_t>(e.hash()); }
};

}  // namespace engel

#include "engel/element.hpp"

#include "engel/error.hpp"

namespace engel {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::permutation: return "permutation";
    case Backend::matrix: return "matrix";
    case Backend::semilinear: return "semilinear";
    case Backend::metacyclic: return "metacyclic";
  }
  return "unknown";
}

Element::Element(Backend backend, std::span<const std::uint16_t> words) : backend_(backend) {
  if (words.size() > kCapacity)
    throw CapExceeded("element payload of " + std::to_string(words.size()) + " words exceeds capacity " +
                      std::to_string(kCapacity));
  size_ = static_cast<std::uint8_t>(words.size());
  std::copy(words.begin(), words.end(), words_.begin());
}

std::vector<std::uint8_t> Element::encoding() const {
  std::vector<std::uint8_t> out;
  out.reserve(1 + 2 * size_);
  out.push_back(static_cast<std::uint8_t>(backend_));
  for (std::size_t i = 0; i < size_; ++i) {
    out.push_back(static_cast<std::uint8_t>(words_[i] >> 8));
    out.push_back(static_cast<std::uint8_t>(words_[i] & 0xff));
  }
  return out;
}

std::uint64_t Element::hash() const {
  // FNV-1a over the payload words, then a final avalanche
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(backend_);
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= words_[i];
    h *= 1099511628211ull;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

}  // namespace engel

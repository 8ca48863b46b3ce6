#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "lcdkit/code.hpp"
#include "lcdkit/distance.hpp"

namespace lcdkit {

/// Weight-enumerator fingerprint. Monomially equivalent codes have equal
/// fingerprints, so distinct fingerprints prove inequivalence. The converse
/// does not hold.
struct Fingerprint {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  InnerProduct ip = InnerProduct::euclidean;
  WeightEnumerator enumerator;

  /// 64-bit FNV-1a over the canonical text form, as 16 hex digits.
  std::string digest() const {
    std::string text = std::to_string(q) + ' ' + std::to_string(n) + ' ' + std::to_string(k) + ' ' +
                       (ip == InnerProduct::hermitian ? 'H' : 'E');
    for (auto c : enumerator.counts) text += ' ' + std::to_string(c);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const LinearCode& c, unsigned workers = 1) {
  return {c.field().order(), c.length(), c.dimension(), c.inner_product(), weight_enumerator(c, workers)};
}

}  // namespace lcdkit

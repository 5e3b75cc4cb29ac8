#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace indcount::detail {

// Fixed-width vertex set used by the exact search engines. W words hold up to
// 64*W vertices; the engines pick the smallest W that fits the instance.
template <std::size_t W>
struct VertexMask {
  std::array<std::uint64_t, W> words{};

  static constexpr std::size_t kCapacity = 64 * W;

  static VertexMask first_n(std::size_t n) {
    VertexMask m;
    for (std::size_t i = 0; i < W; ++i) {
      if (n >= 64 * (i + 1)) {
        m.words[i] = ~std::uint64_t{0};
      } else if (n > 64 * i) {
        m.words[i] = (std::uint64_t{1} << (n - 64 * i)) - 1;
      }
    }
    return m;
  }

  static VertexMask single(std::size_t v) {
    VertexMask m;
    m.set(v);
    return m;
  }

  void set(std::size_t v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return (words[v >> 6] >> (v & 63)) & 1U; }

  bool empty() const {
    for (auto w : words) {
      if (w != 0) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the lowest set bit; kCapacity if empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (words[i] != 0) return 64 * i + static_cast<std::size_t>(std::countr_zero(words[i]));
    }
    return kCapacity;
  }

  bool intersects(const VertexMask& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (words[i] & o.words[i]) return true;
    }
    return false;
  }

  bool subset_of(const VertexMask& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (words[i] & ~o.words[i]) return false;
    }
    return true;
  }

  VertexMask& operator&=(const VertexMask& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] &= o.words[i];
    return *this;
  }
  VertexMask& operator|=(const VertexMask& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] |= o.words[i];
    return *this;
  }
  // Set difference.
  VertexMask& operator-=(const VertexMask& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] &= ~o.words[i];
    return *this;
  }

  friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
  friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
  friend VertexMask operator-(VertexMask a, const VertexMask& b) { return a -= b; }
  friend bool operator==(const VertexMask&, const VertexMask&) = default;
  friend auto operator<=>(const VertexMask&, const VertexMask&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t w = words[i];
      while (w != 0) {
        fn(64 * i + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <std::size_t W>
struct VertexMaskHash {
  std::size_t operator()(const VertexMask<W>& m) const { return m.hash(); }
};

// Calls fn.template operator()<W>() with the smallest supported W covering n
// vertices. Returns false when n exceeds the widest supported mask.
template <typename Fn>
bool dispatch_mask_width(std::size_t n, Fn&& fn) {
  if (n <= 64) {
    fn.template operator()<1>();
  } else if (n <= 128) {
    fn.template operator()<2>();
  } else if (n <= 256) {
    fn.template operator()<4>();
  } else if (n <= 512) {
    fn.template operator()<8>();
  } else {
    return false;
  }
  return true;
}

inline constexpr std::size_t kMaxMaskVertices = 512;

}  // namespace indcount::detail

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace endtd {

/// Opaque vertex identity handed out by a graph family. The family decides
/// what the tag and coordinates mean; the library only orders and hashes them.
struct Vertex {
  std::int32_t tag = 0;
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t c = 0;

  auto operator<=>(const Vertex&) const = default;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t x : {v.tag, v.a, v.b, v.c}) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Dense index of a vertex inside one truncation.
using Idx = std::int32_t;

}  // namespace endtd

#ifndef LATWALK_VERTEX_HPP
#define LATWALK_VERTEX_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "latwalk/common.hpp"

namespace latwalk {

/// Canonical address of a vertex in an infinite quasi-transitive graph.
///
/// Lattice graphs use (cell, offset); tree-like graphs additionally use a
/// reduced descent word.  Two VertexIds compare equal iff they denote the
/// same vertex.
struct VertexId {
    std::int32_t cell = 0;
    std::array<std::int32_t, 3> offset{0, 0, 0};  // unused dims stay 0
    std::string word;                             // descent word, reduced

    friend bool operator==(const VertexId&, const VertexId&) = default;

    // Canonical order: cell, then offset lexicographic, then word.
    friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
        if (auto c = a.cell <=> b.cell; c != 0) return c;
        if (auto c = a.offset <=> b.offset; c != 0) return c;
        return a.word <=> b.word;
    }

    std::string str() const {
        std::string s = "(" + std::to_string(cell) + ";" + std::to_string(offset[0]) + "," +
                        std::to_string(offset[1]) + "," + std::to_string(offset[2]);
        if (!word.empty()) s += ";\"" + word + "\"";
        s += ")";
        return s;
    }
};

struct VertexIdHash {
    std::size_t operator()(const VertexId& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint32_t>(v.cell);
        for (int i = 0; i < 3; ++i) {
            h ^= static_cast<std::uint32_t>(v.offset[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        for (char c : v.word) {
            h = h * 1099511628211ull ^ static_cast<unsigned char>(c);
        }
        return static_cast<std::size_t>(h);
    }
};

inline VertexId make_vertex(std::int32_t x) { return VertexId{0, {x, 0, 0}, {}}; }
inline VertexId make_vertex(std::int32_t x, std::int32_t y) { return VertexId{0, {x, y, 0}, {}}; }
inline VertexId make_vertex(std::int32_t x, std::int32_t y, std::int32_t z) {
    return VertexId{0, {x, y, z}, {}};
}

}  // namespace latwalk

#endif

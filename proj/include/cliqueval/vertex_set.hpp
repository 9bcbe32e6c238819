#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliqueval {

using Vertex = std::uint32_t;

/// Fixed-capacity bitset over vertex ids [0, capacity).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) :
        _capacity(capacity), _words((capacity + 63) / 64, 0)
    {
    }

    auto capacity() const noexcept -> std::size_t { return _capacity; }

    auto contains(Vertex v) const noexcept -> bool
    {
        return (_words[v >> 6] >> (v & 63)) & 1U;
    }

    void insert(Vertex v) noexcept { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) noexcept { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    auto size() const noexcept -> std::size_t
    {
        std::size_t total = 0;
        for (auto w : _words)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    auto empty() const noexcept -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    auto operator&=(const VertexSet & other) noexcept -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto operator|=(const VertexSet & other) noexcept -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    /// Removes every member of other.
    auto subtract(const VertexSet & other) noexcept -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) noexcept -> VertexSet { return a &= b; }

    auto intersects(const VertexSet & other) const noexcept -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto intersection_size(const VertexSet & other) const noexcept -> std::size_t
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < _words.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(_words[i] & other._words[i]));
        return total;
    }

    /// Smallest member, or capacity() when empty.
    auto first() const noexcept -> std::size_t
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(_words[i]));
        return _capacity;
    }

    template <typename Fn>
    void for_each(Fn && fn) const
    {
        for (std::size_t i = 0; i < _words.size(); ++i) {
            auto w = _words[i];
            while (w) {
                auto bit = std::countr_zero(w);
                fn(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    auto members() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    std::size_t _capacity = 0;
    std::vector<std::uint64_t> _words;
};

}

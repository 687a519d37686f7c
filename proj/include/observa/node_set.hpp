#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace observa {

using NodeId = std::uint32_t;

// Fixed-width bitset over node indices 0..size-1.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t size);

    static NodeSet full(std::size_t size);
    static NodeSet of(std::size_t size, std::initializer_list<NodeId> nodes);

    std::size_t universe() const { return size_; }

    void insert(NodeId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(NodeId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(NodeId v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    std::size_t count() const;
    bool empty() const;
    bool is_subset_of(const NodeSet& other) const;

    NodeSet& operator|=(const NodeSet& other);
    NodeSet& operator&=(const NodeSet& other);

    std::vector<NodeId> to_vector() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                f(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const;

    friend bool operator==(const NodeSet&, const NodeSet&) = default;
    // Lexicographic on the underlying words; only meaningful within one universe.
    friend bool operator<(const NodeSet& a, const NodeSet& b) { return a.words_ < b.words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct NodeSetHash {
    std::size_t operator()(const NodeSet& s) const { return s.hash(); }
};

}  // namespace observa

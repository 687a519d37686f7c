#include "observa/node_set.hpp"

#include <bit>

namespace observa {

NodeSet::NodeSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

NodeSet NodeSet::full(std::size_t size) {
    NodeSet s(size);
    for (std::size_t v = 0; v < size; ++v) s.insert(static_cast<NodeId>(v));
    return s;
}

NodeSet NodeSet::of(std::size_t size, std::initializer_list<NodeId> nodes) {
    NodeSet s(size);
    for (NodeId v : nodes) s.insert(v);
    return s;
}

std::size_t NodeSet::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool NodeSet::empty() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::vector<NodeId> NodeSet::to_vector() const {
    std::vector<NodeId> out;
    for_each([&](NodeId v) { out.push_back(v); });
    return out;
}

std::size_t NodeSet::hash() const {
    // FNV-1a over the words.
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ size_);
}

}  // namespace observa

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "vcm/errors.hpp"

namespace vcm {

// A face is a set of vertex indices stored as a 64-bit mask, so a complex can
// live on at most 64 vertices.  That bound covers every input this tool is
// meant for; the labeling constructor enforces it.
class Face {
public:
    static constexpr int max_vertices = 64;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    Face(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static Face from_indices(const std::vector<int>& vs) {
        Face f;
        for (int v : vs) f.insert(v);
        return f;
    }

    // Full simplex on vertices 0..n-1.
    static Face full(int n) {
        return n == 64 ? Face(~std::uint64_t{0}) : Face((std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool subset_of(Face g) const { return (bits_ & ~g.bits_) == 0; }
    constexpr bool intersects(Face g) const { return (bits_ & g.bits_) != 0; }

    void insert(int v) {
        if (v < 0 || v >= max_vertices) throw invalid_input("vertex index out of range: " + std::to_string(v));
        bits_ |= std::uint64_t{1} << v;
    }

    constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
    friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
    friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Face a, Face b) { return a.bits_ != b.bits_; }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

// Canonical order used everywhere a face list must be deterministic: by
// dimension first, then lexicographically on the ascending index sequence.
// For equal sizes the lex test reduces to which face owns the lowest
// differing bit.
inline bool canonical_face_less(Face a, Face b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    std::uint64_t low = d & (~d + 1);
    return (a.bits() & low) != 0;
}

struct CanonicalFaceLess {
    bool operator()(Face a, Face b) const { return canonical_face_less(a, b); }
};

// default comparison = canonical order, so faces can key ordered containers
inline bool operator<(Face a, Face b) { return canonical_face_less(a, b); }

// Vertex labels, index <-> string both ways.  Labels must be unique and
// non-empty; order is significant (it fixes the bit positions).
class VertexLabeling {
public:
    VertexLabeling() = default;

    explicit VertexLabeling(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.size() > Face::max_vertices)
            throw invalid_input("too many vertices (limit " + std::to_string(Face::max_vertices) + ")");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw invalid_input("empty vertex label at index " + std::to_string(i));
            auto [_, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
            if (!fresh) throw invalid_input("duplicate vertex label: " + labels_[i]);
        }
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& labels() const { return labels_; }

    // -1 when absent.
    int find(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? -1 : it->second;
    }

    int require(const std::string& label) const {
        int v = find(label);
        if (v < 0) throw invalid_input("unknown vertex label: " + label);
        return v;
    }

    bool has(const std::string& label) const { return index_.count(label) != 0; }

    void append(const std::string& label) {
        if (static_cast<int>(labels_.size()) >= Face::max_vertices) throw invalid_input("too many vertices");
        if (label.empty() || index_.count(label)) throw invalid_input("bad fresh vertex label: " + label);
        index_.emplace(label, static_cast<int>(labels_.size()));
        labels_.push_back(label);
    }

    friend bool operator==(const VertexLabeling& a, const VertexLabeling& b) { return a.labels_ == b.labels_; }
    friend bool operator!=(const VertexLabeling& a, const VertexLabeling& b) { return !(a == b); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

} // namespace vcm

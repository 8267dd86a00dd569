// Small sets of 1-based component indices, backed by a 32-bit mask.
// Bit k-1 holds membership of index k. The string form is the sorted
// comma-joined index list, e.g. "1,3"; the empty set prints as "".

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amphicheck {

class IndexSet {
public:
    static constexpr int max_index_limit = 32;

    IndexSet() = default;

    static IndexSet from_bits(std::uint32_t bits) {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }

    static IndexSet singleton(int i) {
        check_index(i);
        return from_bits(1u << (i - 1));
    }

    // {1, 2, ..., r}
    static IndexSet full(int r) {
        if (r < 0 || r > max_index_limit)
            throw std::invalid_argument("IndexSet: component count out of range");
        return from_bits(r == 0 ? 0u : (r == 32 ? ~0u : (1u << r) - 1u));
    }

    static IndexSet of(std::initializer_list<int> indices) {
        IndexSet s;
        for (int i : indices) {
            check_index(i);
            s.bits_ |= 1u << (i - 1);
        }
        return s;
    }

    static IndexSet from_indices(const std::vector<int>& indices) {
        IndexSet s;
        for (int i : indices) {
            check_index(i);
            s.bits_ |= 1u << (i - 1);
        }
        return s;
    }

    // Parses "1,3"; throws std::invalid_argument on malformed input.
    static IndexSet from_string(std::string_view text);

    std::string to_string() const {
        std::string out;
        for (int i : indices()) {
            if (!out.empty()) out += ",";
            out += std::to_string(i);
        }
        return out;
    }

    std::uint32_t bits() const { return bits_; }
    bool is_empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    bool contains(int i) const { return i >= 1 && i <= max_index_limit && (bits_ >> (i - 1)) & 1u; }
    int max_index() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

    bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    IndexSet set_union(IndexSet other) const { return from_bits(bits_ | other.bits_); }
    IndexSet set_minus(IndexSet other) const { return from_bits(bits_ & ~other.bits_); }
    IndexSet set_intersect(IndexSet other) const { return from_bits(bits_ & other.bits_); }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i <= max_index_limit; ++i)
            if ((bits_ >> (i - 1)) & 1u) out.push_back(i);
        return out;
    }

    bool operator==(const IndexSet& other) const = default;
    // Orders by mask value; used for map keys and for deterministic
    // enumeration, not for any mathematical meaning.
    bool operator<(const IndexSet& other) const { return bits_ < other.bits_; }

private:
    static void check_index(int i) {
        if (i < 1 || i > max_index_limit)
            throw std::invalid_argument("IndexSet: index must be in [1, 32]");
    }

    std::uint32_t bits_ = 0;
};

inline IndexSet IndexSet::from_string(std::string_view text) {
    IndexSet s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string_view piece =
            text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        if (piece.empty()) throw std::invalid_argument("IndexSet: empty index in list");
        int value = 0;
        for (char c : piece) {
            if (c < '0' || c > '9') throw std::invalid_argument("IndexSet: non-digit in index list");
            value = value * 10 + (c - '0');
            if (value > max_index_limit) throw std::invalid_argument("IndexSet: index too large");
        }
        check_index(value);
        if (s.contains(value)) throw std::invalid_argument("IndexSet: duplicate index");
        s.bits_ |= 1u << (value - 1);
        if (next == std::string_view::npos) break;
        pos = next + 1;
        if (pos == text.size()) throw std::invalid_argument("IndexSet: trailing comma");
    }
    return s;
}

// All subsets of `universe` holding at least min_size elements, in
// ascending mask order (deterministic).
inline std::vector<IndexSet> subsets_of(IndexSet universe, int min_size = 0) {
    std::vector<IndexSet> out;
    const std::uint32_t mask = universe.bits();
    for (std::uint32_t sub = 0;; sub = (sub - mask) & mask) {
        IndexSet s = IndexSet::from_bits(sub);
        if (s.size() >= min_size) out.push_back(s);
        if (sub == mask) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace amphicheck

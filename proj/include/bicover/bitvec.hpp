#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bicover {

// Fixed-length dynamic bitset. Bit 0 is the leftmost character of the text
// form; ordering is lexicographic on that text form.
class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static BitVector from_string(std::string_view text) {
        BitVector v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1')
                v.set(i);
            else if (text[i] != '0')
                throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
        return v;
    }

    // Low `size` bits of `value`, most significant first (bit size-1 of value
    // lands at position 0).
    static BitVector from_integer(std::uint64_t value, std::size_t size) {
        BitVector v(size);
        for (std::size_t i = 0; i < size; ++i)
            if ((value >> (size - 1 - i)) & 1u) v.set(i);
        return v;
    }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool test(std::size_t i) const noexcept {
        return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1u;
    }
    void set(std::size_t i) noexcept { words_[i / bits_per_word] |= bit(i); }
    void reset(std::size_t i) noexcept { words_[i / bits_per_word] &= ~bit(i); }
    void flip(std::size_t i) noexcept { words_[i / bits_per_word] ^= bit(i); }
    void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

    void set_all() noexcept {
        std::fill(words_.begin(), words_.end(), ~word_type{0});
        trim();
    }
    void reset_all() noexcept { std::fill(words_.begin(), words_.end(), word_type{0}); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
    }
    bool none() const noexcept { return !any(); }

    std::size_t find_first() const noexcept { return find_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type bits = words_[w];
            while (bits) {
                f(w * bits_per_word + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    BitVector& operator&=(const BitVector& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    BitVector& operator^=(const BitVector& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    // this &= ~o
    BitVector& subtract(const BitVector& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }
    friend BitVector operator^(BitVector a, const BitVector& b) noexcept { return a ^= b; }

    bool intersects(const BitVector& o) const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }
    std::size_t and_count(const BitVector& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
        return c;
    }
    std::size_t distance(const BitVector& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(words_[w] ^ o.words_[w]));
        return c;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for_each_set([&](std::size_t i) { s[i] = '1'; });
        return s;
    }

    const std::vector<word_type>& words() const noexcept { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
        if (a.size_ != b.size_) return a.size_ <=> b.size_;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            word_type diff = a.words_[w] ^ b.words_[w];
            if (diff) {
                word_type low = diff & (~diff + 1);
                return (a.words_[w] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 17));
        return h;
    }

private:
    static constexpr std::size_t word_count(std::size_t bits) {
        return (bits + bits_per_word - 1) / bits_per_word;
    }
    static constexpr word_type bit(std::size_t i) { return word_type{1} << (i % bits_per_word); }

    std::size_t find_from(std::size_t i) const noexcept {
        if (i >= size_) return npos;
        std::size_t w = i / bits_per_word;
        word_type bits = words_[w] & (~word_type{0} << (i % bits_per_word));
        while (true) {
            if (bits) return w * bits_per_word + static_cast<std::size_t>(std::countr_zero(bits));
            if (++w == words_.size()) return npos;
            bits = words_[w];
        }
    }

    void trim() noexcept {
        if (size_ % bits_per_word && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % bits_per_word)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

} // namespace bicover

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ivmlab/errors.hpp"

namespace ivmlab {

// Finite binary word. The empty word is a valid value.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    static BitString from_string(std::string_view s)
    {
        BitString out;
        out.bits_.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1')
                throw BadParams("bitstring literal may contain only 0/1, got '" + std::string(1, c) + "'");
            out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return out;
    }

    // run-length text: space separated "<bit>x<count>" tokens, e.g. "1x3 0x2" = 11100
    static BitString from_rle(std::string_view s)
    {
        BitString out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && s[i] == ' ')
                ++i;
            if (i >= s.size())
                break;
            char b = s[i];
            if ((b != '0' && b != '1') || i + 1 >= s.size() || s[i + 1] != 'x')
                throw BadParams("bad RLE token near position " + std::to_string(i));
            i += 2;
            std::size_t count = 0, digits = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                count = count * 10 + static_cast<std::size_t>(s[i] - '0');
                ++i;
                ++digits;
            }
            if (digits == 0)
                throw BadParams("RLE token missing count");
            out.append_run(b - '0', count);
        }
        return out;
    }

    std::string to_string() const
    {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_)
            s.push_back(static_cast<char>('0' + b));
        return s;
    }

    std::string to_rle() const
    {
        if (bits_.empty())
            return "";
        std::string s;
        std::size_t i = 0;
        while (i < bits_.size()) {
            std::size_t j = i;
            while (j < bits_.size() && bits_[j] == bits_[i])
                ++j;
            if (!s.empty())
                s.push_back(' ');
            s.push_back(static_cast<char>('0' + bits_[i]));
            s.push_back('x');
            s += std::to_string(j - i);
            i = j;
        }
        return s;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int at(std::size_t i) const { return bits_[i]; }
    int operator[](std::size_t i) const { return bits_[i]; }

    void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    void append_run(int bit, std::size_t count)
    {
        bits_.insert(bits_.end(), count, static_cast<std::uint8_t>(bit & 1));
    }

    void append(const BitString& other)
    {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    BitString extended(int bit) const
    {
        BitString out = *this;
        out.push_back(bit);
        return out;
    }

    BitString prefix(std::size_t n) const
    {
        return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + std::min(n, bits_.size())));
    }

    // σ ⊑ τ
    bool is_prefix_of(const BitString& tau) const
    {
        if (size() > tau.size())
            return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (bits_[i] != tau.bits_[i])
                return false;
        return true;
    }

    std::size_t count_ones() const
    {
        std::size_t c = 0;
        for (auto b : bits_)
            c += b;
        return c;
    }

    std::size_t count_zeros() const { return size() - count_ones(); }

    bool operator==(const BitString&) const = default;

    // lexicographic, used for tie-breaks among equal-length candidates
    bool operator<(const BitString& other) const { return bits_ < other.bits_; }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

inline BitString repeat_pattern(std::string_view pattern, std::size_t total_len)
{
    BitString out;
    out.reserve(total_len);
    for (std::size_t i = 0; i < total_len; ++i)
        out.push_back(pattern[i % pattern.size()] - '0');
    return out;
}

} // namespace ivmlab

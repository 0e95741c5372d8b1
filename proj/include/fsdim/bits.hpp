#pragma once

// Growable bit string for compressor output and codewords.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsdim {

class BitString {
public:
    BitString() = default;

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }

    void push_back(bool b) { bits_.push_back(b); }

    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    static BitString from_string(std::string_view text) {
        BitString b;
        b.bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0s and 1s");
            b.bits_.push_back(c == '1');
        }
        return b;
    }

    BitString prefix(std::size_t n) const {
        if (n > bits_.size()) throw std::out_of_range("bit prefix longer than string");
        BitString b;
        b.bits_.assign(bits_.begin(), bits_.begin() + n);
        return b;
    }

    friend bool operator==(const BitString& a, const BitString& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

private:
    std::vector<bool> bits_;
};

}  // namespace fsdim

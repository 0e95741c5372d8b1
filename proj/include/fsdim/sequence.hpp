#pragma once

// Finite symbol sequences (prefixes of one-way infinite sequences), stored
// as index arrays over their alphabet.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsdim/alphabet.hpp"

namespace fsdim {

class SymbolSeq {
public:
    SymbolSeq(Alphabet alphabet, std::vector<std::uint8_t> data)
        : alphabet_(std::move(alphabet)), data_(std::move(data)) {
        for (std::uint8_t s : data_)
            if (s >= alphabet_.size())
                throw std::invalid_argument("symbol index out of range for alphabet");
    }

    static SymbolSeq from_string(const Alphabet& alphabet, std::string_view text) {
        std::vector<std::uint8_t> data;
        data.reserve(text.size());
        for (char c : text) data.push_back(alphabet.index(c));
        return SymbolSeq(alphabet, std::move(data));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return data_[i]; }
    const std::vector<std::uint8_t>& indices() const { return data_; }

    std::string to_string() const {
        std::string s;
        s.reserve(data_.size());
        for (std::uint8_t i : data_) s.push_back(alphabet_.symbol(i));
        return s;
    }

    SymbolSeq prefix(std::size_t n) const {
        if (n > data_.size()) throw std::out_of_range("prefix longer than sequence");
        return SymbolSeq(alphabet_, std::vector<std::uint8_t>(data_.begin(), data_.begin() + n));
    }

    friend bool operator==(const SymbolSeq& a, const SymbolSeq& b) {
        return a.alphabet_ == b.alphabet_ && a.data_ == b.data_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::uint8_t> data_;
};

}  // namespace fsdim

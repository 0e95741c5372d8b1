#pragma once

// Ordered finite alphabet with a symbol <-> index bijection. Symbols are
// single characters; alphabets with fewer than two symbols are rejected.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsdim {

class Alphabet {
public:
    explicit Alphabet(const std::vector<char>& symbols) : symbols_(symbols) {
        if (symbols_.size() < 2)
            throw std::invalid_argument("alphabet needs at least 2 symbols");
        if (symbols_.size() > 256)
            throw std::invalid_argument("alphabet larger than 256 symbols");
        index_.fill(-1);
        for (size_t i = 0; i < symbols_.size(); ++i) {
            auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
            if (slot != -1)
                throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                            symbols_[i] + "'");
            slot = static_cast<int>(i);
        }
    }

    explicit Alphabet(std::string_view symbols)
        : Alphabet(std::vector<char>(symbols.begin(), symbols.end())) {}

    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<char>& symbols() const { return symbols_; }

    bool has(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }

    std::uint8_t index(char c) const {
        const int i = index_[static_cast<unsigned char>(c)];
        if (i < 0)
            throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
        return static_cast<std::uint8_t>(i);
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::vector<char> symbols_;
    std::array<int, 256> index_{};
};

}  // namespace fsdim

#pragma once

// File formats: measure configs (JSON with exact rational probability
// strings), sequence files (plain text, one character per symbol, written in
// 80-column lines, newlines ignored on read).
//
// Error split: IoError means the file could not be opened/read/written
// (CLI exit code 2); std::invalid_argument means the content is malformed
// (validation, CLI exit code 1).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsdim/alphabet.hpp"
#include "fsdim/measure.hpp"
#include "fsdim/rational.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"alphabet": ["0","1"], "probs": ["3/4","1/4"]} — probs are "p/q" rational
// or decimal strings, converted exactly.
inline ProbMeasure parse_measure_json(const std::string& text, const std::string& origin = "measure") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(origin + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("alphabet") || !doc.contains("probs"))
        throw std::invalid_argument(origin + ": expected an object with \"alphabet\" and \"probs\"");
    const nlohmann::json& alpha = doc["alphabet"];
    const nlohmann::json& probs = doc["probs"];
    if (!alpha.is_array() || !probs.is_array())
        throw std::invalid_argument(origin + ": \"alphabet\" and \"probs\" must be arrays");
    if (alpha.size() != probs.size())
        throw std::invalid_argument(origin + ": \"alphabet\" and \"probs\" must have equal length");

    std::vector<char> symbols;
    for (const nlohmann::json& s : alpha) {
        if (!s.is_string() || s.get<std::string>().size() != 1)
            throw std::invalid_argument(origin + ": alphabet entries must be single-character strings");
        symbols.push_back(s.get<std::string>()[0]);
    }
    std::vector<Rational> values;
    for (const nlohmann::json& p : probs) {
        if (!p.is_string())
            throw std::invalid_argument(origin + ": probs entries must be strings like \"3/4\" or \"0.25\"");
        try {
            values.push_back(parse_rational(p.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(origin + ": bad probability \"" + p.get<std::string>() +
                                        "\": " + e.what());
        }
    }
    return ProbMeasure(Alphabet(symbols), values);
}

inline ProbMeasure load_measure(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open measure file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read measure file: " + path);
    return parse_measure_json(buf.str(), path);
}

inline SymbolSeq read_sequence_text(const std::string& text, const Alphabet& alphabet,
                                    const std::string& origin = "sequence") {
    std::vector<std::uint8_t> syms;
    syms.reserve(text.size());
    for (char c : text) {
        if (c == '\n' || c == '\r') continue;
        if (!alphabet.has(c))
            throw std::invalid_argument(origin + ": symbol '" + std::string(1, c) +
                                        "' is not in the alphabet");
        syms.push_back(alphabet.index(c));
    }
    return SymbolSeq(alphabet, std::move(syms));
}

inline SymbolSeq read_sequence(const std::string& path, const Alphabet& alphabet) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open sequence file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read sequence file: " + path);
    return read_sequence_text(buf.str(), alphabet, path);
}

inline void write_sequence_text(std::ostream& os, const SymbolSeq& w, std::size_t columns = 80) {
    for (std::uint64_t i = 0; i < w.size(); ++i) {
        os << w.alphabet().symbol(w[i]);
        if ((i + 1) % columns == 0 || i + 1 == w.size()) os << '\n';
    }
}

inline void write_sequence(const std::string& path, const SymbolSeq& w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    write_sequence_text(out, w);
    out.flush();
    if (!out) throw IoError("cannot write sequence file: " + path);
}

}  // namespace fsdim

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "framevote/image.hpp"

namespace framevote {

// The character class set C. The distinguished EMPTY pseudo-symbol used for
// alignment is not a member of C; it occupies the last index of every
// Distribution over this alphabet.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    std::size_t size() const { return symbols_.size(); }  // K
    std::size_t empty_index() const { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_.at(i); }
    std::optional<std::size_t> index_of(char c) const;
    const std::string& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

// Membership masses over the alphabet symbols followed by EMPTY at the last
// index. Normalized distributions have masses in [0,1] summing to 1.
struct Distribution {
    std::vector<double> masses;

    static Distribution zeros(std::size_t size);
    static Distribution crisp(std::size_t size, std::size_t index);

    std::size_t size() const { return masses.size(); }
    double sum() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;
};

// One string recognition result: a distribution per character position.
// Raw recognizer output has zero EMPTY mass in every column; combined
// results may not.
struct AlternativesMatrix {
    Alphabet alphabet;
    std::vector<Distribution> columns;

    std::size_t length() const { return columns.size(); }

    friend bool operator==(const AlternativesMatrix&, const AlternativesMatrix&) = default;
};

// Encodes text as a matrix with unit mass on each character.
AlternativesMatrix crisp_matrix(const Alphabet& a, const std::string& text);

struct FrameSample {
    AlternativesMatrix result;
    std::optional<GrayImage> image;
    int frame_index = 0;
    std::optional<double> cached_focus;
    std::optional<double> cached_confidence;
};

struct Clip {
    std::vector<FrameSample> frames;
    std::optional<std::string> ground_truth;
};

// Upper-cases ASCII letters and identifies 'O' with '0'. Idempotent.
// Applied at metric-comparison boundaries only, never inside combination.
std::string canonicalize(const std::string& s);

// Reads a matrix as text: per column the symbol with maximal mass, lowest
// index winning ties (so a symbol always beats an EMPTY tie). Columns won
// by EMPTY are dropped.
std::string argmax_string(const AlternativesMatrix& x);

// Boundary checks: throw std::invalid_argument on malformed values.
void validate(const Distribution& d, std::size_t expected_size);
void validate(const AlternativesMatrix& x);

}  // namespace framevote

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace foxjump {

struct Syllable {
    std::size_t generator = 0;
    std::int64_t exponent = 0;

    bool operator==(const Syllable&) const = default;
};

/// Freely reduced word: no zero exponents, adjacent syllables use
/// distinct generators.
class Word {
   public:
    Word() = default;
    /// Freely reduces the given raw syllables.
    explicit Word(std::vector<Syllable> raw);

    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    bool empty() const noexcept { return syllables_.empty(); }
    std::size_t size() const noexcept { return syllables_.size(); }
    /// Total exponent of the given generator.
    std::int64_t exponent_sum(std::size_t generator) const;

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);

    bool operator==(const Word&) const = default;

   private:
    friend Word free_reduce(const std::vector<Syllable>& raw);
    std::vector<Syllable> syllables_;
};

/// Merges adjacent syllables with equal generators and drops zero exponents
/// until the sequence is stable.
Word free_reduce(const std::vector<Syllable>& raw);

class Presentation {
   public:
    Presentation(std::vector<std::string> generator_names, std::vector<Word> relations);

    std::size_t generator_count() const noexcept { return names_.size(); }
    std::size_t relation_count() const noexcept { return relations_.size(); }
    const std::vector<std::string>& generator_names() const noexcept { return names_; }
    const std::vector<Word>& relations() const noexcept { return relations_; }
    /// Index of the named generator; throws std::out_of_range if unknown.
    std::size_t generator_index(std::string_view name) const;

    bool operator==(const Presentation&) const = default;

   private:
    std::vector<std::string> names_;
    std::vector<Word> relations_;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// Text format:
///
///     # comment
///     gens: x y z
///     rel: x y^-1 z^3
///
/// Exactly one `gens:` line, before any `rel:` line.
Presentation parse_presentation(std::string_view text);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);
std::string serialize(const Presentation& p);

/// The built-in 3-generator, 12-relation surface group presentation
/// (`--builtin cs`).
const Presentation& cartwright_steger();
/// Relation words of cartwright_steger() as text, one per relation.
const std::vector<std::string>& cartwright_steger_relation_text();

}  // namespace foxjump

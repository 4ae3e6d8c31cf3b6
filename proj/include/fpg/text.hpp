#pragma once

// Text form of presentations:
//
//   presentation := "<" gens "|" relators ">"
//   gens         := name ("," name)*
//   relators     := (empty) | word ("," word)*
//   word         := factor+
//   factor       := name | name "^" int | "(" word ")" "^" int | "[" word "," word "]"
//
// Juxtaposed names without whitespace ("aba^-1") are split into declared
// generator names, longest name first. '#' starts a comment.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/words.hpp"

namespace fpg {

/// Throws ParseError (with 1-based line and column) on malformed input,
/// unknown generators, duplicate names or relators reducing to the empty word.
Presentation parse_presentation(std::string_view text);

/// A single word over `names`; the empty string is the empty word.
Word parse_word(std::string_view text, std::span<const std::string> names);

/// Words separated by ';'. Blank entries are skipped.
std::vector<Word> parse_word_list(std::string_view text, std::span<const std::string> names);

/// Entries "h=w" separated by ';', one for every generator of `source`, with
/// each w a word over `target`.
GeneratorMap parse_generator_map(std::string_view text, const Presentation& source,
                                 const Presentation& target);

std::string format_word(const Word& w, std::span<const std::string> names);
std::string format_presentation(const Presentation& p);

}  // namespace fpg

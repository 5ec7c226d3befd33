#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

enum class TokenKind { word, number, punctuation };

struct Token {
  std::string surface;
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive
  TokenKind kind = TokenKind::word;
};

struct SentenceSpan {
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive
};

struct Document {
  std::string id;
  std::string text;
  std::string label;
  std::string source;  // optional provenance
};

struct TextProfile {
  std::size_t words = 0;          // word + number tokens
  std::size_t sentences = 0;
  std::size_t syllables = 0;      // summed over countable tokens, each >= 1
  std::size_t complex_words = 0;  // word tokens with >= 3 syllables
};

// Whitespace-driven tokenizer: leading/trailing punctuation runs peel off as
// punctuation tokens, internal hyphens/apostrophes stay inside the word, and
// digit sequences with optional . , : separators become number tokens.
// Concatenating the token slices plus skipped whitespace reconstructs text.
std::vector<Token> tokenize(std::string_view text);

// Sentence boundaries at . ! ? followed by optional closing quotes/brackets
// and then whitespace + capital/digit (or end of text). A small abbreviation
// list and single initials ("J.") suppress false splits. Text without
// terminal punctuation is one sentence. Spans cover all non-whitespace text.
std::vector<SentenceSpan> split_sentences(std::string_view text);

// Heuristic syllable count: maximal vowel groups (aeiouy) with silent
// final-e / -ed / -es handling, floored at 1.
std::size_t count_syllables(std::string_view word);

// Tokens, sentence spans and counts computed once and shared by the
// downstream annotators.
struct TokenizedDoc {
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;
  // Index of the first token of each sentence (parallel to sentences).
  std::vector<std::size_t> sentence_first_token;
  TextProfile profile;
};

// Throws DataError for documents with zero countable tokens.
TokenizedDoc analyze(std::string_view text);

// Throws DataError for documents with zero countable tokens.
TextProfile text_profile(const Document& doc);

}  // namespace stylo

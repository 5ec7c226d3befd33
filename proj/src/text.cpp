#include "stylo/text.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "stylo/error.hpp"
#include "stylo/util.hpp"

namespace stylo {

namespace {

// Bytes >= 0x80 count as word characters so UTF-8 content passes through
// unmangled; the heuristics themselves are ASCII-oriented.
bool is_word_char(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_number_core(std::string_view s) {
  if (s.empty() || !is_ascii_digit(s.front()) || !is_ascii_digit(s.back()))
    return false;
  bool prev_sep = false;
  for (char c : s) {
    if (is_ascii_digit(c)) {
      prev_sep = false;
    } else if (c == '.' || c == ',' || c == ':') {
      if (prev_sep) return false;
      prev_sep = true;
    } else {
      return false;
    }
  }
  return true;
}

void emit_chunk(std::string_view text, std::size_t begin, std::size_t end,
                std::vector<Token>& out) {
  std::size_t b = begin;
  // Leading punctuation run.
  std::size_t core_begin = b;
  while (core_begin < end && !is_word_char(text[core_begin])) ++core_begin;
  if (core_begin > b) {
    out.push_back({std::string(text.substr(b, core_begin - b)), b, core_begin,
                   TokenKind::punctuation});
  }
  if (core_begin == end) return;
  // Trailing punctuation run.
  std::size_t core_end = end;
  while (core_end > core_begin && !is_word_char(text[core_end - 1])) --core_end;
  std::string_view core = text.substr(core_begin, core_end - core_begin);
  out.push_back({std::string(core), core_begin, core_end,
                 is_number_core(core) ? TokenKind::number : TokenKind::word});
  if (core_end < end) {
    out.push_back({std::string(text.substr(core_end, end - core_end)), core_end,
                   end, TokenKind::punctuation});
  }
}

// Lowercased abbreviations that never terminate a sentence, with their dot.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "mr.",   "mrs.",  "ms.",   "dr.",  "prof.", "st.",   "mt.",  "sr.",
      "jr.",   "rev.",  "gen.",  "col.", "capt.", "sgt.",  "lt.",  "gov.",
      "sen.",  "rep.",  "u.s.",  "u.k.", "e.g.",  "i.e.",  "etc.", "vs.",
      "inc.",  "corp.", "ltd.",  "co.",  "no.",   "dept.", "jan.", "feb.",
      "mar.",  "apr.",  "jun.",  "jul.", "aug.",  "sep.",  "sept.", "oct.",
      "nov.",  "dec.",  "approx.", "fig.", "min.", "max.", "p.m.", "a.m."};
  return set;
}

bool is_closing(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

// Decides whether the terminal-punctuation run ending at index i (inclusive)
// closes a sentence.
bool is_boundary(std::string_view text, std::size_t i) {
  const char c = text[i];
  if (c == '.') {
    // Word run (letters/digits and embedded dots) ending right before i.
    std::size_t b = i;
    while (b > 0 && (is_word_char(text[b - 1]) || text[b - 1] == '.')) --b;
    std::string_view run = text.substr(b, i - b);
    if (!run.empty()) {
      std::string cand = to_lower(run);
      cand.push_back('.');
      if (abbreviations().count(cand)) return false;
      // Single initial such as "J." in a name.
      if (run.size() == 1 && is_ascii_alpha(run[0])) return false;
      // Dotted abbreviation still being spelled out ("U.S" before its
      // final dot belongs to "U.S.").
      if (i + 1 < text.size() && is_word_char(text[i + 1])) return false;
    }
  }
  // Skip the rest of the terminal run and closing quotes/brackets.
  std::size_t j = i + 1;
  while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?'))
    ++j;
  while (j < text.size() && is_closing(text[j])) ++j;
  if (j >= text.size()) return true;
  if (!is_ascii_space(text[j])) return false;
  while (j < text.size() && is_ascii_space(text[j])) ++j;
  if (j >= text.size()) return true;
  return is_ascii_upper(text[j]) || is_ascii_digit(text[j]) ||
         text[j] == '"' || text[j] == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_ascii_space(text[i])) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !is_ascii_space(text[j])) ++j;
    emit_chunk(text, i, j, tokens);
    i = j;
  }
  return tokens;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  const std::size_t n = text.size();
  std::size_t start = 0;
  while (start < n && is_ascii_space(text[start])) ++start;
  if (start >= n) return spans;

  std::size_t cursor = start;
  for (std::size_t i = start; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    // Only the last char of a terminal run is a candidate.
    if (i + 1 < n &&
        (text[i + 1] == '.' || text[i + 1] == '!' || text[i + 1] == '?'))
      continue;
    if (!is_boundary(text, i)) continue;
    // Extend over closing quotes/brackets.
    std::size_t end = i + 1;
    while (end < n && is_closing(text[end])) ++end;
    spans.push_back({cursor, end});
    // Next sentence starts at the next non-space char.
    cursor = end;
    while (cursor < n && is_ascii_space(text[cursor])) ++cursor;
    if (cursor >= n) break;
    i = end - 1;
  }
  // Trailing material without terminal punctuation.
  if (cursor < n) {
    std::size_t end = n;
    while (end > cursor && is_ascii_space(text[end - 1])) --end;
    if (end > cursor) spans.push_back({cursor, end});
  }
  return spans;
}

std::size_t count_syllables(std::string_view word) {
  std::string w = to_lower(word);
  auto is_vowel = [&](std::size_t i) {
    char c = w[i];
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  auto is_letter = [&](std::size_t i) { return is_ascii_alpha(w[i]); };

  std::size_t groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_letter(i) && is_vowel(i)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (groups == 0) return 1;

  const std::size_t len = w.size();
  auto ends_with = [&](std::string_view suf) {
    return len >= suf.size() && w.compare(len - suf.size(), suf.size(), suf) == 0;
  };
  auto consonant_at = [&](std::size_t i) {
    return is_letter(i) && !is_vowel(i);
  };

  std::size_t silent = 0;
  if (ends_with("e") && len >= 3 && consonant_at(len - 2)) {
    // "-le" after a consonant is a pronounced syllable (table, apple).
    if (!(ends_with("le") && len >= 3 && consonant_at(len - 3))) silent = 1;
  } else if (ends_with("ed") && len >= 4 && consonant_at(len - 3)) {
    // "-ed" is silent after most consonants (organized), pronounced after
    // t/d (wanted, added) and "-led" (tangled).
    char before = w[len - 3];
    if (before != 't' && before != 'd' && before != 'l') silent = 1;
  } else if (ends_with("es") && len >= 4 && consonant_at(len - 3)) {
    // "-es" is silent (makes) except after sibilants (houses, faces) and
    // in "-les" (tables).
    char before = w[len - 3];
    if (before != 's' && before != 'x' && before != 'z' && before != 'c' &&
        before != 'g' && before != 'l')
      silent = 1;
  }
  if (silent >= groups) return 1;
  return groups - silent;
}

TokenizedDoc analyze(std::string_view text) {
  TokenizedDoc doc;
  doc.tokens = tokenize(text);
  doc.sentences = split_sentences(text);

  TextProfile& p = doc.profile;
  for (const Token& t : doc.tokens) {
    if (t.kind == TokenKind::punctuation) continue;
    ++p.words;
    std::size_t syl = count_syllables(t.surface);
    p.syllables += syl;
    if (t.kind == TokenKind::word && syl >= 3) ++p.complex_words;
  }
  if (p.words == 0)
    throw DataError("EmptyDocument: no countable tokens in text");
  p.sentences = doc.sentences.size();

  // Map sentences to their first token.
  doc.sentence_first_token.assign(doc.sentences.size(), doc.tokens.size());
  std::size_t ti = 0;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    while (ti < doc.tokens.size() &&
           doc.tokens[ti].char_start < doc.sentences[si].char_start)
      ++ti;
    doc.sentence_first_token[si] = ti;
  }
  return doc;
}

TextProfile text_profile(const Document& doc) { return analyze(doc.text).profile; }

}  // namespace stylo

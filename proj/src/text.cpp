#include "xbow/text.hpp"

#include <algorithm>

#include "xbow/error.hpp"

namespace xbow {
namespace {

bool is_word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

// Byte offsets of UTF-8 code point starts, plus the end offset.
std::vector<std::size_t> code_point_starts(const std::string& s) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < s.size(); ++i)
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) starts.push_back(i);
  starts.push_back(s.size());
  return starts;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const TextConfig& config) {
  std::vector<std::string> words;
  std::string current;
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_word_byte(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : ch);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));

  std::vector<std::string> terms;
  for (std::size_t m = 1; m <= config.n_gram && m <= words.size(); ++m) {
    for (std::size_t i = 0; i + m <= words.size(); ++i) {
      std::string gram = words[i];
      for (std::size_t j = i + 1; j < i + m; ++j) {
        gram.push_back(' ');
        gram += words[j];
      }
      terms.push_back(std::move(gram));
    }
  }
  if (config.n_char_gram >= 2) {
    const std::size_t m = config.n_char_gram;
    for (const auto& w : words) {
      const auto starts = code_point_starts(w);
      const std::size_t length = starts.size() - 1;
      for (std::size_t i = 0; i + m <= length; ++i) terms.push_back(w.substr(starts[i], starts[i + m] - starts[i]));
    }
  }
  return terms;
}

Dictionary::Dictionary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!index_.emplace(terms_[i], i).second) throw DataError("duplicate dictionary term '" + terms_[i] + "'");
}

std::optional<std::size_t> Dictionary::index_of(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Dictionary build_dictionary(const std::vector<std::vector<std::string>>& corpus, const TextConfig& config) {
  if (corpus.empty()) throw DataError("cannot build a dictionary from an empty corpus");
  if (config.min_term_freq > config.max_term_freq)
    throw DataError("minimum term frequency exceeds maximum term frequency");
  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& doc : corpus)
    for (const auto& term : doc) ++freq[term];

  std::vector<std::pair<std::string, std::size_t>> kept;
  for (auto& [term, count] : freq)
    if (count >= config.min_term_freq && count <= config.max_term_freq) kept.emplace_back(term, count);
  if (kept.empty())
    throw DataError("dictionary is empty after applying term frequency limits; loosen -minTermFreq/-maxTermFreq");
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::string> terms;
  terms.reserve(kept.size());
  for (auto& [term, count] : kept) terms.push_back(std::move(term));
  return Dictionary(std::move(terms));
}

std::vector<double> bag_text(std::span<const std::string> tokens, const Dictionary& dictionary) {
  std::vector<double> tf(dictionary.size(), 0.0);
  for (const auto& t : tokens)
    if (const auto i = dictionary.index_of(t)) tf[*i] += 1.0;
  return tf;
}

}  // namespace xbow

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xbow {

struct TextConfig {
  std::size_t n_gram = 1;
  std::size_t n_char_gram = 0;  // 0 disables character grams
  std::size_t min_term_freq = 1;
  std::size_t max_term_freq = std::numeric_limits<std::size_t>::max();

  bool operator==(const TextConfig&) const = default;
};

/// Lower-cases ASCII letters and splits on runs of characters that are not
/// ASCII alphanumerics (bytes of multi-byte UTF-8 sequences count as word
/// characters). Emits every m-gram for m = 1..n_gram, shortest first, then
/// for n_char_gram >= 2 the character n_char_gram-grams of each token.
std::vector<std::string> tokenize(std::string_view text, const TextConfig& config);

class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::vector<std::string> terms);

  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::optional<std::size_t> index_of(std::string_view term) const;

  bool operator==(const Dictionary& other) const { return terms_ == other.terms_; }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Keeps terms whose corpus frequency lies in [min_term_freq, max_term_freq],
/// ordered by descending frequency, ties lexicographic.
Dictionary build_dictionary(const std::vector<std::vector<std::string>>& corpus,
                            const TextConfig& config);

/// Term counts over the dictionary; unknown tokens are ignored.
std::vector<double> bag_text(std::span<const std::string> tokens, const Dictionary& dictionary);

}  // namespace xbow

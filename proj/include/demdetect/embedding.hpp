#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "demdetect/chat.hpp"
#include "demdetect/tensor.hpp"

namespace demdetect {

enum class EmbeddingFormat { Binary, Text };

struct WordEmbeddingTable {
  std::size_t dim = 0;
  std::map<std::string, std::size_t> vocab;  // word -> row
  Tensor vectors;                            // |vocab| x dim
  std::size_t duplicate_count = 0;           // duplicate words seen on load (last won)

  bool contains(const std::string& word) const { return vocab.count(word) != 0; }
  const double* vector_of(const std::string& word) const;
};

// Binary layout: header "V D\n", then V records of word bytes, a single
// space, and D little-endian 32-bit floats. Text layout: V lines of
// "word f1 ... fD". Values are widened to 64-bit on load; any NaN/Inf or
// malformed record is an error carrying the byte offset.
WordEmbeddingTable load_word_embeddings(const std::filesystem::path& path,
                                        EmbeddingFormat format);
void save_word_embeddings(const WordEmbeddingTable& table, const std::filesystem::path& path,
                          EmbeddingFormat format);

// Row i is the stored vector for tokens[i], or all-zero with oov_mask[i]
// set when the word is out of vocabulary.
struct EmbeddedTokens {
  Tensor word_matrix;  // L x dim
  std::vector<bool> oov_mask;
};
EmbeddedTokens embed_tokens(const std::vector<Token>& tokens, const WordEmbeddingTable& table);

// L x 2 matrix of (start_s, end_s), shifted so the first word starts at 0.
// Throws NoTimestamps if any token lacks timing.
Tensor normalize_timestamps(const std::vector<Token>& tokens);

struct AudioFeatureSequence {
  std::size_t dim = 0;
  Tensor frames;  // T x dim
  std::string sentence_key;
};

// AEMB container: magic "AEMB", u32 version = 1, u32 dim, u32 frame count,
// then T*dim little-endian 32-bit floats, row-major by frame. A file may
// hold several records back to back (one per utterance of a transcript).
AudioFeatureSequence load_audio_features(const std::filesystem::path& path);
std::vector<AudioFeatureSequence> load_audio_sequences(const std::filesystem::path& path);
void append_audio_features(std::ostream& out, const Tensor& frames);
void save_audio_features(const std::filesystem::path& path,
                         const std::vector<Tensor>& sequences);

}  // namespace demdetect

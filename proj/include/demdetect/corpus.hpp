#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "demdetect/chat.hpp"

namespace demdetect {

enum class SpeakerRole { Participant = 0, Investigator = 1 };

using Label = Group;  // Control = 0, Dementia = 1

struct Provenance {
  enum class Kind { Original, Augmented };
  Kind kind = Kind::Original;
  std::size_t parent_index = 0;      // utterance ordinal of the source sentence
  std::size_t replaced_position = 0; // token position swapped by augmentation
  std::string synonym;               // word substituted in
  std::string original_word;         // word replaced

  bool is_augmented() const { return kind == Kind::Augmented; }
};

struct SentenceRecord {
  std::string transcript_id;
  std::size_t index = 0;  // utterance ordinal within the transcript
  std::vector<Token> tokens;
  Label label = Label::Control;
  SpeakerRole speaker_role = SpeakerRole::Participant;
  Provenance provenance;

  bool has_full_timestamps() const {
    for (const Token& t : tokens)
      if (!t.has_timestamps()) return false;
    return !tokens.empty();
  }
  std::string text() const;
};

// Stable identifier: "tid:index" for originals,
// "tid:index:p<position>:<synonym>" for augmented records.
std::string record_id(const SentenceRecord& rec);

// One record per utterance. Investigator speech is labeled Control
// regardless of the transcript group; participant speech takes the group.
std::vector<SentenceRecord> label_sentences(const Transcript& t);

struct CorpusSummary {
  // (label, speaker_role) -> count
  std::map<std::pair<std::string, std::string>, std::size_t> cells;
  std::size_t total = 0;
  std::string to_csv() const;
};

struct Corpus {
  std::filesystem::path root;
  std::vector<SentenceRecord> records;  // lexicographic by transcript id, then index
  std::map<std::string, std::string> audio_paths;  // transcript id -> AEMB path ("" = none)
  std::map<std::string, Group> groups;             // transcript id -> group

  CorpusSummary summary() const;
};

// Load a corpus directory. `root/index.tsv` holds one transcript per line:
//   transcript_id <TAB> group(dementia|control) <TAB> chat path <TAB> aemb path
// Paths are relative to root; "-" in the audio column means no audio. Every
// .cha file in the directory must be indexed and every referenced file must
// exist; offenders are listed in the error.
Corpus load_corpus(const std::filesystem::path& root);

const char* speaker_role_name(SpeakerRole r);

}  // namespace demdetect

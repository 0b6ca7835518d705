#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace demdetect {

enum class Group { Control = 0, Dementia = 1 };

struct Token {
  std::string surface;
  std::optional<std::int64_t> start_ms;
  std::optional<std::int64_t> end_ms;

  bool has_timestamps() const { return start_ms.has_value() && end_ms.has_value(); }
};

struct Utterance {
  std::string speaker;  // tier code, e.g. PAR, INV
  std::vector<Token> tokens;
  std::string raw;  // original tier text, annotations included
};

struct Transcript {
  std::string id;
  std::optional<Group> group;  // assigned from the corpus index, never defaulted
  std::vector<Utterance> utterances;
  std::map<std::string, std::string> header_meta;  // from @-lines
  std::vector<std::string> header_lines;           // verbatim, for serialization
};

// Parse a CHAT transcript (TalkBank dialect). Lines starting with @ are
// headers, * are speaker tiers, % are dependent tiers (ignored); lines
// starting with a tab continue the previous tier. Word-level timestamp
// bullets \x15START_END\x15 bind to the word group since the previous
// bullet; a bullet over k words is divided into k equal sub-intervals.
// Square-bracket annotation codes, angle-bracket retracing groups, bare
// punctuation, pause markers, and non-word events (&=...) are stripped
// from tokens but survive in Utterance::raw. Throws DataError naming the
// offending line.
Transcript parse_transcript(const std::string& bytes, const std::string& id = "");

// Inverse of parsing as far as structure goes: headers verbatim, then one
// *-tier per utterance from its raw text.
std::string serialize_transcript(const Transcript& t);

const char* group_name(Group g);
std::optional<Group> group_from_name(const std::string& name);

}  // namespace demdetect

#include "demdetect/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "demdetect/csv.hpp"
#include "demdetect/errors.hpp"

namespace demdetect {

std::string SentenceRecord::text() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

std::string record_id(const SentenceRecord& rec) {
  std::string id = rec.transcript_id + ":" + std::to_string(rec.index);
  if (rec.provenance.is_augmented())
    id += ":p" + std::to_string(rec.provenance.replaced_position) + ":" + rec.provenance.synonym;
  return id;
}

std::vector<SentenceRecord> label_sentences(const Transcript& t) {
  if (!t.group.has_value())
    throw DataError("transcript '" + t.id + "' has no group assigned");
  std::vector<SentenceRecord> out;
  out.reserve(t.utterances.size());
  for (std::size_t i = 0; i < t.utterances.size(); ++i) {
    const Utterance& u = t.utterances[i];
    if (u.tokens.empty()) continue;  // nothing spoken survives stripping
    SentenceRecord rec;
    rec.transcript_id = t.id;
    rec.index = i;
    rec.tokens = u.tokens;
    rec.speaker_role = (u.speaker == "INV") ? SpeakerRole::Investigator : SpeakerRole::Participant;
    rec.label = (rec.speaker_role == SpeakerRole::Investigator) ? Label::Control : *t.group;
    out.push_back(std::move(rec));
  }
  return out;
}

const char* speaker_role_name(SpeakerRole r) {
  return r == SpeakerRole::Investigator ? "investigator" : "participant";
}

CorpusSummary Corpus::summary() const {
  CorpusSummary s;
  for (const SentenceRecord& r : records) {
    ++s.cells[{group_name(r.label), speaker_role_name(r.speaker_role)}];
    ++s.total;
  }
  return s;
}

std::string CorpusSummary::to_csv() const {
  std::string out = "label,speaker_role,count\n";
  for (const auto& [key, count] : cells)
    out += csv_row({key.first, key.second, std::to_string(count)});
  return out;
}

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DataError("cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& root) {
  Corpus corpus;
  corpus.root = root;

  std::filesystem::path index_path = root / "index.tsv";
  if (!std::filesystem::exists(index_path))
    throw DataError("corpus index not found: '" + index_path.string() + "'");

  struct Entry {
    std::string id, group, chat_path, audio_path;
  };
  std::vector<Entry> entries;
  {
    std::string content = read_file(index_path);
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto fields = split_tabs(line);
      if (fields.size() != 4)
        throw DataError("index line " + std::to_string(line_no) +
                        ": expected 4 tab-separated fields, got " +
                        std::to_string(fields.size()));
      entries.push_back(Entry{fields[0], fields[1], fields[2], fields[3]});
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].id == entries[i - 1].id)
      throw DataError("duplicate transcript id in index: '" + entries[i].id + "'");

  // every .cha in the directory must have an index entry
  std::vector<std::string> offenders;
  {
    std::vector<std::string> indexed;
    for (const Entry& e : entries)
      indexed.push_back((root / e.chat_path).lexically_normal().string());
    std::vector<std::filesystem::path> found;
    for (const auto& de : std::filesystem::recursive_directory_iterator(root))
      if (de.is_regular_file() && de.path().extension() == ".cha")
        found.push_back(de.path().lexically_normal());
    std::sort(found.begin(), found.end());
    for (const auto& p : found)
      if (std::find(indexed.begin(), indexed.end(), p.string()) == indexed.end())
        offenders.push_back("missing index entry for " + p.string());
  }

  for (const Entry& e : entries) {
    auto g = group_from_name(e.group);
    if (!g) {
      offenders.push_back("transcript '" + e.id + "': unknown group '" + e.group + "'");
      continue;
    }
    std::filesystem::path chat = root / e.chat_path;
    if (!std::filesystem::exists(chat)) {
      offenders.push_back("transcript '" + e.id + "': missing file " + chat.string());
      continue;
    }
    if (e.audio_path != "-" && !e.audio_path.empty()) {
      std::filesystem::path audio = root / e.audio_path;
      if (!std::filesystem::exists(audio)) {
        offenders.push_back("transcript '" + e.id + "': dangling audio reference " +
                            audio.string());
        continue;
      }
    }
  }
  if (!offenders.empty()) {
    std::string msg = "corpus load failed:";
    for (const std::string& o : offenders) msg += "\n  " + o;
    throw DataError(msg);
  }

  for (const Entry& e : entries) {
    Transcript t = parse_transcript(read_file(root / e.chat_path), e.id);
    t.group = group_from_name(e.group);
    corpus.groups[e.id] = *t.group;
    corpus.audio_paths[e.id] =
        (e.audio_path == "-" || e.audio_path.empty()) ? "" : (root / e.audio_path).string();
    auto records = label_sentences(t);
    for (auto& r : records) corpus.records.push_back(std::move(r));
  }
  return corpus;
}

}  // namespace demdetect

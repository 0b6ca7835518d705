#include "demdetect/chat.hpp"

#include <algorithm>
#include <cctype>

#include "demdetect/errors.hpp"

namespace demdetect {

namespace {

constexpr char kBullet = '\x15';

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw DataError("line " + std::to_string(line_no) + ": " + what);
}

bool valid_speaker_code(const std::string& code) {
  if (code.empty()) return false;
  for (char c : code) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isupper(u) && !std::isdigit(u)) return false;
  }
  return true;
}

// Remove [...] annotation groups and <...> retracing groups (content
// included). Bullets inside groups are preserved so timing survives
// annotated words.
std::string strip_annotation_groups(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  int square = 0, angle = 0;
  for (char c : text) {
    if (c == '[') {
      ++square;
      continue;
    }
    if (c == ']') {
      if (square > 0) --square;
      continue;
    }
    if (square == 0 && c == '<') {
      ++angle;
      continue;
    }
    if (square == 0 && c == '>') {
      if (angle > 0) {
        --angle;
        continue;
      }
      // lone '>' is not a retracing close; drop it like other stray marks
      continue;
    }
    if (square > 0) continue;
    if (angle > 0 && c != kBullet) continue;
    out += c;
  }
  return out;
}

bool has_alnum(const std::string& s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

// Normalize one whitespace-delimited item to a token surface, or empty if
// it should be dropped. Keeps clitics ("mother's") and compounds
// ("cookie+jar"); drops events (&=laughs), fragments (&+fr), and anything
// with no alphanumeric content (bare punctuation, +..., pause marks).
std::string clean_word(std::string w) {
  if (w.rfind("&=", 0) == 0 || w.rfind("&+", 0) == 0) return "";
  if (w[0] == '&') {
    // filler notation (&-uh, &uh): spoken material, keep the word
    w.erase(0, w[1] == '-' ? 2 : 1);
    if (w.empty()) return "";
  }
  // shortenings like (be)cause spell the full word; pause marks (.) (..)
  // lose their parens and fall out via the no-alnum rule
  std::string unparen;
  unparen.reserve(w.size());
  for (char c : w)
    if (c != '(' && c != ')') unparen += c;
  w = std::move(unparen);
  // special-form marker word@x
  if (auto at = w.find('@'); at != std::string::npos) w.erase(at);
  // strip surrounding punctuation, keep word-internal ' _ +
  std::size_t a = 0, b = w.size();
  auto is_word_char = [](char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '\'' || c == '_' || c == '+' || u >= 0x80;
  };
  while (a < b && !is_word_char(w[a])) ++a;
  while (b > a && !is_word_char(w[b - 1])) --b;
  w = w.substr(a, b - a);
  if (w.empty() || !has_alnum(w)) return "";
  std::transform(w.begin(), w.end(), w.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return w;
}

struct BulletBounds {
  std::int64_t start = 0;
  std::int64_t end = 0;
};

BulletBounds parse_bullet(const std::string& body, std::size_t line_no) {
  auto us = body.find('_');
  if (us == std::string::npos || us == 0 || us + 1 >= body.size())
    fail(line_no, "timestamp bullet '" + body + "' is not START_END");
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i == us) continue;
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      fail(line_no, "timestamp bullet '" + body + "' has non-numeric bounds");
  }
  BulletBounds b;
  b.start = std::stoll(body.substr(0, us));
  b.end = std::stoll(body.substr(us + 1));
  if (b.start > b.end)
    fail(line_no, "timestamp bullet '" + body + "' ends before it starts");
  return b;
}

// Split tier text into tokens, binding each bullet's interval to the word
// group accumulated since the previous bullet.
std::vector<Token> tokenize_tier(const std::string& text, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t group_start = 0;  // first token of the current bullet group
  std::optional<std::int64_t> prev_bullet_start;

  std::string cleaned = strip_annotation_groups(text);
  std::string word;
  auto flush_word = [&]() {
    if (word.empty()) return;
    std::string surface = clean_word(word);
    word.clear();
    if (!surface.empty()) tokens.push_back(Token{surface, std::nullopt, std::nullopt});
  };

  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    char c = cleaned[i];
    if (c == kBullet) {
      flush_word();
      auto close = cleaned.find(kBullet, i + 1);
      if (close == std::string::npos) fail(line_no, "unterminated timestamp bullet");
      std::string body = cleaned.substr(i + 1, close - i - 1);
      i = close;
      BulletBounds b = parse_bullet(body, line_no);
      if (prev_bullet_start && b.start < *prev_bullet_start)
        fail(line_no, "timestamp bullets run backwards");
      prev_bullet_start = b.start;
      std::size_t k = tokens.size() - group_start;
      if (k == 0) continue;  // bullet with no surviving words carries nothing
      double step = static_cast<double>(b.end - b.start) / static_cast<double>(k);
      for (std::size_t j = 0; j < k; ++j) {
        Token& t = tokens[group_start + j];
        t.start_ms = b.start + static_cast<std::int64_t>(step * static_cast<double>(j));
        t.end_ms = (j + 1 == k)
                       ? b.end
                       : b.start + static_cast<std::int64_t>(step * static_cast<double>(j + 1));
      }
      group_start = tokens.size();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush_word();
    } else {
      word += c;
    }
  }
  flush_word();
  return tokens;
}

}  // namespace

Transcript parse_transcript(const std::string& bytes, const std::string& id) {
  Transcript t;
  t.id = id;

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : bytes) {
      if (c == '\n') {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  bool saw_begin = false;
  // join continuation lines (leading tab) onto their tier
  struct TierLine {
    std::size_t line_no;
    std::string text;  // full line starting with * or % or @
  };
  std::vector<TierLine> logical;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    if (line[0] == '\t' || line[0] == ' ') {
      if (logical.empty())
        fail(i + 1, "continuation line with no preceding tier");
      logical.back().text += ' ';
      logical.back().text += trim(line);
      continue;
    }
    logical.push_back(TierLine{i + 1, line});
  }

  for (const TierLine& tl : logical) {
    const std::string& line = tl.text;
    if (line[0] == '@') {
      if (line == "@Begin") saw_begin = true;
      t.header_lines.push_back(line);
      auto colon = line.find(':');
      if (colon != std::string::npos) {
        std::string key = line.substr(1, colon - 1);
        std::string value = trim(line.substr(colon + 1));
        t.header_meta[key] = value;
      } else {
        t.header_meta[line.substr(1)] = "";
      }
      continue;
    }
    if (line[0] == '%') continue;  // dependent tiers unused
    if (line[0] == '*') {
      if (!saw_begin) fail(tl.line_no, "speaker tier before @Begin");
      auto colon = line.find(':');
      if (colon == std::string::npos) fail(tl.line_no, "tier line with no ':' separator");
      std::string code = line.substr(1, colon - 1);
      if (!valid_speaker_code(code))
        fail(tl.line_no, "tier line with no speaker code");
      std::string text = line.substr(colon + 1);
      if (!text.empty() && (text[0] == '\t' || text[0] == ' ')) text.erase(0, 1);
      Utterance u;
      u.speaker = code;
      u.raw = text;
      u.tokens = tokenize_tier(text, tl.line_no);
      t.utterances.push_back(std::move(u));
      continue;
    }
    fail(tl.line_no, "unrecognized line start '" + line.substr(0, 1) + "'");
  }
  if (!saw_begin) throw DataError("malformed header: missing @Begin");
  return t;
}

std::string serialize_transcript(const Transcript& t) {
  std::string out;
  bool saw_end = false;
  for (const std::string& h : t.header_lines) {
    if (h == "@End") {
      saw_end = true;
      continue;  // re-emit last
    }
    out += h;
    out += '\n';
  }
  if (t.header_lines.empty()) out += "@Begin\n";
  for (const Utterance& u : t.utterances) {
    out += '*';
    out += u.speaker;
    out += ":\t";
    out += u.raw;
    out += '\n';
  }
  if (saw_end || !t.header_lines.empty()) out += "@End\n";
  return out;
}

const char* group_name(Group g) { return g == Group::Dementia ? "dementia" : "control"; }

std::optional<Group> group_from_name(const std::string& name) {
  if (name == "dementia") return Group::Dementia;
  if (name == "control") return Group::Control;
  return std::nullopt;
}

}  // namespace demdetect

#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanmt/errors.hpp"
#include "spanmt/span_algebra.hpp"
#include "spanmt/unicode.hpp"

// The markup document format shipped to and from the translation backend:
// a minimal HTML subset with one <p> block per paragraph and one <x id="N">
// inline element per segment. The grammar is documented bit-exactly in
// docs/markup-format.md. Decoding is tolerant because translation services
// rewrite structure; every recoverable mangling maps to a defined outcome.

namespace spanmt {

struct MarkupDoc {
  std::string content;
  std::string doc_key;  // source article/paragraph key
  std::string source_lang;
  std::string target_lang;

  auto operator<=>(const MarkupDoc&) const = default;
};

struct EncodedBlock {
  std::string key;
  std::string context;
  SegmentPlan plan;  // segment ids may be document-global
};

struct DecodedBlock {
  std::string key;
  std::size_t start = 0;  // code point offsets into DecodedDoc::text
  std::size_t end = 0;
};

struct DecodedDoc {
  std::string text;
  std::vector<Run> runs;  // document order, disjoint
  std::vector<DecodedBlock> blocks;
};

namespace markup_detail {

inline std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string escape_attr(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"')
      out += "&quot;";
    else
      out += escape_text(std::string_view(&c, 1));
  }
  return out;
}

inline void append_block(std::string& out, const EncodedBlock& blk) {
  uni::CpIndex idx(blk.context);
  out += "<p";
  if (!blk.key.empty()) {
    out += " key=\"";
    out += escape_attr(blk.key);
    out += "\"";
  }
  out += ">";
  std::size_t pos = 0;
  for (const Segment& seg : blk.plan.segments) {
    out += escape_text(idx.slice(pos, seg.interval.start));
    out += "<x id=\"";
    out += std::to_string(seg.id);
    out += "\">";
    out += escape_text(idx.slice(seg.interval.start, seg.interval.end));
    out += "</x>";
    pos = seg.interval.end;
  }
  out += escape_text(idx.slice(pos, idx.cp_length()));
  out += "</p>";
}

}  // namespace markup_detail

// Encodes a whole article: one block element per paragraph. Segment ids are
// taken from the plans as-is, so callers wanting document-unique ids must
// renumber before encoding.
inline MarkupDoc encode_document(const std::vector<EncodedBlock>& blocks,
                                 const std::string& doc_key = "",
                                 const std::string& source_lang = "",
                                 const std::string& target_lang = "") {
  MarkupDoc doc;
  doc.doc_key = doc_key;
  doc.source_lang = source_lang;
  doc.target_lang = target_lang;
  doc.content = "<html>\n<body>\n";
  for (const EncodedBlock& blk : blocks) {
    markup_detail::append_block(doc.content, blk);
    doc.content += "\n";
  }
  doc.content += "</body>\n</html>\n";
  return doc;
}

inline MarkupDoc encode(const std::string& context, const SegmentPlan& plan,
                        const std::string& doc_key = "", const std::string& source_lang = "",
                        const std::string& target_lang = "") {
  return encode_document({EncodedBlock{"", context, plan}}, doc_key, source_lang, target_lang);
}

namespace markup_detail {

struct Parser {
  std::string_view src;
  std::size_t i = 0;

  DecodedDoc out;
  std::size_t cur_cp = 0;

  struct OpenX {
    long id = -1;
    bool valid = false;
    std::size_t run_start = 0;
  };
  std::vector<OpenX> xstack;
  // Index into out.blocks of the currently open (or reopened) block.
  std::optional<std::size_t> open_block;

  explicit Parser(std::string_view s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw MarkupError(msg + " at byte " + std::to_string(i));
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
  }

  void skip_ws() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  }

  std::string read_name() {
    std::size_t b = i;
    while (i < src.size() && name_char(src[i])) ++i;
    std::string name(src.substr(b, i - b));
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return name;
  }

  // Resolves the entity starting at src[i] == '&'. Returns its expansion and
  // advances, or returns nullopt leaving the '&' to be taken literally.
  std::optional<std::string> read_entity() {
    std::size_t semi = src.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 32) return std::nullopt;
    std::string_view body = src.substr(i + 1, semi - i - 1);
    std::string expansion;
    if (body == "amp")
      expansion = "&";
    else if (body == "lt")
      expansion = "<";
    else if (body == "gt")
      expansion = ">";
    else if (body == "quot")
      expansion = "\"";
    else if (body == "apos")
      expansion = "'";
    else if (!body.empty() && body[0] == '#') {
      bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
      std::string_view digits = body.substr(hex ? 2 : 1);
      if (digits.empty()) return std::nullopt;
      unsigned long cp = 0;
      for (char c : digits) {
        int d;
        if (c >= '0' && c <= '9')
          d = c - '0';
        else if (hex && c >= 'a' && c <= 'f')
          d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F')
          d = c - 'A' + 10;
        else
          return std::nullopt;
        cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(d);
        if (cp > 0x10FFFF) return std::nullopt;
      }
      if (cp >= 0xD800 && cp <= 0xDFFF) return std::nullopt;
      uni::append_utf8(expansion, static_cast<char32_t>(cp));
    } else {
      return std::nullopt;
    }
    i = semi + 1;
    return expansion;
  }

  bool chunk_is_whitespace(std::string_view chunk) {
    for (char32_t cp : uni::to_u32(chunk))
      if (!uni::is_space(cp)) return false;
    return true;
  }

  void emit_text(std::string_view chunk) {
    if (chunk.empty()) return;
    if (!open_block) {
      // Outside any block: separator whitespace is dropped, anything else
      // extends the preceding block (or starts an implicit one).
      if (chunk_is_whitespace(chunk)) return;
      if (!out.blocks.empty()) {
        open_block = out.blocks.size() - 1;
      } else {
        out.blocks.push_back({"", cur_cp, cur_cp});
        open_block = 0;
      }
    }
    out.text += chunk;
    cur_cp += uni::cp_length(chunk);
  }

  const OpenX* innermost_valid() const {
    for (auto it = xstack.rbegin(); it != xstack.rend(); ++it)
      if (it->valid) return &*it;
    return nullptr;
  }

  OpenX* innermost_valid() {
    for (auto it = xstack.rbegin(); it != xstack.rend(); ++it)
      if (it->valid) return &*it;
    return nullptr;
  }

  void emit_run(const OpenX& x) {
    if (x.valid && cur_cp > x.run_start)
      out.runs.push_back({static_cast<int>(x.id), x.run_start, cur_cp});
  }

  void open_segment(long id, bool valid) {
    if (valid)
      if (OpenX* outer = innermost_valid()) emit_run(*outer);
    xstack.push_back({id, valid, cur_cp});
  }

  void close_segment() {
    if (xstack.empty()) return;  // stray </x>
    OpenX top = xstack.back();
    xstack.pop_back();
    if (top.valid) {
      emit_run(top);
      if (OpenX* outer = innermost_valid()) outer->run_start = cur_cp;
    }
  }

  void close_all_segments() {
    while (!xstack.empty()) close_segment();
  }

  void close_block() {
    close_all_segments();
    if (open_block) {
      out.blocks[*open_block].end = cur_cp;
      open_block.reset();
    }
  }

  void open_tag(const std::string& name, const std::vector<std::pair<std::string, std::string>>& attrs,
                bool self_closing) {
    if (name == "p") {
      close_block();
      std::string key;
      for (const auto& [k, v] : attrs)
        if (k == "key") {
          key = v;
          break;
        }
      out.blocks.push_back({key, cur_cp, cur_cp});
      open_block = out.blocks.size() - 1;
      if (self_closing) close_block();
      return;
    }
    if (name == "x") {
      long id = -1;
      bool valid = false;
      for (const auto& [k, v] : attrs)
        if (k == "id") {
          valid = !v.empty();
          for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) valid = false;
          if (valid) id = std::stol(v);
          break;
        }
      if (self_closing) return;  // empty content, no run
      open_segment(id, valid);
      return;
    }
    // Unknown elements are stripped; their content stays.
  }

  void close_tag(const std::string& name) {
    if (name == "x")
      close_segment();
    else if (name == "p")
      close_block();
    // Unknown close tags ignored.
  }

  void parse_tag() {
    // src[i] == '<' and the next char decides the shape.
    if (src.compare(i, 4, "<!--") == 0) {
      std::size_t end = src.find("-->", i + 4);
      if (end == std::string_view::npos) fail("unterminated comment");
      i = end + 3;
      return;
    }
    if (i + 1 < src.size() && (src[i + 1] == '!' || src[i + 1] == '?')) {
      std::size_t end = src.find('>', i);
      if (end == std::string_view::npos) fail("unterminated declaration");
      i = end + 1;
      return;
    }
    if (i + 1 < src.size() && src[i + 1] == '/') {
      i += 2;
      std::string name = read_name();
      std::size_t end = src.find('>', i);
      if (end == std::string_view::npos) fail("unterminated close tag");
      i = end + 1;
      close_tag(name);
      return;
    }
    if (i + 1 >= src.size() || !name_start(src[i + 1])) {
      // Literal '<' in text.
      emit_text("<");
      ++i;
      return;
    }
    ++i;
    std::string name = read_name();
    std::vector<std::pair<std::string, std::string>> attrs;
    bool self_closing = false;
    for (;;) {
      skip_ws();
      if (i >= src.size()) fail("unterminated tag <" + name);
      if (src[i] == '>') {
        ++i;
        break;
      }
      if (src[i] == '/') {
        ++i;
        skip_ws();
        if (i >= src.size()) fail("unterminated tag <" + name);
        if (src[i] == '>') {
          ++i;
          self_closing = true;
          break;
        }
        continue;  // stray '/', skip
      }
      if (!name_start(src[i]) && src[i] != '_') {
        ++i;  // unparseable attribute junk, skip a byte
        continue;
      }
      std::string attr_name = read_name();
      skip_ws();
      std::string value;
      if (i < src.size() && src[i] == '=') {
        ++i;
        skip_ws();
        if (i >= src.size()) fail("unterminated attribute in <" + name);
        char quote = src[i];
        if (quote == '"' || quote == '\'') {
          ++i;
          while (i < src.size() && src[i] != quote) {
            if (src[i] == '&') {
              if (auto exp = read_entity()) {
                value += *exp;
                continue;
              }
            }
            value.push_back(src[i]);
            ++i;
          }
          if (i >= src.size()) fail("unterminated attribute value in <" + name);
          ++i;
        } else {
          while (i < src.size() && !std::isspace(static_cast<unsigned char>(src[i])) &&
                 src[i] != '>' && src[i] != '/')
            value.push_back(src[i++]);
        }
      }
      bool seen = false;
      for (const auto& [k, v] : attrs) seen = seen || k == attr_name;
      if (!seen) attrs.emplace_back(attr_name, value);
    }
    open_tag(name, attrs, self_closing);
  }

  DecodedDoc run() {
    try {
      (void)uni::to_u32(src);
    } catch (const Error& e) {
      throw MarkupError(std::string("document is not valid UTF-8: ") + e.what());
    }
    while (i < src.size()) {
      if (src[i] == '<') {
        parse_tag();
        continue;
      }
      if (src[i] == '&') {
        if (auto exp = read_entity()) {
          emit_text(*exp);
          continue;
        }
        emit_text("&");
        ++i;
        continue;
      }
      std::size_t next = src.find_first_of("<&", i);
      if (next == std::string_view::npos) next = src.size();
      emit_text(src.substr(i, next - i));
      i = next;
    }
    close_block();
    return std::move(out);
  }
};

}  // namespace markup_detail

// Tolerant decode of a (possibly translated, possibly mangled) document.
// Unknown attributes are ignored and unexpected tags stripped; markup broken
// beyond repair raises MarkupError.
inline DecodedDoc decode_document(const MarkupDoc& doc) {
  markup_detail::Parser parser(doc.content);
  return parser.run();
}

inline LocatedRuns decode(const MarkupDoc& doc) {
  DecodedDoc dec = decode_document(doc);
  return {std::move(dec.text), std::move(dec.runs)};
}

// Runs of one block, rebased to block-local offsets. Runs straddling the
// block boundary are clipped to it.
inline LocatedRuns block_runs(const DecodedDoc& dec, std::size_t block_index) {
  const DecodedBlock& blk = dec.blocks.at(block_index);
  LocatedRuns out;
  out.text = uni::cp_slice(dec.text, blk.start, blk.end);
  for (const Run& r : dec.runs) {
    std::size_t lo = std::max(r.start, blk.start);
    std::size_t hi = std::min(r.end, blk.end);
    if (lo < hi) out.runs.push_back({r.segment_id, lo - blk.start, hi - blk.start});
  }
  return out;
}

}  // namespace spanmt

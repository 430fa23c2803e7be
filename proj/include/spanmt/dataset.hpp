#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spanmt/errors.hpp"
#include "spanmt/interval.hpp"
#include "spanmt/unicode.hpp"

// In-memory model of a SQuAD2.0-format corpus plus parsing, validation and
// serialization. All offsets count Unicode code points.

namespace spanmt {

struct AnswerSpan {
  std::string text;
  std::size_t answer_start = 0;
  // Discontinuous representation (output schema only). When present the
  // continuous span above is the hull of these pieces.
  std::vector<Interval> pieces;

  auto operator<=>(const AnswerSpan&) const = default;
};

struct QAEntry {
  std::string id;
  std::string question;
  bool is_impossible = false;
  std::vector<AnswerSpan> answers;
  std::vector<AnswerSpan> plausible_answers;  // only when is_impossible

  auto operator<=>(const QAEntry&) const = default;
};

struct Paragraph {
  std::string context;
  std::vector<QAEntry> qas;

  auto operator<=>(const Paragraph&) const = default;
};

struct Article {
  std::string title;
  std::vector<Paragraph> paragraphs;

  auto operator<=>(const Article&) const = default;
};

struct QADataset {
  std::string version;  // empty = key absent in source
  std::vector<Article> articles;

  auto operator<=>(const QADataset&) const = default;
};

struct ParseOptions {
  // Accept entries without is_impossible (pre-2.0 files) as answerable.
  bool squad11_compat = false;
};

struct DatasetStats {
  std::size_t articles = 0;
  std::size_t paragraphs = 0;
  std::size_t questions = 0;
  std::size_t answerable = 0;
  std::size_t unanswerable = 0;
  std::size_t answer_spans = 0;  // answers + plausible answers
  std::size_t discontinuous_answers = 0;

  double discontinuous_fraction() const {
    return answer_spans == 0 ? 0.0
                             : static_cast<double>(discontinuous_answers) / answer_spans;
  }
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& path) {
  const auto& v = require_field(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

inline AnswerSpan parse_answer(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an answer object");
  AnswerSpan a;
  a.text = require_string(j, "text", path);
  const auto& start = require_field(j, "answer_start", path);
  if (!start.is_number_integer() || start.get<long long>() < 0)
    throw SchemaError(path + ".answer_start", "expected a non-negative integer");
  a.answer_start = start.get<std::size_t>();
  if (auto it = j.find("answer_pieces"); it != j.end()) {
    if (!it->is_array()) throw SchemaError(path + ".answer_pieces", "expected an array");
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer() || p[0].get<long long>() < 0 || p[1].get<long long>() < 0)
        throw SchemaError(path + ".answer_pieces", "expected [start, end] integer pairs");
      a.pieces.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
    }
  }
  return a;
}

// Checks the offset/text agreement and piece invariants of one answer.
inline void validate_answer(const AnswerSpan& a, const uni::CpIndex& context,
                            const std::string& qa_id) {
  std::size_t text_len = uni::cp_length(a.text);
  std::size_t end = a.answer_start + text_len;
  if (end > context.cp_length())
    throw OffsetMismatchError(qa_id, "answer span [" + std::to_string(a.answer_start) + ", " +
                                         std::to_string(end) + ") exceeds context length " +
                                         std::to_string(context.cp_length()));
  if (context.slice(a.answer_start, end) != a.text)
    throw OffsetMismatchError(qa_id, "context slice at " + std::to_string(a.answer_start) +
                                         " does not match answer text '" + a.text + "'");
  if (!a.pieces.empty()) {
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
      if (a.pieces[i].empty())
        throw SchemaError("answer_pieces", "empty piece in answer of qa '" + qa_id + "'");
      if (i > 0 && a.pieces[i].start < a.pieces[i - 1].end)
        throw SchemaError("answer_pieces",
                          "pieces not sorted/disjoint in answer of qa '" + qa_id + "'");
    }
    if (a.pieces.front().start != a.answer_start || a.pieces.back().end != end)
      throw SchemaError("answer_pieces", "pieces hull does not match continuous span of qa '" +
                                             qa_id + "'");
  }
}

}  // namespace detail

// Re-checks every invariant the parser enforces; used after pipeline output
// assembly as well.
inline void validate_dataset(const QADataset& d) {
  std::set<std::string> ids;
  for (std::size_t ai = 0; ai < d.articles.size(); ++ai) {
    const Article& article = d.articles[ai];
    for (std::size_t pi = 0; pi < article.paragraphs.size(); ++pi) {
      const Paragraph& para = article.paragraphs[pi];
      std::string path = "data[" + std::to_string(ai) + "].paragraphs[" + std::to_string(pi) + "]";
      if (para.context.empty()) throw SchemaError(path + ".context", "context must be non-empty");
      uni::CpIndex index(para.context);
      for (std::size_t qi = 0; qi < para.qas.size(); ++qi) {
        const QAEntry& qa = para.qas[qi];
        std::string qa_path = path + ".qas[" + std::to_string(qi) + "]";
        if (!ids.insert(qa.id).second)
          throw SchemaError(qa_path + ".id", "duplicate question id '" + qa.id + "'");
        if (qa.is_impossible && !qa.answers.empty())
          throw SchemaError(qa_path, "unanswerable question has answers");
        if (!qa.is_impossible && qa.answers.empty())
          throw SchemaError(qa_path, "answerable question has no answers");
        if (!qa.is_impossible && !qa.plausible_answers.empty())
          throw SchemaError(qa_path, "answerable question has plausible_answers");
        for (const AnswerSpan& a : qa.answers) detail::validate_answer(a, index, qa.id);
        for (const AnswerSpan& a : qa.plausible_answers) detail::validate_answer(a, index, qa.id);
      }
    }
  }
}

inline QADataset parse_dataset(std::string_view raw, const ParseOptions& opts = {}) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(raw);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("$", "expected a top-level object");

  QADataset d;
  if (auto it = root.find("version"); it != root.end()) {
    if (!it->is_string()) throw SchemaError("version", "expected a string");
    d.version = it->get<std::string>();
  }
  const auto& data = detail::require_field(root, "data", "$");
  if (!data.is_array()) throw SchemaError("data", "expected an array");

  for (std::size_t ai = 0; ai < data.size(); ++ai) {
    std::string apath = "data[" + std::to_string(ai) + "]";
    const auto& ja = data[ai];
    if (!ja.is_object()) throw SchemaError(apath, "expected an article object");
    Article article;
    if (auto it = ja.find("title"); it != ja.end() && it->is_string())
      article.title = it->get<std::string>();
    const auto& paragraphs = detail::require_field(ja, "paragraphs", apath);
    if (!paragraphs.is_array()) throw SchemaError(apath + ".paragraphs", "expected an array");

    for (std::size_t pi = 0; pi < paragraphs.size(); ++pi) {
      std::string ppath = apath + ".paragraphs[" + std::to_string(pi) + "]";
      const auto& jp = paragraphs[pi];
      if (!jp.is_object()) throw SchemaError(ppath, "expected a paragraph object");
      Paragraph para;
      para.context = detail::require_string(jp, "context", ppath);
      const auto& qas = detail::require_field(jp, "qas", ppath);
      if (!qas.is_array()) throw SchemaError(ppath + ".qas", "expected an array");

      for (std::size_t qi = 0; qi < qas.size(); ++qi) {
        std::string qpath = ppath + ".qas[" + std::to_string(qi) + "]";
        const auto& jq = qas[qi];
        if (!jq.is_object()) throw SchemaError(qpath, "expected a qa object");
        QAEntry qa;
        qa.id = detail::require_string(jq, "id", qpath);
        qa.question = detail::require_string(jq, "question", qpath);
        if (auto it = jq.find("is_impossible"); it != jq.end()) {
          if (!it->is_boolean()) throw SchemaError(qpath + ".is_impossible", "expected a boolean");
          qa.is_impossible = it->get<bool>();
        } else if (!opts.squad11_compat) {
          throw SchemaError(qpath, "missing field 'is_impossible' (pass the SQuAD1.1 "
                                   "compatibility option for pre-2.0 files)");
        }
        const auto& answers = detail::require_field(jq, "answers", qpath);
        if (!answers.is_array()) throw SchemaError(qpath + ".answers", "expected an array");
        for (std::size_t xi = 0; xi < answers.size(); ++xi)
          qa.answers.push_back(
              detail::parse_answer(answers[xi], qpath + ".answers[" + std::to_string(xi) + "]"));
        if (auto it = jq.find("plausible_answers"); it != jq.end()) {
          if (!it->is_array())
            throw SchemaError(qpath + ".plausible_answers", "expected an array");
          for (std::size_t xi = 0; xi < it->size(); ++xi)
            qa.plausible_answers.push_back(detail::parse_answer(
                (*it)[xi], qpath + ".plausible_answers[" + std::to_string(xi) + "]"));
        }
        para.qas.push_back(std::move(qa));
      }
      article.paragraphs.push_back(std::move(para));
    }
    d.articles.push_back(std::move(article));
  }

  validate_dataset(d);
  return d;
}

inline QADataset parse_dataset(std::istream& in, const ParseOptions& opts = {}) {
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_dataset(raw, opts);
}

// Canonical serialization; parse_dataset(serialize_dataset(d)) == d. With
// extended=true, answers with a discontinuous representation additionally
// carry "answer_pieces": [[start, end], ...].
inline std::string serialize_dataset(const QADataset& d, bool extended = false) {
  using ojson = nlohmann::ordered_json;
  auto answer_json = [&](const AnswerSpan& a) {
    ojson ja;
    ja["text"] = a.text;
    ja["answer_start"] = a.answer_start;
    if (extended && !a.pieces.empty()) {
      ojson pieces = ojson::array();
      for (const Interval& p : a.pieces) pieces.push_back({p.start, p.end});
      ja["answer_pieces"] = std::move(pieces);
    }
    return ja;
  };

  ojson root;
  if (!d.version.empty()) root["version"] = d.version;
  ojson data = ojson::array();
  for (const Article& article : d.articles) {
    ojson ja;
    ja["title"] = article.title;
    ojson paragraphs = ojson::array();
    for (const Paragraph& para : article.paragraphs) {
      ojson jp;
      jp["context"] = para.context;
      ojson qas = ojson::array();
      for (const QAEntry& qa : para.qas) {
        ojson jq;
        jq["question"] = qa.question;
        jq["id"] = qa.id;
        jq["answers"] = ojson::array();
        for (const AnswerSpan& a : qa.answers) jq["answers"].push_back(answer_json(a));
        jq["is_impossible"] = qa.is_impossible;
        if (!qa.plausible_answers.empty()) {
          jq["plausible_answers"] = ojson::array();
          for (const AnswerSpan& a : qa.plausible_answers)
            jq["plausible_answers"].push_back(answer_json(a));
        }
        qas.push_back(std::move(jq));
      }
      jp["qas"] = std::move(qas);
      paragraphs.push_back(std::move(jp));
    }
    ja["paragraphs"] = std::move(paragraphs);
    data.push_back(std::move(ja));
  }
  root["data"] = std::move(data);
  return root.dump();
}

inline DatasetStats dataset_stats(const QADataset& d) {
  DatasetStats s;
  s.articles = d.articles.size();
  for (const Article& article : d.articles) {
    s.paragraphs += article.paragraphs.size();
    for (const Paragraph& para : article.paragraphs) {
      s.questions += para.qas.size();
      for (const QAEntry& qa : para.qas) {
        (qa.is_impossible ? s.unanswerable : s.answerable) += 1;
        for (const AnswerSpan& a : qa.answers) {
          ++s.answer_spans;
          if (a.pieces.size() >= 2) ++s.discontinuous_answers;
        }
        for (const AnswerSpan& a : qa.plausible_answers) {
          ++s.answer_spans;
          if (a.pieces.size() >= 2) ++s.discontinuous_answers;
        }
      }
    }
  }
  return s;
}

inline QADataset load_dataset_file(const std::string& path, const ParseOptions& opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset file: " + path);
  return parse_dataset(in, opts);
}

inline void save_dataset_file(const std::string& path, const QADataset& d,
                              bool extended = false) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write dataset file: " + path);
  out << serialize_dataset(d, extended);
  if (!out) throw IoError("failed writing dataset file: " + path);
}

}  // namespace spanmt

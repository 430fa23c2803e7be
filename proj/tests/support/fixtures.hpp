#pragma once

#include <random>
#include <string>
#include <vector>

#include "spanmt/dataset.hpp"
#include "spanmt/unicode.hpp"

// Shared corpus builders for the test suites. All generators are
// deterministic under their seed.

namespace spanmt::testing {

inline AnswerSpan answer_at(const std::string& context, std::size_t cp_start,
                            std::size_t cp_end) {
  AnswerSpan a;
  a.answer_start = cp_start;
  a.text = uni::cp_slice(context, cp_start, cp_end);
  return a;
}

// A small hand-written corpus exercising overlaps, non-Latin text,
// unanswerable entries and multiple reference answers.
inline QADataset mini_dataset() {
  QADataset d;
  d.version = "v2.0";

  Article a1;
  a1.title = "Leaks";
  Paragraph p1;
  p1.context = "documents obtained by WikiLeaks were published last year";
  QAEntry q1;
  q1.id = "leaks-q1";
  q1.question = "What was published?";
  q1.answers = {answer_at(p1.context, 0, 31)};  // "documents obtained by WikiLeaks"
  QAEntry q2;
  q2.id = "leaks-q2";
  q2.question = "Who obtained the documents?";
  q2.answers = {answer_at(p1.context, 22, 31), answer_at(p1.context, 22, 31)};  // "WikiLeaks" x2
  QAEntry q3;
  q3.id = "leaks-q3";
  q3.question = "When was the site shut down?";
  q3.is_impossible = true;
  q3.plausible_answers = {answer_at(p1.context, 42, 56)};  // "published last"
  p1.qas = {q1, q2, q3};
  a1.paragraphs.push_back(p1);
  d.articles.push_back(a1);

  Article a2;
  a2.title = "Helsinki";
  Paragraph p2;
  p2.context = "Helsinki on Suomen pääkaupunki ja väkirikkain kunta";
  QAEntry q4;
  q4.id = "hel-q1";
  q4.question = "Mikä on Suomen pääkaupunki?";
  q4.answers = {answer_at(p2.context, 0, 8), answer_at(p2.context, 0, 30)};
  p2.qas = {q4};
  a2.paragraphs.push_back(p2);
  d.articles.push_back(a2);

  return d;
}

struct SyntheticSpec {
  std::size_t articles = 3;
  std::size_t paragraphs_per_article = 4;
  std::size_t qas_per_paragraph = 5;
  std::uint64_t seed = 1;
  // When false, contexts contain no punctuation at all; word-order
  // transforms then preserve answers exactly.
  bool punctuation = true;
};

// Generates a structurally valid corpus with overlapping, nested and
// duplicated answers, unanswerable entries and some non-Latin words.
inline QADataset synthetic_dataset(const SyntheticSpec& spec) {
  static const std::vector<std::string> kWords = {
      "aurinko", "nousee", "idästä",  "kaupunki", "sijaitsee", "rannikolla", "joki",
      "virtaa",  "etelään", "vuori",  "kohoaa",   "korkealle", "metsä",      "kasvaa",
      "hitaasti", "talvi",  "kestää", "kauan",    "ihmiset",   "asuvat",     "täällä",
      "museo",   "avattiin", "vuonna", "silta",   "ylittää",   "salmen",     "yliopisto",
      "perustettiin", "aikoin", "kirjasto", "palvelee", "kaikkia", "satama", "vilkastuu",
      "kesällä", "found",  "river",  "north",    "castle",     "stands",    "hill",
      "harbour", "grew",   "slowly", "written",  "records",    "show",      "早い",
      "時代",    "から",    "知られる"};
  std::mt19937_64 rng(spec.seed);

  auto pick_word = [&]() { return kWords[rng() % kWords.size()]; };

  QADataset d;
  d.version = "v2.0";
  for (std::size_t ai = 0; ai < spec.articles; ++ai) {
    Article article;
    article.title = "article-" + std::to_string(ai);
    for (std::size_t pi = 0; pi < spec.paragraphs_per_article; ++pi) {
      Paragraph para;
      std::size_t n_words = 12 + rng() % 24;
      std::vector<std::size_t> word_starts;  // in code points
      std::string context;
      std::size_t cp_pos = 0;
      for (std::size_t w = 0; w < n_words; ++w) {
        std::string word = pick_word();
        if (spec.punctuation && rng() % 9 == 0) word += ",";
        if (w > 0) {
          context += " ";
          ++cp_pos;
        }
        word_starts.push_back(cp_pos);
        context += word;
        cp_pos += uni::cp_length(word);
      }
      word_starts.push_back(cp_pos + 1);  // sentinel past a virtual final gap
      if (spec.punctuation) context += ".";
      para.context = context;

      auto word_range_span = [&](std::size_t w0, std::size_t w1) {
        // Span covering words [w0, w1], trimmed of any trailing punctuation
        // so fixtures stay stable under stripping.
        std::size_t start = word_starts[w0];
        std::size_t end = w1 + 1 < word_starts.size() - 1 ? word_starts[w1 + 1] - 1
                                                          : uni::cp_length(context);
        uni::CpIndex idx(context);
        while (end > start && uni::is_punct(idx.at(end - 1))) --end;
        return answer_at(context, start, end);
      };

      for (std::size_t qi = 0; qi < spec.qas_per_paragraph; ++qi) {
        QAEntry qa;
        qa.id = "a" + std::to_string(ai) + "-p" + std::to_string(pi) + "-q" + std::to_string(qi);
        std::size_t qw0 = rng() % n_words;
        qa.question = "missä on " + pick_word() + " " + pick_word() + "?";
        (void)qw0;
        bool impossible = rng() % 4 == 0;
        qa.is_impossible = impossible;
        std::size_t n_answers = impossible ? (rng() % 2) : (1 + rng() % 3);
        std::size_t w0 = rng() % n_words;
        std::size_t w1 = std::min(w0 + rng() % 4, n_words - 1);
        auto& target = impossible ? qa.plausible_answers : qa.answers;
        for (std::size_t k = 0; k < n_answers || (!impossible && target.empty()); ++k) {
          // Overlapping/nested variants of the same region.
          std::size_t s0 = w0 + (k > 0 && w1 > w0 ? rng() % (w1 - w0 + 1) : 0);
          std::size_t s1 = std::min(s0 + rng() % (w1 - s0 + 1), n_words - 1);
          target.push_back(word_range_span(s0, std::max(s0, s1)));
          if (k > 4) break;
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

}  // namespace spanmt::testing

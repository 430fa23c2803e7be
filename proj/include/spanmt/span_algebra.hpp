#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spanmt/errors.hpp"
#include "spanmt/interval.hpp"
#include "spanmt/unicode.hpp"

// Decomposition of possibly-overlapping spans into disjoint uniquely-tagged
// segments, and reconstruction of spans from wherever those segments ended
// up after translation.

namespace spanmt {

struct Segment {
  int id = 0;
  Interval interval;

  auto operator<=>(const Segment&) const = default;
};

struct SegmentPlan {
  // Disjoint, sorted by start, ids dense in document order.
  std::vector<Segment> segments;
  // mapping[k] = ordered segment ids tiling input span k.
  std::vector<std::vector<int>> mapping;
};

struct Run {
  int segment_id = 0;
  std::size_t start = 0;
  std::size_t end = 0;

  auto operator<=>(const Run&) const = default;
};

// A decoded translated document: plain text plus the segment occurrences
// found in it. A segment id may occur 0, 1, or many times.
struct LocatedRuns {
  std::string text;
  std::vector<Run> runs;  // sorted by start, pairwise disjoint
};

enum class SpanStatus { found, missing };

struct ReconstructedSpan {
  std::vector<Interval> pieces;  // ordered, disjoint
  Interval hull;                 // [first piece start, last piece end)
  SpanStatus status = SpanStatus::missing;
};

// Splits the input spans at every span boundary so that each output segment
// is covered by a fixed set of spans. Segment ids are assigned left to
// right. Duplicate input spans share segments.
inline SegmentPlan decompose(const std::vector<Interval>& spans, std::size_t context_len) {
  for (const auto& s : spans) {
    if (s.start >= s.end)
      throw InvalidSpanError("empty span [" + std::to_string(s.start) + ", " +
                             std::to_string(s.end) + ")");
    if (s.end > context_len)
      throw InvalidSpanError("span [" + std::to_string(s.start) + ", " + std::to_string(s.end) +
                             ") exceeds context length " + std::to_string(context_len));
  }

  // Candidate boundaries are exactly the span endpoints.
  std::vector<std::size_t> bounds;
  bounds.reserve(spans.size() * 2);
  for (const auto& s : spans) {
    bounds.push_back(s.start);
    bounds.push_back(s.end);
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  SegmentPlan plan;
  plan.mapping.resize(spans.size());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Interval cell{bounds[i], bounds[i + 1]};
    bool covered = false;
    for (const auto& s : spans) {
      if (s.start <= cell.start && cell.end <= s.end) {
        covered = true;
        break;
      }
    }
    if (!covered) continue;
    int id = static_cast<int>(plan.segments.size());
    plan.segments.push_back({id, cell});
    for (std::size_t k = 0; k < spans.size(); ++k)
      if (spans[k].start <= cell.start && cell.end <= spans[k].end)
        plan.mapping[k].push_back(id);
  }
  return plan;
}

// Merges sorted intervals, treating abutting ones (end == next start) as
// contiguous.
inline std::vector<Interval> coalesce(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end());
  std::vector<Interval> out;
  for (const auto& p : pieces) {
    if (p.empty()) continue;
    if (!out.empty() && p.start <= out.back().end)
      out.back().end = std::max(out.back().end, p.end);
    else
      out.push_back(p);
  }
  return out;
}

// Rebuilds each planned span from the run occurrences of its segment ids.
// Every way the translation can mangle the runs maps to a defined outcome;
// a span with no surviving segment occurrence is reported missing.
inline std::vector<ReconstructedSpan> recompose(const SegmentPlan& plan,
                                                const LocatedRuns& located) {
  std::map<int, std::vector<Interval>> occurrences;
  for (const auto& run : located.runs)
    occurrences[run.segment_id].push_back({run.start, run.end});

  std::vector<ReconstructedSpan> out(plan.mapping.size());
  for (std::size_t k = 0; k < plan.mapping.size(); ++k) {
    std::vector<Interval> pieces;
    for (int id : plan.mapping[k]) {
      auto it = occurrences.find(id);
      if (it == occurrences.end()) continue;
      pieces.insert(pieces.end(), it->second.begin(), it->second.end());
    }
    pieces = coalesce(std::move(pieces));
    if (pieces.empty()) continue;  // stays missing
    out[k].status = SpanStatus::found;
    out[k].hull = {pieces.front().start, pieces.back().end};
    out[k].pieces = std::move(pieces);
  }
  return out;
}

// Retreats the span end past any trailing characters in Unicode general
// categories P*. Pieces that empty out are removed; a span that empties
// completely becomes missing. Never extends the span; idempotent.
inline ReconstructedSpan strip_trailing_punctuation(const ReconstructedSpan& span,
                                                    std::string_view text) {
  if (span.status == SpanStatus::missing) return span;

  uni::CpIndex index(text);
  ReconstructedSpan out;
  out.pieces = span.pieces;
  while (!out.pieces.empty()) {
    Interval& last = out.pieces.back();
    while (last.end > last.start && uni::is_punct(index.at(last.end - 1))) --last.end;
    if (last.empty())
      out.pieces.pop_back();
    else
      break;
  }
  if (out.pieces.empty()) {
    out.status = SpanStatus::missing;
    out.hull = {};
    return out;
  }
  out.status = SpanStatus::found;
  out.hull = {out.pieces.front().start, out.pieces.back().end};
  return out;
}

}  // namespace spanmt

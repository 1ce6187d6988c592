// Copyright 2026 The Ideonaut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ideonaut/gateway/judge_reply.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <string>

#include "ideonaut/error.h"

namespace ideonaut::gateway {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Content of the first ``` fence, or the whole reply when there is none.
std::string_view FencedBody(std::string_view raw) {
  const size_t open = raw.find("```");
  if (open == std::string_view::npos) return raw;
  size_t start = raw.find('\n', open);
  if (start == std::string_view::npos) return {};
  ++start;
  const size_t close = raw.find("```", start);
  return raw.substr(start, close == std::string_view::npos
                               ? std::string_view::npos
                               : close - start);
}

int ParseScore(const std::string& key, std::string_view value) {
  int score = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), score);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ScoringError("non-integer value for " + key);
  }
  if (score < kMinScore || score > kMaxScore) {
    throw ScoringError("score out of range");
  }
  return score;
}

bool ParseBool(std::string_view value) {
  const std::string v = Lower(value);
  if (v == "yes" || v == "true") return true;
  if (v == "no" || v == "false") return false;
  throw ScoringError("relevant must be yes/no");
}

}  // namespace

std::string BuildJudgePrompt(std::string_view idea,
                             std::string_view objective) {
  std::ostringstream out;
  out << "You are scoring one idea against a creativity rubric.\n"
      << "Objective: " << objective << "\n"
      << "Idea: " << idea << "\n\n"
      << "Answer inside a ``` block with exactly these keys:\n"
      << "originality: 1-5 (is the idea original or unexpected?)\n"
      << "relevant: yes/no (is the idea relevant to the objective?)\n"
      << "elaboration: 1-5 (how detailed is the idea?)\n"
      << "category: one or two words naming the kind of idea\n";
  return out.str();
}

ScoreCard ParseJudgeReply(std::string_view raw) {
  if (Trim(raw).empty()) throw ScoringError("empty judge reply");
  std::map<std::string, std::string> fields;
  std::string_view body = FencedBody(raw);
  while (!body.empty()) {
    const size_t eol = body.find('\n');
    const std::string_view line = body.substr(0, eol);
    body = eol == std::string_view::npos ? std::string_view{}
                                         : body.substr(eol + 1);
    const size_t colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    const std::string key = Lower(Trim(line.substr(0, colon)));
    // First occurrence wins.
    fields.emplace(key, std::string(Trim(line.substr(colon + 1))));
  }
  for (const char* key : {"originality", "relevant", "elaboration", "category"}) {
    if (!fields.contains(key)) {
      throw ScoringError(std::string("missing key: ") + key);
    }
  }
  ScoreCard card;
  card.originality = ParseScore("originality", fields["originality"]);
  card.relevant = ParseBool(fields["relevant"]);
  card.elaboration = ParseScore("elaboration", fields["elaboration"]);
  card.category = fields["category"];
  return card;
}

}  // namespace ideonaut::gateway

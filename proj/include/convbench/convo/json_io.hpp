#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "convbench/convo/types.hpp"

namespace convbench {

// Line-delimited dataset files. Each line is one JSON object with a fixed
// field order; serialization is canonical so that serialize(parse(file))
// is byte-identical for canonically formatted input.
//
// Instance fields: instance_id, original_id, source, split,
//   turns [{speaker, text}], inventory {agents, objects, locations},
//   focus {agents, objects, locations}, question {text, qtype},
//   gold ("yes" | "no" | "" while pending),
//   alteration {atype, turn_indices, original_span, altered_span,
//               label_effect_hint, rng_seed}.
// Prediction fields: instance_id, model_name, predicted | parse_error,
//   raw_completion.

using ojson = nlohmann::ordered_json;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ojson to_json(const Instance& ins) {
  ojson j;
  j["instance_id"] = ins.instance_id;
  j["original_id"] = ins.original_id;
  j["source"] = to_string(ins.conversation.source);
  j["split"] = to_string(ins.conversation.split);
  ojson turns = ojson::array();
  for (const auto& u : ins.conversation.turns) {
    ojson t;
    t["speaker"] = u.speaker.display_name;
    t["text"] = u.text;
    turns.push_back(std::move(t));
  }
  j["turns"] = std::move(turns);
  j["inventory"] = {{"agents", ins.conversation.inventory.agents},
                    {"objects", ins.conversation.inventory.objects},
                    {"locations", ins.conversation.inventory.locations}};
  j["focus"] = {{"agents", ins.conversation.focus.agents},
                {"objects", ins.conversation.focus.objects},
                {"locations", ins.conversation.focus.locations}};
  j["question"] = {{"text", ins.question.text}, {"qtype", to_string(ins.question.qtype)}};
  j["gold"] = ins.gold ? to_string(*ins.gold) : "";
  ojson alt;
  alt["atype"] = to_string(ins.alteration.atype);
  alt["turn_indices"] = ins.alteration.turn_indices;
  alt["original_span"] = ins.alteration.original_span;
  alt["altered_span"] = ins.alteration.altered_span;
  alt["label_effect_hint"] = to_string(ins.alteration.label_effect_hint);
  if (ins.alteration.rng_seed)
    alt["rng_seed"] = *ins.alteration.rng_seed;
  else
    alt["rng_seed"] = nullptr;
  j["alteration"] = std::move(alt);
  return j;
}

inline std::string serialize_line(const Instance& ins) { return to_json(ins).dump(); }

namespace detail {

inline std::vector<std::string> string_list(const ojson& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw ParseFailure(std::string("missing or non-array field '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
  return out;
}

template <typename E>
E parse_enum(const ojson& j, const char* key) {
  if (!j.contains(key)) throw ParseFailure(std::string("missing field '") + key + "'");
  auto s = j.at(key).get<std::string>();
  auto e = enum_from_string<E>(s);
  if (!e) throw ParseFailure(std::string("bad value '") + s + "' for field '" + key + "'");
  return *e;
}

}  // namespace detail

inline Instance instance_from_json(const ojson& j) {
  Instance ins;
  ins.instance_id = j.at("instance_id").get<std::string>();
  ins.original_id = j.at("original_id").get<std::string>();
  ins.conversation.id = ins.instance_id;
  ins.conversation.source = detail::parse_enum<Source>(j, "source");
  ins.conversation.split = detail::parse_enum<Split>(j, "split");
  if (!j.contains("turns") || !j.at("turns").is_array())
    throw ParseFailure("missing or non-array field 'turns'");
  for (const auto& t : j.at("turns")) {
    Utterance u;
    u.speaker.display_name = t.at("speaker").get<std::string>();
    u.text = t.at("text").get<std::string>();
    ins.conversation.turns.push_back(std::move(u));
  }
  assign_speaker_tags(ins.conversation);
  const auto& inv = j.at("inventory");
  ins.conversation.inventory.agents = detail::string_list(inv, "agents");
  ins.conversation.inventory.objects = detail::string_list(inv, "objects");
  ins.conversation.inventory.locations = detail::string_list(inv, "locations");
  const auto& foc = j.at("focus");
  ins.conversation.focus.agents = detail::string_list(foc, "agents");
  ins.conversation.focus.objects = detail::string_list(foc, "objects");
  ins.conversation.focus.locations = detail::string_list(foc, "locations");
  ins.question.text = j.at("question").at("text").get<std::string>();
  ins.question.qtype = detail::parse_enum<QuestionType>(j.at("question"), "qtype");
  auto gold = j.at("gold").get<std::string>();
  if (!gold.empty()) {
    auto l = enum_from_string<Label>(gold);
    if (!l) throw ParseFailure("bad value '" + gold + "' for field 'gold'");
    ins.gold = *l;
  }
  const auto& alt = j.at("alteration");
  ins.alteration.atype = detail::parse_enum<AlterationType>(alt, "atype");
  for (const auto& v : alt.at("turn_indices")) ins.alteration.turn_indices.push_back(v.get<std::size_t>());
  ins.alteration.original_span = alt.at("original_span").get<std::string>();
  ins.alteration.altered_span = alt.at("altered_span").get<std::string>();
  ins.alteration.label_effect_hint = detail::parse_enum<LabelEffectHint>(alt, "label_effect_hint");
  if (alt.contains("rng_seed") && !alt.at("rng_seed").is_null())
    ins.alteration.rng_seed = alt.at("rng_seed").get<std::uint64_t>();
  return ins;
}

inline Instance parse_line(const std::string& line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("invalid JSON: ") + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("bad record: ") + e.what());
  }
}

inline std::vector<Instance> read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::vector<Instance> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(parse_line(line));
    } catch (const ParseFailure& e) {
      throw ParseFailure("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline void write_dataset(const std::string& path, const std::vector<Instance>& dataset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (const auto& ins : dataset) out << serialize_line(ins) << '\n';
}

// --- prediction records ------------------------------------------------------

inline std::string serialize_line(const PredictionRecord& rec) {
  ojson j;
  j["instance_id"] = rec.instance_id;
  j["model_name"] = rec.model_name;
  if (rec.predicted)
    j["predicted"] = to_string(*rec.predicted);
  else
    j["parse_error"] = rec.parse_error.value_or("unknown");
  j["raw_completion"] = rec.raw_completion;
  return j.dump();
}

inline PredictionRecord prediction_from_line(const std::string& line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("invalid JSON: ") + e.what());
  }
  PredictionRecord rec;
  rec.instance_id = j.at("instance_id").get<std::string>();
  rec.model_name = j.at("model_name").get<std::string>();
  const bool has_pred = j.contains("predicted");
  const bool has_err = j.contains("parse_error");
  if (has_pred == has_err)
    throw ParseFailure("prediction record needs exactly one of predicted/parse_error");
  if (has_pred) {
    auto l = enum_from_string<Label>(j.at("predicted").get<std::string>());
    if (!l) throw ParseFailure("bad 'predicted' value");
    rec.predicted = *l;
  } else {
    rec.parse_error = j.at("parse_error").get<std::string>();
  }
  rec.raw_completion = j.at("raw_completion").get<std::string>();
  return rec;
}

inline std::vector<PredictionRecord> read_predictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open prediction file: " + path);
  std::vector<PredictionRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(prediction_from_line(line));
    } catch (const ParseFailure& e) {
      throw ParseFailure("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline void write_predictions(const std::string& path, const std::vector<PredictionRecord>& preds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (const auto& p : preds) out << serialize_line(p) << '\n';
}

}  // namespace convbench

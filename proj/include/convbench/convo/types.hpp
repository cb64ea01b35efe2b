#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace convbench {

// ---------------------------------------------------------------------------
// Core domain types for dyadic conversations, alterations, questions and
// predictions. All types are immutable-by-convention value objects: build
// them, validate them, pass them around by const reference.
// ---------------------------------------------------------------------------

enum class SpeakerTag { First, Second };

struct Speaker {
  SpeakerTag tag = SpeakerTag::First;
  std::string display_name;
};

struct Utterance {
  std::size_t index = 0;  // 0-based turn position, consecutive per conversation
  Speaker speaker;
  std::string text;
};

enum class Source { Grice, Cicero };
enum class Split { Manual, Synthetic };

struct EntityInventory {
  std::vector<std::string> agents;
  std::vector<std::string> objects;
  std::vector<std::string> locations;
};

// Focus names must be a subset of the corresponding inventory list; at most
// two names per kind.
struct FocusSet {
  std::vector<std::string> agents;
  std::vector<std::string> objects;
  std::vector<std::string> locations;
};

struct Conversation {
  std::string id;
  Source source = Source::Grice;
  Split split = Split::Synthetic;
  std::vector<Utterance> turns;
  EntityInventory inventory;
  FocusSet focus;
  std::optional<std::string> seed_id;  // in-memory provenance, not serialized
};

enum class AlterationType {
  NotAltered,
  Negation,
  VariableSubstitution,
  QuantityChange,
  VariableSwap,
  QuantifierChange,
  LogicalConnectiveChange,
  InconsistentData,
};

enum class LabelEffectHint { Flip, Invariant, Unknown };

struct AlterationRecord {
  AlterationType atype = AlterationType::NotAltered;
  std::vector<std::size_t> turn_indices;
  std::string original_span;
  std::string altered_span;
  LabelEffectHint label_effect_hint = LabelEffectHint::Unknown;
  std::optional<std::uint64_t> rng_seed;
};

enum class QuestionType {
  Quantity,
  UniversalQuantifier,
  ExistentialQuantifier,
  OnlyEntity,
  Sure,
  Know,
  Other,
};

struct Question {
  std::string text;  // must end in "?"
  QuestionType qtype = QuestionType::Other;
};

enum class Label { Yes, No };
enum class OracleLabel { Yes, No, Unknown };

inline OracleLabel to_oracle(Label l) {
  return l == Label::Yes ? OracleLabel::Yes : OracleLabel::No;
}

struct Instance {
  std::string instance_id;
  std::string original_id;  // == instance_id for unaltered instances
  Conversation conversation;
  Question question;
  std::optional<Label> gold;  // empty while awaiting oracle/manual labeling
  AlterationRecord alteration;

  bool is_original() const { return alteration.atype == AlterationType::NotAltered; }
};

struct PredictionRecord {
  std::string instance_id;
  std::string model_name;
  std::optional<Label> predicted;
  std::string raw_completion;
  std::optional<std::string> parse_error;  // exactly one of predicted/parse_error
};

// --- enum <-> string names used by the wire format and reports --------------

inline const char* to_string(Source s) { return s == Source::Grice ? "grice" : "cicero"; }
inline const char* to_string(Split s) { return s == Split::Manual ? "manual" : "synthetic"; }
inline const char* to_string(Label l) { return l == Label::Yes ? "yes" : "no"; }

inline const char* to_string(OracleLabel l) {
  switch (l) {
    case OracleLabel::Yes: return "yes";
    case OracleLabel::No: return "no";
    default: return "unknown";
  }
}

inline const char* to_string(AlterationType t) {
  switch (t) {
    case AlterationType::NotAltered: return "not_altered";
    case AlterationType::Negation: return "negation";
    case AlterationType::VariableSubstitution: return "variable_substitution";
    case AlterationType::QuantityChange: return "quantity_change";
    case AlterationType::VariableSwap: return "variable_swap";
    case AlterationType::QuantifierChange: return "quantifier_change";
    case AlterationType::LogicalConnectiveChange: return "logical_connective_change";
    case AlterationType::InconsistentData: return "inconsistent_data";
  }
  return "not_altered";
}

inline const char* to_string(LabelEffectHint h) {
  switch (h) {
    case LabelEffectHint::Flip: return "flip";
    case LabelEffectHint::Invariant: return "invariant";
    default: return "unknown";
  }
}

inline const char* to_string(QuestionType q) {
  switch (q) {
    case QuestionType::Quantity: return "quantity";
    case QuestionType::UniversalQuantifier: return "universal_quantifier";
    case QuestionType::ExistentialQuantifier: return "existential_quantifier";
    case QuestionType::OnlyEntity: return "only_entity";
    case QuestionType::Sure: return "sure";
    case QuestionType::Know: return "know";
    default: return "other";
  }
}

template <typename T>
std::optional<T> enum_from_string(const std::string&);

template <>
inline std::optional<Source> enum_from_string<Source>(const std::string& s) {
  if (s == "grice") return Source::Grice;
  if (s == "cicero") return Source::Cicero;
  return std::nullopt;
}

template <>
inline std::optional<Split> enum_from_string<Split>(const std::string& s) {
  if (s == "manual") return Split::Manual;
  if (s == "synthetic") return Split::Synthetic;
  return std::nullopt;
}

template <>
inline std::optional<Label> enum_from_string<Label>(const std::string& s) {
  if (s == "yes") return Label::Yes;
  if (s == "no") return Label::No;
  return std::nullopt;
}

template <>
inline std::optional<AlterationType> enum_from_string<AlterationType>(const std::string& s) {
  for (auto t : {AlterationType::NotAltered, AlterationType::Negation,
                 AlterationType::VariableSubstitution, AlterationType::QuantityChange,
                 AlterationType::VariableSwap, AlterationType::QuantifierChange,
                 AlterationType::LogicalConnectiveChange, AlterationType::InconsistentData})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

template <>
inline std::optional<LabelEffectHint> enum_from_string<LabelEffectHint>(const std::string& s) {
  for (auto h : {LabelEffectHint::Flip, LabelEffectHint::Invariant, LabelEffectHint::Unknown})
    if (s == to_string(h)) return h;
  return std::nullopt;
}

template <>
inline std::optional<QuestionType> enum_from_string<QuestionType>(const std::string& s) {
  for (auto q : {QuestionType::Quantity, QuestionType::UniversalQuantifier,
                 QuestionType::ExistentialQuantifier, QuestionType::OnlyEntity,
                 QuestionType::Sure, QuestionType::Know, QuestionType::Other})
    if (s == to_string(q)) return q;
  return std::nullopt;
}

// Derives speaker tags from order of first appearance: the name of turn 0 is
// First, the other name is Second. Call after filling turns with names only.
inline void assign_speaker_tags(Conversation& conv) {
  if (conv.turns.empty()) return;
  const std::string& first = conv.turns.front().speaker.display_name;
  for (std::size_t i = 0; i < conv.turns.size(); ++i) {
    auto& u = conv.turns[i];
    u.index = i;
    u.speaker.tag = (u.speaker.display_name == first) ? SpeakerTag::First : SpeakerTag::Second;
  }
}

}  // namespace convbench

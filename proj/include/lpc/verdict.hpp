#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lpc/interval.hpp"

namespace lpc {

enum class Status { Member, NotMember, Indeterminate };

enum class Reason {
  Witness,        // certified phi(z0) <= 0
  PositiveCover,  // phi > 0 certified on a finite cover of the search interval
  LemmaF,         // b(a - 4) + 3 < 0
  BoundI,         // b above the necessary upper bound for 3 <= a < 4
  QinfGate,       // a below q_inf
  Exhausted,      // precision ladder exhausted
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Member: return "Member";
    case Status::NotMember: return "NotMember";
    case Status::Indeterminate: return "Indeterminate";
  }
  return "?";
}

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::Witness: return "witness";
    case Reason::PositiveCover: return "positive-cover";
    case Reason::LemmaF: return "lemmaF";
    case Reason::BoundI: return "boundI";
    case Reason::QinfGate: return "qinfGate";
    case Reason::Exhausted: return "exhausted";
  }
  return "?";
}

/// Closed-form gate outcomes. `lemmaF` and `qinfGate` are true when the condition
/// holds (membership still possible); `overI` is true when b exceeds the necessary
/// bound; `underH` is true when the sufficient bound certifies membership.
struct GateFlags {
  bool lemmaF = true;
  bool underH = false;
  bool overI = false;
  bool qinfGate = true;
};

struct MembershipVerdict {
  Status status = Status::Indeterminate;
  Reason reason = Reason::Exhausted;
  std::optional<Interval> witness;        // z0, in the caller's coordinate
  std::optional<Interval> witness_value;  // enclosure of phi(z0), upper <= 0
  std::optional<Interval> floor;          // [certified lower bound of min phi, best sampled value]
  Precision precision_used = 0;
  std::size_t cover_pieces = 0;
  GateFlags flags;

  bool member() const { return status == Status::Member; }
};

}  // namespace lpc

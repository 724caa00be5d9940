#pragma once

#include <stdexcept>
#include <string>

namespace mobisim {

enum class Errc {
  DisconnectedGraph,
  SelfLoopEdge,
  InvalidAnchor,
  InvalidNode,
  ConnectivityRetriesExhausted,
  IsolatedNode,
  NoConvergence,
  NonPositiveInput,
  MalformedAddress,
  AlreadyBound,
  NotBound,
  SameMag,
  InvalidMag,
  NoSubscriber,
  NotAttached,
  SameNap,
  InvalidNap,
  NoMatch,
  DimensionMismatch,
  EmptySample,
  ConfigInvalid,
  IoError,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::SelfLoopEdge: return "SelfLoopEdge";
    case Errc::InvalidAnchor: return "InvalidAnchor";
    case Errc::InvalidNode: return "InvalidNode";
    case Errc::ConnectivityRetriesExhausted: return "ConnectivityRetriesExhausted";
    case Errc::IsolatedNode: return "IsolatedNode";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::MalformedAddress: return "MalformedAddress";
    case Errc::AlreadyBound: return "AlreadyBound";
    case Errc::NotBound: return "NotBound";
    case Errc::SameMag: return "SameMag";
    case Errc::InvalidMag: return "InvalidMag";
    case Errc::NoSubscriber: return "NoSubscriber";
    case Errc::NotAttached: return "NotAttached";
    case Errc::SameNap: return "SameNap";
    case Errc::InvalidNap: return "InvalidNap";
    case Errc::NoMatch: return "NoMatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptySample: return "EmptySample";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class SimError : public std::runtime_error {
 public:
  SimError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw SimError(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace mobisim

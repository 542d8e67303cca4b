#include "lienil/error.hpp"

namespace lienil {

std::string_view to_string(Errc code) {
  switch (code) {
  case Errc::InvalidPermutation: return "InvalidPermutation";
  case Errc::OrderExceeded: return "OrderExceeded";
  case Errc::NotAbelian: return "NotAbelian";
  case Errc::ParseError: return "ParseError";
  case Errc::DegreeMismatch: return "DegreeMismatch";
  case Errc::EmptyArguments: return "EmptyArguments";
  case Errc::BoundExceeded: return "BoundExceeded";
  case Errc::ScaleExceeded: return "ScaleExceeded";
  case Errc::NotLieNilpotent: return "NotLieNilpotent";
  case Errc::NotPGroup: return "NotPGroup";
  case Errc::InvalidPrime: return "InvalidPrime";
  case Errc::NoWitness: return "NoWitness";
  case Errc::CaseMismatch: return "CaseMismatch";
  case Errc::ChainVanished: return "ChainVanished";
  case Errc::StepMismatch: return "StepMismatch";
  }
  return "Unknown";
}

} // namespace lienil

#pragma once

#include <stdexcept>
#include <string>

namespace symmaps {

enum class Errc {
  NotAPermutation,
  Disconnected,
  NonPlanar,
  EmptyMap,
  BadRoot,
  BadMark,
  BadSymmetry,
  WrongFamily,
  PathSelfIntersects,
  SizeCapExceeded,
  NotSymmetricSimpleQuad,
  NotSymmetricSimpleTri,
  ReconstructionFailed,
  DivisorNotUnit,
  OrderMismatch,
  InnerNotNilpotent,
  BadConstantTerm,
  NonContractive,
  BadDistance,
  UnknownName,
  RenderDegenerate,
  BadInput,
};

const char *errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace symmaps

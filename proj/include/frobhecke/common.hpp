#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fh {

using Rat = boost::multiprecision::cpp_rational;

enum class Err {
  NotAssociative,
  NoUnit,
  ParityViolation,
  DegenerateTrace,
  InhomogeneousTrace,
  BadCayleyTable,
  NoSolution,
  InternalInconsistency,
  MixedVariant,
  IndexOutOfRange,
  WrongVariant,
  VariantMismatch,
  InverseDotInDegenerate,
  NotDivisible,
  RegularityInconclusive,
  NotMonic,
  NonTermination,
  BoundTooSmall,
  IncompatibleObjects,
  RegularityFailure,
  NonComposable,
  DivisionFailure,
  IllTypedWord,
  LevelNotOne,
  SyntaxError,
  UnknownLabel,
};

const char* err_name(Err e);

struct FhError : std::runtime_error {
  Err code;
  FhError(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw FhError(c, msg); }

// "p/q" or "p"; throws SyntaxError on malformed input or zero denominator.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

uint64_t fnv1a(const std::string& s);

}  // namespace fh

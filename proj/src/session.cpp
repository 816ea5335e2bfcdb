#include "frobhecke/session.hpp"

#include "frobhecke/parse.hpp"

namespace fh {

Session::Session(const SessionConfig& cfg) : cfg_(cfg) {
  alg_ = std::make_shared<FrobeniusAlgebra>(load_algebra(cfg.algebraSpec));
  var_ = cfg.quantum ? Variant::Quantum : Variant::Degenerate;
  z_ = rat_parse(cfg.z);
  if (cfg.n < 1) fail(Err::IndexOutOfRange, "strand count must be positive");
  if (cfg.d < 0) fail(Err::IndexOutOfRange, "negative black strand count");
  if (var_ == Variant::Quantum && (!alg_->symmetric() || alg_->eps() != 0))
    fail(Err::WrongVariant,
         "the quantum variant needs a symmetric algebra with even trace");
  for (auto& expr : cfg.pinExprs) {
    PolyElement q = parse_pol(expr, alg_.get(), 1, var_);
    PinCheckResult pc = pin_check(q);
    if (!pc.ok)
      fail(Err::RegularityInconclusive,
           "pin '" + expr + "' rejected: " + pc.reason);
    pins_.push_back(std::move(q));
  }
}

uint64_t Session::configHash() const {
  std::string s = cfg_.algebraSpec;
  s += '\x1f';
  s += cfg_.quantum ? "q" : "d";
  s += '\x1f';
  s += cfg_.z;
  for (auto& p : cfg_.pinExprs) {
    s += '\x1f';
    s += p;
  }
  s += '\x1f';
  s += std::to_string(cfg_.n);
  s += '\x1f';
  s += std::to_string(cfg_.d);
  return fnv1a(s);
}

}  // namespace fh

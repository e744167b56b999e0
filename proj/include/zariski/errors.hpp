#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

/// Malformed ring, formula, sequent, matrix or certificate text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested operation has no exact algorithm for this ring kind.
class UnsupportedRing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments belong to different rings, or localized elements use different bases.
class RingMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A ring was asserted reduced but a nonzero nilpotent was found.
class ReducednessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Formula or sequent is not well-formed in its context.
class SortError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate or oracle answer did not re-verify.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zariski

#ifndef BOMEGA_ERRORS_HPP_
#define BOMEGA_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bomega {

using Int = std::int64_t;

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic left the representable range. Coordinates are
/// exact up to the full int64 range; there is no silent wraparound anywhere.
struct OverflowError : Error {
  using Error::Error;
};

/// A constructor or operation received an argument outside its contract.
struct InvalidParameter : Error {
  using Error::Error;
};

/// A ray family is not closed under shifted intersection. Carries the witness
/// triple: [r1) n (-n + [r2)) is not a member of the family.
struct NotOmegaClosed : Error {
  Int r1;
  Int r2;
  Int n;
  NotOmegaClosed(Int r1_, Int r2_, Int n_)
      : Error("family is not omega-closed: [" + std::to_string(r1_) + ") n (-"
              + std::to_string(n_) + " + [" + std::to_string(r2_)
              + ")) is not a member"),
        r1(r1_),
        r2(r2_),
        n(n_) {}
};

/// shift_map was asked to lower a ray start below zero.
struct RayUnderflow : Error {
  Int start;
  Int shift;
  RayUnderflow(Int start_, Int shift_)
      : Error("ray [" + std::to_string(start_) + ") cannot be shifted down by "
              + std::to_string(shift_)),
        start(start_),
        shift(shift_) {}
};

/// The symbolic endomorphism algebra is defined over the three-ray family
/// only; the element's ray start exceeds 2.
struct UnsupportedFamily : Error {
  Int ray_start;
  explicit UnsupportedFamily(Int ray_start_)
      : Error("normal forms act on the three-ray family only; got ray ["
              + std::to_string(ray_start_) + ")"),
        ray_start(ray_start_) {}
};

/// nf_to_sd applies to trailing-reversal-free forms only (w = 0).
struct NotInSubmonoid : Error {
  using Error::Error;
};

/// A pairwise check needs table entries outside the tabulated domain.
struct DomainTooSmall : Error {
  using Error::Error;
};

/// The table sends the identity element into the middle layer [1), which no
/// injective endomorphism of the three-ray extension can do.
struct MiddleLayerIdentityImage : Error {
  using Error::Error;
};

/// The window data is not the restriction of any normal form.
struct NotClassifiable : Error {
  using Error::Error;
};

/// Decomposition derived a dilation factor below 1.
struct NonPositiveK : Error {
  Int k;
  explicit NonPositiveK(Int k_)
      : Error("derived dilation factor " + std::to_string(k_)
              + " is not positive"),
        k(k_) {}
};

/// A table is missing domain keys; lists the absent ones.
struct MissingEntry : Error {
  std::vector<std::string> keys;
  MissingEntry(std::string msg, std::vector<std::string> keys_)
      : Error(std::move(msg)), keys(std::move(keys_)) {}
};

/// A table entry is syntactically present but unusable; carries its position.
struct MalformedEntry : Error {
  std::size_t index;
  MalformedEntry(std::size_t index_, const std::string& what_)
      : Error("entry " + std::to_string(index_) + ": " + what_),
        index(index_) {}
};

/// A text literal could not be parsed; names the offending token.
struct ParseError : Error {
  std::string token;
  ParseError(const std::string& msg, std::string token_)
      : Error(msg + ": '" + token_ + "'"), token(std::move(token_)) {}
};

}  // namespace bomega

#endif  // BOMEGA_ERRORS_HPP_

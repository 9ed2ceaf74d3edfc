#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "record_order/distribution.hpp"

namespace record_order {

enum class SpecErrorKind {
  UnknownFamily,
  UnknownParam,
  MissingParam,
  DuplicateParam,
  NonPositiveParam,
  MalformedNumber,
  Malformed,
};

// Parse failure carrying the offending token and its position in the input.
class SpecParseError : public std::runtime_error {
public:
  SpecParseError(SpecErrorKind kind, std::string token, std::size_t offset,
                 const std::string& message)
      : std::runtime_error(message + " (token '" + token + "' at offset " +
                           std::to_string(offset) + ")"),
        kind_(kind),
        token_(std::move(token)),
        offset_(offset) {}

  SpecErrorKind kind() const { return kind_; }
  const std::string& token() const { return token_; }
  std::size_t offset() const { return offset_; }

private:
  SpecErrorKind kind_;
  std::string token_;
  std::size_t offset_;
};

// Grammar: family:key=value(,key=value)*
//   exp:rate=R | erlang:shape=K,rate=R | lomax:shape=A,scale=S |
//   weibull:shape=A,scale=S | invweibull:shape=A,scale=S
DistributionModel parse_dist_spec(const std::string& text);

}  // namespace record_order

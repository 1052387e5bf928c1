#ifndef GUARD_GILT_ERRORS_H
#define GUARD_GILT_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace gilt
{

enum class ErrorKind
{
  DegreeMismatch,
  NotASubgroup,
  NotMembers,
  BoundExceeded,
  DegenerateInput,
  NotAPartialOrder,
  NotALattice,
  NoBoundedTop,
  TooFewPanels,
  PanelTooSmall,
  InvalidPoint,
  IntransitiveAction,
  NotInInterval,
  ShapeMismatch,
  IndexTooSmall,
  NotSimple,
  NotCoreFree,
  EmptyInput,
  EmptyCatalog,
  ParseError
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
  : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
    _kind(kind)
  {}

  ErrorKind kind() const
  { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace gilt

#endif // GUARD_GILT_ERRORS_H

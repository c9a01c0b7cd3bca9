/**
 * Text format for one halfspace presentation:
 *
 *     # comment
 *     dim 2
 *     facets 4
 *     1 0 | 0
 *     0 1 | 0
 *     0 -1 | 1
 *     -1 -2 | 3
 *
 * Each facet line lists the k integer entries of a_i, a bar, and the offset
 * b_i as an integer or num/den.  The line encodes <a_i, x> + b_i >= 0.
 */
#pragma once

#include <istream>
#include <string>

#include "toriclag/polytope.hpp"

namespace toriclag {

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

HalfspacePresentation parse_polytope(std::istream& in);
HalfspacePresentation parse_polytope_text(const std::string& text);
/// Throws Error when the file cannot be opened, ParseError on malformed content.
HalfspacePresentation read_polytope_file(const std::string& path);

std::string format_polytope(const HalfspacePresentation& p);

}  // namespace toriclag

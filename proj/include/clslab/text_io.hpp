#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace clslab {

// Reads whitespace-tokenized lines, skipping blanks and '#' comments, while
// remembering the physical line number for error messages.
class TokenLines {
 public:
  explicit TokenLines(std::istream& in) : in_(in) {}

  struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
  };

  std::optional<Line> next();
  // Like next() but throws ParseError("unexpected end of input").
  Line expect(const char* what);

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string> split_ws(const std::string& s);

}  // namespace clslab

#include "clslab/text_io.hpp"

#include <sstream>

#include "clslab/errors.hpp"

namespace clslab {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::optional<TokenLines::Line> TokenLines::next() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++number_;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) return Line{number_, std::move(tokens)};
  }
  return std::nullopt;
}

TokenLines::Line TokenLines::expect(const char* what) {
  auto line = next();
  if (!line) throw ParseError(std::string("unexpected end of input, expected ") + what, number_);
  return *line;
}

}  // namespace clslab

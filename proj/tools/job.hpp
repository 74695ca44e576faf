#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qci/monomial.hpp"

namespace qci::cli {

// A piece of input text with the 1-based position of its first character.
struct Located {
  std::string text;
  int line = 1;
  int column = 1;
};

struct RingSpec {
  Located field;  // "QQ" or "F<p>"
  std::vector<std::string> variables;
  std::vector<Located> relations;
};

// Everything needed to reproduce one run.
struct JobSpec {
  std::string command;
  std::optional<RingSpec> ring;
  std::optional<std::vector<Located>> ideal;
  std::vector<Located> elements;

  MonomialOrder order = MonomialOrder::grevlex;
  std::optional<std::uint32_t> prime;
  std::uint64_t seed = 1;
  std::size_t trials = 25;
  int n = 5;
  int hd_bound = 4;
  int deg_bound = 1;
  bool json = false;
  bool assert_result = false;
  bool symbolic = false;
};

// Parses the statement part of a job:
//   ring <field>[<vars>]/(<polys>)     field QQ or F<p>, vars like x1..x5 or a,b,c
//   ideal (<polys>)
//   element <poly>
// Statements are separated by newlines or ';', '#' starts a comment.
// Polynomials are kept as text and parsed once the field is known.
// Throws ParseError with the position of the offending character.
void parse_input(std::string_view text, JobSpec& job);

}  // namespace qci::cli

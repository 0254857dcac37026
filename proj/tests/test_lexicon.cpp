#include <doctest.h>

#include "support.hpp"

using namespace mg;

TEST_CASE("the worked lexicon parses with the right category sets") {
  Lexicon lex = mgtest::adams();
  REQUIRE(lex.size() == 6);
  CHECK(lex.basic() == std::set<std::string>{"c", "d", "v", "t"});
  CHECK(lex.selectors() == std::set<std::string>{"t", "d", "v"});
  CHECK(lex.licensors() == std::set<std::string>{"case", "i"});
  CHECK(lex.licensees() == std::set<std::string>{"case", "i"});
  CHECK(lex.phonetic() == std::set<std::string>{"Douglas", "love", "-ed", "deadlines"});
  CHECK(lex.entries()[2].phonetic == "love");
  CHECK(to_string(lex.entries()[3].features) == "=v +CASE =d v");
  CHECK(lex.max_entry_length() == 5);  // =v +I +CASE t :: -ed
}

TEST_CASE("comments and blank lines are ignored") {
  Lexicon lex = parse_lexicon("# header\n\nc ::  # trailing comment\n");
  CHECK(lex.size() == 1);
}

TEST_CASE("empty file is missing the complementizer") {
  CHECK_THROWS_AS(parse_lexicon(""), MissingComplementizerError);
  CHECK_THROWS_AS(parse_lexicon("d -case :: Douglas\n"), MissingComplementizerError);
}

TEST_CASE("shape violations are rejected") {
  CHECK_THROWS_AS(parse_lexicon("=t c ::\nv =d :: x\n"), ShapeError);   // selector after base
  CHECK_THROWS_AS(parse_lexicon("=t c ::\n-case d :: x\n"), ShapeError);  // licensee first
  CHECK_THROWS_AS(parse_lexicon("=t c ::\n=v +FOO v :: x\n"), ShapeError);  // unmatched licensor
  CHECK_THROWS_AS(parse_lexicon("=t c ::\n=x v :: y\n"), ShapeError);  // unmatched selector
  CHECK_THROWS_AS(parse_lexicon("=t c\n"), SyntaxError);               // missing ::
  CHECK_THROWS_AS(parse_lexicon("=t c :: a b\n"), SyntaxError);        // two phonetic words
}

TEST_CASE("sel and lic follow the naming convention") {
  CHECK(to_string(sel(parse_feature("=d"))) == "d");
  CHECK(to_string(lic(parse_feature("+CASE"))) == "-case");
  CHECK(to_string(lic(parse_feature("+I"))) == "-i");
  CHECK_THROWS_AS(sel(parse_feature("d")), NotASelectorError);
  CHECK_THROWS_AS(lic(parse_feature("-case")), NotALicensorError);
}

TEST_CASE("entry provenance by label suffix") {
  Lexicon lex = mgtest::adams();
  auto love_rest = mgtest::leaf("-i", "love")->leaf_label();
  CHECK(lex.entry_of_suffix(love_rest) == std::size_t{2});
  auto douglas_rest = mgtest::leaf("", "Douglas")->leaf_label();
  CHECK(lex.entry_of_suffix(douglas_rest) == std::size_t{1});
  CHECK_FALSE(lex.entry_of_suffix(mgtest::leaf("v -i")->leaf_label()).has_value());
}

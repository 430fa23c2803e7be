#include <catch_amalgamated.hpp>

#include "spanmt/unicode.hpp"

using namespace spanmt;

TEST_CASE("utf8 round trip") {
  std::string s = "abc äö €漢𐍈 — ok";
  CHECK(uni::to_utf8(uni::to_u32(s)) == s);
  CHECK(uni::cp_length(s) == uni::to_u32(s).size());
}

TEST_CASE("invalid utf8 rejected") {
  CHECK_THROWS_AS(uni::to_u32("\xC3"), Error);          // truncated
  CHECK_THROWS_AS(uni::to_u32("\xC0\xAF"), Error);      // overlong
  CHECK_THROWS_AS(uni::to_u32("\xED\xA0\x80"), Error);  // surrogate
  CHECK_THROWS_AS(uni::to_u32("\x80"), Error);          // stray continuation
}

TEST_CASE("code point slicing") {
  std::string s = "aä€𐍈b";  // 1,2,3,4-byte sequences
  CHECK(uni::cp_length(s) == 5);
  CHECK(uni::cp_slice(s, 0, 1) == "a");
  CHECK(uni::cp_slice(s, 1, 2) == "ä");
  CHECK(uni::cp_slice(s, 2, 3) == "€");
  CHECK(uni::cp_slice(s, 3, 4) == "𐍈");
  CHECK(uni::cp_slice(s, 1, 4) == "ä€𐍈");
  CHECK(uni::cp_slice(s, 3, 3).empty());

  uni::CpIndex idx(s);
  CHECK(idx.cp_length() == 5);
  CHECK(idx.slice(2, 5) == "€𐍈b");
  CHECK(idx.at(2) == U'€');
}

TEST_CASE("category tables match known classifications") {
  // Spot values verified against Python's unicodedata.
  CHECK(uni::is_punct(U'.'));
  CHECK(uni::is_punct(U','));
  CHECK(uni::is_punct(U')'));
  CHECK(uni::is_punct(U'…'));  // horizontal ellipsis, Po
  CHECK(uni::is_punct(U'。'));  // ideographic full stop
  CHECK(uni::is_punct(U'_'));       // Pc
  CHECK_FALSE(uni::is_punct(U'a'));
  CHECK_FALSE(uni::is_punct(U'+'));  // Sm, not P*
  CHECK_FALSE(uni::is_punct(U'€'));  // Sc

  CHECK(uni::is_alpha(U'a'));
  CHECK(uni::is_alpha(U'ä'));
  CHECK(uni::is_alpha(U'漢'));
  CHECK_FALSE(uni::is_alpha(U'1'));

  CHECK(uni::is_numeric(U'7'));
  CHECK(uni::is_numeric(U'½'));  // vulgar fraction one half, No
  CHECK_FALSE(uni::is_numeric(U'x'));

  CHECK(uni::is_space(U' '));
  CHECK(uni::is_space(U'\t'));
  CHECK(uni::is_space(U' '));
  CHECK(uni::is_space(U' '));
  CHECK_FALSE(uni::is_space(U'a'));

  CHECK(uni::is_word_char(U'_'));
  CHECK(uni::is_word_char(U'ö'));
  CHECK_FALSE(uni::is_word_char(U'-'));
}

TEST_CASE("lowercasing follows full case mappings") {
  CHECK(uni::to_lower_utf8("The Cat") == "the cat");
  CHECK(uni::to_lower_utf8("ÄÖÅ") == "äöå");
  CHECK(uni::to_lower_utf8("ß") == "ß");
  CHECK(uni::to_lower_utf8("İ") == "i̇");  // expands to two code points
  CHECK(uni::to_lower_utf8("ΟΣ") == "ος");      // final sigma
  CHECK(uni::to_lower_utf8("ΣΑ") == "σα");
}

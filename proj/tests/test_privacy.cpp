#include "relkw/privacy.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace relkw;

TEST_CASE("md5 matches the RFC 1321 test suite") {
    CHECK(md5_hex("") == "d41d8cd98f00b204e9800998ecf8427e");
    CHECK(md5_hex("abc") == "900150983cd24fb0d6963f7d28e17f72");
    CHECK(md5_hex("message digest") == "f96b697d7cb7938d525a2f31aaf161d0");
    CHECK(md5_hex("abcdefghijklmnopqrstuvwxyz") == "c3fcd3d76192e4007dfb496cca67e13b");
    // 80 bytes: exercises the two-block tail path
    CHECK(md5_hex("1234567890123456789012345678901234567890"
                  "1234567890123456789012345678901234567890") ==
          "57edf4a22be3c955ac49da2e2107b67a");
}

TEST_CASE("keyword hashing canonicalizes before digesting") {
    CHECK(hash_keyword("abc").digest == "900150983cd24fb0d6963f7d28e17f72");
    CHECK(hash_keyword("Abc").digest == hash_keyword("abc").digest);
    CHECK(hash_keyword("  New   York ").digest == hash_keyword("new york").digest);
    CHECK(hash_keyword("x").digest.size() == 32);
    CHECK_THROWS_AS(hash_keyword(""), std::invalid_argument);
}

TEST_CASE("canonicalization lowercases and collapses whitespace") {
    CHECK(canonicalize_keyword("New  York") == "new york");
    CHECK(canonicalize_keyword(" a\tb ") == "a b");
    CHECK(canonicalize_keyword("Größe") == "größe");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sclift/coupler.hpp"
#include "sclift/matrix.hpp"
#include "sclift/sha256.hpp"

using namespace sclift;

TEST_CASE("AB base exponents") {
    ABBase b(3, 5);
    CHECK(b.exponent(2, 3) == 1); // 6 mod 5
    for (int j = 0; j < 5; ++j)
        CHECK(b.exponent(0, j) == 0);
    ABBase single(1, 7);
    auto m = single.expand();
    CHECK(m.rows() == 7);
    CHECK(m.cols() == 49);
    CHECK_THROWS(ABBase(3, 9));  // not prime
    CHECK_THROWS(ABBase(6, 5));  // gamma > p
}

TEST_CASE("expansion of circulant and explicit blocks") {
    auto h33 = ABBase(3, 3).expand();
    CHECK(h33.rows() == 9);
    CHECK(h33.cols() == 9);
    for (int r = 0; r < 9; ++r)
        CHECK(h33.row_weight(r) == 3);
    for (int c = 0; c < 9; ++c)
        CHECK(h33.col_weight(c) == 3);

    BlockMatrix ident(1, 1, 4);
    ident.set(0, 0, BlockEntry::circulant(0));
    CHECK(ident.expand() == [] {
        BinaryMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            m.set(i, i);
        return m;
    }());

    auto t3 = Permutation::cyclic_shift(3, 1);
    BlockMatrix ex(1, 1, 3);
    ex.set(0, 0, BlockEntry::explicit_perm(t3));
    auto m = ex.expand();
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            CHECK(m.get(i, j) == (t3(j) == i));
    // circulant exponent 1 must agree with the explicit tau matrix
    BlockMatrix circ(1, 1, 3);
    circ.set(0, 0, BlockEntry::circulant(1));
    CHECK(circ.expand() == m);
}

TEST_CASE("expand distinguishes distinct block maps") {
    BlockMatrix a(2, 2, 3), b(2, 2, 3);
    a.set(0, 0, BlockEntry::circulant(1));
    b.set(0, 0, BlockEntry::circulant(2));
    CHECK_FALSE(a.expand() == b.expand());
    b.set(0, 0, BlockEntry::circulant(1));
    CHECK(a.expand() == b.expand());
}

TEST_CASE("AB codes have no 4-cycles and column weight gamma") {
    for (int p : {5, 7, 11, 13}) {
        auto m = ABBase(3, p).expand();
        CHECK_FALSE(m.has_four_cycle());
        for (int c = 0; c < m.cols(); ++c)
            CHECK(m.col_weight(c) == 3);
    }
}

TEST_CASE("quasi-cyclicity check") {
    CHECK(is_quasi_cyclic(ABBase(3, 5).expand(), 5));
    BinaryMatrix bad(4, 4);
    bad.set(0, 0);
    bad.set(1, 1);
    bad.set(2, 2);
    bad.set(3, 0); // breaks the circulant structure of the single block
    CHECK_FALSE(is_quasi_cyclic(bad, 4));
    CHECK_THROWS(is_quasi_cyclic(bad, 3));
}

TEST_CASE("alist export format") {
    auto m = ABBase(3, 5).expand();
    auto text = export_alist_string(m);
    CHECK(text.rfind("25 15\n3 5\n", 0) == 0);
    // newline-terminated, single spaces
    CHECK(text.back() == '\n');
    CHECK(text.find("  ") == std::string::npos);
}

TEST_CASE("alist round trip is the identity") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(12));
        int cols = 2 + static_cast<int>(rng.below(12));
        BinaryMatrix m(rows, cols);
        for (int k = 0; k < rows * cols / 3; ++k)
            m.set(static_cast<int>(rng.below(rows)), static_cast<int>(rng.below(cols)));
        auto text = export_alist_string(m);
        std::istringstream in(text);
        auto back = import_alist(in);
        CHECK(back == m);
        // canonical files re-export byte-identically
        CHECK(export_alist_string(back) == text);
    }
}

TEST_CASE("manifest digests use standard SHA-256") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    // multi-block message (> 64 bytes)
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("alist import rejects malformed input with a line number") {
    auto m = ABBase(3, 3).expand();
    auto text = export_alist_string(m);

    auto expect_error_with_line = [](const std::string& content) {
        std::istringstream in(content);
        try {
            import_alist(in);
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    };

    // corrupt a declared column degree (the degree list then disagrees)
    std::string bad = text;
    auto dpos = bad.find("\n3 3 3 3");
    REQUIRE(dpos != std::string::npos);
    bad.replace(dpos, 2, "\n2");
    expect_error_with_line(bad);

    // out-of-range check index
    std::string bad2 = text;
    auto pos = bad2.find("\n1 4 7");
    REQUIRE(pos != std::string::npos);
    bad2.replace(pos, 6, "\n1 4 99");
    expect_error_with_line(bad2);
}

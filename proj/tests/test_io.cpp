#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "doctest.h"
#include "isct/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("isct-io-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

} // namespace

TEST_CASE("tokens loader interns symbols in first-appearance order") {
    TempDir dir;
    const auto p = dir.file("toy.tokens",
                            "a b d d c\n"
                            "a d b b d e d\n"
                            "\n"
                            "a c d e e a a\n");
    const auto db = isct::load_tokens(p);
    CHECK(db.size() == 3);
    const auto& al = db.alphabet();
    CHECK(al.symbol(0) == "a");
    CHECK(al.symbol(1) == "b");
    CHECK(al.symbol(2) == "d");
    CHECK(al.symbol(3) == "c");
    CHECK(al.symbol(4) == "e");
    CHECK(db[0].items == std::vector<isct::item_id>{0, 1, 2, 2, 3});
    CHECK(db[1].size() == 7);
}

TEST_CASE("tokens loader accepts arbitrary whitespace and token shapes") {
    TempDir dir;
    const auto p = dir.file("odd.tokens", "  login   view-page \t purchase  \nlogout\n");
    const auto db = isct::load_tokens(p);
    CHECK(db.size() == 2);
    CHECK(db.alphabet().symbol(0) == "login");
    CHECK(db.alphabet().symbol(1) == "view-page");
    CHECK(db[1].items == std::vector<isct::item_id>{3});
}

TEST_CASE("tokens loader rejects empty input") {
    TempDir dir;
    CHECK_THROWS_AS(isct::load_tokens(dir.file("empty.tokens", "")), isct::Error);
    CHECK_THROWS_AS(isct::load_tokens(dir.file("blank.tokens", "\n\n  \n")), isct::Error);
    CHECK_THROWS_AS(isct::load_tokens((dir.path / "missing.tokens").string()), isct::Error);
}

TEST_CASE("format_tokens round-trips through load_tokens") {
    TempDir dir;
    const auto p = dir.file("rt.tokens", "x y z\nz z\nx\n");
    const auto db = isct::load_tokens(p);
    const auto text = isct::format_tokens(db);
    CHECK(text == "x y z\nz z\nx\n");
    const auto p2 = dir.file("rt2.tokens", text);
    const auto db2 = isct::load_tokens(p2);
    REQUIRE(db2.size() == db.size());
    for (std::size_t i = 0; i < db.size(); ++i) CHECK(db2[i].items == db[i].items);
}

TEST_CASE("spmf loader reads single-item itemsets cleanly") {
    TempDir dir;
    const auto p = dir.file("a.spmf",
                            "3 -1 7 -1 3 -1 -2\n"
                            "7 -1 11 -1 -2\n");
    const auto result = isct::load_spmf(p);
    CHECK(result.warnings.empty());
    CHECK(result.db.size() == 2);
    const auto& al = result.db.alphabet();
    CHECK(al.symbol(0) == "3");
    CHECK(al.symbol(1) == "7");
    CHECK(al.symbol(2) == "11");
    CHECK(result.db[0].items == std::vector<isct::item_id>{0, 1, 0});
    CHECK(result.db[1].items == std::vector<isct::item_id>{1, 2});
}

TEST_CASE("spmf multi-item itemsets flatten with one warning per line") {
    TempDir dir;
    const auto p = dir.file("b.spmf",
                            "1 2 -1 3 -1 -2\n"
                            "4 -1 -2\n"
                            "5 6 7 -1 -2\n");
    const auto result = isct::load_spmf(p);
    CHECK(result.db.size() == 3);
    REQUIRE(result.warnings.size() == 2);
    CHECK(result.warnings[0].find(":1: multi-item itemset") != std::string::npos);
    CHECK(result.warnings[1].find(":3: multi-item itemset") != std::string::npos);
    CHECK(result.db[0].items.size() == 3);
    CHECK(result.db[2].items.size() == 3);
}

TEST_CASE("spmf loader rejects malformed input") {
    TempDir dir;
    CHECK_THROWS_AS(isct::load_spmf(dir.file("c.spmf", "1 -1 2 -1\n")), isct::Error);
    CHECK_THROWS_AS(isct::load_spmf(dir.file("d.spmf", "1 x -1 -2\n")), isct::Error);
    CHECK_THROWS_AS(isct::load_spmf(dir.file("e.spmf", "-3 -1 -2\n")), isct::Error);
    CHECK_THROWS_AS(isct::load_spmf(dir.file("f.spmf", "-1 -2\n")), isct::Error);
    CHECK_THROWS_AS(isct::load_spmf(dir.file("g.spmf", "1 -1 -2 2\n")), isct::Error);
    CHECK_THROWS_AS(isct::load_spmf(dir.file("h.spmf", "")), isct::Error);
}

TEST_CASE("labels loader returns one token per non-blank line") {
    TempDir dir;
    const auto p = dir.file("l.labels", "red\nblue\n\nred\n");
    const auto labels = isct::load_labels(p);
    CHECK(labels == std::vector<std::string>{"red", "blue", "red"});
    CHECK_THROWS_AS(isct::load_labels(dir.file("bad.labels", "red blue\n")), isct::Error);
    CHECK_THROWS_AS(isct::load_labels((dir.path / "none.labels").string()), isct::Error);
}

TEST_CASE("atomic write replaces content and leaves no temp files") {
    TempDir dir;
    const auto target = (dir.path / "out.txt").string();
    isct::write_file_atomic(target, "first\n");
    CHECK(isct::read_file(target) == "first\n");
    isct::write_file_atomic(target, "second\n");
    CHECK(isct::read_file(target) == "second\n");
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);
}

TEST_CASE("atomic write into a missing directory fails loudly") {
    TempDir dir;
    const auto target = (dir.path / "no" / "such" / "dir" / "f.txt").string();
    CHECK_THROWS_AS(isct::write_file_atomic(target, "x"), isct::Error);
}

TEST_CASE("read_file reports missing files") {
    TempDir dir;
    CHECK_THROWS_AS(isct::read_file((dir.path / "ghost").string()), isct::Error);
}

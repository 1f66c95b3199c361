#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = fracterm::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Normalize) {
  auto r = run({"normalize", "(2+3)/7", "--mode", "safe"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "5/7\nconditions: [7]\n");
  EXPECT_EQ(run({"normalize", "(2+3)/7"}).out, r.out);
  EXPECT_EQ(run({"normalize", "--mode", "full", "1/1 + 1/0"}).out, "1/1\nconditions: [1]\n");
}

TEST(Cli, SafetyError) {
  auto r = run({"normalize", "1/1 + 1/0", "--mode", "safe"});
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("(1/0)"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("[1]"), std::string::npos) << r.err;
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", "1/0", "--meadow", "common"}).out, "a\n");
  EXPECT_EQ(run({"eval", "1/0", "--meadow", "common"}).status, 0);
  EXPECT_EQ(run({"eval", "(1/4)/(3/2)"}).out, "1/6\n");
  EXPECT_EQ(run({"eval", "1/2+1/3", "--meadow", "gf:5"}).out, "0 mod 5\n");
  EXPECT_EQ(run({"eval", "x"}).status, 4);
  EXPECT_EQ(run({"eval", "1", "--meadow", "gf:4"}).status, 4);
}

TEST(Cli, ParseAndUsageErrors) {
  auto r = run({"parse", "1+"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"normalize", "1", "--mode", "lazy"}).status, 2);
  EXPECT_EQ(run({"parse", "1/2"}).out, "(1/2)\n");
  EXPECT_EQ(run({"parse", "--json", "1/2"}).out, "{\"op\":\"div\",\"args\":[{\"num\":\"1\"},{\"num\":\"2\"}]}\n");
  EXPECT_EQ(run({"parse", "--", "-1"}).out, "(-1)\n");
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Equal) {
  EXPECT_EQ(run({"equal", "1/2", "2/4", "--relation", "syn"}).out, "false\n");
  EXPECT_EQ(run({"equal", "1/2", "2/4", "--relation", "pair"}).out, "false\n");
  EXPECT_EQ(run({"equal", "1/2", "2/4", "--relation", "val"}).out, "true\n");
  EXPECT_EQ(run({"equal", "1/2+1/2", "2/2", "--mode", "full"}).out,
            "true\nleft: 1/1\nright: 1/1\nconditions: [1,2,4]\n");
  EXPECT_EQ(run({"equal", "1/0", "0", "--mode", "safe"}).status, 3);
  EXPECT_EQ(run({"equal", "1", "1", "--mode", "safe", "--relation", "syn"}).status, 2);
}

TEST(Cli, Fracpair) {
  EXPECT_EQ(run({"fracpair", "add", "2/0", "3/0"}).out, "0/0\n");
  EXPECT_EQ(run({"fracpair", "add", "2/0", "3/0", "--zero-mode", "sum"}).out, "5/0\n");
  EXPECT_EQ(run({"fracpair", "div", "1/4", "3/2", "--json"}).out, "{\"num\":\"2\",\"den\":\"12\"}\n");
  EXPECT_EQ(run({"fracpair", "value", "3/0"}).out, "0/1\n");
  EXPECT_EQ(run({"fracpair", "equiv", "1/2", "2/4"}).out, "true\n");
  EXPECT_EQ(run({"fracpair", "add", "1/2"}).status, 4);
  EXPECT_EQ(run({"fracpair", "add", "1/x", "1/2"}).status, 2);
}

TEST(Cli, Axioms) {
  auto r = run({"axioms", "--meadow", "gf:3", "--axiom", "FAR", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "[{\"identity\":\"FAR\",\"expected\":true,\"report\":{\"status\":\"counterexample\","
            "\"assignments_checked\":5,\"counterexample\":{\"u\":\"0 mod 3\",\"v\":\"0 mod 3\","
            "\"x\":\"1 mod 3\",\"y\":\"1 mod 3\"}}}]\n");
  EXPECT_EQ(run({"axioms", "--meadow", "gf:3", "--axiom", "BOGUS"}).status, 4);
  auto text = run({"axioms", "--meadow", "gf:2"});
  EXPECT_EQ(text.out.find("UNEXPECTED"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
  auto a = run({"normalize", "--trace", "(1+1/2)/3"});
  auto b = run({"normalize", "--trace", "(1+1/2)/3"});
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

#include <doctest.h>

#include <iostream>
#include <sstream>

#include <json.hpp>

#include "intpos/cli.hpp"
#include "intpos/relation.hpp"

using namespace intpos;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  CliRun r;
  r.exit_code = run_cli(args);
  std::cout.rdbuf(old);
  r.out = captured.str();
  return r;
}

}  // namespace

TEST_CASE("cli meet reproduces the worked transitive meet") {
  const auto r = run({"meet", "--level=poset",
                      "n=4; inc: 1<2; dec: 3>2, 4>3, 4>2, 3>1, 4>1",
                      "n=4; inc: 2<3; dec: 3>1, 4>1, 2>1, 4>3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n=4; inc: 1<2, 1<3, 2<3; dec: 4>3\n");
}

TEST_CASE("cli classify lists classes and families") {
  const auto r = run({"classify", "n=3; inc: 1<2, 1<3, 2<3; dec: -"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("poset") != std::string::npos);
  CHECK(r.out.find("WOEP") != std::string::npos);
  CHECK(r.out.find("WOIP") != std::string::npos);
  CHECK(r.out.find("WOFP") != std::string::npos);

  const auto j = run({"--json", "classify", "--up=2", "--down=2",
                      "n=3; inc: 1<2; dec: -"});
  CHECK(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["relation"] == "n=3; inc: 1<2; dec: -");
  CHECK(parsed["classes"].is_array());
  CHECK(parsed["families"].is_array());
}

TEST_CASE("cli count prints the enumeration grid") {
  const auto r = run({"count", "--families=all", "--n=5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("WOEP: 1 2 6 24 120") != std::string::npos);
  CHECK(r.out.find("TOIP: 1 3 13 68 399") != std::string::npos);
  CHECK(r.out.find("BOFP: 1 3 9 27 81") != std::string::npos);
}

TEST_CASE("cli enumerate and round trips") {
  const auto r = run({"enumerate", "--level=poset", "--n=3"});
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(to_text(parse_relation(line)) == line);  // byte-exact round trip
  }
  CHECK(count == 19);

  const auto c = run({"enumerate", "--family=toep", "--n=5", "--count-only"});
  CHECK(c.out == "42\n");
}

TEST_CASE("cli project and insert") {
  const auto r = run({"project", "--map=woip-d",
                      "n=6; inc: 1<2, 1<4, 1<5, 3<5; dec: 3>2, 4>2, 6>1, 6>2, "
                      "6>4, 6>5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n=6; inc: 1<2; dec: 3>2, 4>2, 6>2, 6>4, 6>5\n");

  const auto bst = run({"insert", "--family=toep", "312"});
  CHECK(bst.exit_code == 0);
  CHECK(bst.out == "n=3; inc: 1<2; dec: 3>2\n");

  const auto weak = run({"insert", "--family=woep", "312"});
  CHECK(weak.exit_code == 0);
  CHECK(weak.out == "n=3; inc: 1<2; dec: 3>1, 3>2\n");

  const auto tree = run({"insert", "--type=partition", "--down=1,2,3,4,5,6,7",
                         "125|37|46"});
  CHECK(tree.exit_code == 0);
  CHECK(tree.out == "n=7; inc: 1<3, 1<4, 2<3, 2<4, 3<4, 5<6; dec: 5>4, 7>6\n");

  const auto iv = run({"insert", "--type=interval", "1324..3421"});
  CHECK(iv.exit_code == 0);
  CHECK(iv.out == "n=4; inc: 3<4; dec: 3>2\n");
}

TEST_CASE("cli hasse") {
  const auto r = run({"hasse", "n=3; inc: 1<2, 1<3, 2<3; dec: -"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("v1 -> v2") != std::string::npos);

  const auto u = run({"hasse", "--family=woep", "--n=3"});
  CHECK(u.exit_code == 0);
  std::size_t edges = 0;
  for (std::size_t at = u.out.find(" -> "); at != std::string::npos;
       at = u.out.find(" -> ", at + 1))
    ++edges;
  CHECK(edges == 6);
}

TEST_CASE("cli exit codes") {
  // domain failure: meet of a non-member under a family
  const auto domain = run({"meet", "--family=woep",
                           "n=3; inc: -; dec: -", "n=3; inc: -; dec: -"});
  CHECK(domain.exit_code == 1);
  // parse failure: malformed relation
  const auto parse = run({"classify", "n=3; inc 1<2"});
  CHECK(parse.exit_code == 2);
  // parse failure: unknown flag
  const auto flag = run({"classify", "--bogus"});
  CHECK(flag.exit_code == 2);
  // size mismatch is a domain failure
  const auto mismatch = run({"meet", "--level=poset", "n=3; inc: -; dec: -",
                             "n=4; inc: -; dec: -"});
  CHECK(mismatch.exit_code == 1);
}

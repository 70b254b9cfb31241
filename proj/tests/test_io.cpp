#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "sga/errors.hpp"
#include "sga/io.hpp"
#include "sga/invariants.hpp"

using namespace sga;

namespace {

int run_sga(const std::string& args) {
  const std::string cmd = std::string(SGA_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("quiver DSL errors carry positions") {
  try {
    parse_quiver("vertex 1\narrow a 1:+ -> 9:-\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quiver("vertex 1\nfoo\n"), ParseError);
  CHECK_THROWS_AS(load_quiver("/nonexistent/quiver.txt"), std::exception);
}

TEST_CASE("builtins round trip through the DSL") {
  for (const char* name : {"EX1", "EX1F", "EX46"}) {
    Quiver q = load_quiver(name);
    CHECK(parse_quiver(print_quiver(q)) == q);
  }
  Quiver r = random_skewed_gentle(5, 11);
  CHECK(parse_quiver(print_quiver(r)) == r);
  CHECK(random_skewed_gentle(5, 11) == r);
}

TEST_CASE("word and module syntax errors") {
  Quiver q = load_quiver("EX1");
  CHECK_THROWS_AS(parse_adm(q, "1(1,-)- zz 1(3,+)"), ParseError);
  CHECK_THROWS_AS(parse_module("V(2", 5), ParseError);
  CHECK(parse_module("V(2,3)", 5).T == jordan_block(2, 3, 5));
}

TEST_CASE("output is deterministic") {
  Quiver q = load_quiver("EX1");
  Fringing f = auto_fringe(q);
  CHECK(components_tsv(q, enumerate_components(f, 5, 5)) == components_tsv(q, enumerate_components(f, 5, 5)));
  AdmWord x = parse_adm(q, "1(1,-)- c b e b- 1(3,+)");
  CHECK(to_dot(build_HQ(q, x, x)) == to_dot(build_HQ(q, x, x)));
}

TEST_CASE("CLI exit codes") {
  CHECK(run_sga("check EX1") == 0);
  CHECK(run_sga("hom EX1 --x \"1(1,-)- q 1(3,+)\" --y \"1(1,-)- c 1(3,-)\"") == 2);
  CHECK(run_sga("--no-such-flag") == 2);
  CHECK(run_sga("hquiver EX46 --x \"1(1,+)- e a e a- 1(1,-)\" --y \"1(1,-)- a e a e a- 1(1,-)\"") == 3);
  CHECK(run_sga("einv EX1 --x \"1(1,-)- c b e b- 1(3,+)\" --s \"*\" --y \"1(1,-)- c b e b- 1(3,+)\" --t \"++\"") == 3);
  CHECK(run_sga("selftest --max-len 4") == 0);
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "glr/cli.hpp"
#include "glr/homology.hpp"
#include "glr/rack_io.hpp"

namespace fs = std::filesystem;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = glr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  struct Fixture {
    fs::path dir;
    Fixture() {
      dir = fs::temp_directory_path() / ("glr_cli_test_" + std::to_string(::getpid()));
      fs::create_directories(dir);
      put("t2.glrack", "glrack\nsize: 2\nop:\n0 0\n1 1\nu: 0 1\nd: 0 1\n");
      put("z4.glrack",
          "# sigma = +2, u = d = +1\nglrack\nsize: 4\nop:\n2 2 2 2\n3 3 3 3\n0 0 0 0\n1 1 1 1\n"
          "u: 1 2 3 0\nd: 1 2 3 0\n");
      put("bad.glrack", "glrack\nsize: 2\nop:\n0 0\n1 1\nu: 1 0\nd: 0 1\n");
      put("flip.rack", "rack\nsize: 2\nop:\n1 1\n0 0\n");
      put("trefoil.front", "front: L1 L3 X2 X2 X2 R3 R1\norient: +\n");
      put("u13.front", "front: L1 L2 R1 R1\n");
      put("broken.front", "front: L1 R2\n");
    }
    ~Fixture() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
    void put(std::string const& name, std::string const& text) const {
      std::ofstream(dir / name) << text;
    }
    std::string operator()(std::string const& name) const {
      return (dir / name).string();
    }
  };

  bool has_line(std::string const& text, std::string const& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
      if (l == line) return true;
    return false;
  }
}  // namespace

TEST_CASE("documented examples") {
  Fixture f;
  auto    a = run({"rack", "check", f("t2.glrack")});
  CHECK(a.code == 0);
  CHECK(a.out == "ok\n");
  auto b = run({"diagram", "info", f("trefoil.front")});
  CHECK(b.code == 0);
  CHECK(has_line(b.out, "components: 1"));
  CHECK(has_line(b.out, "tb: 1"));
  CHECK(has_line(b.out, "r: 0"));
  auto c = run({"diagram", "color", f("u13.front"), "--rack", f("z4.glrack")});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "colorings: 4"));
}

TEST_CASE("exit codes") {
  Fixture f;
  CHECK(run({"rack", "check", f("bad.glrack")}).code == 1);
  CHECK(run({"rack", "check", f("missing.glrack")}).code == 2);
  CHECK(run({"diagram", "info", f("broken.front")}).code == 2);
  CHECK(run({"diagram", "info", f("trefoil.front"), "--bogus"}).code == 2);
  CHECK(run({"rack", "frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"rack", "homology", f("t2.glrack")}).code == 2);
  CHECK(run({"rack", "cocycles", f("t2.glrack"), "--coeff", "1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("homology and cocycle output") {
  Fixture f;
  auto h = run({"rack", "homology", f("t2.glrack"), "--degree", "2"});
  CHECK(h.out == "H_2 = Z^2\n");
  auto hc = run({"rack", "homology", f("t2.glrack"), "--degree", "2", "--coeff", "2"});
  CHECK(hc.code == 0);
  auto const emit = (f.dir / "cocycles").string();
  auto       c    = run({"rack", "cocycles", f("t2.glrack"), "--coeff", "2", "--emit", emit});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "cocycles: 4"));
  auto const r = glr::parse_gl_rack(glr::read_file(f("t2.glrack")));
  std::size_t files = 0;
  for (auto const& e : fs::directory_iterator(emit)) {
    ++files;
    auto const text = glr::read_file(e.path().string());
    CHECK(glr::write_cocycle(r, glr::parse_cocycle(text, r)) == text);
  }
  CHECK(files == 2);
  auto const first = (fs::path(emit) / "cocycle_0.txt").string();
  auto       s = run({"diagram", "statesum", f("trefoil.front"), "--rack", f("t2.glrack"),
                      "--cocycle", first});
  CHECK(s.code == 0);
  CHECK(s.out == "statesum: 2\n");
}

TEST_CASE("rack structure commands") {
  Fixture f;
  auto g = run({"rack", "gl-structures", f("flip.rack")});
  CHECK(has_line(g.out, "structures: 2"));
  auto e = run({"rack", "gl-structures", f("flip.rack"), "--mode", "u=d"});
  CHECK(has_line(e.out, "structures: 0"));
  CHECK(run({"rack", "gl-structures", f("flip.rack"), "--mode", "sideways"}).code == 2);
  auto env = run({"rack", "envelope", f("z4.glrack")});
  CHECK(env.out.rfind("gens:", 0) == 0);
  CHECK(has_line(env.out, "abelianization: Z"));
  auto hom = run({"rack", "homogeneous", f("z4.glrack")});
  CHECK(hom.code == 0);
  CHECK(has_line(hom.out, "verified: yes"));
}

TEST_CASE("diagram perturb and envelope") {
  Fixture f;
  auto a = run({"diagram", "perturb", f("trefoil.front"), "--moves", "30", "--seed", "4"});
  auto b = run({"diagram", "perturb", f("trefoil.front"), "--moves", "30", "--seed", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  f.put("moved.front", a.out);
  auto info = run({"diagram", "info", f("moved.front")});
  CHECK(has_line(info.out, "tb: 1"));
  CHECK(has_line(info.out, "r: 0"));
  auto env = run({"diagram", "envelope", f("u13.front")});
  CHECK(has_line(env.out, "abelianization: Z"));
}

TEST_CASE("GLR_CAP limits the automorphism search") {
  Fixture f;
  ::setenv("GLR_CAP", "2", 1);
  auto r = run({"rack", "homogeneous", f("z4.glrack")});
  ::unsetenv("GLR_CAP");
  CHECK(r.code == 1);
  CHECK(r.err.find("resource error") != std::string::npos);
}

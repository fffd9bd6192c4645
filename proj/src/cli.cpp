#include "glr/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include "glr/diagram.hpp"
#include "glr/homology.hpp"
#include "glr/presentation.hpp"
#include "glr/rack_io.hpp"
#include "glr/statesum.hpp"

namespace glr::cli {

  namespace {

    std::string join(std::vector<Element> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i == 0 ? "" : " ") + std::to_string(v[i]);
      }
      return s;
    }

    struct Options {
      std::string rack_file;
      std::string diagram_file;
      std::string cocycle_file;
      std::string emit_dir;
      std::string mode = "all";
      std::size_t degree = 2;
      std::int64_t coeff = 0;
      std::size_t moves = 10;
      std::uint64_t seed = 0;
      bool list = false;
    };

    int rack_check(Options const& o, std::ostream& out) {
      auto const file = parse_rack_file(read_file(o.rack_file), "rack");
      auto report     = validate_rack(file.op);
      if (report.ok() && file.u && file.d) {
        report = validate_gl_rack(FiniteRack(file.op), *file.u, *file.d);
      }
      if (!report.ok()) {
        out << report.to_string();
        return 1;
      }
      out << "ok\n";
      return 0;
    }

    int rack_gl_structures(Options const& o, std::ostream& out) {
      auto const file = parse_rack_file(read_file(o.rack_file), "rack");
      FiniteRack const rack(file.op);
      auto const mode = o.mode == "u=d" ? StructureMode::u_equals_d : StructureMode::all;
      auto const all  = enumerate_gl_structures(rack, mode, Limits::from_env());
      out << "structures: " << all.size() << "\n";
      for (auto const& s : all) {
        out << "u: " << join(s.u) << "  d: " << join(s.d) << "\n";
      }
      return 0;
    }

    int rack_homology(Options const& o, std::ostream& out) {
      auto const r = parse_gl_rack(read_file(o.rack_file));
      if (o.coeff == 1 || o.coeff < 0) {
        throw DomainError("coefficient modulus must be 0 or at least 2");
      }
      auto const limits = Limits::from_env();
      if (o.coeff == 0) {
        out << "H_" << o.degree << " = "
            << to_string(legendrian_homology(r, o.degree, limits)) << "\n";
      } else {
        out << "H^" << o.degree << "(Z/" << o.coeff << ") = "
            << to_string(legendrian_cohomology(r, o.degree, o.coeff, limits)) << "\n";
      }
      return 0;
    }

    int rack_cocycles(Options const& o, std::ostream& out) {
      auto const r = parse_gl_rack(read_file(o.rack_file));
      if (o.coeff < 2) {
        throw DomainError("cocycles need --coeff m with m >= 2");
      }
      auto const z = cocycle_space_2(r, o.coeff);
      auto const b = coboundary_space_2(r, o.coeff);
      std::vector<std::vector<std::int64_t>> zv, bv;
      for (auto const& c : z) {
        zv.push_back(c.values());
      }
      for (auto const& c : b) {
        bv.push_back(c.values());
      }
      auto const k = r.size() * r.size();
      out << "generators: " << z.size() << "\n";
      out << "cocycles: " << span_size_mod(zv, k, o.coeff) << "\n";
      out << "coboundaries: " << span_size_mod(bv, k, o.coeff) << "\n";
      if (!o.emit_dir.empty()) {
        std::filesystem::create_directories(o.emit_dir);
        for (std::size_t i = 0; i < z.size(); ++i) {
          auto const path = std::filesystem::path(o.emit_dir)
                            / ("cocycle_" + std::to_string(i) + ".txt");
          std::ofstream f(path);
          f << write_cocycle(r, z[i]);
          if (!f) {
            throw Error("cannot write " + path.string());
          }
          out << "wrote " << path.string() << "\n";
        }
      }
      return 0;
    }

    int rack_envelope(Options const& o, std::ostream& out) {
      auto const r = parse_gl_rack(read_file(o.rack_file));
      auto const p = collapse_ud(env_of_gl_rack(r));
      out << p.to_string();
      out << "abelianization: " << to_string(abelianization(p)) << "\n";
      return 0;
    }

    int rack_homogeneous(Options const& o, std::ostream& out) {
      auto const r      = parse_gl_rack(read_file(o.rack_file));
      auto const limits = Limits::from_env();
      auto const h      = homogeneous_representation(r, limits);
      out << "group order: " << h.data.group.size() << "\n";
      for (std::size_t i = 0; i < h.data.subgroups.size(); ++i) {
        out << "H_" << i << ": " << join(h.data.subgroups[i]) << "\n";
      }
      out << "iso: " << join(h.iso) << "\n";
      auto const c  = coset_gl_rack(h.data);
      bool const ok = check_coset_conditions(h.data).empty()
                      && gl_rack_isomorphic(c, r, limits).has_value();
      out << "verified: " << (ok ? "yes" : "no") << "\n";
      return ok ? 0 : 1;
    }

    FrontDiagram load_diagram(std::string const& path) {
      return parse_diagram(read_file(path));
    }

    int diagram_info(Options const& o, std::ostream& out) {
      auto const d   = load_diagram(o.diagram_file);
      auto const inv = classical_invariants(d);
      out << "components: " << d.components() << "\n";
      out << "tb: " << inv.tb << "\n";
      out << "r: " << inv.rotation << "\n";
      out << "writhe: " << inv.writhe << "\n";
      out << "crossings: " << crossings(d).size() << "\n";
      out << "cusps: " << classify_cusps(d).size() << "\n";
      return 0;
    }

    int diagram_color(Options const& o, std::ostream& out) {
      auto const d = load_diagram(o.diagram_file);
      auto const r = parse_gl_rack(read_file(o.rack_file));
      out << "colorings: " << count_colorings(d, r) << "\n";
      if (o.list) {
        for (auto const& c : list_colorings(d, r)) {
          out << join(c) << "\n";
        }
      }
      return 0;
    }

    int diagram_statesum(Options const& o, std::ostream& out) {
      auto const d   = load_diagram(o.diagram_file);
      auto const r   = parse_gl_rack(read_file(o.rack_file));
      auto const phi = parse_cocycle(read_file(o.cocycle_file), r);
      out << "statesum: " << state_sum(d, r, phi).to_string() << "\n";
      return 0;
    }

    int diagram_perturb(Options const& o, std::ostream& out) {
      auto const d = load_diagram(o.diagram_file);
      out << write_diagram(random_moves(d, o.moves, o.seed));
      return 0;
    }

    int diagram_envelope(Options const& o, std::ostream& out) {
      auto const d = load_diagram(o.diagram_file);
      auto const p = collapse_ud(env_of_presentation(gl_presentation(d)));
      out << p.to_string();
      out << "abelianization: " << to_string(abelianization(p)) << "\n";
      return 0;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"GL-rack invariants of Legendrian fronts", "glr"};
    app.require_subcommand(1);
    Options o;
    std::function<int(Options const&, std::ostream&)> action;

    auto* rack = app.add_subcommand("rack", "operations on GL-rack files");
    rack->require_subcommand(1);
    auto* diagram = app.add_subcommand("diagram", "operations on front diagrams");
    diagram->require_subcommand(1);

    auto verb = [&](CLI::App* parent, std::string const& name, std::string const& help,
                    int (*fn)(Options const&, std::ostream&)) {
      auto* sub = parent->add_subcommand(name, help);
      sub->callback([&action, fn] { action = fn; });
      return sub;
    };

    auto* check = verb(rack, "check", "validate the axioms", rack_check);
    check->add_option("RACKFILE", o.rack_file)->required();

    auto* gls = verb(rack, "gl-structures", "list every (u, d) on the rack", rack_gl_structures);
    gls->add_option("RACKFILE", o.rack_file)->required();
    gls->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "u=d"}));

    auto* hom = verb(rack, "homology", "Legendrian rack (co)homology", rack_homology);
    hom->add_option("RACKFILE", o.rack_file)->required();
    hom->add_option("--degree", o.degree)->required()->check(CLI::PositiveNumber);
    hom->add_option("--coeff", o.coeff);

    auto* coc = verb(rack, "cocycles", "generators of the 2-cocycle group", rack_cocycles);
    coc->add_option("RACKFILE", o.rack_file)->required();
    coc->add_option("--coeff", o.coeff)->required();
    coc->add_option("--emit", o.emit_dir);

    auto* renv = verb(rack, "envelope", "enveloping group", rack_envelope);
    renv->add_option("RACKFILE", o.rack_file)->required();

    auto* homog = verb(rack, "homogeneous", "coset representation", rack_homogeneous);
    homog->add_option("RACKFILE", o.rack_file)->required();

    auto* info = verb(diagram, "info", "classical invariants", diagram_info);
    info->add_option("FILE", o.diagram_file)->required();

    auto* color = verb(diagram, "color", "count colorings", diagram_color);
    color->add_option("FILE", o.diagram_file)->required();
    color->add_option("--rack", o.rack_file)->required();
    color->add_flag("--list", o.list);

    auto* ss = verb(diagram, "statesum", "cocycle state sum", diagram_statesum);
    ss->add_option("FILE", o.diagram_file)->required();
    ss->add_option("--rack", o.rack_file)->required();
    ss->add_option("--cocycle", o.cocycle_file)->required();

    auto* pert = verb(diagram, "perturb", "apply seeded random moves", diagram_perturb);
    pert->add_option("FILE", o.diagram_file)->required();
    pert->add_option("--moves", o.moves);
    pert->add_option("--seed", o.seed);

    auto* denv = verb(diagram, "envelope", "enveloping group of the diagram", diagram_envelope);
    denv->add_option("FILE", o.diagram_file)->required();

    try {
      // CLI11 consumes the vector from the back
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      return action(o, out);
    } catch (FormatError const& e) {
      err << "format error: " << e.what() << "\n";
      return 2;
    } catch (ResourceError const& e) {
      err << "resource error: " << e.what() << "\n";
      return 1;
    } catch (DomainError const& e) {
      err << "domain error: " << e.what() << "\n";
      return 1;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }

}  // namespace glr::cli

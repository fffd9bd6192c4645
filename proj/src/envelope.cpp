#include <map>
#include <numeric>

#include "glr/presentation.hpp"

namespace glr {

  GroupWord free_reduce(GroupWord w) {
    GroupWord out;
    for (auto const& letter : w) {
      if (!out.empty() && out.back().first == letter.first
          && out.back().second == -letter.second) {
        out.pop_back();
      } else {
        out.push_back(letter);
      }
    }
    return out;
  }

  GroupWord cyclic_reduce(GroupWord w) {
    w = free_reduce(std::move(w));
    std::size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a].first == w[b - 1].first
           && w[a].second == -w[b - 1].second) {
      ++a;
      --b;
    }
    return GroupWord(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
  }

  std::string GroupPresentation::to_string() const {
    std::string s = "gens:";
    for (auto const& g : generators) {
      s += " " + g;
    }
    s += "\nrels:";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      s += i == 0 ? " " : ", ";
      for (std::size_t j = 0; j < relators[i].size(); ++j) {
        auto [g, e] = relators[i][j];
        s += (j == 0 ? "" : " ") + generators[g] + (e < 0 ? "^-1" : "");
      }
    }
    return s + "\n";
  }

  namespace {
    void add_relator(GroupPresentation& p, GroupWord w) {
      w = cyclic_reduce(std::move(w));
      if (!w.empty()) {
        p.relators.push_back(std::move(w));
      }
    }
  }  // namespace

  GroupPresentation env_of_gl_rack(FiniteGLRack const& r) {
    GroupPresentation p;
    for (Element x = 0; x < r.size(); ++x) {
      p.generators.push_back("e" + std::to_string(x));
    }
    for (Element x = 0; x < r.size(); ++x) {
      for (Element y = 0; y < r.size(); ++y) {
        add_relator(p, {{y, -1}, {x, 1}, {y, 1}, {r.op(x, y), -1}});
      }
    }
    for (Element x = 0; x < r.size(); ++x) {
      add_relator(p, {{r.up(x), 1}, {x, -1}});
      add_relator(p, {{r.down(x), 1}, {x, -1}});
    }
    return p;
  }

  GroupPresentation env_of_presentation(GLPresentation const& gp) {
    GroupPresentation p;
    for (std::size_t s = 0; s < gp.generators; ++s) {
      p.generators.push_back("x" + std::to_string(s));
    }
    for (auto const& rel : gp.relations) {
      std::size_t const out = rel.lhs.generator();
      if (rel.kind == RelationKind::crossing) {
        std::size_t const x = rel.rhs.left().generator(), y = rel.rhs.right().generator();
        int const         e = rel.rhs.node() == GLWord::Node::op ? 1 : -1;
        // out = y^-e x y^e
        add_relator(p, {{y, -e}, {x, 1}, {y, e}, {out, -1}});
      } else {
        std::size_t const in = rel.kind == RelationKind::over_strand
                                   ? rel.rhs.generator()
                                   : rel.rhs.left().generator();
        add_relator(p, {{out, 1}, {in, -1}});
      }
    }
    return p;
  }

  GroupPresentation collapse_ud(GroupPresentation const& input) {
    GroupPresentation p = input;
    for (;;) {
      std::vector<std::size_t> parent(p.generators.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      bool merged = false;
      for (auto const& w : p.relators) {
        if (w.size() == 2 && w[0].second == -w[1].second) {
          auto a = find(w[0].first), b = find(w[1].first);
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            merged                 = true;
          }
        }
      }
      if (!merged) {
        return p;
      }
      GroupPresentation                  q;
      std::map<std::size_t, std::size_t> compact;
      std::vector<std::size_t>           rename(p.generators.size());
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        auto root = find(g);
        auto [it, fresh] = compact.try_emplace(root, q.generators.size());
        if (fresh) {
          q.generators.push_back(p.generators[root]);
        }
        rename[g] = it->second;
      }
      for (auto w : p.relators) {
        for (auto& letter : w) {
          letter.first = rename[letter.first];
        }
        add_relator(q, std::move(w));
      }
      p = std::move(q);
    }
  }

  AbGroupInvariants abelianization(GroupPresentation const& p) {
    IntMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      for (auto [g, e] : p.relators[i]) {
        m(i, g) += e;
      }
    }
    return cokernel_of_relations(m);
  }

}  // namespace glr

#include "glr/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scan.hpp"

namespace glr {

  struct GLWord::Rep {
    Node                node;
    std::size_t         g = 0;
    std::vector<GLWord> kids;
  };

  GLWord GLWord::gen(std::size_t g) {
    return GLWord(std::make_shared<Rep const>(Rep{Node::gen, g, {}}));
  }

  GLWord GLWord::op(GLWord const& a, GLWord const& b, int sign) {
    return GLWord(std::make_shared<Rep const>(
        Rep{sign >= 0 ? Node::op : Node::inv_op, 0, {a, b}}));
  }

  GLWord GLWord::up(GLWord const& a) {
    return GLWord(std::make_shared<Rep const>(Rep{Node::up, 0, {a}}));
  }

  GLWord GLWord::down(GLWord const& a) {
    return GLWord(std::make_shared<Rep const>(Rep{Node::down, 0, {a}}));
  }

  GLWord::Node GLWord::node() const {
    return rep_->node;
  }
  std::size_t GLWord::generator() const {
    return rep_->g;
  }
  GLWord const& GLWord::left() const {
    return rep_->kids.at(0);
  }
  GLWord const& GLWord::right() const {
    return rep_->kids.at(1);
  }

  bool GLWord::operator==(GLWord const& other) const {
    if (rep_ == other.rep_) {
      return true;
    }
    if (node() != other.node()) {
      return false;
    }
    if (node() == Node::gen) {
      return generator() == other.generator();
    }
    return rep_->kids == other.rep_->kids;
  }

  std::string GLWord::to_string() const {
    switch (node()) {
      case Node::gen: return "x" + std::to_string(generator());
      case Node::up: return "u(" + left().to_string() + ")";
      case Node::down: return "d(" + left().to_string() + ")";
      case Node::op:
      case Node::inv_op: {
        // left-associated: only a compound right operand needs brackets
        auto const& r   = right();
        bool const  bra = r.node() == Node::op || r.node() == Node::inv_op;
        return left().to_string() + (node() == Node::op ? " * " : " / ")
               + (bra ? "(" + r.to_string() + ")" : r.to_string());
      }
    }
    return {};
  }

  namespace {
    using Spine = std::vector<std::pair<std::size_t, int>>;

    void push(Spine& s, std::size_t g, int sign) {
      if (s.size() >= 2 && s.back().first == g && s.back().second == -sign) {
        s.pop_back();
      } else {
        s.emplace_back(g, sign);
      }
    }

    // x *^e (y_1 *^f_2 y_2 ... *^f_r y_r), with x already left-associated:
    // x *^e (Y *^f z) = ((x *^-f z) *^e Y) *^f z
    void append(Spine& x, int e, Spine const& y, std::size_t end) {
      if (end == 1) {
        push(x, y[0].first, e);
        return;
      }
      auto const [z, f] = y[end - 1];
      push(x, z, -f);
      append(x, e, y, end - 1);
      push(x, z, f);
    }

    // ud(x * x * rest) = x * rest
    void absorb(NormalForm& nf) {
      while (nf.k > 0 && nf.l > 0 && nf.spine.size() >= 2
             && nf.spine[1].first == nf.spine[0].first
             && nf.spine[1].second == 1) {
        nf.spine.erase(nf.spine.begin() + 1);
        --nf.k;
        --nf.l;
      }
    }
  }  // namespace

  NormalForm normal_form_view(GLWord const& w) {
    switch (w.node()) {
      case GLWord::Node::gen: return {0, 0, {{w.generator(), 1}}};
      case GLWord::Node::up:
      case GLWord::Node::down: {
        auto nf = normal_form_view(w.left());
        (w.node() == GLWord::Node::up ? nf.k : nf.l) += 1;
        absorb(nf);
        return nf;
      }
      case GLWord::Node::op:
      case GLWord::Node::inv_op: {
        // u(x) * y = u(x * y) and x * u(y) = x * y, likewise for d
        auto       a = normal_form_view(w.left());
        auto const b = normal_form_view(w.right());
        append(a.spine, w.node() == GLWord::Node::op ? 1 : -1, b.spine,
               b.spine.size());
        absorb(a);
        return a;
      }
    }
    return {};
  }

  GLWord to_word(NormalForm const& nf) {
    if (nf.spine.empty()) {
      throw DomainError("normal form with an empty spine");
    }
    GLWord w = GLWord::gen(nf.spine[0].first);
    for (std::size_t i = 1; i < nf.spine.size(); ++i) {
      w = GLWord::op(w, GLWord::gen(nf.spine[i].first), nf.spine[i].second);
    }
    for (int i = 0; i < nf.l; ++i) {
      w = GLWord::down(w);
    }
    for (int i = 0; i < nf.k; ++i) {
      w = GLWord::up(w);
    }
    return w;
  }

  GLWord normal_form(GLWord const& w) {
    return to_word(normal_form_view(w));
  }

  Element evaluate_word(GLWord const& w, FiniteGLRack const& r,
                        std::vector<Element> const& assignment) {
    switch (w.node()) {
      case GLWord::Node::gen:
        if (w.generator() >= assignment.size()) {
          throw DomainError("evaluate_word: generator x"
                            + std::to_string(w.generator()) + " is unassigned");
        }
        if (assignment[w.generator()] >= r.size()) {
          throw DomainError("evaluate_word: assigned element out of range");
        }
        return assignment[w.generator()];
      case GLWord::Node::up: return r.up(evaluate_word(w.left(), r, assignment));
      case GLWord::Node::down: return r.down(evaluate_word(w.left(), r, assignment));
      case GLWord::Node::op:
        return r.op(evaluate_word(w.left(), r, assignment),
                    evaluate_word(w.right(), r, assignment));
      case GLWord::Node::inv_op:
        return r.op_inverse(evaluate_word(w.left(), r, assignment),
                            evaluate_word(w.right(), r, assignment));
    }
    return 0;
  }

}  // namespace glr

#include "zariski/formula.hpp"

namespace zariski {

namespace {

using Kind = FormulaNode::Kind;

struct Scan {
  bool implication_or_forall = false;
  bool big_and = false;
  bool quantifier = false;
  bool big_or = false;
};

void scan(const Formula& f, Scan& s) {
  switch (f->kind) {
    case Kind::kImp:
    case Kind::kForall:
      s.implication_or_forall = true;
      break;
    case Kind::kExists:
      s.quantifier = true;
      break;
    case Kind::kAnd:
      if (f->indexed) s.big_and = true;
      break;
    case Kind::kOr:
      if (f->indexed) s.big_or = true;
      break;
    default:
      break;
  }
  for (const auto& c : f->children) scan(c, s);
}

}  // namespace

std::string to_string(Fragment fragment) {
  switch (fragment) {
    case Fragment::kGeometric:
      return "geometric";
    case Fragment::kCoherent:
      return "coherent";
    case Fragment::kFirstOrder:
      return "first-order";
  }
  return {};
}

Fragment classify(const Formula& f) {
  Scan s;
  scan(f, s);
  if (s.implication_or_forall || s.big_and) return Fragment::kFirstOrder;
  if (s.quantifier || s.big_or) return Fragment::kGeometric;
  return Fragment::kCoherent;
}

Formula nabla_translate(const Formula& f) {
  auto translate_all = [](const std::vector<Formula>& family) {
    std::vector<Formula> out;
    out.reserve(family.size());
    for (const auto& c : family) out.push_back(nabla_translate(c));
    return out;
  };
  switch (f->kind) {
    case Kind::kEq:
    case Kind::kPred:
    case Kind::kBeta:
      return fm::nabla(f);
    case Kind::kTop:
      return f;
    case Kind::kBot:
      return fm::nabla(f);
    case Kind::kAnd: {
      auto parts = translate_all(f->children);
      return f->indexed ? fm::big_and(std::move(parts)) : fm::conj(parts[0], parts[1]);
    }
    case Kind::kOr: {
      auto parts = translate_all(f->children);
      return fm::nabla(f->indexed ? fm::big_or(std::move(parts)) : fm::disj(parts[0], parts[1]));
    }
    case Kind::kImp:
      return fm::imp(nabla_translate(f->children[0]), nabla_translate(f->children[1]));
    case Kind::kForall:
      return fm::forall(f->var, nabla_translate(f->children[0]));
    case Kind::kExists:
      return fm::nabla(fm::exists(f->var, nabla_translate(f->children[0])));
  }
  return f;
}

}  // namespace zariski

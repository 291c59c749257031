#include "shadowbench/policy_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <unordered_set>

#include "shadowbench/errors.hpp"

namespace shadowbench {

const char* to_string(PolicyVar v) {
  switch (v) {
    case PolicyVar::MaxR: return "max_r";
    case PolicyVar::MinDMov: return "min_d_mov";
    case PolicyVar::MinDNpc: return "min_d_npc";
    case PolicyVar::SumDNpc: return "sum_d_npc";
    case PolicyVar::ChildVisits: return "child_visits";
    case PolicyVar::ParentVisits: return "parent_visits";
    case PolicyVar::MeanReward: return "mean_reward";
  }
  return "?";
}

struct PolicyExpr::Node {
  Kind kind;
  double value = 0.0;       // Const
  PolicyVar var{};          // Var
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const PolicyExpr::Node>;
using Kind = PolicyExpr::Kind;

NodePtr make_node(Kind k, double value, PolicyVar var, NodePtr l, NodePtr r) {
  auto n = std::make_shared<PolicyExpr::Node>();
  n->kind = k;
  n->value = value;
  n->var = var;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

double var_value(PolicyVar v, const NodeContext& ctx) {
  switch (v) {
    case PolicyVar::MaxR: return ctx.max_r;
    case PolicyVar::MinDMov: return ctx.features.min_d_mov;
    case PolicyVar::MinDNpc: return ctx.features.min_d_npc;
    case PolicyVar::SumDNpc: return ctx.features.sum_d_npc;
    case PolicyVar::ChildVisits: return static_cast<double>(ctx.child_visits);
    case PolicyVar::ParentVisits: return static_cast<double>(ctx.parent_visits);
    case PolicyVar::MeanReward: return ctx.mean_reward;
  }
  return 0.0;
}

double eval_node(const PolicyExpr::Node& n, const NodeContext& ctx) {
  switch (n.kind) {
    case Kind::Const: return n.value;
    case Kind::Var: return var_value(n.var, ctx);
    case Kind::Abs: return std::abs(eval_node(*n.lhs, ctx));
    case Kind::Ln: {
      const double x = eval_node(*n.lhs, ctx);
      return x > 0.0 ? std::log(x) : 0.0;
    }
    case Kind::Sqrt: {
      const double x = eval_node(*n.lhs, ctx);
      return x > 0.0 ? std::sqrt(x) : 0.0;
    }
    case Kind::Add: return eval_node(*n.lhs, ctx) + eval_node(*n.rhs, ctx);
    case Kind::Sub: return eval_node(*n.lhs, ctx) - eval_node(*n.rhs, ctx);
    case Kind::Mul: return eval_node(*n.lhs, ctx) * eval_node(*n.rhs, ctx);
    case Kind::Div: {
      const double num = eval_node(*n.lhs, ctx);
      double den = eval_node(*n.rhs, ctx);
      const double mag = std::max(std::abs(den), PolicyExpr::kDenominatorFloor);
      den = den < 0.0 ? -mag : mag;
      return num / den;
    }
  }
  return 0.0;
}

std::string format_const(double v) {
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void render_node(const PolicyExpr::Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Const: out += format_const(n.value); return;
    case Kind::Var: out += to_string(n.var); return;
    case Kind::Abs:
    case Kind::Ln:
    case Kind::Sqrt:
      out += n.kind == Kind::Abs ? "abs" : n.kind == Kind::Ln ? "ln" : "sqrt";
      out += '(';
      render_node(*n.lhs, out);
      out += ')';
      return;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      const char* op = n.kind == Kind::Add   ? " + "
                       : n.kind == Kind::Sub ? " - "
                       : n.kind == Kind::Mul ? " * "
                                             : " / ";
      out += '(';
      render_node(*n.lhs, out);
      out += op;
      render_node(*n.rhs, out);
      out += ')';
      return;
    }
  }
}

// Pruning options for a subtree: every expression it can collapse to when
// zero or more of its subtrees are deleted. nullptr stands for "this whole
// subtree deleted". Collapse rules:
//   - a deleted child of + - * leaves the surviving child in place,
//   - a deleted divisor leaves the dividend,
//   - a deleted dividend leaves the reciprocal (1 / divisor),
//   - a deleted child of a unary node deletes the unary node too.
std::vector<NodePtr> prune_options(const NodePtr& n) {
  std::vector<NodePtr> out;
  switch (n->kind) {
    case Kind::Const:
    case Kind::Var:
      out.push_back(n);
      out.push_back(nullptr);
      return out;
    case Kind::Abs:
    case Kind::Ln:
    case Kind::Sqrt: {
      for (const NodePtr& c : prune_options(n->lhs)) {
        if (c) out.push_back(make_node(n->kind, 0.0, {}, c, nullptr));
      }
      out.push_back(nullptr);
      return out;
    }
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      const auto lhs_opts = prune_options(n->lhs);
      const auto rhs_opts = prune_options(n->rhs);
      for (const NodePtr& l : lhs_opts) {
        for (const NodePtr& r : rhs_opts) {
          if (l && r) {
            out.push_back(make_node(n->kind, 0.0, {}, l, r));
          } else if (l && !r) {
            out.push_back(l);
          } else if (!l && r) {
            if (n->kind == Kind::Div) {
              out.push_back(make_node(Kind::Div, 0.0, {},
                                      make_node(Kind::Const, 1.0, {}, nullptr, nullptr), r));
            } else {
              out.push_back(r);
            }
          } else {
            out.push_back(nullptr);
          }
        }
      }
      return out;
    }
  }
  return out;
}

}  // namespace

PolicyExpr PolicyExpr::constant(double value) {
  return PolicyExpr(make_node(Kind::Const, value, {}, nullptr, nullptr));
}
PolicyExpr PolicyExpr::variable(PolicyVar v) {
  return PolicyExpr(make_node(Kind::Var, 0.0, v, nullptr, nullptr));
}
PolicyExpr PolicyExpr::abs(PolicyExpr e) {
  return PolicyExpr(make_node(Kind::Abs, 0.0, {}, std::move(e.root_), nullptr));
}
PolicyExpr PolicyExpr::ln(PolicyExpr e) {
  return PolicyExpr(make_node(Kind::Ln, 0.0, {}, std::move(e.root_), nullptr));
}
PolicyExpr PolicyExpr::sqrt(PolicyExpr e) {
  return PolicyExpr(make_node(Kind::Sqrt, 0.0, {}, std::move(e.root_), nullptr));
}
PolicyExpr PolicyExpr::add(PolicyExpr l, PolicyExpr r) {
  return PolicyExpr(make_node(Kind::Add, 0.0, {}, std::move(l.root_), std::move(r.root_)));
}
PolicyExpr PolicyExpr::sub(PolicyExpr l, PolicyExpr r) {
  return PolicyExpr(make_node(Kind::Sub, 0.0, {}, std::move(l.root_), std::move(r.root_)));
}
PolicyExpr PolicyExpr::mul(PolicyExpr l, PolicyExpr r) {
  return PolicyExpr(make_node(Kind::Mul, 0.0, {}, std::move(l.root_), std::move(r.root_)));
}
PolicyExpr PolicyExpr::div(PolicyExpr l, PolicyExpr r) {
  return PolicyExpr(make_node(Kind::Div, 0.0, {}, std::move(l.root_), std::move(r.root_)));
}

double PolicyExpr::eval(const NodeContext& ctx) const { return eval_node(*root_, ctx); }

std::string PolicyExpr::render() const {
  std::string out;
  render_node(*root_, out);
  return out;
}

PolicyExpr::Kind PolicyExpr::kind() const { return root_->kind; }

bool PolicyExpr::operator==(const PolicyExpr& other) const {
  return render() == other.render();
}

std::vector<PolicyExpr> prune_enumerate(const PolicyExpr& expr) {
  std::vector<PolicyExpr> result;
  std::unordered_set<std::string> seen;
  for (const NodePtr& opt : prune_options(expr.root_)) {
    if (!opt) continue;  // the empty pruning is excluded
    PolicyExpr e{opt};
    if (seen.insert(e.render()).second) result.push_back(std::move(e));
  }
  std::sort(result.begin(), result.end(),
            [](const PolicyExpr& a, const PolicyExpr& b) { return a.render() < b.render(); });
  return result;
}

double ucb_value(const NodeContext& ctx, double alpha) {
  if (ctx.child_visits == 0) return kUnvisitedUcb;
  return ctx.mean_reward +
         std::sqrt(alpha * std::log(static_cast<double>(ctx.parent_visits)) /
                   static_cast<double>(ctx.child_visits));
}

PolicyExpr ucb_policy(double alpha) {
  using P = PolicyExpr;
  return P::add(P::variable(PolicyVar::MeanReward),
                P::sqrt(P::div(P::mul(P::constant(alpha),
                                      P::ln(P::variable(PolicyVar::ParentVisits))),
                               P::variable(PolicyVar::ChildVisits))));
}

PolicyExpr reference_policy() {
  using P = PolicyExpr;
  return P::add(P::mul(P::variable(PolicyVar::MinDMov), P::variable(PolicyVar::MinDNpc)),
                P::div(P::abs(P::variable(PolicyVar::MaxR)),
                       P::variable(PolicyVar::SumDNpc)));
}

namespace {

// Recursive-descent parser for the infix grammar in docs/policy.md.
class PolicyParser {
 public:
  explicit PolicyParser(std::string_view text) : text_(text) {}

  PolicyExpr parse() {
    PolicyExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ConfigError("policy parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolicyExpr parse_expr() {
    PolicyExpr e = parse_term();
    for (;;) {
      if (eat('+')) {
        e = PolicyExpr::add(std::move(e), parse_term());
      } else if (eat('-')) {
        e = PolicyExpr::sub(std::move(e), parse_term());
      } else {
        return e;
      }
    }
  }

  PolicyExpr parse_term() {
    PolicyExpr e = parse_factor();
    for (;;) {
      if (eat('*')) {
        e = PolicyExpr::mul(std::move(e), parse_factor());
      } else if (eat('/')) {
        e = PolicyExpr::div(std::move(e), parse_factor());
      } else {
        return e;
      }
    }
  }

  PolicyExpr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected factor");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolicyExpr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  PolicyExpr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    const std::string tok(text_.substr(start, pos_ - start));
    try {
      return PolicyExpr::constant(std::stod(tok));
    } catch (const std::exception&) {
      fail("bad number '" + tok + "'");
    }
  }

  PolicyExpr parse_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "abs" || name == "ln" || name == "sqrt") {
      if (!eat('(')) fail("expected '(' after function name");
      PolicyExpr arg = parse_expr();
      if (!eat(')')) fail("expected ')'");
      if (name == "abs") return PolicyExpr::abs(std::move(arg));
      if (name == "ln") return PolicyExpr::ln(std::move(arg));
      return PolicyExpr::sqrt(std::move(arg));
    }
    for (PolicyVar v : {PolicyVar::MaxR, PolicyVar::MinDMov, PolicyVar::MinDNpc,
                        PolicyVar::SumDNpc, PolicyVar::ChildVisits, PolicyVar::ParentVisits,
                        PolicyVar::MeanReward}) {
      if (name == to_string(v)) return PolicyExpr::variable(v);
    }
    fail("unknown name '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolicyExpr parse_policy(std::string_view text) { return PolicyParser(text).parse(); }

}  // namespace shadowbench

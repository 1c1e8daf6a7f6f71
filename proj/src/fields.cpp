#include "wfree/fields.hpp"

namespace wfree {

namespace {

Scalar factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Scalar(Rational(f));
}

}  // namespace

State field_state(const Module& M, const FieldExpr& f) {
  State out;
  for (const auto& t : f.terms) {
    State s(Monomial{{}, Top{t.top, normalize_momentum(t.mom)}});
    Scalar c = t.coeff;
    for (size_t i = t.word.size(); i-- > 0;) {
      auto [g, d] = t.word[i];
      if (g < 0 || g >= M.alg().size() || d < 0) throw std::invalid_argument("bad word entry");
      // :(d^k g) X: = k! g_(-k-1) X
      s = apply_mode(M, g, -d - 1, s);
      c *= factorial(d);
    }
    out.add(s, c);
  }
  return out;
}

FieldExpr state_field(const Module& M, const State& s) {
  (void)M;
  FieldExpr f;
  for (const auto& [m, c] : s.terms()) {
    FieldTerm t;
    t.coeff = c;
    for (const auto& md : m.modes) {
      int d = -md.n - 1;
      t.word.emplace_back(md.gen, d);
      t.coeff /= factorial(d);
    }
    t.mom = m.top.mom;
    t.top = m.top.index;
    f.terms.push_back(std::move(t));
  }
  return f;
}

nlohmann::json field_json(const Module& M, const FieldExpr& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : f.terms) {
    nlohmann::json w = nlohmann::json::array();
    for (auto [g, d] : t.word) w.push_back(nlohmann::json::array({M.alg().gen(g).name, d}));
    nlohmann::json mom = nlohmann::json::array();
    for (const auto& x : t.mom) mom.push_back(x.str());
    nlohmann::json term = {{"coeff", t.coeff.str()}, {"word", w}, {"momentum", mom}};
    if (!M.is_fock()) term["top"] = M.tops().at(t.top).name;
    arr.push_back(std::move(term));
  }
  return arr;
}

FieldExpr field_from_json(const Module& M, const nlohmann::json& j) {
  FieldExpr f;
  for (const auto& term : j) {
    FieldTerm t;
    t.coeff = Scalar::parse(term.at("coeff").get<std::string>());
    for (const auto& w : term.at("word")) {
      int g = M.alg().index(w.at(0).get<std::string>());
      if (g < 0) throw std::invalid_argument("unknown generator " + w.at(0).get<std::string>());
      t.word.emplace_back(g, w.at(1).get<int>());
    }
    if (term.contains("momentum"))
      for (const auto& x : term.at("momentum")) t.mom.push_back(Scalar::parse(x.get<std::string>()));
    if (term.contains("top")) {
      const auto name = term.at("top").get<std::string>();
      t.top = -1;
      for (size_t i = 0; i < M.tops().size(); ++i)
        if (M.tops()[i].name == name) t.top = static_cast<int>(i);
      if (t.top < 0) throw std::invalid_argument("unknown top " + name);
    }
    f.terms.push_back(std::move(t));
  }
  return f;
}

std::string render(const Module& M, const FieldExpr& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    const auto& t = f.terms[i];
    std::string c = t.coeff.str();
    if (i > 0) out += " + ";
    out += "(" + c + ")";
    std::string body;
    for (auto [g, d] : t.word) {
      if (!body.empty()) body += " ";
      if (d == 1) body += "d";
      if (d > 1) body += "d^" + std::to_string(d);
      body += M.alg().gen(g).name;
    }
    if (!t.mom.empty()) {
      std::string m;
      for (const auto& x : t.mom) m += (m.empty() ? "" : ",") + x.str();
      body += (body.empty() ? "" : " ") + std::string("e^[") + m + "]";
    }
    if (!M.is_fock()) body += (body.empty() ? "" : " ") + M.tops().at(t.top).name;
    out += body.empty() ? "1" : ":" + body + ":";
  }
  return out;
}

}  // namespace wfree

#include "wfree/datum_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace wfree {

namespace {

Rational rational_field(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InvalidDatum("expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ScalarParseError& e) {
    throw InvalidDatum(e.what());
  }
}

void add_entry(SparseVec& v, int idx, const Rational& x) {
  for (auto& [i, y] : v)
    if (i == idx) {
      if (y != x) throw InvalidDatum("conflicting structure constants");
      return;
    }
  v.emplace_back(idx, x);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

GoodGrading DatumDocument::grading() const {
  if (!has_grading()) throw InvalidDatum("the document has no grading_labels");
  return make_grading(datum, labels2, f_support);
}

DatumDocument datum_from_json(const nlohmann::json& j) {
  try {
    SuperRootDatum d;
    d.name = j.value("name", std::string("datum"));
    d.rank = j.at("rank").get<int>();
    const auto& cartan = j.at("cartan");
    const auto& roots = j.at("roots");
    if (static_cast<int>(cartan.size()) != d.rank) throw InvalidDatum("cartan must list rank elements");
    std::map<std::string, int> index;
    auto add_name = [&](const std::string& name) {
      if (!index.emplace(name, static_cast<int>(d.names.size())).second)
        throw InvalidDatum("duplicate basis name " + name);
      d.names.push_back(name);
    };
    for (const auto& c : cartan) {
      add_name(c.get<std::string>());
      d.parity.push_back(0);
      d.weight.emplace_back(d.rank, Rational(0));
    }
    for (const auto& r : roots) {
      add_name(r.at("name").get<std::string>());
      const int p = r.value("parity", 0);
      if (p != 0 && p != 1) throw InvalidDatum("parity must be 0 or 1");
      d.parity.push_back(p);
      const auto& w = r.at("weight");
      if (static_cast<int>(w.size()) != d.rank) throw InvalidDatum("weight length differs from rank");
      std::vector<Rational> wt;
      for (const auto& x : w) wt.push_back(rational_field(x));
      d.weight.push_back(std::move(wt));
    }
    d.dim = static_cast<int>(d.names.size());
    auto at = [&](const nlohmann::json& name) {
      auto it = index.find(name.get<std::string>());
      if (it == index.end()) throw InvalidDatum("unknown basis name " + name.dump());
      return it->second;
    };
    d.br.assign(d.dim, std::vector<SparseVec>(d.dim));
    // The Cartan action is implied by the weights.
    for (int i = 0; i < d.rank; ++i)
      for (int a = d.rank; a < d.dim; ++a)
        if (d.weight[a][i] != 0) {
          add_entry(d.br[i][a], a, d.weight[a][i]);
          add_entry(d.br[a][i], a, -d.weight[a][i]);
        }
    for (const auto& t : j.at("structure_constants")) {
      if (t.size() != 4) throw InvalidDatum("structure constants are [a, b, c, x]");
      const int a = at(t[0]), b = at(t[1]), c = at(t[2]);
      const Rational x = rational_field(t[3]);
      if (x == 0) continue;
      const int sg = (d.parity[a] * d.parity[b]) & 1 ? 1 : -1;
      add_entry(d.br[a][b], c, x);
      add_entry(d.br[b][a], c, Rational(sg) * x);
    }
    d.form.assign(d.dim, std::vector<Rational>(d.dim, Rational(0)));
    std::vector<std::vector<bool>> set(d.dim, std::vector<bool>(d.dim, false));
    for (const auto& t : j.at("form")) {
      if (t.size() != 3) throw InvalidDatum("form entries are [a, b, x]");
      const int a = at(t[0]), b = at(t[1]);
      const Rational x = rational_field(t[2]);
      const Rational y = ((d.parity[a] * d.parity[b]) & 1) ? Rational(-x) : x;
      if ((set[a][b] && d.form[a][b] != x) || (set[b][a] && d.form[b][a] != y))
        throw InvalidDatum("conflicting form entries");
      d.form[a][b] = x;
      d.form[b][a] = y;
      set[a][b] = set[b][a] = true;
    }
    for (const auto& s : j.at("simple_roots")) d.simple.push_back(at(s));

    DatumDocument doc;
    doc.datum = finalize_datum(std::move(d));
    if (j.contains("grading_labels")) doc.labels2 = j.at("grading_labels").get<std::vector<int>>();
    if (j.contains("f_support"))
      for (const auto& s : j.at("f_support")) doc.f_support.push_back(at(s));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDatum(std::string("malformed datum: ") + e.what());
  }
}

nlohmann::json datum_to_json(const SuperRootDatum& d, const std::vector<int>& labels2,
                             const std::vector<int>& f_support) {
  nlohmann::json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["cartan"] = nlohmann::json::array();
  for (int i = 0; i < d.rank; ++i) j["cartan"].push_back(d.names[i]);
  j["roots"] = nlohmann::json::array();
  for (int a = d.rank; a < d.dim; ++a) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : d.weight[a]) w.push_back(to_string(x));
    j["roots"].push_back({{"name", d.names[a]}, {"parity", d.parity[a]}, {"weight", w}});
  }
  j["simple_roots"] = nlohmann::json::array();
  for (int s : d.simple) j["simple_roots"].push_back(d.names[s]);
  j["structure_constants"] = nlohmann::json::array();
  for (int a = d.rank; a < d.dim; ++a)
    for (int b = a; b < d.dim; ++b)
      for (const auto& [c, x] : d.br[a][b])
        j["structure_constants"].push_back({d.names[a], d.names[b], d.names[c], to_string(x)});
  j["form"] = nlohmann::json::array();
  for (int a = 0; a < d.dim; ++a)
    for (int b = a; b < d.dim; ++b)
      if (d.form[a][b] != 0) j["form"].push_back({d.names[a], d.names[b], to_string(d.form[a][b])});
  if (!labels2.empty()) j["grading_labels"] = labels2;
  if (!f_support.empty()) {
    j["f_support"] = nlohmann::json::array();
    for (int a : f_support) j["f_support"].push_back(d.names[a]);
  }
  return j;
}

DatumDocument load_datum(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidDatum(file.string() + ": " + e.what());
  }
  return datum_from_json(j);
}

}  // namespace wfree

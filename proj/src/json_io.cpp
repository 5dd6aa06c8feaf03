#include "unitposet/json_io.hpp"

#include "unitposet/errors.hpp"

namespace unitposet::json {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int nonneg_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<int>();
}

}  // namespace

json to_json(const Poset& p) {
  json rel = json::array();
  for (auto [i, j] : p.relations()) rel.push_back({i + 1, j + 1});
  return {{"t", p.size()}, {"relations", rel}};
}

IngestedPoset poset_from_json(const json& j) {
  return guarded("poset", [&] {
    const int t = nonneg_int(j, "t");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : field(j, "relations")) {
      if (!r.is_array() || r.size() != 2) throw ParseError("relation must be a pair [i, j]");
      const int a = r[0].get<int>(), b = r[1].get<int>();
      if (a < 1 || b < 1 || a > t || b > t)
        throw ParseError("relation [" + std::to_string(a) + "," + std::to_string(b) + "] out of range 1.." +
                         std::to_string(t));
      pairs.emplace_back(a - 1, b - 1);
    }
    return from_relations(t, pairs);
  });
}

json to_json(const CMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(i, c).real(), m(i, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CMatrix cmatrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const int rows = nonneg_int(j, "rows"), cols = nonneg_int(j, "cols");
    const json& e = field(j, "entries");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
      throw ParseError("matrix needs rows*cols = " + std::to_string(rows * cols) + " entries");
    CMatrix m(rows, cols);
    std::size_t idx = 0;
    for (int i = 0; i < rows; ++i)
      for (int c = 0; c < cols; ++c, ++idx) {
        const json& z = e[idx];
        if (z.is_number()) m(i, c) = z.get<double>();
        else if (z.is_array() && z.size() == 2) m(i, c) = cplx(z[0].get<double>(), z[1].get<double>());
        else throw ParseError("entry " + std::to_string(idx) + " must be [re, im]");
      }
    return m;
  });
}

json to_json(const BlockMatrix& a) {
  json strips = json::array();
  for (const auto& s : a.strips()) strips.push_back(to_json(s));
  return {{"poset", to_json(a.poset())}, {"rows", a.rows()}, {"widths", a.widths()}, {"strips", strips}};
}

BlockMatrix block_matrix_from_json(const json& j) {
  return guarded("block matrix", [&] {
    auto ingest = poset_from_json(field(j, "poset"));
    const int rows = nonneg_int(j, "rows");
    const json& sj = field(j, "strips");
    const int t = ingest.poset.size();
    if (!sj.is_array() || sj.size() != static_cast<std::size_t>(t))
      throw ParseError("expected " + std::to_string(t) + " strips");
    std::vector<CMatrix> strips(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      strips[static_cast<std::size_t>(ingest.new_index[static_cast<std::size_t>(i)])] =
          cmatrix_from_json(sj[static_cast<std::size_t>(i)]);
    if (j.contains("widths")) {
      const auto widths = j.at("widths").get<std::vector<int>>();
      if (widths.size() != static_cast<std::size_t>(t)) throw ParseError("widths has wrong length");
      for (int i = 0; i < t; ++i)
        if (sj[static_cast<std::size_t>(i)].at("cols").get<int>() != widths[static_cast<std::size_t>(i)])
          throw ParseError("strip " + std::to_string(i + 1) + " disagrees with widths");
    }
    return BlockMatrix(ingest.poset, rows, std::move(strips));
  });
}

namespace {

const char* kind_name(Summand::Kind k) {
  switch (k) {
    case Summand::Kind::E: return "E";
    case Summand::Kind::F: return "F";
    case Summand::Kind::G: return "G";
    case Summand::Kind::H: return "H";
    case Summand::Kind::L: return "L";
  }
  return "?";
}

}  // namespace

json to_json(const Summand& s) {
  json j{{"kind", kind_name(s.kind)}};
  if (s.kind != Summand::Kind::F) j["k"] = s.k + 1;
  if (s.kind == Summand::Kind::G) j["sigma"] = s.sigma;
  return j;
}

Summand summand_from_json(const json& j) {
  return guarded("summand", [&] {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "F") return Summand::F();
    const int k = field(j, "k").get<int>() - 1;
    if (kind == "E") return Summand::E(k);
    if (kind == "H") return Summand::H(k);
    if (kind == "L") return Summand::L(k);
    if (kind == "G") return Summand::G(k, field(j, "sigma").get<double>());
    throw ParseError("unknown summand kind \"" + kind + "\"");
  });
}

json to_json(const Decomposition& d) {
  json g = json::array();
  for (auto [k, sigma] : d.g) g.push_back({{"k", k + 1}, {"sigma", sigma}});
  return {{"E", d.e}, {"F", d.f}, {"H", d.h}, {"L", d.l}, {"G", g}};
}

Decomposition decomposition_from_json(const json& j) {
  return guarded("decomposition", [&] {
    Decomposition d;
    d.e = field(j, "E").get<std::vector<int>>();
    d.h = field(j, "H").get<std::vector<int>>();
    d.l = field(j, "L").get<std::vector<int>>();
    d.f = field(j, "F").get<int>();
    if (d.h.size() != d.e.size() || d.l.size() != d.e.size())
      throw ParseError("E, H and L must have the same length");
    for (const auto& x : field(j, "G")) d.g.emplace_back(field(x, "k").get<int>() - 1, field(x, "sigma").get<double>());
    d.normalize();
    return d;
  });
}

json to_json(const QuadraticForm& f) {
  json rows = json::array();
  for (int i = 0; i < f.n_vars(); ++i) {
    json row = json::array();
    for (int c = 0; c < f.n_vars(); ++c) row.push_back(f.numerator(i, c));
    rows.push_back(row);
  }
  return {{"n_vars", f.n_vars()}, {"gram_numerators", rows}, {"gram_denominator", f.denominator()}};
}

QuadraticForm quadratic_form_from_json(const json& j) {
  return guarded("quadratic form", [&] {
    const int n = nonneg_int(j, "n_vars");
    std::vector<std::int64_t> num;
    for (const auto& row : field(j, "gram_numerators")) {
      if (row.size() != static_cast<std::size_t>(n)) throw ParseError("gram row has wrong length");
      for (const auto& v : row) num.push_back(v.get<std::int64_t>());
    }
    return QuadraticForm(n, std::move(num), field(j, "gram_denominator").get<std::int64_t>());
  });
}

json to_json(const SubspaceSystem& u) {
  json spans = json::array();
  for (const auto& s : u.spans()) spans.push_back(to_json(s));
  return {{"poset", to_json(u.poset())}, {"ambient_dim", u.ambient_dim()}, {"spans", spans}};
}

SubspaceSystem subspace_system_from_json(const json& j) {
  return guarded("subspace system", [&] {
    auto ingest = poset_from_json(field(j, "poset"));
    const int m = nonneg_int(j, "ambient_dim");
    const json& sj = field(j, "spans");
    const int t = ingest.poset.size();
    if (!sj.is_array() || sj.size() != static_cast<std::size_t>(t))
      throw ParseError("expected " + std::to_string(t) + " spanning sets");
    std::vector<CMatrix> spans(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      spans[static_cast<std::size_t>(ingest.new_index[static_cast<std::size_t>(i)])] =
          cmatrix_from_json(sj[static_cast<std::size_t>(i)]);
    return SubspaceSystem(ingest.poset, m, std::move(spans));
  });
}

json to_json(const SystemSummand& s) {
  json j;
  switch (s.kind) {
    case SystemSummand::Kind::Fk: j = {{"kind", "F_k"}, {"k", s.k + 1}}; break;
    case SystemSummand::Kind::F: j = {{"kind", "F"}}; break;
    case SystemSummand::Kind::Gks: j = {{"kind", "G_k_sigma"}, {"k", s.k + 1}, {"sigma", s.sigma}}; break;
    case SystemSummand::Kind::Gk: j = {{"kind", "G_k"}, {"k", s.k + 1}}; break;
  }
  return j;
}

json to_json(const WildWitness& w) {
  json j = to_json(w.matrix);
  j["triple"] = {w.triple[0] + 1, w.triple[1] + 1, w.triple[2] + 1};
  j["n"] = w.n;
  return j;
}

}  // namespace unitposet::json
